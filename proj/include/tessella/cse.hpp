#pragma once

#include "tessella/elliptic.hpp"
#include "tessella/linalg.hpp"

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tessella {

/// A candidate support S for a compactly supported eigenfunction plus its
/// derived outer ring. Construction enforces the window margin: every vertex
/// of S and of the outer ring must be complete, so each eigenfunction
/// equation touching S is fully determined by the window.
struct SupportSet {
    std::vector<VertexId> vertices;   // S, ascending
    std::vector<VertexId> outer_ring; // N(S) \ S, ascending

    static SupportSet from_vertices(const TessellationPatch& patch, std::vector<VertexId> s);
    /// Vertices at graph distance <= r from center.
    static SupportSet vertex_ball(const TessellationPatch& patch, VertexId center, unsigned r);
};

/// Outcome of the compactly-supported-eigenfunction search.
///
/// NotFound certificates carry the invariant-subspace dimensions until
/// stabilization (strictly decreasing, ending at 0). Found certificates carry
/// the eigenvalue -- a rational, or a monic irreducible minimal polynomial
/// when the eigenvalue is irrational -- plus the exact eigenvector with
/// coordinates in Q respectively Q[x]/(min_poly), supported in S.
struct Certificate {
    enum class Kind { NotFound, Found };
    Kind kind = Kind::NotFound;

    std::vector<std::size_t> dims; // NotFound

    bool lambda_is_rational = true;
    Rational lambda;                 // when rational
    std::vector<Rational> min_poly;  // monic coefficients c0..ck, otherwise
    std::map<VertexId, std::vector<Poly>> eigenvector_ext; // extension case
    VertexFunction eigenvector;                            // rational case
};

/// Exact decision of: does some lambda in C and nonzero u supported in S
/// satisfy (L - lambda) u = 0 on every vertex? All arithmetic is rational;
/// the invariant-subspace iteration certifies the answer over C because
/// kernels, intersections and preimages of rational matrices commute with
/// field extension.
Certificate cse_search(const EllipticOperator& op, const SupportSet& support);

/// Exact re-check of a certificate: Found must satisfy (L - lambda) u = 0 at
/// every vertex of S and its outer ring with u = 0 outside S; NotFound dims
/// must strictly decrease and end at 0.
bool verify_certificate(const EllipticOperator& op, const SupportSet& support,
                        const Certificate& cert);

struct FloatCandidate {
    std::complex<double> lambda;
    double residual; // smallest singular value of the stacked constraint block
};

/// Independent floating-point oracle: eigendecompose the S-block numerically
/// and report every eigenvalue whose eigenspace meets kernel(K) within the
/// tolerance. Advisory only; cse_search is authoritative.
std::vector<FloatCandidate> cse_search_float(const EllipticOperator& op,
                                             const SupportSet& support, double tolerance);

// Wire format, one line:
//   NOTFOUND dims=<d0,d1,...>
//   FOUND lambda=<num/den> u=<vid:num/den,...>
//   FOUND lambda=minpoly:<c0,c1,...,ck> u=<vid:c0|c1|...,...>
std::string save_certificate(const Certificate& cert);
Certificate load_certificate(std::string_view text);

} // namespace tessella
