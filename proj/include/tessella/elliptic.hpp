#pragma once

#include "tessella/patch.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace tessella {

/// Pointwise values of a function on vertices; absent vertices read as 0.
using VertexFunction = std::map<VertexId, Rational>;

/// Vertex-indexed sparse rational matrix whose off-diagonal pattern is
/// exactly the adjacency of the patch: a(v,w) != 0 for every edge between
/// complete vertices, a(v,w) = 0 for non-adjacent v != w, arbitrary diagonal.
/// Symmetry is not required. Immutable after construction.
class EllipticOperator {
public:
    static EllipticOperator from_entries(const TessellationPatch& patch,
                                         std::map<std::pair<VertexId, VertexId>, Rational> entries);

    const TessellationPatch& patch() const { return *patch_; }
    /// a(v,w); 0 when no entry is stored.
    const Rational& entry(VertexId v, VertexId w) const;
    const std::map<std::pair<VertexId, VertexId>, Rational>& entries() const { return entries_; }

private:
    const TessellationPatch* patch_ = nullptr;
    std::map<std::pair<VertexId, VertexId>, Rational> entries_;
};

/// a(v,v) = |v| on complete vertices, a(v,w) = 1 on every edge.
EllipticOperator nearest_neighbour_laplacian(const TessellationPatch& patch);

/// a(v,v) = 0, a(v,w) = 1 on every edge.
EllipticOperator adjacency_operator(const TessellationPatch& patch);

/// Deterministic in the seed. Off-diagonal entries are drawn from
/// {±n/d : 1 <= n,d <= magnitude}, the diagonal from
/// {n/d : -magnitude <= n <= magnitude, 1 <= d <= magnitude} (zero allowed).
EllipticOperator random_elliptic(const TessellationPatch& patch, std::uint64_t seed,
                                 unsigned magnitude);

/// c * op; c must be nonzero.
EllipticOperator scaled(const EllipticOperator& op, const Rational& c);

/// (L u)(v) = a(v,v) u(v) + sum over w ~ v of a(v,w) u(w); v must be complete.
Rational apply_at(const EllipticOperator& op, const VertexFunction& u, VertexId v);

// Wire format: "op 1" header, then one "entry <v> <w> <num>/<den>" per line.
std::string save_operator(const EllipticOperator& op);
EllipticOperator load_operator(const TessellationPatch& patch, std::string_view text);

} // namespace tessella
