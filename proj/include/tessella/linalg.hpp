#pragma once

#include "tessella/errors.hpp"
#include "tessella/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tessella {

/// Dense rational matrix, row major. Small sizes only; all elimination is
/// exact with deterministic (leftmost-column, topmost-row) pivoting.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMat operator*(const RatMat& rhs) const;
    RatMat transposed() const;
    bool operator==(const RatMat& rhs) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row, in order.
std::vector<std::size_t> rref_inplace(RatMat& m);

std::size_t rank(RatMat m);

/// Canonical basis of {x : m x = 0}, one kernel vector per column; the free
/// coordinate of each basis vector is 1.
RatMat kernel_basis(const RatMat& m);

/// Solves a x = b columnwise for square invertible a; throws InputError when
/// singular.
RatMat solve_square(const RatMat& a, const RatMat& b);

/// Solves a x = b columnwise where a has full column rank and the system is
/// consistent; throws InputError otherwise.
RatMat solve_full_column_rank(const RatMat& a, const RatMat& b);

/// A linear subspace of Q^n in canonical form: `rows` is the RREF matrix
/// whose row space is the subspace, so equal subspaces compare equal.
struct Subspace {
    std::size_t ambient = 0;
    RatMat rows; // dim x ambient, RREF

    std::size_t dim() const { return rows.rows(); }
    bool operator==(const Subspace& rhs) const = default;
};

Subspace row_space(RatMat m, std::size_t ambient);
/// {x : m x = 0} as a subspace of Q^cols.
Subspace kernel_space(const RatMat& m);
/// Matrix whose kernel is exactly s (rows span the annihilator).
RatMat annihilator(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : p x in s}.
Subspace preimage(const RatMat& p, const Subspace& s);
/// Basis of s as columns of an ambient x dim matrix.
RatMat basis_columns(const Subspace& s);

/// Rational polynomial, coefficients ascending (c[0] + c[1] x + ...), with no
/// trailing zero coefficient.
struct Poly {
    std::vector<Rational> c;

    static Poly zero() { return {}; }
    static Poly constant(const Rational& q);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }
    Rational eval(const Rational& x) const;
    bool operator==(const Poly& rhs) const = default;
};

Poly trim(Poly p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& s);
/// (quotient, remainder) with deg r < deg b; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b); // monic
Poly derivative(const Poly& a);

/// Characteristic polynomial det(xI - m), exact (Faddeev-LeVerrier).
Poly charpoly(const RatMat& m);

/// All rational roots, ascending, via the rational root theorem on the
/// primitive integer form. Throws CertificationError when the divisor
/// enumeration would exceed its (generous) guard.
std::vector<Rational> rational_roots(const Poly& p);

/// Some monic irreducible factor of p (degree >= 1). Prefers rational roots;
/// otherwise square-free reduction plus a Kronecker search for factors of
/// degree <= 3. Throws CertificationError beyond that supported range.
Poly irreducible_factor(const Poly& p);

/// Elements of Q[x]/(modulus) are represented as polynomials of degree less
/// than deg(modulus). Inverse exists for nonzero elements when the modulus is
/// irreducible.
Poly mod_reduce(const Poly& a, const Poly& modulus);
Poly mod_mul(const Poly& a, const Poly& b, const Poly& modulus);
Poly mod_inverse(const Poly& a, const Poly& modulus);

/// Canonical kernel basis of a matrix with entries in Q[x]/(modulus); same
/// column convention as kernel_basis.
std::vector<std::vector<Poly>> kernel_basis_mod(std::vector<std::vector<Poly>> m,
                                                std::size_t cols, const Poly& modulus);

} // namespace tessella
