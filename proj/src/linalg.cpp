#include "tessella/linalg.hpp"

#include <algorithm>
#include <map>

namespace tessella {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix shape mismatch");
    RatMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RatMat RatMat::transposed() const {
    RatMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<std::size_t> rref_inplace(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMat m) { return rref_inplace(m).size(); }

RatMat kernel_basis(const RatMat& m) {
    RatMat r = m;
    const auto pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMat basis(m.cols(), free_cols.size());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        const std::size_t fc = free_cols[b];
        basis.at(fc, b) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            basis.at(pivots[pr], b) = -r.at(pr, fc);
    }
    return basis;
}

RatMat solve_square(const RatMat& a, const RatMat& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw InputError("bad solve shape");
    RatMat aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    const auto pivots = rref_inplace(aug);
    if (pivots.size() != a.cols() || pivots.back() >= a.cols())
        throw InputError("singular matrix in solve");
    RatMat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
    return x;
}

RatMat solve_full_column_rank(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw InputError("bad solve shape");
    RatMat aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    const auto pivots = rref_inplace(aug);
    std::size_t lead = 0;
    for (const std::size_t c : pivots)
        if (c < a.cols()) ++lead;
    if (lead != a.cols()) throw InputError("matrix does not have full column rank");
    if (pivots.size() != lead) throw InputError("inconsistent linear system");
    RatMat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
    return x;
}

Subspace row_space(RatMat m, std::size_t ambient) {
    if (m.cols() != ambient) throw InputError("ambient mismatch");
    const auto pivots = rref_inplace(m);
    RatMat rows(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = m.at(i, j);
    return Subspace{ambient, std::move(rows)};
}

Subspace kernel_space(const RatMat& m) {
    return row_space(kernel_basis(m).transposed(), m.cols());
}

RatMat annihilator(const Subspace& s) {
    // rows spanning {y : <y,x> = 0 for all x in s}; over Q the double
    // annihilator recovers s, so kernel(annihilator(s)) = s
    return kernel_basis(s.rows).transposed();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw InputError("ambient mismatch");
    const RatMat na = annihilator(a);
    const RatMat nb = annihilator(b);
    RatMat stacked(na.rows() + nb.rows(), a.ambient);
    for (std::size_t i = 0; i < na.rows(); ++i)
        for (std::size_t j = 0; j < a.ambient; ++j) stacked.at(i, j) = na.at(i, j);
    for (std::size_t i = 0; i < nb.rows(); ++i)
        for (std::size_t j = 0; j < a.ambient; ++j) stacked.at(na.rows() + i, j) = nb.at(i, j);
    return kernel_space(stacked);
}

Subspace preimage(const RatMat& p, const Subspace& s) {
    if (p.rows() != s.ambient || p.cols() != s.ambient) throw InputError("ambient mismatch");
    return kernel_space(annihilator(s) * p);
}

RatMat basis_columns(const Subspace& s) { return s.rows.transposed(); }

Poly Poly::constant(const Rational& q) {
    Poly p;
    if (q != 0) p.c = {q};
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Poly trim(Poly p) {
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        if (i < a.c.size()) out.c[i] += a.c[i];
        if (i < b.c.size()) out.c[i] += b.c[i];
    }
    return trim(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, Rational(-1))); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return trim(std::move(out));
}

Poly scale(const Poly& a, const Rational& s) {
    if (s == 0) return {};
    Poly out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    Poly r = a;
    Poly q;
    if (a.degree() >= b.degree()) q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const Rational factor = r.leading() / b.leading();
        q.c[shift] = factor;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= factor * b.c[i];
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), std::move(r)};
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, Rational(1) / a.leading());
}

Poly gcd(Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly derivative(const Poly& a) {
    Poly out;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c.push_back(a.c[i] * Rational(static_cast<long>(i)));
    return trim(std::move(out));
}

Poly charpoly(const RatMat& m) {
    // Faddeev-LeVerrier: exact, divisions by integers only
    if (m.rows() != m.cols()) throw InputError("charpoly needs a square matrix");
    const std::size_t n = m.rows();
    Poly p;
    p.c.assign(n + 1, Rational(0));
    p.c[n] = 1;
    RatMat mk = RatMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        const Rational ck = -tr / Rational(static_cast<long>(k));
        p.c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return p;
}

namespace {

constexpr std::size_t kDivisorGuard = 4'000'000;

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw InputError("divisors of zero");
    std::vector<Integer> small, large;
    std::size_t steps = 0;
    for (Integer d = 1; d * d <= n; ++d) {
        if (++steps > kDivisorGuard)
            throw CertificationError("rational root search guard exceeded");
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Content-free integer coefficients of p (scaled by the lcm of denominators,
/// divided by the gcd of numerators).
std::vector<Integer> primitive_integer(const Poly& p) {
    Integer lcm = 1;
    for (const auto& c : p.c) {
        const Integer d = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : p.c) {
        const Integer v = numerator(c) * (lcm / denominator(c));
        out.push_back(v);
        content = boost::multiprecision::gcd(content, v);
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

} // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw InputError("rational roots of the zero polynomial");
    Poly q = p;
    std::vector<Rational> roots;
    // factor out x^m
    std::size_t zeros = 0;
    while (!q.c.empty() && q.c.front() == 0) {
        q.c.erase(q.c.begin());
        ++zeros;
    }
    if (zeros > 0) roots.push_back(Rational(0));
    if (q.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const auto ic = primitive_integer(q);
    const auto ps = positive_divisors(ic.front());
    const auto qs = positive_divisors(ic.back());
    std::set<Rational> found;
    for (const Integer& a : ps)
        for (const Integer& b : qs) {
            const Rational cand(a, b);
            if (q.eval(cand) == 0) found.insert(cand);
            if (q.eval(-cand) == 0) found.insert(-cand);
        }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

/// Kronecker search for a monic rational factor of degree d of the
/// square-free integer polynomial g; returns the first hit in a deterministic
/// order, or nothing.
std::optional<Poly> kronecker_factor(const Poly& g, unsigned d) {
    std::vector<Rational> xs;
    for (long v = 0; xs.size() < d + 1; ++v) {
        xs.push_back(Rational(v));
        if (v > 0 && xs.size() < d + 1) xs.push_back(Rational(-v));
    }
    std::vector<std::vector<Integer>> divisor_sets;
    std::size_t combos = 1;
    for (const auto& x : xs) {
        const Rational val = g.eval(x);
        // g has no rational roots at this point, so val != 0
        std::vector<Integer> ds;
        for (const Integer& p : positive_divisors(numerator(val))) {
            ds.push_back(p);
            ds.push_back(-p);
        }
        divisor_sets.push_back(std::move(ds));
        combos *= divisor_sets.back().size();
        if (combos > 200'000)
            throw CertificationError("polynomial factor search guard exceeded");
    }

    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
        // Lagrange interpolation through (xs[i], divisors[i][idx[i]])
        Poly h;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Poly li = Poly::constant(Rational(divisor_sets[i][idx[i]]));
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                Poly lin;
                lin.c = {-xs[j], Rational(1)};
                li = mul(li, scale(lin, Rational(1) / (xs[i] - xs[j])));
            }
            h = add(h, li);
        }
        if (h.degree() == static_cast<int>(d)) {
            const auto [quot, rem] = divmod(g, h);
            if (rem.is_zero()) return monic(h);
        }
        std::size_t carry = 0;
        while (carry < idx.size()) {
            if (++idx[carry] < divisor_sets[carry].size()) break;
            idx[carry] = 0;
            ++carry;
        }
        if (carry == idx.size()) return std::nullopt;
    }
}

} // namespace

Poly irreducible_factor(const Poly& p) {
    if (p.degree() < 1) throw InputError("no factor of a constant polynomial");
    const auto roots = rational_roots(p);
    if (!roots.empty()) {
        Poly lin;
        lin.c = {-roots.front(), Rational(1)};
        return lin;
    }
    // square-free part, in primitive integer form for the Kronecker search
    Poly g = monic(divmod(p, gcd(p, derivative(p))).first);
    if (g.degree() <= 3) return g; // no rational root => irreducible for deg 2, 3
    Poly gi;
    for (const Integer& v : primitive_integer(g)) gi.c.emplace_back(v);
    gi = trim(std::move(gi));
    for (unsigned d = 2; d <= 3 && d <= static_cast<unsigned>(gi.degree()) / 2; ++d)
        if (auto h = kronecker_factor(gi, d)) {
            // a degree-2/3 factor with no rational root cannot split further
            return *h;
        }
    if (g.degree() <= 7) return g; // would need a factor of degree <= 3
    throw CertificationError("minimal polynomial extraction beyond supported degree " +
                             std::to_string(g.degree()));
}

Poly mod_reduce(const Poly& a, const Poly& modulus) { return divmod(a, modulus).second; }

Poly mod_mul(const Poly& a, const Poly& b, const Poly& modulus) {
    return mod_reduce(mul(a, b), modulus);
}

Poly mod_inverse(const Poly& a, const Poly& modulus) {
    // extended Euclid over Q[x]
    Poly r0 = modulus, r1 = mod_reduce(a, modulus);
    if (r1.is_zero()) throw InputError("inverse of zero in the extension field");
    Poly t0, t1;
    t1.c = {Rational(1)};
    while (!r1.is_zero()) {
        const auto [q, r] = divmod(r0, r1);
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = r;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw InputError("element not invertible: modulus is not irreducible");
    return mod_reduce(scale(t0, Rational(1) / r0.c[0]), modulus);
}

std::vector<std::vector<Poly>> kernel_basis_mod(std::vector<std::vector<Poly>> m,
                                                std::size_t cols, const Poly& modulus) {
    const std::size_t rows = m.size();
    for (auto& row : m)
        if (row.size() != cols) throw InputError("ragged matrix");

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const Poly inv = mod_inverse(m[row][col], modulus);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = mod_mul(m[row][j], inv, modulus);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Poly factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = sub(m[i][j], mod_mul(factor, m[row][j], modulus));
        }
        pivots.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Poly>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Poly> vec(cols);
        vec[fc].c = {Rational(1)};
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            vec[pivots[pr]] = scale(m[pr][fc], Rational(-1));
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace tessella
