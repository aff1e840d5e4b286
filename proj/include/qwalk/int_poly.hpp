#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/numeric.hpp"

namespace qwalk {

/// Univariate polynomial with integer coefficients, constant term first.
/// Normalized: no trailing zeros; the zero polynomial has an empty
/// coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial constant(Int v) {
        return IntPolynomial(std::vector<Int>{std::move(v)});
    }

    /// The monomial x.
    static IntPolynomial x() { return IntPolynomial({Int(0), Int(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Int& coeff(int i) const {
        static const Int zero = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    const Int& leading() const {
        if (c_.empty()) throw numeric_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool monic() const { return !c_.empty() && c_.back() == 1; }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPolynomial operator-() const {
        std::vector<Int> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        return a + (-b);
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const Int& s, const IntPolynomial& p) {
        std::vector<Int> out(p.c_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * p.c_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial r = constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// "c0 + c1*x + c2*x^2 + ..." with zero terms skipped; "0" for the
    /// zero polynomial.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0 && c_.size() > 1) continue;
            if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
            else if (c_[i] < 0) out += "-";
            Int a = qwalk::abs(c_[i]);
            if (i == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Characteristic polynomial det(xI - m), exact and monic. Evaluates the
/// determinant at the n+1 integer points t = 0..n with the Bareiss kernel
/// and interpolates; the interpolated coefficients are provably integral,
/// which is asserted when the rational arithmetic is cleared.
inline IntPolynomial char_poly_exact(const IntMatrix& m) {
    if (!m.square()) throw dimension_error("char_poly_exact: matrix not square");
    const int n = m.rows();
    std::vector<Int> value(n + 1);
    for (int t = 0; t <= n; ++t) {
        IntMatrix b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = (i == j ? Int(t) : Int(0)) - m(i, j);
        value[static_cast<std::size_t>(t)] = det_exact(b);
    }
    // Lagrange interpolation over Q at nodes 0..n.
    std::vector<mpq_class> acc(n + 2);
    std::vector<mpq_class> basis;
    for (int i = 0; i <= n; ++i) {
        basis.assign(1, mpq_class(1));
        mpq_class den = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis.resize(basis.size() + 1, mpq_class(0));
            for (std::size_t d = basis.size(); d-- > 1;)
                basis[d] = basis[d - 1] - mpq_class(j) * basis[d];
            basis[0] = -mpq_class(j) * basis[0];
            den *= (i - j);
        }
        mpq_class w = mpq_class(value[static_cast<std::size_t>(i)]) / den;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += w * basis[d];
    }
    std::vector<Int> coeffs(n + 1);
    for (int d = 0; d <= n; ++d) {
        mpq_class c = acc[static_cast<std::size_t>(d)];
        c.canonicalize();
        if (c.get_den() != 1)
            throw internal_contradiction("char_poly_exact: non-integral coefficient");
        coeffs[static_cast<std::size_t>(d)] = c.get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

/// Resultant of two nonzero polynomials: determinant of their Sylvester
/// matrix of order deg f + deg g.
inline Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw numeric_error("resultant: undefined for the zero polynomial");
    const int n = f.degree(), m = g.degree();
    if (n == 0 && m == 0) return 1;
    if (n == 0) return pow_ui(f.coeff(0), static_cast<unsigned long>(m));
    if (m == 0) return pow_ui(g.coeff(0), static_cast<unsigned long>(n));
    IntMatrix s(n + m, n + m);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s(r, r + j) = f.coeff(n - j);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s(m + r, r + j) = g.coeff(m - j);
    return det_exact(s);
}

} // namespace qwalk
