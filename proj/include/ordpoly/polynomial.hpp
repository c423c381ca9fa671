/**
 * Exact integer polynomials and h-vectors.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ordpoly/combinat.hpp"

namespace ordpoly {

/// Dense polynomial with int64 coefficients; coefficient i multiplies x^i.
/// Trailing zeros are never stored, so the zero polynomial has no terms.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> c) : coeffs_(c) { trim(); }
    explicit IntPolynomial(std::vector<std::int64_t> c) : coeffs_(std::move(c)) { trim(); }

    static IntPolynomial monomial(int degree, std::int64_t c = 1)
    {
        std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
        v.back() = c;
        return IntPolynomial(std::move(v));
    }

    /// (x - 1)^t by a Pascal row.
    static IntPolynomial x_minus_one_pow(int t)
    {
        std::vector<std::int64_t> v(static_cast<std::size_t>(t) + 1);
        for (int i = 0; i <= t; ++i)
            v[i] = binomial(t, i) * (((t - i) % 2 == 0) ? 1 : -1);
        return IntPolynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t coeff(int i) const
    {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    std::int64_t eval(std::int64_t x) const
    {
        std::int64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// p(x + c), expanded exactly.
    IntPolynomial shifted_argument(std::int64_t c) const
    {
        IntPolynomial out;
        IntPolynomial base{c, 1};
        IntPolynomial power{1};
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out += power * coeffs_[i];
            power = power * base;
        }
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) { return *this += o * -1; }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, std::int64_t s)
    {
        std::vector<std::int64_t> v = a.coeffs_;
        for (auto& c : v)
            c *= s;
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(v));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
{
    if (p.is_zero())
        return os << '0';
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        auto c = p.coeff(i);
        if (c == 0)
            continue;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        auto a = c < 0 ? -c : c;
        if (i == 0 || a != 1)
            os << a;
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
        first = false;
    }
    return os;
}

/**
 * Entries h_0 .. h_d. The polynomial form is h(x) = sum_i h_i x^{d-i}.
 */
struct HVector
{
    std::vector<std::int64_t> entries;

    HVector() = default;
    HVector(std::initializer_list<std::int64_t> e) : entries(e) {}
    explicit HVector(std::vector<std::int64_t> e) : entries(std::move(e)) {}

    /// Read h_i as the coefficient of x^{d-i}.
    static HVector from_polynomial(const IntPolynomial& p, int d)
    {
        std::vector<std::int64_t> e(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            e[i] = p.coeff(d - i);
        return HVector(std::move(e));
    }

    IntPolynomial to_polynomial() const
    {
        const int d = dimension();
        std::vector<std::int64_t> c(entries.size());
        for (int i = 0; i <= d; ++i)
            c[d - i] = entries[i];
        return IntPolynomial(std::move(c));
    }

    int dimension() const { return static_cast<int>(entries.size()) - 1; }
    std::int64_t operator[](std::size_t i) const { return entries.at(i); }
    std::size_t size() const { return entries.size(); }

    std::int64_t sum() const
    {
        std::int64_t s = 0;
        for (auto e : entries)
            s += e;
        return s;
    }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] != entries[entries.size() - 1 - i])
                return false;
        return true;
    }

    bool dominates(const HVector& o) const
    {
        if (o.entries.size() != entries.size())
            return false;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] < o.entries[i])
                return false;
        return true;
    }

    friend bool operator==(const HVector&, const HVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const HVector& h)
{
    os << '(';
    for (std::size_t i = 0; i < h.entries.size(); ++i)
        os << (i ? "," : "") << h.entries[i];
    return os << ')';
}

/**
 * Simplicial f-to-h transform: h(x) = sum_{i=0}^{d} f_{i-1} (x-1)^{d-i} with
 * f_{-1} = 1 and f = (f_0, ..., f_{d-1}).
 */
inline HVector h_from_f(const std::vector<std::int64_t>& f, int d)
{
    if (static_cast<int>(f.size()) != d)
        throw std::invalid_argument("h_from_f: expected d entries f_0..f_{d-1}");
    IntPolynomial h;
    for (int i = 0; i <= d; ++i) {
        const std::int64_t fi = i == 0 ? 1 : f[i - 1];
        h += IntPolynomial::x_minus_one_pow(d - i) * fi;
    }
    return HVector::from_polynomial(h, d);
}

/// Inverse transform: f_l = sum_{i=0}^{l+1} C(d-i, l-i+1) h_i for 0 <= l <= d-1.
inline std::vector<std::int64_t> f_from_h(const HVector& h)
{
    const int d = h.dimension();
    std::vector<std::int64_t> f(static_cast<std::size_t>(d), 0);
    for (int l = 0; l < d; ++l)
        for (int i = 0; i <= l + 1; ++i)
            f[l] += binomial(d - i, l - i + 1) * h[i];
    return f;
}

} // namespace ordpoly
