/**
 * h-vectors of ordinary polytopes, computed four independent ways:
 *   - Stanley's toric recursion over the face lattice;
 *   - the closed form h_i = C(k-d+i, i) + (n-k) C(k-d+i-1, i-1);
 *   - the multiplicial formula through the modified f-vector;
 *   - the simplicial h of the shallow boundary triangulation.
 * Plus the fake simplicial h' and the per-facet contributions a_j with
 * h - h' = sum_j a_j.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/polynomial.hpp"
#include "ordpoly/shelling.hpp"
#include "ordpoly/triangulation.hpp"

namespace ordpoly {

/// Toric h and g polynomials of every face, in lattice order.
struct ToricData
{
    std::vector<IntPolynomial> h;
    std::vector<IntPolynomial> g;
};

/**
 * h(G, x) = sum over faces H < G of g(H, x) (x-1)^{dim G - 1 - dim H}, with
 * g(empty) = 1, and g(G, x) = h_0 + sum_{1 <= i <= dim G / 2} (h_i - h_{i-1}) x^i
 * where h_i is the coefficient of x^{dim G - i}. Throws std::domain_error
 * if some h fails to be symmetric, which flags a non-Eulerian input.
 */
inline ToricData toric_data(const FaceLattice& L)
{
    const std::size_t N = L.size();
    ToricData out;
    out.h.resize(N);
    out.g.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
        const int e = L.dim_at(a);
        const auto ma = L.mask_at(a);
        IntPolynomial h;
        if (e < 0) {
            h = IntPolynomial{1};
        } else {
            for (std::size_t b = 0; b < a; ++b) {
                const auto mb = L.mask_at(b);
                if (mb != ma && (mb & ma) == mb)
                    h += out.g[b] * IntPolynomial::x_minus_one_pow(e - 1 - L.dim_at(b));
            }
        }
        const int deg = std::max(e, 0);
        for (int i = 0; i <= deg; ++i)
            if (h.coeff(i) != h.coeff(deg - i))
                throw std::domain_error("toric h of " + to_string(L.face(a)) + " is not symmetric");
        std::vector<std::int64_t> g;
        for (int i = 0; i <= deg / 2; ++i)
            g.push_back(h.coeff(deg - i) - (i > 0 ? h.coeff(deg - i + 1) : 0));
        out.h[a] = std::move(h);
        out.g[a] = IntPolynomial(std::move(g));
    }
    return out;
}

inline HVector toric_h(const FaceLattice& L)
{
    const auto data = toric_data(L);
    return HVector::from_polynomial(data.h.back(), L.d());
}

/// Toric g of a face (its lower interval), e.g. 1 + (v-1-e)x for an e-multiplex.
inline IntPolynomial toric_g(const FaceLattice& L, const VertexSet& face)
{
    const auto i = L.index_of(face);
    if (!i)
        throw std::invalid_argument("toric_g: " + to_string(face) + " is not a face");
    return toric_data(L).g[*i];
}

/// h of the cyclic polytope C^{d,k} (k+1 vertices): C(k-d+i, i) below the middle, symmetric.
inline HVector cyclic_h(int d, int k)
{
    if (d < 2 || k < d)
        throw std::invalid_argument("cyclic_h: need k >= d >= 2");
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const int t = std::min(i, d - i);
        h[i] = binomial(k - d + t, t);
    }
    return HVector(std::move(h));
}

/// h_i = C(k-d+i, i) + (n-k) C(k-d+i-1, i-1) for 1 <= i <= m, reflected above m.
inline HVector h_closed_form(const Params& p)
{
    p.validate();
    if (!p.odd_ordinary())
        throw std::invalid_argument("h_closed_form: needs odd d >= 5");
    std::vector<std::int64_t> h(static_cast<std::size_t>(p.d) + 1);
    h[0] = 1;
    for (int i = 1; i <= p.m(); ++i)
        h[i] = binomial(p.k - p.d + i, i) + (p.n - p.k) * binomial(p.k - p.d + i - 1, i - 1);
    for (int i = p.m() + 1; i <= p.d; ++i)
        h[i] = h[p.d - i];
    return HVector(std::move(h));
}

/// Modified f-vector (fbar_{-1}, ..., fbar_{d-1}).
struct ModifiedFVector
{
    std::vector<std::int64_t> entries;

    /// fbar_j for -1 <= j <= d-1.
    std::int64_t at(int j) const { return entries.at(static_cast<std::size_t>(j + 1)); }
};

/**
 * fbar_{-1} = 1, fbar_0 = f_0, fbar_{d-1} = f_{d-1} + (f_{0,d-1} - d f_{d-1}),
 * fbar_j = f_j + (f_{0,j+1} - (j+2) f_{j+1}) + (f_{0,j} - (j+1) f_j) otherwise.
 * `f` is (f_0..f_{d-1}) and `f0` is (f_{0,1}..f_{0,d-1}).
 */
inline ModifiedFVector modified_f_vector(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& f0)
{
    const int d = static_cast<int>(f.size());
    if (static_cast<int>(f0.size()) != d - 1)
        throw std::invalid_argument("modified_f_vector: flag entries must be f_{0,1}..f_{0,d-1}");
    auto excess = [&](int j) -> std::int64_t { return j == 0 ? 0 : f0[j - 1] - (j + 1) * f[j]; };
    ModifiedFVector out;
    out.entries.push_back(1);
    out.entries.push_back(f[0]);
    for (int j = 1; j <= d - 2; ++j)
        out.entries.push_back(f[j] + excess(j + 1) + excess(j));
    if (d >= 2)
        out.entries.push_back(f[d - 1] + excess(d - 1));
    return out;
}

inline HVector multiplicial_h(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& f0)
{
    const auto fbar = modified_f_vector(f, f0);
    const std::vector<std::int64_t> tail(fbar.entries.begin() + 1, fbar.entries.end());
    return h_from_f(tail, static_cast<int>(f.size()));
}

/// h'_i = number of steps with |G_j| = i.
inline HVector h_prime_from_shelling(const std::vector<ShellingStep>& steps, int d)
{
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& s : steps)
        ++h.at(s.minimal_new_face.size());
    return HVector(std::move(h));
}

inline HVector h_prime_from_f(const std::vector<std::int64_t>& f, int d) { return h_from_f(f, d); }

inline std::vector<std::int64_t> f_from_h_prime(const HVector& h) { return f_from_h(h); }

/// b_j(x) = sum_i b_{j,i} x^{d-1-i}, b_{j,i} = sum over i-faces H in [G_j, F_j] of f_0(H) - (i+1).
inline IntPolynomial b_polynomial(const FaceLattice& L, const ShellingStep& s)
{
    const int d = L.d();
    IntPolynomial b;
    for (auto idx : L.interval(s.minimal_new_face, s.facet)) {
        const int i = L.dim_at(idx);
        const auto excess = static_cast<std::int64_t>(L.face(idx).size()) - (i + 1);
        if (excess != 0)
            b += IntPolynomial::monomial(d - 1 - i, excess);
    }
    return b;
}

/// a_j as sum_i a_{j,i} x^i from b_j(x) = sum_i a_{j,i} (x+1)^{d-1-i}.
inline IntPolynomial contributions_from_b(const IntPolynomial& b, int d)
{
    const auto y = b.shifted_argument(-1);
    std::vector<std::int64_t> a(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        a[i] = y.coeff(d - 1 - i);
    if (y.degree() > d - 1)
        throw std::domain_error("contributions_from_b: b_j has degree above d-1");
    return IntPolynomial(std::move(a));
}

/// a_j as sum_i a_{j,i} x^i counting the non-final windows of F_j by |U|.
inline std::map<int, IntPolynomial> contributions_from_triangulation(const std::vector<TriangulationStep>& steps)
{
    std::map<int, int> last;
    for (const auto& s : steps)
        last[s.j] = std::max(last[s.j], s.l);
    std::map<int, IntPolynomial> out;
    for (const auto& [j, l] : last)
        out[j] = IntPolynomial{};
    for (const auto& s : steps)
        if (s.l < last[s.j])
            out[s.j] += IntPolynomial::monomial(static_cast<int>(s.minimal_new_face.size()));
    return out;
}

/**
 * a_j for every facet, by the lattice interval route and by the
 * triangulation route; throws std::logic_error when they differ.
 */
inline std::map<int, IntPolynomial> shelling_contributions(const FaceLattice& L,
                                                           const std::vector<ShellingStep>& shelling,
                                                           const std::vector<TriangulationStep>& tri)
{
    const auto counted = contributions_from_triangulation(tri);
    std::map<int, IntPolynomial> out;
    for (const auto& s : shelling) {
        auto a = contributions_from_b(b_polynomial(L, s), L.d());
        auto it = counted.find(s.j);
        const IntPolynomial other = it == counted.end() ? IntPolynomial{} : it->second;
        if (a != other) {
            std::ostringstream os;
            os << "shelling_contributions: a_" << s.j << " is " << a << " from b_j but " << other
               << " from the triangulation";
            throw std::logic_error(os.str());
        }
        out[s.j] = std::move(a);
    }
    return out;
}

inline std::map<int, IntPolynomial> shelling_contributions(const Params& p)
{
    const auto L = FaceLattice::build(enumerate_facets(p).facets(), p.d, {default_max_faces(), true});
    return shelling_contributions(L, colex_shelling(p), triangulation_shelling(p));
}

/// h'_i + sum_j a_{j,i}.
inline HVector h_from_contributions(const HVector& h_prime, const std::map<int, IntPolynomial>& a)
{
    auto e = h_prime.entries;
    for (const auto& [j, poly] : a)
        for (int i = 0; i <= poly.degree(); ++i)
            e.at(i) += poly.coeff(i);
    return HVector(std::move(e));
}

} // namespace ordpoly
