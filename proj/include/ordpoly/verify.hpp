/**
 * Invariant suite for one instance P^{d,k,n}: every structural claim about
 * facets, the face lattice, both shellings, the four h-vector computations,
 * the h-increment law and (for k = d) the multiplex statements, each run as
 * a named check that records a witness on failure.
 */
#pragma once

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordpoly/bijection.hpp"
#include "ordpoly/hvector.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/ordinary.hpp"
#include "ordpoly/shelling.hpp"
#include "ordpoly/triangulation.hpp"

namespace ordpoly {

struct NamedCheck
{
    std::string name;
    bool ok = true;
    std::string detail;
};

struct VerifyReport
{
    Params params;
    std::vector<NamedCheck> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return true;
    }
};

/// The standard instance grid: d in {5,7}, d <= k <= d+3, k <= n <= k+4,
/// then the multiplexes k = d, n in [d, d+4] for d = 4 and 6 (d = 5 is
/// already in the first block).
inline std::vector<Params> standard_grid()
{
    std::vector<Params> out;
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k)
            for (int n = k; n <= k + 4; ++n)
                out.push_back(Params::make(d, k, n));
    for (int d : {4, 6})
        for (int n = d; n <= d + 4; ++n)
            out.push_back(Params::make(d, d, n));
    return out;
}

namespace detail {

template <typename T>
std::string show(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string show_vec(const std::vector<std::int64_t>& v)
{
    return show(HVector(v));
}

class CheckRunner
{
public:
    explicit CheckRunner(VerifyReport& r) : report_(r) {}

    /// `body` returns an empty string on success, else a witness.
    void run(const std::string& name, const std::function<std::string()>& body)
    {
        NamedCheck c{name, true, {}};
        try {
            c.detail = body();
            c.ok = c.detail.empty();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
};

inline std::string from_result(const CheckResult& r) { return r.ok ? std::string{} : r.witness; }

} // namespace detail

struct VerifyOptions
{
    std::size_t max_faces = 200000;
    bool topological = true; ///< run the exhaustive shelling checker where supported
};

inline VerifyReport verify_instance(const Params& p, const VerifyOptions& opts = {})
{
    using detail::show;
    p.validate();
    VerifyReport report{p, {}};
    detail::CheckRunner run(report);
    const int d = p.d;

    const auto facets = enumerate_facets(p);
    const auto L = FaceLattice::build(facets.facets(), d, {opts.max_faces, true});
    const auto shelling = colex_shelling(p);
    const auto tri = triangulation_shelling(p);
    std::vector<VertexSet> simplices;
    for (const auto& s : tri)
        simplices.push_back(s.simplex);
    const HVector h = toric_h(L);
    const HVector h_prime = h_prime_from_shelling(shelling, d);
    const auto f = L.f_vector();
    const auto f0 = L.flag_f0();

    run.run("facets: first [0,d-1], last [n-d+1,n]", [&]() -> std::string {
        if (facets[0] != VertexSet::range(0, d - 1) || facets.facets().back() != VertexSet::range(p.n - d + 1, p.n))
            return "first " + show(facets[0]) + ", last " + show(facets.facets().back());
        return {};
    });
    // Even-dimensional multiplexes are not Gale polytopes: {0,2,3,4} is a facet of M^{4,5}.
    run.run("facets: d <= |F| <= 2(d-1), Gale in [0,n] for odd d", [&]() -> std::string {
        for (const auto& F : facets)
            if (static_cast<int>(F.size()) < d || static_cast<int>(F.size()) > 2 * (d - 1) ||
                (d % 2 == 1 && !is_gale(F, Interval{0, p.n})))
                return show(F);
        return {};
    });
    if (p.n > p.k)
        run.run("facets: recursion agrees with the generator family", [&]() -> std::string {
            const auto rec = facets_by_recursion(p);
            return rec == facets ? std::string{} : "recursion gives " + std::to_string(rec.size()) + " facets";
        });
    if (p.n > p.k)
        run.run("facets: lsh lands in P^{d,k,n-1} and is colex monotone", [&]() -> std::string {
            const auto below = enumerate_facets(p.with_n(p.n - 1));
            std::vector<std::pair<VertexSet, VertexSet>> shifted;
            for (const auto& F : facets)
                if (F.max() >= p.k) {
                    auto g = lsh(F, p);
                    if (!below.contains(g))
                        return "lsh" + show(F) + " = " + show(g);
                    shifted.emplace_back(F, g);
                }
            for (std::size_t a = 0; a + 1 < shifted.size(); ++a)
                if (colex_compare(shifted[a].second, shifted[a + 1].second) > 0)
                    return "order reversed at " + show(shifted[a].first);
            return {};
        });

    run.run("lattice: Eulerian", [&]() -> std::string {
        auto w = L.euler_witness();
        return w ? "interval [" + show(L.face(w->first)) + ", " + show(L.face(w->second)) + "]" : std::string{};
    });
    run.run("lattice: f_{d-1} = facet count, f_0 = n+1", [&]() -> std::string {
        if (f.back() != static_cast<std::int64_t>(facets.size()) || f.front() != p.n + 1)
            return detail::show_vec(f);
        return {};
    });
    run.run("lattice: facet g = multiplex g", [&]() -> std::string {
        const auto data = toric_data(L);
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L.dim_at(i) == d - 1 &&
                data.g[i] != multiplex_g(d - 1, static_cast<int>(L.face(i).size())))
                return show(L.face(i)) + " has g = " + show(data.g[i]);
        return {};
    });

    run.run("h: symmetric", [&]() -> std::string { return h.is_symmetric() ? std::string{} : show(h); });
    run.run("h: toric = multiplicial", [&]() -> std::string {
        const auto m = multiplicial_h(f, f0);
        return m == h ? std::string{} : "multiplicial " + show(m) + " vs toric " + show(h);
    });
    if (p.odd_ordinary())
        run.run("h: toric = closed form", [&]() -> std::string {
            const auto c = h_closed_form(p);
            return c == h ? std::string{} : "closed " + show(c) + " vs toric " + show(h);
        });
    run.run("h: toric = triangulation shelling count", [&]() -> std::string {
        const auto t = simplicial_h(tri, d);
        return t == h ? std::string{} : "triangulation " + show(t) + " vs toric " + show(h);
    });
    run.run("h: triangulation f-vector agrees with its shelling", [&]() -> std::string {
        const auto a = simplicial_h(simplices, d);
        const auto b = simplicial_h(tri, d);
        return a == b ? std::string{} : show(a) + " vs " + show(b);
    });
    run.run("h: sum equals f_{d-1} + (f_{0,d-1} - d f_{d-1})", [&]() -> std::string {
        const auto expect = f[d - 1] + (f0[d - 2] - d * f[d - 1]);
        return h.sum() == expect ? std::string{} : std::to_string(h.sum()) + " vs " + std::to_string(expect);
    });

    run.run("h': simplicial transform of f equals the G_j count", [&]() -> std::string {
        const auto t = h_prime_from_f(f, d);
        if (t != h_prime)
            return show(t) + " vs " + show(h_prime);
        if (f_from_h_prime(h_prime) != f)
            return "inverse transform does not recover f";
        return {};
    });
    run.run("h': h >= h', h' >= h(C^{d,k}) with equality above d/2", [&]() -> std::string {
        if (!h.dominates(h_prime))
            return "h " + show(h) + " h' " + show(h_prime);
        const auto c = cyclic_h(d, p.k);
        if (!h_prime.dominates(c))
            return "h' " + show(h_prime) + " below cyclic " + show(c);
        for (int i = 0; i <= d; ++i)
            if (2 * i > d && h_prime[i] != c[i])
                return "h'_" + std::to_string(i) + " = " + std::to_string(h_prime[i]) + " vs cyclic " +
                       std::to_string(c[i]);
        return {};
    });

    run.run("shelling: intervals [G_j,F_j] partition the lattice",
            [&] { return detail::from_result(verify_shelling_partition(L, shelling)); });
    run.run("shelling: each [G_j,F_j] is Boolean", [&]() -> std::string {
        for (const auto& s : shelling)
            if (auto r = boolean_interval_check(L, s.minimal_new_face, s.facet); !r)
                return "j=" + std::to_string(s.j) + ": " + r.witness;
        return {};
    });
    run.run("shelling: G nonrecursive = G recursive", [&]() -> std::string {
        for (const auto& s : shelling) {
            const auto g = minimal_new_face_recursive(s.facet, p);
            if (g != s.minimal_new_face)
                return "j=" + std::to_string(s.j) + ": " + show(s.minimal_new_face) + " vs " + show(g);
        }
        return {};
    });
    run.run("shelling: G_j simplex, max F_j in G_j, min F_j not in G_j", [&]() -> std::string {
        const int v = static_cast<int>(shelling.size());
        for (const auto& s : shelling) {
            const auto& g = s.minimal_new_face;
            if (L.dim(L.carrier(g)) != static_cast<int>(g.size()) - 1 || !L.contains(g))
                return "G_" + std::to_string(s.j) + " is not a simplex face";
            if (s.j >= 2 && s.j <= v - 1 && (!g.contains(s.facet.max()) || g.contains(s.facet.min())))
                return "j=" + std::to_string(s.j);
        }
        return {};
    });
    if (opts.topological && topological_check_supported(p))
        run.run("shelling: colex order is a shelling (recursive definition)", [&] {
            std::vector<VertexSet> order;
            for (const auto& s : shelling)
                order.push_back(s.facet);
            return detail::from_result(verify_shelling_topological(L, order));
        });

    run.run("triangulation: Gale windows = facet windows", [&]() -> std::string {
        auto a = boundary_triangulation(p);
        auto b = simplices;
        colex_sort(b);
        return a == b ? std::string{} : std::to_string(a.size()) + " Gale simplices vs " + std::to_string(b.size());
    });
    run.run("triangulation: intervals [U,T] partition the complex",
            [&] { return detail::from_result(verify_triangulation_partition(tri, opts.max_faces)); });
    run.run("triangulation: last window U = G_j, earlier windows span k", [&]() -> std::string {
        std::map<int, const ShellingStep*> by_j;
        for (const auto& s : shelling)
            by_j[s.j] = &s;
        for (std::size_t t = 0; t < tri.size(); ++t) {
            const bool last = t + 1 == tri.size() || tri[t + 1].j != tri[t].j;
            const auto& s = tri[t];
            if (last && s.minimal_new_face != by_j.at(s.j)->minimal_new_face)
                return "(" + std::to_string(s.j) + "," + std::to_string(s.l) + ")";
            if (!last && s.simplex.max() - s.simplex.min() != p.k)
                return "(" + std::to_string(s.j) + "," + std::to_string(s.l) + ") span";
        }
        return {};
    });
    run.run("triangulation: shallow",
            [&] { return detail::from_result(shallowness_check(simplices, L)); });

    run.run("contributions: a_{j,i} >= 0, sum = |F_j| - d, h = h' + sum a_j", [&]() -> std::string {
        const auto a = shelling_contributions(L, shelling, tri);
        for (const auto& s : shelling) {
            const auto& poly = a.at(s.j);
            std::int64_t sum = 0;
            for (int i = 0; i <= poly.degree(); ++i) {
                if (poly.coeff(i) < 0)
                    return "a_" + std::to_string(s.j) + " = " + show(poly);
                sum += poly.coeff(i);
            }
            if (sum != static_cast<std::int64_t>(s.facet.size()) - d)
                return "sum a_" + std::to_string(s.j) + " = " + std::to_string(sum);
        }
        const auto total = h_from_contributions(h_prime, a);
        return total == h ? std::string{} : "h' + sum a_j = " + show(total);
    });

    if (p.n >= d + p.k - 1) {
        run.run("h-increment: difference = count_by_size, binomial below the middle", [&]() -> std::string {
            const auto prev = toric_h(FaceLattice::build(enumerate_facets(p.with_n(p.n - 1)).facets(), d,
                                                         {opts.max_faces, true}));
            for (int i = 1; i <= d - 1; ++i) {
                const auto diff = h[i] - prev[i];
                const auto cnt = count_by_size(p, i);
                if (diff != cnt)
                    return "i=" + std::to_string(i) + ": difference " + std::to_string(diff) + ", count " +
                           std::to_string(cnt);
                if (2 * i <= d - 1 && diff != binomial(p.k - d + i - 1, i - 1))
                    return "i=" + std::to_string(i) + ": difference " + std::to_string(diff);
            }
            return {};
        });
        if (p.odd_ordinary()) {
            run.run("bijection: block form and U", [&] { return detail::from_result(check_block_form(p)); });
            run.run("bijection: A(T) bijective onto (k-d)-subsets of [1,k-d+i-1]", [&]() -> std::string {
                for (int i = 1; i <= p.m(); ++i) {
                    std::set<VertexSet> seen;
                    for (const auto& r : bijection_records(p, i)) {
                        if (subset_to_facet(r.A, p, i) != r.T)
                            return "round trip fails for " + show(r.T);
                        if (static_cast<int>(r.Y.size()) != 2 * i - 2 * r.a1)
                            return "|Y| != 2i - 2a_1 for " + show(r.T);
                        if (!seen.insert(r.A).second)
                            return "A repeated: " + show(r.A);
                    }
                    if (static_cast<std::int64_t>(seen.size()) != binomial(p.k - d + i - 1, p.k - d))
                        return "i=" + std::to_string(i) + ": " + std::to_string(seen.size()) + " subsets";
                }
                return {};
            });
        }
    }

    if (p.is_multiplex()) {
        const int n = p.n;
        run.run("multiplex: toric h = (1, n-d+1, ..., n-d+1, 1)", [&]() -> std::string {
            std::vector<std::int64_t> e(static_cast<std::size_t>(d) + 1, n - d + 1);
            e.front() = e.back() = 1;
            return h == HVector(e) ? std::string{} : show(h);
        });
        run.run("multiplex: h' = (1, n-d+1, 1, ..., 1)", [&]() -> std::string {
            std::vector<std::int64_t> e(static_cast<std::size_t>(d) + 1, 1);
            e[1] = n - d + 1;
            return h_prime == HVector(e) ? std::string{} : show(h_prime);
        });
        run.run("multiplex: solid triangulation h = (1, n-d, 0, ...)", [&]() -> std::string {
            const auto solid = multiplex_triangulation(d, n);
            std::vector<std::int64_t> e(static_cast<std::size_t>(d) + 2, 0);
            e[0] = 1;
            e[1] = n - d;
            const auto got = simplicial_h(solid, d + 1);
            if (got != HVector(e))
                return show(got);
            std::vector<std::int64_t> counted(e.size(), 0);
            for (const auto& u : brute_minimal_new_faces(solid)) {
                if (!u)
                    return "index order is not a shelling";
                ++counted[u->size()];
            }
            return HVector(counted) == got ? std::string{} : "shelling count " + show(HVector(counted));
        });
        run.run("multiplex: colex order F_0..F_{n-d}, F_{n-1}..F_{n-d+1}, F_n", [&]() -> std::string {
            const auto mf = multiplex_facets(d, n);
            const auto idx = multiplex_colex_indices(d, n);
            for (std::size_t t = 0; t < idx.size(); ++t)
                if (shelling.at(t).facet != mf.facets.at(idx[t]))
                    return "position " + std::to_string(t + 1) + " is " + show(shelling[t].facet);
            return shelling.size() == idx.size() ? std::string{} : "facet count differs";
        });
        run.run("multiplex: boundary simplices T_{i\\j} = triangulation, shelling order valid", [&]() -> std::string {
            std::vector<VertexSet> bd;
            for (const auto& b : multiplex_boundary_triangulation(d, n))
                bd.push_back(b.vertices);
            for (const auto& u : brute_minimal_new_faces(bd))
                if (!u)
                    return "index order is not a shelling";
            colex_sort(bd);
            auto ours = simplices;
            colex_sort(ours);
            return bd == ours ? std::string{} : "simplex sets differ";
        });
    }
    return report;
}

} // namespace ordpoly
