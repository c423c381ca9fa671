/**
 * The colex shelling of P^{d,k,n}: facets in colex order, each with its
 * minimal new face G_j, and generic checks that a facet order is a shelling.
 */
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/ordinary.hpp"

namespace ordpoly {

struct ShellingStep
{
    int j = 0; ///< 1-based position in the shelling
    VertexSet facet;
    VertexSet minimal_new_face;

    friend bool operator==(const ShellingStep&, const ShellingStep&) = default;
};

/// Outcome of a check; `witness` names the first offending object.
struct CheckResult
{
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }

    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// F = A0 u I^1 u ... u I^p u I^n.
struct FaceDecomposition
{
    VertexSet a0;
    std::vector<Interval> even_intervals;
    Interval in; ///< run containing n, or empty
};

/**
 * Split a facet of an ordinary polytope with k > d. A0 depends on max F:
 *   max F <= k-1         -> the run containing 0;
 *   k <= max F <= n-1    -> the runs containing max F - k and max F - k + 2;
 *   max F = n, n-k in F  -> the run containing n-k;
 *   max F = n, n-k not in F -> empty.
 */
inline FaceDecomposition decompose_facet(const VertexSet& f, const Params& p)
{
    p.validate();
    if (p.is_multiplex())
        throw std::invalid_argument("decompose_facet: multiplexes (k = d) use multiplex_minimal_new_face");
    if (f.empty())
        throw std::invalid_argument("decompose_facet: empty set");
    const auto runs = maximal_runs(f);
    const Vertex top = f.max();
    std::vector<bool> in_a0(runs.size(), false);
    auto take = [&](Vertex v) {
        const int r = run_containing(runs, v);
        if (r >= 0)
            in_a0[r] = true;
    };
    if (top <= p.k - 1) {
        take(0);
    } else if (top <= p.n - 1) {
        take(top - p.k);
        take(top - p.k + 2);
    } else if (f.contains(p.n - p.k)) {
        take(p.n - p.k);
    }

    FaceDecomposition out;
    const std::size_t in_run = f.contains(p.n) ? runs.size() - 1 : runs.size();
    if (in_run < runs.size())
        out.in = runs.back();
    std::vector<Vertex> a0_elems;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r == in_run)
            continue;
        if (in_a0[r]) {
            for (Vertex v = runs[r].lo; v <= runs[r].hi; ++v)
                a0_elems.push_back(v);
            continue;
        }
        if (runs[r].length() % 2 != 0) {
            std::ostringstream os;
            os << "decompose_facet: " << f << " has odd run " << runs[r] << " outside A0 (not a facet?)";
            throw std::domain_error(os.str());
        }
        out.even_intervals.push_back(runs[r]);
    }
    out.a0 = VertexSet(std::move(a0_elems));
    return out;
}

/// G = E(I^1) u ... u E(I^p) u I^n. Multiplexes use the index rule.
inline VertexSet minimal_new_face_nonrecursive(const VertexSet& f, const Params& p)
{
    p.validate();
    if (p.is_multiplex()) {
        const int i = multiplex_facets(p.d, p.n).index_of(f);
        if (i < 0)
            throw std::invalid_argument("minimal_new_face: " + to_string(f) + " is not a facet");
        return multiplex_minimal_new_face(p.d, p.n, i);
    }
    const auto dec = decompose_facet(f, p);
    VertexSet g = dec.in.to_set();
    for (const auto& iv : dec.even_intervals)
        g = set_union(g, even_positions(iv));
    return g;
}

namespace detail {

// Cyclic polytope P^{d,k,k}: skip the run at 0, keep the run at k whole,
// take even positions of the remaining (even) runs.
inline VertexSet cyclic_minimal_new_face(const VertexSet& f, int k)
{
    VertexSet g;
    for (const auto& run : maximal_runs(f)) {
        if (run.lo == 0)
            continue;
        if (run.hi == k) {
            g = set_union(g, run.to_set());
            continue;
        }
        if (run.length() % 2 != 0)
            throw std::domain_error("minimal_new_face: odd interior run in " + to_string(f));
        g = set_union(g, even_positions(run));
    }
    return g;
}

} // namespace detail

/**
 * G_j by descent to the cyclic polytope: facets with max F <= n-2 are facets
 * of P^{d,k,n-1} with the same minimal new face; otherwise G_j = G + 1 for the
 * minimal new face G of lsh(F_j).
 */
inline VertexSet minimal_new_face_recursive(const VertexSet& f, const Params& p)
{
    p.validate();
    if (f.empty())
        throw std::invalid_argument("minimal_new_face: empty set");
    if (p.is_cyclic())
        return detail::cyclic_minimal_new_face(f, p.k);
    const Params prev = p.with_n(p.n - 1);
    if (f.max() <= p.n - 2)
        return minimal_new_face_recursive(f, prev);
    auto g = minimal_new_face_recursive(lsh(f, p), prev).shifted(1);
    // In a multiplex lsh can land on the first facet, whose G is empty.
    if (g.empty())
        g = VertexSet{f.max()};
    return g;
}

inline std::vector<ShellingStep> colex_shelling(const Params& p)
{
    const auto facets = enumerate_facets(p);
    std::vector<ShellingStep> steps;
    int j = 1;
    for (const auto& f : facets)
        steps.push_back({j++, f, minimal_new_face_nonrecursive(f, p)});
    return steps;
}

/// Every face other than the top lies in exactly one interval [G_j, F_j].
inline CheckResult verify_shelling_partition(const FaceLattice& L, const std::vector<ShellingStep>& steps)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;
    for (const auto& s : steps)
        iv.emplace_back(s.minimal_new_face.mask(), s.facet.mask());
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
        const auto z = L.mask_at(i);
        int hits = 0;
        for (auto [g, f] : iv)
            if ((z & g) == g && (z & f) == z)
                ++hits;
        if (hits != 1)
            return CheckResult::fail("face " + to_string(L.face(i)) + " lies in " + std::to_string(hits) +
                                     " intervals");
    }
    return {};
}

/**
 * [G, F] is Boolean: with atoms the faces one rank above G, each element is
 * determined by the atoms below it, every atom subset occurs, and order
 * matches inclusion of atom sets.
 */
inline CheckResult boolean_interval_check(const FaceLattice& L, const VertexSet& g, const VertexSet& f)
{
    if (!g.is_subset_of(f))
        return CheckResult::fail("G is not contained in F");
    const auto gi = L.index_of(g);
    const auto fi = L.index_of(f);
    if (!gi || !fi)
        return CheckResult::fail("G or F is not a face");
    const int base = L.dim_at(*gi);
    const int c = L.dim_at(*fi) - base;
    const auto members = L.interval(g, f);
    std::vector<std::uint64_t> atoms;
    for (auto i : members)
        if (L.dim_at(i) == base + 1)
            atoms.push_back(L.mask_at(i));
    if (static_cast<int>(atoms.size()) != c || c > 30)
        return CheckResult::fail("interval has " + std::to_string(atoms.size()) + " atoms, rank " +
                                 std::to_string(c));
    std::map<std::uint32_t, std::uint64_t> by_atoms;
    std::vector<std::int64_t> per_rank(static_cast<std::size_t>(c) + 1, 0);
    for (auto i : members) {
        const auto z = L.mask_at(i);
        std::uint32_t code = 0;
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if ((z & atoms[a]) == atoms[a])
                code |= 1U << a;
        if (std::popcount(code) != L.dim_at(i) - base)
            return CheckResult::fail("face " + to_string(L.face(i)) + " has the wrong number of atoms");
        if (!by_atoms.emplace(code, z).second)
            return CheckResult::fail("two faces share an atom set");
        ++per_rank[L.dim_at(i) - base];
    }
    for (int t = 0; t <= c; ++t)
        if (per_rank[t] != binomial(c, t))
            return CheckResult::fail("rank " + std::to_string(t) + " has " + std::to_string(per_rank[t]) +
                                     " faces");
    for (auto [a, za] : by_atoms)
        for (auto [b, zb] : by_atoms)
            if (((a & b) == a) != ((za & zb) == za))
                return CheckResult::fail("order does not match atom inclusion");
    return {};
}

/**
 * Checks the recursive definition of a shelling directly: each facet after
 * the first meets the earlier ones in a nonempty union of its own ridges,
 * and that ridge set is an initial segment of some shelling of its boundary.
 * The boundary question is answered by exhaustive search over ridge subsets
 * with memoization, so this is meant for small instances.
 */
class TopologicalShellingChecker
{
public:
    explicit TopologicalShellingChecker(const FaceLattice& L) : L_(L)
    {
        for (std::size_t i = 0; i < L.size(); ++i)
            dim_.emplace(L.mask_at(i), L.dim_at(i));
    }

    CheckResult check(const std::vector<VertexSet>& order)
    {
        std::vector<std::uint64_t> placed;
        for (std::size_t j = 0; j < order.size(); ++j) {
            const auto x = order[j].mask();
            if (!dim_.contains(x) || dim_.at(x) != L_.d() - 1)
                return CheckResult::fail(to_string(order[j]) + " is not a facet");
            if (j > 0 && !can_add(x, placed))
                return CheckResult::fail("step " + std::to_string(j + 1) + ": " + to_string(order[j]));
            placed.push_back(x);
        }
        return {};
    }

private:
    struct KeyHash
    {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const
        {
            return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
        }
    };
    using Memo = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, KeyHash>;

    const std::vector<std::uint64_t>& facets_of(std::uint64_t q)
    {
        auto it = facets_.find(q);
        if (it != facets_.end())
            return it->second;
        std::vector<std::uint64_t> out;
        const int e = dim_.at(q);
        for (std::size_t i = 0; i < L_.size(); ++i)
            if (L_.dim_at(i) == e - 1 && (L_.mask_at(i) & q) == L_.mask_at(i))
                out.push_back(L_.mask_at(i));
        return facets_.emplace(q, std::move(out)).first->second;
    }

    // X meets the union of `placed` in a nonempty union of ridges of X that
    // is an initial segment of a shelling of the boundary of X.
    bool can_add(std::uint64_t x, const std::vector<std::uint64_t>& placed)
    {
        const auto& ridges = facets_of(x);
        std::uint64_t chosen = 0;
        for (std::size_t r = 0; r < ridges.size(); ++r)
            for (auto y : placed)
                if ((ridges[r] & y) == ridges[r]) {
                    chosen |= std::uint64_t{1} << r;
                    break;
                }
        for (auto y : placed) {
            const auto meet = x & y;
            if (meet == 0)
                continue;
            bool covered = false;
            for (std::size_t r = 0; r < ridges.size() && !covered; ++r)
                covered = ((chosen >> r) & 1U) && (meet & ridges[r]) == meet;
            if (!covered)
                return false;
        }
        return completable(x, chosen);
    }

    bool trivially_shellable(std::uint64_t q) { return dim_.at(q) <= 1 || std::popcount(q) == dim_.at(q) + 1; }

    bool completable(std::uint64_t q, std::uint64_t s)
    {
        if (s == 0)
            return false;
        if (trivially_shellable(q))
            return true;
        return reachable(q, s) && extendable(q, s);
    }

    bool add_local(std::uint64_t q, std::uint64_t s, std::size_t r)
    {
        const auto& fq = facets_of(q);
        std::vector<std::uint64_t> placed;
        for (std::size_t i = 0; i < fq.size(); ++i)
            if ((s >> i) & 1U)
                placed.push_back(fq[i]);
        return placed.empty() || can_add(fq[r], placed);
    }

    bool reachable(std::uint64_t q, std::uint64_t s)
    {
        if (std::popcount(s) == 1)
            return true;
        auto key = std::make_pair(q, s);
        if (auto it = reach_.find(key); it != reach_.end())
            return it->second;
        bool ok = false;
        const auto c = facets_of(q).size();
        for (std::size_t r = 0; r < c && !ok; ++r)
            if ((s >> r) & 1U) {
                const auto rest = s & ~(std::uint64_t{1} << r);
                ok = reachable(q, rest) && add_local(q, rest, r);
            }
        return reach_[key] = ok;
    }

    bool extendable(std::uint64_t q, std::uint64_t s)
    {
        const auto c = facets_of(q).size();
        const std::uint64_t full = c == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
        if (s == full)
            return true;
        auto key = std::make_pair(q, s);
        if (auto it = ext_.find(key); it != ext_.end())
            return it->second;
        bool ok = false;
        for (std::size_t r = 0; r < c && !ok; ++r)
            if (!((s >> r) & 1U))
                ok = add_local(q, s, r) && extendable(q, s | (std::uint64_t{1} << r));
        return ext_[key] = ok;
    }

    const FaceLattice& L_;
    std::unordered_map<std::uint64_t, int> dim_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> facets_;
    Memo reach_;
    Memo ext_;
};

inline CheckResult verify_shelling_topological(const FaceLattice& L, const std::vector<VertexSet>& facet_order)
{
    TopologicalShellingChecker checker(L);
    return checker.check(facet_order);
}

/// Topological checks run only where exhaustive search stays cheap.
inline bool topological_check_supported(const Params& p) { return p.d <= 7 && p.n <= p.k + 4; }

} // namespace ordpoly
