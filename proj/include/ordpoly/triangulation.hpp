/**
 * The boundary triangulation of P^{d,k,n} by consecutive d-windows of its
 * facets, its shelling with minimal new faces U_{j,l}, simplicial h-vectors
 * and the shallowness test.
 */
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/polynomial.hpp"
#include "ordpoly/shelling.hpp"

namespace ordpoly {

struct TriangulationStep
{
    int j = 0; ///< facet position in the colex shelling, 1-based
    int l = 0; ///< window position within the facet, 1-based
    VertexSet simplex;
    VertexSet minimal_new_face;

    friend bool operator==(const TriangulationStep&, const TriangulationStep&) = default;
};

/// The |F|-d+1 windows of d consecutive vertices of F, left to right.
inline std::vector<VertexSet> facet_windows(const VertexSet& f, int d)
{
    std::vector<VertexSet> out;
    const auto& e = f.elements();
    for (std::size_t l = 0; l + d <= e.size(); ++l)
        out.emplace_back(std::vector<Vertex>(e.begin() + l, e.begin() + l + d));
    return out;
}

/**
 * d-element Gale subsets of a window [i, i+k], 0 <= i <= n-k, that contain
 * 0, or n, or both ends i and i+k. Colex-sorted.
 */
inline std::vector<VertexSet> boundary_triangulation(const Params& p)
{
    p.validate();
    std::set<VertexSet> found;
    std::vector<Vertex> cur;
    for (int i = 0; i <= p.n - p.k; ++i) {
        const Interval ground{i, i + p.k};
        auto rec = [&](auto&& self, Vertex next) -> void {
            if (static_cast<int>(cur.size()) == p.d) {
                VertexSet s(cur);
                const bool anchored = s.contains(0) || s.contains(p.n) || (s.contains(i) && s.contains(i + p.k));
                if (anchored && is_gale(s, ground))
                    found.insert(std::move(s));
                return;
            }
            for (Vertex v = next; v <= ground.hi; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, i);
    }
    std::vector<VertexSet> out(found.begin(), found.end());
    colex_sort(out);
    return out;
}

/**
 * Shelling of the triangulation: facets in colex order, windows left to
 * right. The last window of F_j has U = G_j; moving one window left,
 * U_{j,l} = U_{j,l+1} \ {z} u {z-k, z-1} with z = max T_{j,l+1}.
 * Throws std::logic_error if a simplex would be produced twice.
 */
inline std::vector<TriangulationStep> triangulation_shelling(const Params& p)
{
    const auto shelling = colex_shelling(p);
    std::vector<TriangulationStep> out;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& s : shelling) {
        const auto windows = facet_windows(s.facet, p.d);
        const int last = static_cast<int>(windows.size());
        std::vector<VertexSet> u(windows.size());
        u[last - 1] = s.minimal_new_face;
        for (int l = last - 2; l >= 0; --l) {
            const Vertex z = windows[l + 1].max();
            u[l] = u[l + 1].without(z).with(z - p.k).with(z - 1);
        }
        for (int l = 0; l < last; ++l) {
            if (!seen.insert(windows[l].mask()).second)
                throw std::logic_error("triangulation_shelling: simplex " + to_string(windows[l]) +
                                       " repeated at facet " + std::to_string(s.j));
            out.push_back({s.j, l + 1, windows[l], u[l]});
        }
    }
    return out;
}

/// h_i = number of steps whose minimal new face has i vertices.
inline HVector simplicial_h(const std::vector<TriangulationStep>& steps, int d)
{
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& s : steps) {
        const auto sz = s.minimal_new_face.size();
        if (sz > static_cast<std::size_t>(d))
            throw std::domain_error("simplicial_h: new face larger than a simplex");
        ++h[sz];
    }
    return HVector(std::move(h));
}

/// All nonempty faces of a simplicial complex given by its maximal simplices.
inline std::vector<std::uint64_t> complex_faces(const std::vector<VertexSet>& simplices,
                                                std::size_t max_faces = 200000)
{
    std::unordered_set<std::uint64_t> all;
    for (const auto& t : simplices) {
        const auto m = t.mask();
        for (auto sub = m; sub != 0; sub = (sub - 1) & m) {
            all.insert(sub);
            if (all.size() > max_faces)
                throw std::length_error("simplicial complex exceeds " + std::to_string(max_faces) + " faces");
        }
    }
    std::vector<std::uint64_t> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// h-vector of a pure complex of (dim+1)-vertex simplices from its f-vector.
inline HVector simplicial_h(const std::vector<VertexSet>& simplices, int dim_plus_one)
{
    std::vector<std::int64_t> f(static_cast<std::size_t>(dim_plus_one), 0);
    for (auto m : complex_faces(simplices)) {
        const int sz = std::popcount(m);
        if (sz > dim_plus_one)
            throw std::invalid_argument("simplicial_h: simplex larger than stated dimension");
        ++f[sz - 1];
    }
    return h_from_f(f, dim_plus_one);
}

/**
 * Brute-force minimal new faces of a simplex order: the faces of T_t not in
 * any earlier simplex must have a unique minimal element. Returns nullopt
 * at a position where they do not.
 */
inline std::vector<std::optional<VertexSet>> brute_minimal_new_faces(const std::vector<VertexSet>& order)
{
    std::vector<std::optional<VertexSet>> out;
    std::vector<std::uint64_t> prev;
    for (const auto& t : order) {
        const auto m = t.mask();
        std::vector<std::uint64_t> fresh;
        for (auto sub = m;; sub = (sub - 1) & m) {
            bool old = false;
            for (auto q : prev)
                if ((sub & q) == sub) {
                    old = true;
                    break;
                }
            if (!old)
                fresh.push_back(sub);
            if (sub == 0)
                break;
        }
        std::optional<VertexSet> result;
        std::uint64_t meet = m;
        for (auto x : fresh)
            meet &= x;
        // The new faces form an interval [U, T] exactly when their meet is new.
        const bool interval = std::find(fresh.begin(), fresh.end(), meet) != fresh.end() &&
                              fresh.size() == (std::size_t{1} << (std::popcount(m) - std::popcount(meet)));
        if (interval)
            result = VertexSet::from_mask(meet);
        out.push_back(result);
        prev.push_back(m);
    }
    return out;
}

/// Every face of the complex lies in exactly one [U_{j,l}, T_{j,l}].
inline CheckResult verify_triangulation_partition(const std::vector<TriangulationStep>& steps,
                                                  std::size_t max_faces = 200000)
{
    std::vector<VertexSet> simplices;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;
    for (const auto& s : steps) {
        simplices.push_back(s.simplex);
        iv.emplace_back(s.minimal_new_face.mask(), s.simplex.mask());
    }
    auto faces = complex_faces(simplices, max_faces);
    faces.push_back(0);
    for (auto z : faces) {
        int hits = 0;
        for (auto [u, t] : iv)
            if ((z & u) == u && (z & t) == z)
                ++hits;
        if (hits != 1)
            return CheckResult::fail("face " + to_string(VertexSet::from_mask(z)) + " lies in " +
                                     std::to_string(hits) + " intervals");
    }
    return {};
}

/// Every nonempty face sigma of the complex has dim carrier(sigma) <= 2 dim sigma.
inline CheckResult shallowness_check(const std::vector<VertexSet>& simplices, const FaceLattice& L)
{
    for (auto m : complex_faces(simplices)) {
        const auto sigma = VertexSet::from_mask(m);
        const int ds = static_cast<int>(sigma.size()) - 1;
        const int dc = L.dim(L.carrier(sigma));
        if (dc > 2 * ds)
            return CheckResult::fail("carrier of " + to_string(sigma) + " has dimension " + std::to_string(dc));
    }
    return {};
}

} // namespace ordpoly
