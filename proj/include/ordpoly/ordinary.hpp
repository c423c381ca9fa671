/**
 * Facets of the ordinary polytope P^{d,k,n}.
 *
 * Each facet is the retraction to [0, n] of a generator
 *
 *     X = [i, i+2r-1] u Y u [i+k, i+k+2r-1],   1 <= r <= m,
 *
 * with Y a paired (d-2r-1)-subset of [i+2r+1, i+k-2] and |ret_n(X)| >= d.
 * Multiplexes of even dimension (and d = 3) have no such description; for
 * them the clamped windows of the multiplex play the role of generators.
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/multiplex.hpp"

namespace ordpoly {

/// Colex-sorted, duplicate-free facet list.
class FacetList
{
public:
    FacetList() = default;
    explicit FacetList(std::vector<VertexSet> facets) : facets_(std::move(facets)) { colex_sort(facets_); }

    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t size() const { return facets_.size(); }
    const VertexSet& operator[](std::size_t i) const { return facets_[i]; }
    auto begin() const { return facets_.begin(); }
    auto end() const { return facets_.end(); }

    std::optional<std::size_t> index_of(const VertexSet& f) const
    {
        auto it = std::lower_bound(facets_.begin(), facets_.end(), f, ColexLess{});
        if (it == facets_.end() || *it != f)
            return std::nullopt;
        return static_cast<std::size_t>(it - facets_.begin());
    }

    bool contains(const VertexSet& f) const { return index_of(f).has_value(); }

    friend bool operator==(const FacetList&, const FacetList&) = default;

private:
    std::vector<VertexSet> facets_;
};

/// One generator together with its raw point set and the facet it retracts to.
/// For multiplex windows r is 0, i is the facet index and y is empty.
struct FacetGenerator
{
    int i = 0;
    int r = 0;
    VertexSet y;
    std::vector<Vertex> points;
    VertexSet facet;
};

namespace detail {

inline std::vector<Vertex> generator_points(int i, int r, int k, const VertexSet& y)
{
    std::vector<Vertex> x;
    for (Vertex v = i; v <= i + 2 * r - 1; ++v)
        x.push_back(v);
    x.insert(x.end(), y.begin(), y.end());
    for (Vertex v = i + k; v <= i + k + 2 * r - 1; ++v)
        x.push_back(v);
    return x;
}

} // namespace detail

/**
 * Every generator whose retraction has at least d elements.
 *
 * The window origin runs over [-(k+2m), n]: outside it all of X falls on one
 * side of [0, n] and retracts to a single vertex.
 */
inline std::vector<FacetGenerator> facet_generators(const Params& p)
{
    p.validate();
    std::vector<FacetGenerator> out;
    if (!p.odd_ordinary()) {
        for (int i = 0; i <= p.n; ++i) {
            auto pts = multiplex_window(p.d, i);
            auto f = retract(pts, p.n);
            if (static_cast<int>(f.size()) >= p.d)
                out.push_back({i, 0, {}, std::move(pts), std::move(f)});
        }
        return out;
    }
    const int m = p.m();
    for (int r = 1; r <= m; ++r) {
        for (int i = -(p.k + 2 * m); i <= p.n; ++i) {
            const Interval y_range{i + 2 * r + 1, i + p.k - 2};
            for (auto& y : paired_subsets(y_range, p.d - 2 * r - 1)) {
                auto pts = detail::generator_points(i, r, p.k, y);
                auto f = retract(pts, p.n);
                if (static_cast<int>(f.size()) >= p.d)
                    out.push_back({i, r, y, std::move(pts), std::move(f)});
            }
        }
    }
    return out;
}

/// Facets of P^{d,k,n} in colex order.
inline FacetList enumerate_facets(const Params& p)
{
    p.validate();
    if (!p.odd_ordinary())
        return FacetList(multiplex_facets(p.d, p.n).facets);
    std::vector<VertexSet> all;
    for (auto& g : facet_generators(p))
        all.push_back(std::move(g.facet));
    return FacetList(std::move(all));
}

/// d-element Gale subsets of [0, k]: the facets of the cyclic polytope.
inline FacetList gale_facets(int d, int k)
{
    std::vector<VertexSet> out;
    std::vector<Vertex> cur;
    const Interval ground{0, k};
    auto rec = [&](auto&& self, Vertex next) -> void {
        if (static_cast<int>(cur.size()) == d) {
            VertexSet s(cur);
            if (is_gale(s, ground))
                out.push_back(std::move(s));
            return;
        }
        for (Vertex v = next; v <= k; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return FacetList(std::move(out));
}

/**
 * Left shift P^{d,k,n} -> P^{d,k,n-1}: lsh(F) \ {0} = (F-1) n [1, n-1], and
 * 0 is kept when 0 or 1 lies in F.
 */
inline VertexSet lsh(const VertexSet& f, const Params& p)
{
    if (f.empty() || f.max() < p.k)
        throw std::invalid_argument("lsh: requires max F >= k");
    if (p.n < p.k + 1)
        throw std::invalid_argument("lsh: requires n >= k+1");
    std::vector<Vertex> out;
    if (f.contains(0) || f.contains(1))
        out.push_back(0);
    for (Vertex v : f)
        if (v >= 2)
            out.push_back(v - 1);
    return VertexSet(std::move(out));
}

namespace detail {

// rsh for every facet of P^{d,k,n-1}: ret_n(X+1) over its generators X.
inline std::map<VertexSet, VertexSet> right_shift_table(const Params& target)
{
    const Params prev = target.with_n(target.n - 1);
    std::map<VertexSet, VertexSet> table;
    for (const auto& g : facet_generators(prev)) {
        std::vector<Vertex> moved = g.points;
        for (auto& v : moved)
            ++v;
        auto shifted = retract(moved, target.n);
        auto [it, inserted] = table.emplace(g.facet, shifted);
        if (!inserted && it->second != shifted)
            throw std::logic_error("rsh: generators of " + to_string(g.facet) + " disagree");
    }
    return table;
}

} // namespace detail

/**
 * Right shift of a facet F of P^{d,k,n-1} into P^{d,k,n} (p names the
 * target, so p.n is the larger vertex count): rsh(F) = ret_n(X+1) for a
 * generator X of F.
 */
inline VertexSet rsh(const VertexSet& f, const Params& p)
{
    if (p.n < p.k + 1)
        throw std::invalid_argument("rsh: requires n >= k+1");
    auto table = detail::right_shift_table(p);
    auto it = table.find(f);
    if (it == table.end())
        throw std::invalid_argument("rsh: " + to_string(f) + " is not a facet of P^{d,k,n-1}");
    return it->second;
}

/**
 * Facets of P^{d,k,n} built from those of P^{d,k,n-1}: keep the facets with
 * max <= n-2 and right-shift those with max >= n-2. The base n = k is the
 * Gale enumeration of the cyclic polytope.
 */
inline FacetList facets_by_recursion(const Params& p)
{
    p.validate();
    if (p.n == p.k)
        throw std::invalid_argument("facets_by_recursion: n = k is the base case (use gale_facets)");
    const Params prev = p.with_n(p.n - 1);
    const FacetList below = prev.n == prev.k ? gale_facets(p.d, p.k) : facets_by_recursion(prev);
    const auto table = detail::right_shift_table(p);
    std::vector<VertexSet> out;
    for (const auto& f : below) {
        if (f.max() <= p.n - 2)
            out.push_back(f);
        if (f.max() >= p.n - 2) {
            auto it = table.find(f);
            if (it == table.end())
                throw std::logic_error("facets_by_recursion: no generator for " + to_string(f));
            out.push_back(it->second);
        }
    }
    return FacetList(std::move(out));
}

} // namespace ordpoly
