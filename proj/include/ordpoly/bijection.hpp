/**
 * For odd d and n >= d+k-1, the simplices T_{j,l} of the triangulation whose facet has
 * max F_j = n-1 and whose new face has |U| = i (1 <= i <= (d-1)/2) are in
 * bijection with the (k-d)-subsets of [1, k-d+i-1].
 *
 * Such a T splits as
 *
 *     T = [b, n-k-1] u [n-k+1, c] u Y u [e, b+k],
 *
 * with e = b+k-1 when n-k-b is odd and e = b+k otherwise, Y paired in
 * [c+2, e-1], and U = [b+1, n-k-1] u E(Y) u {b+k}. The gaps
 * [c+1, e-1] \ Y = {x_1 < ... < x_{k-d}} give A(T) = {a_1 + y(x_l) + l - 1}
 * where a_1 = n-k-b and y(x) counts the pairs of Y below x.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/shelling.hpp"
#include "ordpoly/triangulation.hpp"

namespace ordpoly {

struct BijectionRecord
{
    VertexSet T;
    VertexSet U; ///< new face from the triangulation shelling, when known
    int b = 0;
    int c = 0;
    int e = 0;
    VertexSet Y;
    int a1 = 0;
    VertexSet x_values;
    std::vector<int> y_counts;
    VertexSet A;
};

namespace detail {

inline int chi(bool condition) { return condition ? 1 : 0; }

inline void require_bijection_range(const Params& p)
{
    p.validate();
    if (p.n < p.d + p.k - 1)
        throw std::invalid_argument("bijection: requires n >= d+k-1");
}

// The block form relies on odd d: for even-dimensional multiplexes the run
// after n-k can have odd length (e.g. {2,4,5,6} in M^{4,7}).
inline void require_block_form(const Params& p)
{
    require_bijection_range(p);
    if (!p.odd_ordinary())
        throw std::invalid_argument("bijection: the block form needs odd d >= 5");
}

inline void require_size(const Params& p, int i)
{
    if (i < 1 || i > (p.d - 1) / 2)
        throw std::invalid_argument("bijection: i must lie in [1, (d-1)/2]");
}

/// E(Y): even positions of each maximal run.
inline VertexSet even_part(const VertexSet& y)
{
    VertexSet out;
    for (const auto& run : maximal_runs(y))
        out = set_union(out, even_positions(run));
    return out;
}

} // namespace detail

/// Split T by the block form above; throws std::invalid_argument if T has another shape.
inline BijectionRecord decompose_simplex(const VertexSet& t, const Params& p)
{
    detail::require_block_form(p);
    const int n = p.n;
    const int k = p.k;
    auto reject = [&](const std::string& why) {
        throw std::invalid_argument("bijection: " + to_string(t) + " " + why);
    };
    if (static_cast<int>(t.size()) != p.d)
        reject("does not have d elements");
    BijectionRecord r;
    r.T = t;
    r.b = t.min();
    if (r.b < n - k - p.d + 1 || r.b > n - k - 1)
        reject("has min outside [n-k-d+1, n-k-1]");
    for (Vertex v = r.b; v <= n - k - 1; ++v)
        if (!t.contains(v))
            reject("does not contain [b, n-k-1]");
    if (t.contains(n - k))
        reject("contains n-k");
    r.e = (n - k - r.b) % 2 != 0 ? r.b + k - 1 : r.b + k;
    // The run after n-k may touch [e, b+k] when there are no gaps.
    r.c = n - k;
    while (r.c + 1 < r.e && t.contains(r.c + 1))
        ++r.c;
    if ((r.c - n + k) % 2 != 0)
        reject("has an odd run after n-k");
    if (t.max() != r.b + k)
        reject("does not end at b+k");
    for (Vertex v = r.e; v <= r.b + k; ++v)
        if (!t.contains(v))
            reject("does not contain [e, b+k]");
    std::vector<Vertex> y;
    for (Vertex v : t)
        if (v > r.c && v < r.e)
            y.push_back(v);
    r.Y = VertexSet(std::move(y));
    if (!is_paired(r.Y) || (!r.Y.empty() && r.Y.min() < r.c + 2))
        reject("has a middle part that is not a paired subset of [c+2, e-1]");
    r.a1 = n - k - r.b;

    std::vector<Vertex> xs;
    for (Vertex v = r.c + 1; v <= r.e - 1; ++v)
        if (!r.Y.contains(v))
            xs.push_back(v);
    r.x_values = VertexSet(xs);
    std::vector<Vertex> a;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        int below = 0;
        for (Vertex v : r.Y)
            if (v < xs[l])
                ++below;
        r.y_counts.push_back(below / 2);
        a.push_back(r.a1 + below / 2 + static_cast<int>(l));
    }
    r.A = VertexSet(std::move(a));
    if (static_cast<int>(r.A.size()) != k - p.d)
        reject("leaves the wrong number of gaps");
    return r;
}

/// [b+1, n-k-1] u E(Y) u {b+k}.
inline VertexSet expected_new_face(const BijectionRecord& r, const Params& p)
{
    return set_union(set_union(VertexSet::range(r.b + 1, p.n - p.k - 1), detail::even_part(r.Y)),
                     VertexSet{r.b + p.k});
}

inline VertexSet facet_to_subset(const VertexSet& t, const Params& p, int i)
{
    detail::require_size(p, i);
    const auto r = decompose_simplex(t, p);
    if (r.a1 + static_cast<int>(r.Y.size()) / 2 != i)
        throw std::invalid_argument("bijection: " + to_string(t) + " does not have |U| = " + std::to_string(i));
    return r.A;
}

/**
 * Inverse map. For k = d the subset is empty and a_1 is taken to be i,
 * which makes Y empty.
 */
inline VertexSet subset_to_facet(const VertexSet& a, const Params& p, int i)
{
    detail::require_block_form(p);
    detail::require_size(p, i);
    const int n = p.n;
    const int k = p.k;
    if (static_cast<int>(a.size()) != k - p.d)
        throw std::invalid_argument("bijection: subset must have k-d elements");
    if (!a.empty() && (a.min() < 1 || a.max() > k - p.d + i - 1))
        throw std::invalid_argument("bijection: subset must lie in [1, k-d+i-1]");
    const int a1 = a.empty() ? i : a.min();
    const int chi = detail::chi(a1 % 2 != 0);
    const int x1 = n - k + p.d - 2 * i + a1 - chi;
    VertexSet removed;
    for (std::size_t l = 0; l < a.size(); ++l)
        removed = removed.with(x1 + 2 * (a[l] - a1) - static_cast<int>(l));
    const auto y = set_difference(VertexSet::range(x1, n - a1 - 1 - chi), removed);
    auto t = set_union(VertexSet::range(n - k - a1, n - k - 1), VertexSet::range(n - k + 1, x1 - 1));
    t = set_union(t, y);
    t = set_union(t, VertexSet::range(n - a1 - chi, n - a1));
    return t;
}

/// Triangulation steps whose facet has max F_j = n-1, in shelling order.
inline std::vector<TriangulationStep> steps_below_top(const Params& p)
{
    const auto shelling = colex_shelling(p);
    std::map<int, Vertex> top;
    for (const auto& s : shelling)
        top[s.j] = s.facet.max();
    std::vector<TriangulationStep> out;
    for (const auto& s : triangulation_shelling(p))
        if (top.at(s.j) == p.n - 1)
            out.push_back(s);
    return out;
}

/// Number of steps with max F_j = n-1 and |U| = i. Defined for every
/// instance; it matches the h-increment once n >= d+k-1.
inline std::int64_t count_by_size(const Params& p, int i)
{
    p.validate();
    std::int64_t count = 0;
    for (const auto& s : steps_below_top(p))
        if (static_cast<int>(s.minimal_new_face.size()) == i)
            ++count;
    return count;
}

/// One record per step with max F_j = n-1 and |U| = i, in shelling order.
inline std::vector<BijectionRecord> bijection_records(const Params& p, int i)
{
    detail::require_block_form(p);
    detail::require_size(p, i);
    std::vector<BijectionRecord> out;
    for (const auto& s : steps_below_top(p)) {
        if (static_cast<int>(s.minimal_new_face.size()) != i)
            continue;
        auto r = decompose_simplex(s.simplex, p);
        r.U = s.minimal_new_face;
        out.push_back(std::move(r));
    }
    return out;
}

/// Every step with max F_j = n-1 has the block form and the predicted U.
inline CheckResult check_block_form(const Params& p)
{
    detail::require_block_form(p);
    for (const auto& s : steps_below_top(p)) {
        BijectionRecord r;
        try {
            r = decompose_simplex(s.simplex, p);
        } catch (const std::invalid_argument& e) {
            return CheckResult::fail(e.what());
        }
        if (expected_new_face(r, p) != s.minimal_new_face)
            return CheckResult::fail("U of " + to_string(s.simplex) + " is " + to_string(s.minimal_new_face) +
                                     ", block form predicts " + to_string(expected_new_face(r, p)));
    }
    return {};
}

} // namespace ordpoly
