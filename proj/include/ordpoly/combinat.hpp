/**
 * Base combinatorial vocabulary: vertex sets, intervals, parameter triples,
 * retraction, Gale and paired subsets, even positions and colex order.
 *
 * Faces of polytopes and of triangulations are identified with their vertex
 * sets throughout the library; VertexSet is that representation.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordpoly {

using Vertex = int;

/// Largest vertex label accepted anywhere; faces are packed into 64-bit masks.
inline constexpr Vertex kMaxLabel = 62;

/**
 * Strictly increasing set of integer vertex labels.
 *
 * Construction from arbitrary sequences sorts and deduplicates, so the
 * invariant holds for every value of the type.
 */
class VertexSet
{
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> values) : VertexSet(std::vector<Vertex>(values)) {}
    explicit VertexSet(std::vector<Vertex> values) : elems_(std::move(values))
    {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    /// [lo, hi] as a set; empty when lo > hi.
    static VertexSet range(Vertex lo, Vertex hi)
    {
        VertexSet s;
        for (Vertex v = lo; v <= hi; ++v)
            s.elems_.push_back(v);
        return s;
    }

    static VertexSet from_mask(std::uint64_t mask)
    {
        VertexSet s;
        for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
            if (mask & 1U)
                s.elems_.push_back(v);
        return s;
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const_iterator begin() const { return elems_.begin(); }
    const_iterator end() const { return elems_.end(); }
    Vertex operator[](std::size_t i) const { return elems_[i]; }
    Vertex min() const { return elems_.front(); }
    Vertex max() const { return elems_.back(); }
    const std::vector<Vertex>& elements() const { return elems_; }

    bool contains(Vertex v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

    bool is_subset_of(const VertexSet& other) const
    {
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
    }

    /// Bit v set for every element v; requires all elements in [0, 63].
    std::uint64_t mask() const
    {
        std::uint64_t m = 0;
        for (Vertex v : elems_) {
            if (v < 0 || v > 63)
                throw std::out_of_range("vertex label outside mask range");
            m |= std::uint64_t{1} << v;
        }
        return m;
    }

    VertexSet shifted(int delta) const
    {
        VertexSet s = *this;
        for (Vertex& v : s.elems_)
            v += delta;
        return s;
    }

    VertexSet with(Vertex v) const
    {
        std::vector<Vertex> e = elems_;
        e.push_back(v);
        return VertexSet(std::move(e));
    }

    VertexSet without(Vertex v) const
    {
        VertexSet s = *this;
        s.elems_.erase(std::remove(s.elems_.begin(), s.elems_.end(), v), s.elems_.end());
        return s;
    }

    /// Compact label string as printed in the tables, e.g. "678"; labels
    /// above 9 force a comma-separated form.
    std::string digits() const
    {
        const bool wide = !elems_.empty() && (elems_.back() > 9 || elems_.front() < 0);
        std::string out;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (wide && i > 0)
                out += ',';
            out += std::to_string(elems_[i]);
        }
        return out;
    }

    /// Lexicographic order; only for use as a container key. Use
    /// colex_compare for the combinatorial order.
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> elems_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os << '}';
}

inline std::string to_string(const VertexSet& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval
{
    Vertex lo = 0;
    Vertex hi = -1;

    bool empty() const { return lo > hi; }
    int length() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(Vertex v) const { return lo <= v && v <= hi; }
    VertexSet to_set() const { return VertexSet::range(lo, hi); }

    friend bool operator==(const Interval& a, const Interval& b)
    {
        return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv)
{
    if (iv.empty())
        return os << "[]";
    return os << '[' << iv.lo << ',' << iv.hi << ']';
}

/**
 * The triple (d, k, n) naming P^{d,k,n}: dimension d, first vertex on k
 * edges, vertices 0..n.
 *
 * Three families are accepted:
 *   - ordinary polytopes, n >= k >= d = 2m+1 >= 5 (cyclic when n = k);
 *   - multiplexes M^{d,n}, written with k = d, for any d >= 2;
 *   - and their overlap, k = d odd >= 5, where both descriptions apply.
 */
struct Params
{
    int d = 0;
    int k = 0;
    int n = 0;

    static Params make(int d, int k, int n)
    {
        Params p{d, k, n};
        p.validate();
        return p;
    }

    void validate() const
    {
        if (d < 2)
            throw std::invalid_argument("dimension d must be at least 2");
        if (k < d)
            throw std::invalid_argument("k must satisfy k >= d");
        if (n < k)
            throw std::invalid_argument("n must satisfy n >= k");
        if (n > kMaxLabel)
            throw std::invalid_argument("n exceeds the supported label range");
        if (k > d && !odd_ordinary())
            throw std::invalid_argument("k > d requires odd d >= 5 (ordinary polytope)");
    }

    int m() const { return (d - 1) / 2; }
    bool odd_ordinary() const { return d >= 5 && d % 2 == 1; }
    bool is_multiplex() const { return k == d; }
    bool is_cyclic() const { return n == k; }

    /// Same d and k with a different last vertex.
    Params with_n(int new_n) const { return Params::make(d, k, new_n); }

    friend bool operator==(const Params&, const Params&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Params& p)
{
    return os << "P^{" << p.d << ',' << p.k << ',' << p.n << '}';
}

inline std::int64_t binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i)
        out = out * (n - r + i) / i;
    return out;
}

/// Clamp every element into [0, n] and deduplicate.
inline VertexSet retract(std::span<const Vertex> values, int n)
{
    std::vector<Vertex> out;
    out.reserve(values.size());
    for (Vertex v : values)
        out.push_back(std::clamp(v, 0, n));
    return VertexSet(std::move(out));
}

inline VertexSet retract(const VertexSet& values, int n) { return retract(values.elements(), n); }

/// Maximal runs of consecutive integers, left to right.
inline std::vector<Interval> maximal_runs(const VertexSet& f)
{
    std::vector<Interval> runs;
    for (Vertex v : f) {
        if (!runs.empty() && runs.back().hi == v - 1)
            runs.back().hi = v;
        else
            runs.push_back({v, v});
    }
    return runs;
}

/// Every maximal run has even length.
inline bool is_paired(const VertexSet& y)
{
    for (const Interval& run : maximal_runs(y))
        if (run.length() % 2 != 0)
            return false;
    return true;
}

/**
 * Gale evenness: between any two consecutive elements of ground \ y there is
 * an even number of elements of y. Runs touching the ends of the ground
 * interval are unconstrained.
 */
inline bool is_gale(const VertexSet& y, Interval ground)
{
    for (Vertex v : y)
        if (!ground.contains(v))
            throw std::invalid_argument("is_gale: set is not inside the ground interval");
    Vertex prev_gap = ground.lo - 1;
    int count = 0;
    for (Vertex v = ground.lo; v <= ground.hi; ++v) {
        if (y.contains(v)) {
            ++count;
            continue;
        }
        if (prev_gap >= ground.lo && count % 2 != 0)
            return false;
        prev_gap = v;
        count = 0;
    }
    return true;
}

/// Second, fourth, ... elements of the interval.
inline VertexSet even_positions(Interval iv)
{
    std::vector<Vertex> e;
    for (Vertex v = iv.lo + 1; v <= iv.hi; v += 2)
        e.push_back(v);
    return VertexSet(std::move(e));
}

/**
 * Colex comparison: compare right-aligned from the largest element down; the
 * first difference decides, and a set that runs out first is the smaller.
 */
inline std::strong_ordering colex_compare(const VertexSet& f, const VertexSet& g)
{
    auto i = f.size();
    auto j = g.size();
    while (i > 0 && j > 0) {
        --i;
        --j;
        if (f[i] != g[j])
            return f[i] < g[j] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i == 0 && j == 0)
        return std::strong_ordering::equal;
    return i == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

struct ColexLess
{
    bool operator()(const VertexSet& a, const VertexSet& b) const { return colex_compare(a, b) < 0; }
};

inline void colex_sort(std::vector<VertexSet>& sets)
{
    std::sort(sets.begin(), sets.end(), ColexLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

namespace detail {

// Paired sets have a unique tiling by dominoes {a, a+1}; choose the domino
// starts left to right with a gap of at least 2.
inline void place_dominoes(Vertex next, Vertex hi, int remaining, std::vector<Vertex>& cur,
                           std::vector<VertexSet>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (Vertex a = next; a + 1 + 2 * (remaining - 1) <= hi; ++a) {
        cur.push_back(a);
        cur.push_back(a + 1);
        place_dominoes(a + 2, hi, remaining - 1, cur, out);
        cur.pop_back();
        cur.pop_back();
    }
}

} // namespace detail

/// All subsets of `range` of the given even size whose maximal runs all have
/// even length, in colex order.
inline std::vector<VertexSet> paired_subsets(Interval range, int size)
{
    if (size < 0 || size % 2 != 0)
        throw std::invalid_argument("paired_subsets: size must be even and nonnegative");
    std::vector<VertexSet> out;
    std::vector<Vertex> cur;
    if (size == 0) {
        out.emplace_back();
        return out;
    }
    detail::place_dominoes(range.lo, range.hi, size / 2, cur, out);
    colex_sort(out);
    return out;
}

/// Index of the run of `f` containing v, or -1.
inline int run_containing(const std::vector<Interval>& runs, Vertex v)
{
    for (std::size_t i = 0; i < runs.size(); ++i)
        if (runs[i].contains(v))
            return static_cast<int>(i);
    return -1;
}

} // namespace ordpoly
