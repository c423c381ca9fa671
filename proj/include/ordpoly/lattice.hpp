/**
 * Face lattice of a polytope built from its facet vertex sets.
 *
 * Every proper face is an intersection of facets, so the lattice is the
 * intersection closure of the facets together with the empty face and the
 * whole vertex set. Faces are stored as 64-bit vertex masks.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ordpoly/combinat.hpp"

namespace ordpoly {

/// Default cap on materialized faces; overridden by ORDPOLY_MAX_FACES.
inline std::size_t default_max_faces()
{
    constexpr std::size_t fallback = 200000;
    const char* env = std::getenv("ORDPOLY_MAX_FACES");
    if (env == nullptr || *env == '\0')
        return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("ORDPOLY_MAX_FACES must be a positive integer");
    return static_cast<std::size_t>(v);
}

struct LatticeOptions
{
    std::size_t max_faces = 200000;
    /// Throw std::domain_error when the closure is not graded of rank d+1.
    bool require_graded = true;
};

class FaceLattice
{
public:
    using Options = LatticeOptions;

    static FaceLattice build(const std::vector<VertexSet>& facets, int d, Options opts = {})
    {
        if (facets.empty())
            throw std::invalid_argument("build_face_lattice: empty facet list");
        FaceLattice L;
        L.d_ = d;

        std::vector<std::uint64_t> facet_masks;
        std::uint64_t top = 0;
        for (const auto& f : facets) {
            const auto m = f.mask();
            facet_masks.push_back(m);
            top |= m;
        }

        std::unordered_map<std::uint64_t, int> seen;
        std::vector<std::uint64_t> masks;
        auto add = [&](std::uint64_t m) {
            if (seen.emplace(m, 0).second) {
                masks.push_back(m);
                if (masks.size() + 2 > opts.max_faces)
                    throw std::length_error("face lattice exceeds " + std::to_string(opts.max_faces) +
                                            " faces (raise ORDPOLY_MAX_FACES)");
            }
        };
        seen.emplace(0, 0);
        seen.emplace(top, 0);
        for (auto m : facet_masks)
            if (m != top)
                add(m);
        for (std::size_t q = 0; q < masks.size(); ++q)
            for (auto m : facet_masks) {
                const auto x = masks[q] & m;
                if (x != masks[q])
                    add(x);
            }
        masks.push_back(0);
        masks.push_back(top);

        // Rank bottom-up: faces sorted by cardinality see all their subfaces first.
        std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
            const int pa = std::popcount(a);
            const int pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        std::unordered_map<std::uint64_t, int> dim;
        dim[0] = -1;
        bool graded = true;
        for (auto f : masks) {
            if (f == 0)
                continue;
            std::vector<std::uint64_t> below;
            for (auto m : facet_masks)
                if ((f & m) != f)
                    below.push_back(f & m);
            int best = -1;
            int worst = d + 1;
            for (auto x : below) {
                bool maximal = true;
                for (auto y : below)
                    if (y != x && (x & y) == x) {
                        maximal = false;
                        break;
                    }
                if (!maximal)
                    continue;
                best = std::max(best, dim.at(x));
                worst = std::min(worst, dim.at(x));
            }
            dim[f] = best + 1;
            if (worst != best)
                graded = false;
        }
        if (dim[top] != d)
            graded = false;
        for (auto m : facet_masks)
            if (dim.at(m) != d - 1)
                graded = false;
        if (!graded && opts.require_graded)
            throw std::domain_error("face lattice is not graded of rank d+1");
        L.graded_ = graded;

        std::vector<std::pair<int, VertexSet>> keyed;
        keyed.reserve(masks.size());
        for (auto m : masks)
            keyed.emplace_back(dim.at(m), VertexSet::from_mask(m));
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return colex_compare(a.second, b.second) < 0;
        });
        for (auto& [k, f] : keyed) {
            L.dims_.push_back(k);
            L.faces_.push_back(std::move(f));
        }
        L.reindex();
        return L;
    }

    int d() const { return d_; }
    /// Largest vertex label.
    int n() const { return top().empty() ? -1 : top().max(); }
    bool graded() const { return graded_; }
    std::size_t size() const { return faces_.size(); }

    /// Sorted by (dim, colex); the empty face first and the top last.
    const std::vector<VertexSet>& faces() const { return faces_; }
    const std::vector<int>& dims() const { return dims_; }
    const VertexSet& face(std::size_t i) const { return faces_.at(i); }
    int dim_at(std::size_t i) const { return dims_.at(i); }
    std::uint64_t mask_at(std::size_t i) const { return masks_.at(i); }
    const VertexSet& top() const { return faces_.back(); }

    std::optional<std::size_t> index_of(const VertexSet& f) const
    {
        for (Vertex v : f)
            if (v < 0 || v > 63)
                return std::nullopt;
        auto it = index_.find(f.mask());
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool contains(const VertexSet& f) const { return index_of(f).has_value(); }

    int dim(const VertexSet& f) const
    {
        auto i = index_of(f);
        if (!i)
            throw std::invalid_argument("dim: " + to_string(f) + " is not a face");
        return dims_[*i];
    }

    std::vector<VertexSet> faces_of_dim(int k) const
    {
        std::vector<VertexSet> out;
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (dims_[i] == k)
                out.push_back(faces_[i]);
        return out;
    }

    std::vector<VertexSet> facets() const { return faces_of_dim(d_ - 1); }

    /// Indices of faces z with lo <= z <= hi, in lattice order.
    std::vector<std::size_t> interval(const VertexSet& lo, const VertexSet& hi) const
    {
        const auto a = lo.mask();
        const auto b = hi.mask();
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if ((masks_[i] & a) == a && (masks_[i] & b) == masks_[i])
                out.push_back(i);
        return out;
    }

    /**
     * Smallest face containing sigma: the intersection of the facets that
     * contain it, or the top when no proper face does.
     */
    VertexSet carrier(const VertexSet& sigma) const
    {
        const auto t = top().mask();
        for (Vertex v : sigma)
            if (v < 0 || v > 63 || !((t >> v) & 1U))
                throw std::invalid_argument("carrier: " + to_string(sigma) + " is not a set of vertices");
        const auto s = sigma.mask();
        std::uint64_t acc = t;
        bool any = false;
        for (auto m : facet_masks_)
            if ((m & s) == s) {
                acc &= m;
                any = true;
            }
        return any ? VertexSet::from_mask(acc) : top();
    }

    /// (f_0, ..., f_{d-1}).
    std::vector<std::int64_t> f_vector() const
    {
        std::vector<std::int64_t> f(static_cast<std::size_t>(d_), 0);
        for (int k : dims_)
            if (k >= 0 && k < d_)
                ++f[k];
        return f;
    }

    /// (f_{0,1}, ..., f_{0,d-1}): vertex counts summed over i-faces, i >= 1.
    std::vector<std::int64_t> flag_f0() const
    {
        std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(d_ - 1, 0)), 0);
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (dims_[i] >= 1 && dims_[i] < d_)
                out[dims_[i] - 1] += static_cast<std::int64_t>(faces_[i].size());
        return out;
    }

    /// Every interval [x, y] with x < y has as many odd-rank as even-rank elements.
    bool euler_check() const { return !euler_witness().has_value(); }

    /// A violating pair (x, y) of face indices, if any.
    std::optional<std::pair<std::size_t, std::size_t>> euler_witness() const
    {
        for (std::size_t x = 0; x < masks_.size(); ++x) {
            std::vector<std::size_t> up;
            for (std::size_t y = x; y < masks_.size(); ++y)
                if ((masks_[y] & masks_[x]) == masks_[x])
                    up.push_back(y);
            for (std::size_t yi = 1; yi < up.size(); ++yi) {
                const auto ym = masks_[up[yi]];
                long sum = 0;
                for (std::size_t zi = 0; zi <= yi; ++zi)
                    if ((masks_[up[zi]] & ym) == masks_[up[zi]])
                        sum += (dims_[up[zi]] % 2 == 0) ? 1 : -1;
                if (sum != 0)
                    return std::make_pair(x, up[yi]);
            }
        }
        return std::nullopt;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json faces = nlohmann::json::array();
        for (const auto& f : faces_)
            faces.push_back(f.elements());
        return {{"d", d_}, {"n", n()}, {"faces", faces}, {"dims", dims_}};
    }

    static FaceLattice from_json(const nlohmann::json& j)
    {
        FaceLattice L;
        L.d_ = j.at("d").get<int>();
        L.dims_ = j.at("dims").get<std::vector<int>>();
        for (const auto& f : j.at("faces"))
            L.faces_.emplace_back(f.get<std::vector<Vertex>>());
        if (L.faces_.size() != L.dims_.size() || L.faces_.empty())
            throw std::invalid_argument("lattice JSON: faces and dims differ in length");
        if (L.n() != j.at("n").get<int>())
            throw std::invalid_argument("lattice JSON: n does not match the top face");
        L.graded_ = true;
        L.reindex();
        return L;
    }

    friend bool operator==(const FaceLattice& a, const FaceLattice& b)
    {
        return a.d_ == b.d_ && a.faces_ == b.faces_ && a.dims_ == b.dims_;
    }

private:
    void reindex()
    {
        masks_.clear();
        index_.clear();
        facet_masks_.clear();
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            masks_.push_back(faces_[i].mask());
            index_.emplace(masks_.back(), i);
            if (dims_[i] == d_ - 1)
                facet_masks_.push_back(masks_.back());
        }
    }

    int d_ = 0;
    bool graded_ = false;
    std::vector<VertexSet> faces_;
    std::vector<int> dims_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> facet_masks_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline FaceLattice build_face_lattice(const std::vector<VertexSet>& facets, int d,
                                      FaceLattice::Options opts = {})
{
    return FaceLattice::build(facets, d, opts);
}

} // namespace ordpoly
