/**
 * The multiplex M^{d,n}: facets from clamped windows, its path-shaped
 * triangulation into the simplices [i, i+d], the induced boundary
 * triangulation, and the minimal new faces of its colex shelling.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "ordpoly/combinat.hpp"
#include "ordpoly/polynomial.hpp"

namespace ordpoly {

namespace detail {

inline void check_multiplex_args(int d, int n)
{
    if (d < 2)
        throw std::invalid_argument("multiplex: d must be at least 2");
    if (n < d)
        throw std::invalid_argument("multiplex: n must satisfy n >= d");
    if (n > kMaxLabel)
        throw std::invalid_argument("multiplex: n exceeds the supported label range");
}

} // namespace detail

/// Facets F_0 .. F_n in index order. F_i is the retraction of the window
/// [i-d+1, i-1] u [i+1, i+d-1]; for 0 < i < n it omits vertex i.
struct MultiplexFacetList
{
    int d = 0;
    int n = 0;
    std::vector<VertexSet> facets;

    /// Index i with facets[i] == f, or -1.
    int index_of(const VertexSet& f) const
    {
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (facets[i] == f)
                return static_cast<int>(i);
        return -1;
    }
};

/// Unclamped index window behind F_i.
inline std::vector<Vertex> multiplex_window(int d, int i)
{
    std::vector<Vertex> x;
    for (Vertex v = i - d + 1; v <= i + d - 1; ++v)
        if (v != i)
            x.push_back(v);
    return x;
}

inline MultiplexFacetList multiplex_facets(int d, int n)
{
    detail::check_multiplex_args(d, n);
    MultiplexFacetList out{d, n, {}};
    for (int i = 0; i <= n; ++i)
        out.facets.push_back(retract(multiplex_window(d, i), n));
    return out;
}

/// The simplices T_i = [i, i+d], 0 <= i <= n-d, in shelling order.
inline std::vector<VertexSet> multiplex_triangulation(int d, int n)
{
    detail::check_multiplex_args(d, n);
    std::vector<VertexSet> out;
    for (int i = 0; i <= n - d; ++i)
        out.push_back(VertexSet::range(i, i + d));
    return out;
}

/// Boundary (d-1)-simplex T_{i\j} of the multiplex triangulation, labelled by
/// the simplex index i and the facet F_j it lies in.
struct BoundarySimplex
{
    int i = 0;
    int j = 0;
    VertexSet vertices;
};

/**
 * Boundary simplices ordered by increasing j and, within j, increasing i.
 * T_{0\0} = [0, d-1] = F_0 and T_{n-d\n} = [n-d+1, n] = F_n; every other
 * boundary simplex is [i, i+d] \ {j} with i < j < i+d. The interior walls
 * [i, i+d] \ {i} (i > 0) and [i, i+d] \ {i+d} (i < n-d) are left out.
 */
inline std::vector<BoundarySimplex> multiplex_boundary_triangulation(int d, int n)
{
    detail::check_multiplex_args(d, n);
    std::vector<BoundarySimplex> out;
    out.push_back({0, 0, VertexSet::range(0, d - 1)});
    for (int j = 1; j <= n - 1; ++j)
        for (int i = std::max(0, j - d + 1); i <= std::min(j - 1, n - d); ++i)
            out.push_back({i, j, VertexSet::range(i, i + d).without(j)});
    out.push_back({n - d, n, VertexSet::range(n - d + 1, n)});
    return out;
}

/// g-polynomial of an e-dimensional multiplex with v vertices: 1 + (v-1-e)x.
inline IntPolynomial multiplex_g(int e, int v)
{
    if (v < e + 1)
        throw std::invalid_argument("multiplex_g: an e-multiplex has at least e+1 vertices");
    return IntPolynomial{1, v - 1 - e};
}

/// Facet indices in colex order: F_0..F_{n-d}, F_{n-1}, ..., F_{n-d+1}, F_n.
inline std::vector<int> multiplex_colex_indices(int d, int n)
{
    detail::check_multiplex_args(d, n);
    std::vector<int> out;
    for (int i = 0; i <= n - d; ++i)
        out.push_back(i);
    for (int i = n - 1; i >= n - d + 1; --i)
        out.push_back(i);
    out.push_back(n);
    return out;
}

/**
 * Minimal new face of F_i in the colex shelling of M^{d,n}:
 *   F_0 -> empty; F_i -> {i+d-1} = {max F_i} for 1 <= i <= n-d;
 *   F_i -> [i+1, n] for n-d+1 <= i <= n-1; F_n -> F_n.
 */
inline VertexSet multiplex_minimal_new_face(int d, int n, int i)
{
    detail::check_multiplex_args(d, n);
    if (i < 0 || i > n)
        throw std::out_of_range("multiplex_minimal_new_face: facet index out of range");
    if (i == 0)
        return {};
    if (i == n)
        return VertexSet::range(n - d + 1, n);
    if (i <= n - d)
        return VertexSet{i + d - 1};
    return VertexSet::range(i + 1, n);
}

} // namespace ordpoly
