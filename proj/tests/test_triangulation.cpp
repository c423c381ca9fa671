#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordpoly/hvector.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/triangulation.hpp"
#include "tables.hpp"

using namespace ordpoly;

namespace {

std::vector<VertexSet> simplices(const std::vector<TriangulationStep>& steps)
{
    std::vector<VertexSet> out;
    for (const auto& s : steps)
        out.push_back(s.simplex);
    return out;
}

} // namespace

TEST(TriangulationShelling, ReproducesTable)
{
    const auto steps = triangulation_shelling(Params::make(5, 6, 8));
    ASSERT_EQ(steps.size(), golden::kTri568.size());
    for (std::size_t t = 0; t < steps.size(); ++t) {
        const auto& row = golden::kTri568[t];
        EXPECT_EQ(steps[t].j, row.j);
        EXPECT_EQ(steps[t].l, row.l);
        EXPECT_EQ(steps[t].simplex, golden::digits(row.T)) << row.j << ',' << row.l;
        EXPECT_EQ(steps[t].minimal_new_face, golden::digits(row.U)) << row.j << ',' << row.l;
    }
    // U_{13,2} = U_{13,3} \ {8} u {2,7}.
    EXPECT_EQ(steps[17].minimal_new_face, golden::digits("678").without(8).with(2).with(7));
}

TEST(TriangulationShelling, NewFacesMatchBruteForce)
{
    for (const auto& p : {Params::make(5, 6, 8), Params::make(5, 7, 10), Params::make(7, 9, 12), Params::make(5, 5, 8)}) {
        const auto steps = triangulation_shelling(p);
        const auto order = simplices(steps);
        const auto brute = brute_minimal_new_faces(order);
        for (std::size_t t = 0; t < steps.size(); ++t) {
            ASSERT_TRUE(brute[t].has_value()) << p << ' ' << order[t];
            EXPECT_EQ(*brute[t], steps[t].minimal_new_face) << p << ' ' << order[t];
        }
    }
    const auto p = Params::make(5, 6, 8);
    const auto order = simplices(triangulation_shelling(p));
    for (std::size_t t = 0; t < order.size(); ++t)
        EXPECT_EQ(oracle::simplex_new_face(order, t), brute_minimal_new_faces(order)[t]);
}

TEST(BoundaryTriangulation, GaleWindowsEqualFacetWindows)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k)
            for (int n = k; n <= k + 3; ++n) {
                const auto p = Params::make(d, k, n);
                auto from_windows = simplices(triangulation_shelling(p));
                colex_sort(from_windows);
                EXPECT_EQ(boundary_triangulation(p), from_windows) << p;
            }
    auto table = std::vector<VertexSet>{};
    for (const auto& r : golden::kTri568)
        table.push_back(golden::digits(r.T));
    colex_sort(table);
    EXPECT_EQ(boundary_triangulation(Params::make(5, 6, 8)), table);
}

TEST(BoundaryTriangulation, CyclicIsItsOwnTriangulation)
{
    const auto p = Params::make(7, 9, 9);
    EXPECT_EQ(boundary_triangulation(p), enumerate_facets(p).facets());
}

TEST(FacetWindows, Basic)
{
    EXPECT_EQ(facet_windows({0, 1, 2, 3, 6, 7, 8}, 5),
              (std::vector<VertexSet>{{0, 1, 2, 3, 6}, {1, 2, 3, 6, 7}, {2, 3, 6, 7, 8}}));
    EXPECT_TRUE(facet_windows({0, 1}, 5).empty());
}

TEST(SimplicialH, CountsAndFVectorAgree)
{
    const auto p = Params::make(5, 6, 8);
    const auto steps = triangulation_shelling(p);
    EXPECT_EQ(simplicial_h(steps, 5), HVector({1, 4, 7, 7, 4, 1}));
    EXPECT_EQ(simplicial_h(simplices(steps), 5), HVector({1, 4, 7, 7, 4, 1}));

    std::vector<VertexSet> boundary;
    for (const auto& b : multiplex_boundary_triangulation(5, 8))
        boundary.push_back(b.vertices);
    const auto M = FaceLattice::build(multiplex_facets(5, 8).facets, 5);
    EXPECT_EQ(simplicial_h(boundary, 5), toric_h(M));

    std::vector<VertexSet> simplex;
    for (int i = 0; i <= 5; ++i)
        simplex.push_back(VertexSet::range(0, 5).without(i));
    EXPECT_EQ(simplicial_h(simplex, 5), HVector({1, 1, 1, 1, 1, 1}));
}

TEST(Partition, EveryFaceOnce)
{
    const auto p = Params::make(5, 6, 8);
    auto steps = triangulation_shelling(p);
    EXPECT_TRUE(verify_triangulation_partition(steps).ok);
    steps[6].minimal_new_face = steps[6].simplex;
    EXPECT_FALSE(verify_triangulation_partition(steps).ok);
}

TEST(Shallow, OrdinaryAndMultiplex)
{
    const auto p = Params::make(5, 6, 8);
    const auto L = FaceLattice::build(enumerate_facets(p).facets(), 5);
    EXPECT_TRUE(shallowness_check(simplices(triangulation_shelling(p)), L).ok);

    const auto M = FaceLattice::build(multiplex_facets(5, 8).facets, 5);
    std::vector<VertexSet> boundary;
    for (const auto& b : multiplex_boundary_triangulation(5, 8))
        boundary.push_back(b.vertices);
    EXPECT_TRUE(shallowness_check(boundary, M).ok);

    // The edge {0, n} has a carrier of dimension above 2, so a triangulation using it is not shallow.
    EXPECT_GT(M.dim(M.carrier({0, 8})), 2);
    std::vector<VertexSet> with_long_edge = boundary;
    with_long_edge.push_back({0, 8});
    EXPECT_FALSE(shallowness_check(with_long_edge, M).ok);
    const auto M9 = FaceLattice::build(multiplex_facets(5, 9).facets, 5);
    EXPECT_EQ(M9.carrier({0, 9}), M9.top());
}

TEST(ComplexFaces, Cap)
{
    std::vector<VertexSet> big{VertexSet::range(0, 20)};
    EXPECT_THROW(complex_faces(big, 1000), std::length_error);
}
