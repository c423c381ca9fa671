#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/ordinary.hpp"
#include "tables.hpp"

using namespace ordpoly;

TEST(EnumerateFacets, MatchesShellingTableInOrder)
{
    const auto facets = enumerate_facets(Params::make(5, 6, 8));
    ASSERT_EQ(facets.size(), golden::kShell568.size());
    for (std::size_t j = 0; j < facets.size(); ++j)
        EXPECT_EQ(facets[j], golden::digits(golden::kShell568[j].F)) << "row " << j + 1;
}

TEST(EnumerateFacets, CyclicIsGaleFilter)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 4; ++k) {
            auto brute = oracle::gale_subsets(d, k);
            colex_sort(brute);
            EXPECT_EQ(enumerate_facets(Params::make(d, k, k)).facets(), brute) << d << ' ' << k;
            EXPECT_EQ(gale_facets(d, k).facets(), brute);
        }
    // C^{5,6}: 2 C(7-3, 2) = 12 facets.
    EXPECT_EQ(enumerate_facets(Params::make(5, 6, 6)).size(), 12u);
}

TEST(EnumerateFacets, MultiplexAgreesWithWindows)
{
    for (int d : {2, 3, 4, 5, 6, 7})
        for (int n = d; n <= d + 4; ++n) {
            auto expected = multiplex_facets(d, n).facets;
            colex_sort(expected);
            EXPECT_EQ(enumerate_facets(Params::make(d, d, n)).facets(), expected) << d << ' ' << n;
        }
    EXPECT_EQ(enumerate_facets(Params::make(5, 5, 8)).size(), 9u);
}

TEST(EnumerateFacets, Counts)
{
    EXPECT_EQ(enumerate_facets(Params::make(5, 6, 7)).size(), 14u);
    EXPECT_EQ(enumerate_facets(Params::make(7, 9, 13)).size(), 64u);
    EXPECT_EQ(enumerate_facets(Params::make(7, 10, 14)).size(), 110u);
}

TEST(EnumerateFacets, SizeAndGaleBounds)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k)
            for (int n = k; n <= k + 4; ++n)
                for (const auto& f : enumerate_facets(Params::make(d, k, n))) {
                    EXPECT_GE(static_cast<int>(f.size()), d);
                    EXPECT_LE(static_cast<int>(f.size()), 2 * (d - 1));
                    EXPECT_TRUE(oracle::gale(f, 0, n)) << f;
                }
}

TEST(EnumerateFacets, LargestFacetsOfP7915)
{
    const auto facets = enumerate_facets(Params::make(7, 9, 15));
    std::vector<VertexSet> top;
    for (const auto& f : facets)
        if (f.max() == 14)
            top.push_back(f);
    const std::vector<VertexSet> expected{
        {4, 5, 7, 8, 9, 10, 13, 14},          {4, 5, 7, 8, 10, 11, 13, 14},
        {4, 5, 8, 9, 10, 11, 13, 14},         {2, 3, 4, 5, 7, 8, 11, 12, 13, 14},
        {2, 3, 4, 5, 8, 9, 11, 12, 13, 14},   {0, 1, 2, 3, 4, 5, 9, 10, 11, 12, 13, 14},
    };
    EXPECT_EQ(top, expected);
}

TEST(FacetList, IndexOf)
{
    const auto facets = enumerate_facets(Params::make(5, 6, 8));
    EXPECT_EQ(facets.index_of({0, 1, 2, 3, 6, 7, 8}), std::optional<std::size_t>(12));
    EXPECT_FALSE(facets.contains({0, 8}));
}

TEST(Generators, EveryFacetHasOne)
{
    const auto p = Params::make(5, 6, 8);
    const auto facets = enumerate_facets(p);
    std::set<VertexSet> hit;
    for (const auto& g : facet_generators(p)) {
        EXPECT_TRUE(facets.contains(g.facet));
        EXPECT_EQ(retract(g.points, p.n), g.facet);
        hit.insert(g.facet);
    }
    EXPECT_EQ(hit.size(), facets.size());
}

TEST(Shifts, LeftShiftExamples)
{
    EXPECT_EQ(lsh({0, 1, 2, 3, 6, 7, 8}, Params::make(5, 6, 8)), (VertexSet{0, 1, 2, 5, 6, 7}));
    EXPECT_EQ(lsh({0, 1, 2, 5, 6, 7}, Params::make(5, 6, 7)), (VertexSet{0, 1, 4, 5, 6}));
    EXPECT_THROW(lsh({0, 1, 2, 3, 4}, Params::make(5, 6, 8)), std::invalid_argument);
    EXPECT_THROW(lsh({0, 1, 4, 5, 6}, Params::make(5, 6, 6)), std::invalid_argument);
}

TEST(Shifts, RightShiftExample)
{
    EXPECT_EQ(rsh({0, 1, 2, 5, 6, 7}, Params::make(5, 6, 8)), (VertexSet{0, 1, 2, 3, 6, 7, 8}));
    EXPECT_THROW(rsh({0, 1, 2, 3}, Params::make(5, 6, 8)), std::invalid_argument);
}

TEST(Shifts, RightInvertsLeftOnHighFacets)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 2; ++k)
            for (int n = k + 1; n <= k + 3; ++n) {
                const auto p = Params::make(d, k, n);
                const auto below = enumerate_facets(p.with_n(n - 1));
                for (const auto& g : enumerate_facets(p))
                    if (g.max() >= n - 1) {
                        const auto f = lsh(g, p);
                        ASSERT_TRUE(below.contains(f)) << g;
                        EXPECT_EQ(rsh(f, p), g);
                    }
            }
}

TEST(Recursion, AgreesWithDirectEnumeration)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k)
            for (int n = k + 1; n <= k + 4; ++n) {
                const auto p = Params::make(d, k, n);
                EXPECT_EQ(facets_by_recursion(p), enumerate_facets(p)) << p;
            }
    EXPECT_THROW(facets_by_recursion(Params::make(5, 6, 6)), std::invalid_argument);
}
