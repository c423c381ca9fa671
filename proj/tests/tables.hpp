// Golden data for P^{5,6,8} and P^{7,9,15}.
#pragma once

#include <string>
#include <vector>

#include "ordpoly/combinat.hpp"

namespace golden {

using ordpoly::VertexSet;

/// "01245" -> {0,1,2,4,5}; single-digit labels only.
inline VertexSet digits(const std::string& s)
{
    std::vector<ordpoly::Vertex> v;
    for (char c : s)
        v.push_back(c - '0');
    return VertexSet(std::move(v));
}

struct ShellRow
{
    int j;
    const char* F;
    const char* G;
};

// Colex shelling of P^{5,6,8}.
inline const std::vector<ShellRow> kShell568 = {
    {1, "01234", ""},       {2, "01245", "5"},       {3, "02345", "35"},      {4, "02356", "6"},
    {5, "03456", "46"},     {6, "013467", "7"},      {7, "014567", "57"},     {8, "23458", "8"},
    {9, "23568", "68"},     {10, "34568", "468"},    {11, "123478", "78"},    {12, "124578", "578"},
    {13, "0123678", "678"}, {14, "34678", "4678"},   {15, "0125678", "5678"}, {16, "45678", "45678"},
};

struct TriRow
{
    int j;
    int l;
    const char* T;
    const char* U;
};

// Triangulation shelling of P^{5,6,8}.
inline const std::vector<TriRow> kTri568 = {
    {1, 1, "01234", ""},       {2, 1, "01245", "5"},      {3, 1, "02345", "35"},     {4, 1, "02356", "6"},
    {5, 1, "03456", "46"},     {6, 1, "01346", "16"},     {6, 2, "13467", "7"},      {7, 1, "01456", "156"},
    {7, 2, "14567", "57"},     {8, 1, "23458", "8"},      {9, 1, "23568", "68"},     {10, 1, "34568", "468"},
    {11, 1, "12347", "27"},    {11, 2, "23478", "78"},    {12, 1, "12457", "257"},   {12, 2, "24578", "578"},
    {13, 1, "01236", "126"},   {13, 2, "12367", "267"},   {13, 3, "23678", "678"},   {14, 1, "34678", "4678"},
    {15, 1, "01256", "1256"},  {15, 2, "12567", "2567"},  {15, 3, "25678", "5678"},  {16, 1, "45678", "45678"},
};

struct BijectionRow
{
    VertexSet T;
    VertexSet U;
    int b, c, e;
    VertexSet Y;
    int a1;
    VertexSet x;
    std::vector<int> y;
    VertexSet A;
};

// Simplices of P^{7,9,15} with max F_j = 14 and |U| = 3.
inline const std::vector<BijectionRow> kBijection7915 = {
    {{4, 5, 7, 8, 10, 11, 13}, {5, 11, 13}, 4, 8, 13, {10, 11}, 2, {9, 12}, {0, 1}, {2, 4}},
    {{5, 8, 9, 10, 11, 13, 14}, {9, 11, 14}, 5, 6, 13, {8, 9, 10, 11}, 1, {7, 12}, {0, 2}, {1, 4}},
    {{3, 4, 5, 7, 8, 11, 12}, {4, 5, 12}, 3, 8, 11, {}, 3, {9, 10}, {0, 0}, {3, 4}},
    {{4, 5, 7, 8, 11, 12, 13}, {5, 12, 13}, 4, 8, 13, {11, 12}, 2, {9, 10}, {0, 0}, {2, 3}},
    {{5, 8, 9, 11, 12, 13, 14}, {9, 12, 14}, 5, 6, 13, {8, 9, 11, 12}, 1, {7, 10}, {0, 1}, {1, 3}},
    {{5, 9, 10, 11, 12, 13, 14}, {10, 12, 14}, 5, 6, 13, {9, 10, 11, 12}, 1, {7, 8}, {0, 0}, {1, 2}},
};

} // namespace golden
