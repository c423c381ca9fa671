// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "ordpoly/cli.hpp"
#include "ordpoly.hpp"
#include "tables.hpp"

using namespace ordpoly;
using nlohmann::json;

namespace {

/// Collects the first few mismatches of a criterion.
struct Log
{
    std::vector<std::string> problems;

    template <typename A, typename B>
    void expect_eq(const A& got, const B& want, const std::string& what)
    {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            problems.push_back(os.str());
        }
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
};

std::ostream& operator<<(std::ostream& os, const std::vector<std::int64_t>& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

json cli_json(const std::vector<std::string>& args, Log& log)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    log.expect(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
    return code == 0 ? json::parse(out.str()) : json::object();
}

VertexSet as_set(const json& j) { return VertexSet(j.get<std::vector<Vertex>>()); }

std::vector<Params> ordinary_grid()
{
    std::vector<Params> out;
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k)
            for (int n = k; n <= k + 4; ++n)
                out.push_back(Params::make(d, k, n));
    return out;
}

std::vector<Params> multiplex_grid()
{
    std::vector<Params> out;
    for (int d : {4, 5, 6})
        for (int n = d; n <= d + 4; ++n)
            out.push_back(Params::make(d, d, n));
    return out;
}

FaceLattice lattice(const Params& p) { return FaceLattice::build(enumerate_facets(p).facets(), p.d); }

void table_shelling(Log& log)
{
    const auto j = cli_json({"shell", "5", "6", "8", "--format", "json"}, log);
    if (!j.contains("steps"))
        return;
    log.expect_eq(j["steps"].size(), golden::kShell568.size(), "rows");
    for (std::size_t t = 0; t < std::min(j["steps"].size(), golden::kShell568.size()); ++t) {
        const auto& row = golden::kShell568[t];
        const auto& s = j["steps"][t];
        log.expect_eq(s["j"].get<int>(), row.j, "j");
        log.expect_eq(as_set(s["F"]), golden::digits(row.F), "F_" + std::to_string(row.j));
        log.expect_eq(as_set(s["G"]), golden::digits(row.G), "G_" + std::to_string(row.j));
    }
}

void table_triangulation(Log& log)
{
    const auto j = cli_json({"triangulate", "5", "6", "8", "--format", "json"}, log);
    if (!j.contains("steps"))
        return;
    log.expect_eq(j["steps"].size(), golden::kTri568.size(), "rows");
    for (std::size_t t = 0; t < std::min(j["steps"].size(), golden::kTri568.size()); ++t) {
        const auto& row = golden::kTri568[t];
        const auto& s = j["steps"][t];
        const std::string tag = "(" + std::to_string(row.j) + "," + std::to_string(row.l) + ")";
        log.expect(s["j"].get<int>() == row.j && s["l"].get<int>() == row.l, "index " + tag);
        log.expect_eq(as_set(s["T"]), golden::digits(row.T), "T" + tag);
        log.expect_eq(as_set(s["U"]), golden::digits(row.U), "U" + tag);
    }
}

void table_bijection(Log& log)
{
    const auto j = cli_json({"bijection", "7", "9", "15", "--i", "3", "--format", "json"}, log);
    if (!j.contains("rows"))
        return;
    const auto p = Params::make(7, 9, 15);
    log.expect_eq(j["rows"].size(), golden::kBijection7915.size(), "rows");
    for (std::size_t t = 0; t < std::min(j["rows"].size(), golden::kBijection7915.size()); ++t) {
        const auto& g = golden::kBijection7915[t];
        const auto& r = j["rows"][t];
        const std::string tag = " row " + std::to_string(t + 1);
        log.expect_eq(as_set(r["T"]), g.T, "T" + tag);
        log.expect_eq(as_set(r["U"]), g.U, "U" + tag);
        log.expect(r["b"] == g.b && r["c"] == g.c && r["e"] == g.e, "b,c,e" + tag);
        log.expect_eq(as_set(r["Y"]), g.Y, "Y" + tag);
        log.expect(r["a1"] == g.a1, "a1" + tag);
        log.expect_eq(as_set(r["x"]), g.x, "x" + tag);
        log.expect(r["y"].get<std::vector<int>>() == g.y, "y" + tag);
        log.expect_eq(as_set(r["A"]), g.A, "A" + tag);
        log.expect_eq(subset_to_facet(g.A, p, 3), g.T, "inverse" + tag);
        log.expect_eq(facet_to_subset(g.T, p, 3), g.A, "forward" + tag);
    }
    log.expect(j["round_trip"].get<bool>(), "round trip");
}

void four_way(Log& log)
{
    auto instances = ordinary_grid();
    for (const auto& p : multiplex_grid())
        if (p.d != 5)
            instances.push_back(p);
    for (const auto& p : instances) {
        std::ostringstream tag;
        tag << p;
        const auto L = lattice(p);
        const auto toric = toric_h(L);
        if (p.odd_ordinary())
            log.expect_eq(h_closed_form(p), toric, tag.str() + " closed");
        log.expect_eq(multiplicial_h(L.f_vector(), L.flag_f0()), toric, tag.str() + " multiplicial");
        log.expect_eq(simplicial_h(triangulation_shelling(p), p.d), toric, tag.str() + " triangulation");
    }
    const auto p = Params::make(5, 6, 8);
    const auto L = lattice(p);
    log.expect_eq(toric_h(L), HVector({1, 4, 7, 7, 4, 1}), "h(5,6,8)");
    log.expect_eq(h_prime_from_shelling(colex_shelling(p), 5), HVector({1, 4, 5, 3, 2, 1}), "h'(5,6,8)");
    log.expect_eq(L.f_vector(), std::vector<std::int64_t>{9, 31, 52, 44, 16}, "f(5,6,8)");
}

void properties(Log& log)
{
    for (const auto& p : ordinary_grid()) {
        std::ostringstream os;
        os << p << ' ';
        const std::string tag = os.str();
        const auto L = lattice(p);
        const auto shelling = colex_shelling(p);
        const auto tri = triangulation_shelling(p);
        const auto h = toric_h(L);
        const auto hp = h_prime_from_shelling(shelling, p.d);
        const auto cyc = cyclic_h(p.d, p.k);

        log.expect(L.euler_check(), tag + "Eulerian");
        log.expect(h.is_symmetric(), tag + "symmetric");
        log.expect(h.dominates(hp), tag + "h >= h'");
        for (int i = p.d / 2 + 1; i <= p.d; ++i)
            log.expect_eq(hp[i], cyc[i], tag + "h'_" + std::to_string(i) + " = h_i(C^{d,k})");
        const auto part = verify_shelling_partition(L, shelling);
        log.expect(part.ok, tag + "partition: " + part.witness);
        for (const auto& s : shelling) {
            const auto b = boolean_interval_check(L, s.minimal_new_face, s.facet);
            log.expect(b.ok, tag + "Boolean [G,F] at " + to_string(s.facet) + ": " + b.witness);
            log.expect_eq(minimal_new_face_recursive(s.facet, p), s.minimal_new_face,
                          tag + "recursive G at " + to_string(s.facet));
        }
        std::vector<VertexSet> simplices;
        for (const auto& s : tri)
            simplices.push_back(s.simplex);
        const auto shallow = shallowness_check(simplices, L);
        log.expect(shallow.ok, tag + "shallow: " + shallow.witness);
        if (topological_check_supported(p)) {
            std::vector<VertexSet> order;
            for (const auto& s : shelling)
                order.push_back(s.facet);
            const auto topo = verify_shelling_topological(L, order);
            log.expect(topo.ok, tag + "topological: " + topo.witness);
        }
        const auto a = shelling_contributions(L, shelling, tri);
        for (const auto& s : shelling) {
            const auto& poly = a.at(s.j);
            for (int i = 0; i <= poly.degree(); ++i)
                log.expect(poly.coeff(i) >= 0, tag + "a_{j,i} >= 0 at j = " + std::to_string(s.j));
            log.expect_eq(poly.eval(1), static_cast<std::int64_t>(s.facet.size()) - p.d,
                          tag + "sum a_j at j = " + std::to_string(s.j));
        }
        const auto f = L.f_vector();
        const auto f0 = L.flag_f0();
        log.expect_eq(h.sum(), f[p.d - 1] + (f0[p.d - 2] - p.d * f[p.d - 1]), tag + "sum h");
    }
}

void h_increment(Log& log)
{
    for (const auto& p : ordinary_grid()) {
        if (p.n < p.d + p.k - 1)
            continue;
        std::ostringstream os;
        os << p << ' ';
        const auto h = toric_h(lattice(p));
        const auto prev = toric_h(lattice(p.with_n(p.n - 1)));
        for (int i = 1; i <= p.m(); ++i)
            log.expect_eq(h[i] - prev[i], binomial(p.k - p.d + i - 1, i - 1), os.str() + "binomial i=" + std::to_string(i));
        for (int i = 1; i <= p.d - 1; ++i)
            log.expect_eq(h[i] - prev[i], count_by_size(p, i), os.str() + "count i=" + std::to_string(i));
    }
    log.expect_eq(count_by_size(Params::make(7, 9, 15), 3), std::int64_t{6}, "(7,9,15) i=3");
    const auto h15 = h_closed_form(Params::make(7, 9, 15));
    const auto h14 = h_closed_form(Params::make(7, 9, 14));
    log.expect_eq(h15[3] - h14[3], std::int64_t{6}, "(7,9,15) closed-form increment");
}

void oracle_equivalence(Log& log)
{
    for (int d : {5, 7})
        for (int k = d; k <= d + 3; ++k) {
            const auto p = Params::make(d, k, k);
            std::ostringstream tag;
            tag << p << ' ';
            auto brute = oracle::gale_subsets(d, k);
            colex_sort(brute);
            log.expect(enumerate_facets(p).facets() == brute, tag.str() + "facets differ from the Gale filter");
            const auto steps = colex_shelling(p);
            std::vector<VertexSet> order;
            for (const auto& s : steps)
                order.push_back(s.facet);
            const auto all = oracle::faces(order);
            for (std::size_t t = 0; t < steps.size(); ++t) {
                const auto g = oracle::antistar_new_face(all, order, t);
                log.expect(g.has_value() && *g == steps[t].minimal_new_face,
                           tag.str() + "G differs from the antistar at " + to_string(order[t]));
            }
        }
}

void multiplex_suite(Log& log)
{
    for (const auto& p : multiplex_grid()) {
        const int d = p.d;
        const int n = p.n;
        std::ostringstream os;
        os << "M^{" << d << ',' << n << "} ";
        const std::string tag = os.str();

        std::vector<std::int64_t> tri(static_cast<std::size_t>(d) + 2, 0);
        tri[0] = 1;
        tri[1] = n - d;
        log.expect_eq(simplicial_h(multiplex_triangulation(d, n), d + 1), HVector(tri), tag + "triangulation h");

        std::vector<std::int64_t> toric(static_cast<std::size_t>(d) + 1, n - d + 1);
        toric.front() = toric.back() = 1;
        log.expect_eq(toric_h(lattice(p)), HVector(toric), tag + "toric h");

        std::vector<std::int64_t> prime(static_cast<std::size_t>(d) + 1, 1);
        prime[1] = n - d + 1;
        const auto steps = colex_shelling(p);
        log.expect_eq(h_prime_from_shelling(steps, d), HVector(prime), tag + "h'");

        const auto mf = multiplex_facets(d, n);
        std::vector<VertexSet> expected;
        for (int i = 0; i <= n - d; ++i)
            expected.push_back(mf.facets[i]);
        for (int i = n - 1; i >= n - d + 1; --i)
            expected.push_back(mf.facets[i]);
        expected.push_back(mf.facets[n]);
        std::vector<VertexSet> got;
        for (const auto& s : steps)
            got.push_back(s.facet);
        log.expect(got == expected, tag + "colex order");
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
        {"shell 5 6 8 reproduces the 16-row shelling table", table_shelling},
        {"triangulate 5 6 8 reproduces the 24-row triangulation table", table_triangulation},
        {"bijection 7 9 15 --i 3 reproduces the 6-row table and round-trips", table_bijection},
        {"four-way h agreement on the grid and the P^{5,6,8} values", four_way},
        {"per-instance property suite", properties},
        {"h-increment equals the binomial and count_by_size", h_increment},
        {"oracle equivalence for cyclic instances", oracle_equivalence},
        {"multiplex suite for d = 4, 5, 6", multiplex_suite},
    };
    int failed = 0;
    int number = 1;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, body] : criteria) {
        Log log;
        try {
            body(log);
        } catch (const std::exception& e) {
            log.problems.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = log.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << number++ << ". " << name << '\n';
        for (std::size_t t = 0; t < std::min<std::size_t>(log.problems.size(), 5); ++t)
            std::cout << "      " << log.problems[t] << '\n';
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed in " << elapsed.count()
              << " s\n";
    return failed == 0 ? 0 : 1;
}
