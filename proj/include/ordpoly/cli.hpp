/**
 * Command-line front end:
 *
 *   ordpoly <verb> <d> <k> <n> [--i I] [--format text|json|csv]
 *           [--method toric|closed|multiplicial|triangulation|shelling|all] [--grid]
 *
 * Exit status: 0 on success, 1 when a verification fails or a size cap is
 * hit, 2 on bad arguments.
 */
#pragma once

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordpoly/bijection.hpp"
#include "ordpoly/hvector.hpp"
#include "ordpoly/lattice.hpp"
#include "ordpoly/multiplex.hpp"
#include "ordpoly/ordinary.hpp"
#include "ordpoly/shelling.hpp"
#include "ordpoly/triangulation.hpp"
#include "ordpoly/verify.hpp"

namespace ordpoly::cli {

using nlohmann::json;

enum class Format { text, json, csv };

/// Thrown for argument combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// Vertex v drawn at column v, blank where absent. Labels above 9 widen
/// every column and separate columns by a space.
inline std::string presence_grid(const VertexSet& f, int n)
{
    const int w = static_cast<int>(std::to_string(n).size());
    std::string out;
    for (int v = 0; v <= n; ++v) {
        if (w > 1 && v > 0)
            out += ' ';
        std::string cell = f.contains(v) ? std::to_string(v) : "";
        out += std::string(static_cast<std::size_t>(w) - cell.size(), ' ') + cell;
    }
    return out;
}

inline std::string text_set(const VertexSet& s) { return s.empty() ? "∅" : s.digits(); }

inline std::string csv_set(const VertexSet& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

inline std::string csv_ints(const std::vector<std::int64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

inline std::string h_text(const HVector& h)
{
    std::ostringstream os;
    os << h;
    return os.str();
}

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    auto cells = [](const std::string& s) {
        // Count code points so the empty-set sign occupies one column.
        std::size_t c = 0;
        for (unsigned char ch : s)
            c += (ch & 0xC0) != 0x80;
        return c;
    };
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], cells(r[c]));
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size())
                line += std::string(width[c] - cells(r[c]) + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
}

inline void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            const bool quote = r[c].find_first_of(",\"") != std::string::npos;
            if (c)
                out << ',';
            if (quote) {
                out << '"';
                for (char ch : r[c])
                    out << (ch == '"' ? "\"\"" : std::string(1, ch));
                out << '"';
            } else {
                out << r[c];
            }
        }
        out << '\n';
    }
}

inline std::string title(const Params& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

inline json params_json(const Params& p) { return {{"d", p.d}, {"k", p.k}, {"n", p.n}}; }

struct Request
{
    std::string verb;
    Params params;
    std::optional<int> i;
    Format format = Format::text;
    std::string method = "all";
    bool grid = false;
    std::size_t max_faces = 200000;
};

inline FaceLattice lattice_for(const Params& p, std::size_t max_faces)
{
    return FaceLattice::build(enumerate_facets(p).facets(), p.d, {max_faces, true});
}

inline int cmd_facets(const Request& rq, std::ostream& out)
{
    const auto& p = rq.params;
    const auto facets = enumerate_facets(p);
    if (rq.format == Format::json) {
        json j = params_json(p);
        j["facets"] = json::array();
        for (const auto& f : facets)
            j["facets"].push_back(f.elements());
        out << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (rq.format == Format::csv) {
        rows.push_back({"j", "F"});
        for (std::size_t j = 0; j < facets.size(); ++j)
            rows.push_back({std::to_string(j + 1), csv_set(facets[j])});
        print_csv(out, rows);
        return 0;
    }
    out << title(p) << ": " << facets.size() << " facets\n";
    rows.push_back({"j", "F_j"});
    for (std::size_t j = 0; j < facets.size(); ++j)
        rows.push_back({std::to_string(j + 1), presence_grid(facets[j], p.n)});
    print_table(out, rows);
    return 0;
}

inline int cmd_shell(const Request& rq, std::ostream& out)
{
    const auto& p = rq.params;
    const auto steps = colex_shelling(p);
    if (rq.format == Format::json) {
        json j = params_json(p);
        j["steps"] = json::array();
        for (const auto& s : steps)
            j["steps"].push_back({{"j", s.j}, {"F", s.facet.elements()}, {"G", s.minimal_new_face.elements()}});
        out << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (rq.format == Format::csv) {
        rows.push_back({"j", "F", "G"});
        for (const auto& s : steps)
            rows.push_back({std::to_string(s.j), csv_set(s.facet), csv_set(s.minimal_new_face)});
        print_csv(out, rows);
        return 0;
    }
    out << title(p) << ": colex shelling, " << steps.size() << " facets\n";
    rows.push_back({"j", "F_j", "G_j"});
    for (const auto& s : steps)
        rows.push_back({std::to_string(s.j), presence_grid(s.facet, p.n), text_set(s.minimal_new_face)});
    print_table(out, rows);
    return 0;
}

inline int cmd_triangulate(const Request& rq, std::ostream& out)
{
    const auto& p = rq.params;
    const auto steps = triangulation_shelling(p);
    if (rq.format == Format::json) {
        json j = params_json(p);
        j["steps"] = json::array();
        for (const auto& s : steps)
            j["steps"].push_back({{"j", s.j},
                                  {"l", s.l},
                                  {"T", s.simplex.elements()},
                                  {"U", s.minimal_new_face.elements()}});
        out << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (rq.format == Format::csv) {
        rows.push_back({"j", "l", "T", "U"});
        for (const auto& s : steps)
            rows.push_back({std::to_string(s.j), std::to_string(s.l), csv_set(s.simplex),
                            csv_set(s.minimal_new_face)});
        print_csv(out, rows);
        return 0;
    }
    out << title(p) << ": triangulation shelling, " << steps.size() << " simplices\n";
    rows.push_back({"(j,l)", "T_{j,l}", "U_{j,l}"});
    for (const auto& s : steps)
        rows.push_back({"(" + std::to_string(s.j) + "," + std::to_string(s.l) + ")", presence_grid(s.simplex, p.n),
                        text_set(s.minimal_new_face)});
    print_table(out, rows);
    return 0;
}

inline int cmd_bijection(const Request& rq, std::ostream& out)
{
    const auto& p = rq.params;
    if (!rq.i)
        throw UsageError("bijection needs --i");
    const int i = *rq.i;
    const auto records = bijection_records(p, i);
    bool round_trip = true;
    for (const auto& r : records)
        round_trip = round_trip && subset_to_facet(r.A, p, i) == r.T;

    auto list = [](const VertexSet& s) {
        std::string o;
        for (std::size_t t = 0; t < s.size(); ++t)
            o += (t ? "," : "") + std::to_string(s[t]);
        return o;
    };
    auto ints = [](const std::vector<int>& v) {
        std::string o;
        for (std::size_t t = 0; t < v.size(); ++t)
            o += (t ? "," : "") + std::to_string(v[t]);
        return o;
    };

    if (rq.format == Format::json) {
        json j = params_json(p);
        j["i"] = i;
        j["rows"] = json::array();
        for (const auto& r : records)
            j["rows"].push_back({{"T", r.T.elements()},
                                 {"U", r.U.elements()},
                                 {"b", r.b},
                                 {"c", r.c},
                                 {"e", r.e},
                                 {"Y", r.Y.elements()},
                                 {"a1", r.a1},
                                 {"x", r.x_values.elements()},
                                 {"y", r.y_counts},
                                 {"A", r.A.elements()}});
        j["round_trip"] = round_trip;
        out << j.dump(2) << '\n';
        return round_trip ? 0 : 1;
    }
    std::vector<std::vector<std::string>> rows;
    if (rq.format == Format::csv) {
        rows.push_back({"T", "U", "b", "c", "e", "Y", "a1", "x", "y", "A"});
        for (const auto& r : records) {
            std::string y;
            for (std::size_t t = 0; t < r.y_counts.size(); ++t)
                y += (t ? " " : "") + std::to_string(r.y_counts[t]);
            rows.push_back({csv_set(r.T), csv_set(r.U), std::to_string(r.b), std::to_string(r.c),
                            std::to_string(r.e), csv_set(r.Y), std::to_string(r.a1), csv_set(r.x_values), y,
                            csv_set(r.A)});
        }
        print_csv(out, rows);
        return round_trip ? 0 : 1;
    }
    out << title(p) << ", |U| = " << i << ": " << records.size()
        << " simplices with max F_j = n-1 (* marks U)\n";
    rows.push_back({"T", "b", "c", "e", "Y", "a1", "x", "y", "A"});
    for (const auto& r : records) {
        std::string t;
        for (std::size_t s = 0; s < r.T.size(); ++s)
            t += (s ? "," : "") + std::to_string(r.T[s]) + (r.U.contains(r.T[s]) ? "*" : "");
        rows.push_back({t, std::to_string(r.b), std::to_string(r.c), std::to_string(r.e),
                        r.Y.empty() ? "∅" : list(r.Y), std::to_string(r.a1), list(r.x_values),
                        ints(r.y_counts), "{" + list(r.A) + "}"});
    }
    print_table(out, rows);
    out << "round trip: " << (round_trip ? "ok" : "FAILED") << '\n';
    return round_trip ? 0 : 1;
}

/// One h-vector row per requested method; closed form is absent for even d.
struct HRow
{
    std::string method;
    std::optional<HVector> h;
};

inline int cmd_hvector_one(const Request& rq, const Params& p, std::ostream& out, json* collect,
                           std::vector<std::vector<std::string>>* csv_rows)
{
    const std::string& m = rq.method;
    if (m == "closed" && !p.odd_ordinary())
        throw UsageError("--method closed needs odd d >= 5");

    const auto shelling = colex_shelling(p);
    const auto tri = triangulation_shelling(p);
    const auto h_prime = h_prime_from_shelling(shelling, p.d);
    std::map<int, IntPolynomial> a = contributions_from_triangulation(tri);

    std::optional<FaceLattice> L;
    auto lattice = [&]() -> const FaceLattice& {
        if (!L)
            L = lattice_for(p, rq.max_faces);
        return *L;
    };

    std::vector<HRow> rows;
    auto want = [&](const std::string& name) { return m == name || (m == "all" && name != "shelling"); };
    if (want("toric"))
        rows.push_back({"toric", toric_h(lattice())});
    if (want("closed"))
        rows.push_back({"closed", p.odd_ordinary() ? std::optional<HVector>(h_closed_form(p)) : std::nullopt});
    if (want("multiplicial"))
        rows.push_back({"multiplicial", multiplicial_h(lattice().f_vector(), lattice().flag_f0())});
    if (want("triangulation"))
        rows.push_back({"triangulation", simplicial_h(tri, p.d)});
    if (want("shelling")) {
        a = shelling_contributions(lattice(), shelling, tri);
        rows.push_back({"shelling", h_from_contributions(h_prime, a)});
    }

    bool agree = true;
    std::optional<HVector> first;
    for (const auto& r : rows) {
        if (!r.h)
            continue;
        if (!first)
            first = r.h;
        else if (*r.h != *first)
            agree = false;
    }

    if (rq.format == Format::json) {
        json j = params_json(p);
        j["method"] = m;
        j["h"] = first ? json(first->entries) : json(nullptr);
        j["h_prime"] = h_prime.entries;
        json aj = json::object();
        for (const auto& [jj, poly] : a) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(p.d), 0);
            for (int t = 0; t < p.d; ++t)
                c[t] = poly.coeff(t);
            aj[std::to_string(jj)] = c;
        }
        j["a"] = aj;
        if (m == "all") {
            json methods = json::object();
            for (const auto& r : rows)
                methods[r.method] = r.h ? json(r.h->entries) : json(nullptr);
            j["methods"] = methods;
            j["agree"] = agree;
        }
        if (collect)
            collect->push_back(j);
        else
            out << j.dump(2) << '\n';
        return agree ? 0 : 1;
    }
    if (rq.format == Format::csv) {
        std::vector<std::vector<std::string>> local;
        auto& dst = csv_rows ? *csv_rows : local;
        if (dst.empty())
            dst.push_back({"d", "k", "n", "method", "h"});
        for (const auto& r : rows)
            dst.push_back({std::to_string(p.d), std::to_string(p.k), std::to_string(p.n), r.method,
                           r.h ? csv_ints(r.h->entries) : "n/a"});
        dst.push_back({std::to_string(p.d), std::to_string(p.k), std::to_string(p.n), "h_prime",
                       csv_ints(h_prime.entries)});
        if (!csv_rows)
            print_csv(out, local);
        return agree ? 0 : 1;
    }
    out << title(p) << '\n';
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows)
        table.push_back({r.method, r.h ? h_text(*r.h) : "n/a (even d)"});
    table.push_back({"h'", h_text(h_prime)});
    if (m == "shelling")
        for (const auto& [jj, poly] : a)
            if (!poly.is_zero()) {
                std::vector<std::int64_t> c(static_cast<std::size_t>(p.d), 0);
                for (int t = 0; t < p.d; ++t)
                    c[t] = poly.coeff(t);
                table.push_back({"a_" + std::to_string(jj), h_text(HVector(c))});
            }
    print_table(out, table);
    if (m == "all")
        out << "agreement: " << (agree ? "yes" : "NO") << '\n';
    return agree ? 0 : 1;
}

inline int cmd_hvector(const Request& rq, std::ostream& out)
{
    if (!rq.grid)
        return cmd_hvector_one(rq, rq.params, out, nullptr, nullptr);
    int status = 0;
    json collected = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& p : standard_grid()) {
        if (rq.method == "closed" && !p.odd_ordinary())
            continue;
        status = std::max(status, cmd_hvector_one(rq, p, out, rq.format == Format::json ? &collected : nullptr,
                                                  rq.format == Format::csv ? &csv_rows : nullptr));
    }
    if (rq.format == Format::json)
        out << collected.dump(2) << '\n';
    if (rq.format == Format::csv)
        print_csv(out, csv_rows);
    return status;
}

inline int cmd_multiplex(const Request& rq, std::ostream& out)
{
    const auto& p = rq.params;
    if (!p.is_multiplex())
        throw UsageError("multiplex needs k = d");
    const int d = p.d;
    const int n = p.n;
    const auto mf = multiplex_facets(d, n);
    const auto order = multiplex_colex_indices(d, n);
    const auto solid = multiplex_triangulation(d, n);
    const auto boundary = multiplex_boundary_triangulation(d, n);
    std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t t = 0; t < order.size(); ++t)
        position[order[t]] = static_cast<int>(t) + 1;
    const auto solid_h = simplicial_h(solid, d + 1);

    if (rq.format == Format::json) {
        json j = params_json(p);
        j["facets"] = json::array();
        for (int i = 0; i <= n; ++i)
            j["facets"].push_back({{"i", i},
                                   {"F", mf.facets[i].elements()},
                                   {"colex_position", position[i]},
                                   {"G", multiplex_minimal_new_face(d, n, i).elements()}});
        j["colex_order"] = order;
        j["triangulation"] = json::array();
        for (const auto& t : solid)
            j["triangulation"].push_back(t.elements());
        j["boundary"] = json::array();
        for (const auto& b : boundary)
            j["boundary"].push_back({{"i", b.i}, {"j", b.j}, {"T", b.vertices.elements()}});
        j["triangulation_h"] = solid_h.entries;
        out << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (rq.format == Format::csv) {
        rows.push_back({"i", "F", "colex_position", "G"});
        for (int i = 0; i <= n; ++i)
            rows.push_back({std::to_string(i), csv_set(mf.facets[i]), std::to_string(position[i]),
                            csv_set(multiplex_minimal_new_face(d, n, i))});
        print_csv(out, rows);
        return 0;
    }
    out << "M^{" << d << ',' << n << "}: " << mf.facets.size() << " facets\n";
    rows.push_back({"i", "F_i", "colex", "G"});
    for (int i = 0; i <= n; ++i)
        rows.push_back({std::to_string(i), presence_grid(mf.facets[i], n), std::to_string(position[i]),
                        text_set(multiplex_minimal_new_face(d, n, i))});
    print_table(out, rows);
    out << "colex order:";
    for (int i : order)
        out << " F_" << i;
    out << "\ntriangulation:";
    for (const auto& t : solid)
        out << " [" << t.min() << ',' << t.max() << ']';
    out << "\ntriangulation h: " << solid_h << '\n';
    out << "boundary simplices (increasing j, then i):\n";
    std::vector<std::vector<std::string>> brows{{"i\\j", "T"}};
    for (const auto& b : boundary)
        brows.push_back({std::to_string(b.i) + "\\" + std::to_string(b.j), presence_grid(b.vertices, n)});
    print_table(out, brows);
    return 0;
}

inline void report_text(const VerifyReport& r, std::ostream& out, bool failures_only)
{
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        if (!c.ok)
            ++failed;
        if (c.ok && !failures_only)
            out << "PASS  " << c.name << '\n';
        else if (!c.ok)
            out << "FAIL  " << c.name << ": " << c.detail << '\n';
    }
    out << title(r.params) << ": " << r.checks.size() << " checks, ";
    if (failed == 0)
        out << "all passed\n";
    else
        out << failed << " failed\n";
}

inline json report_json(const VerifyReport& r)
{
    json j = params_json(r.params);
    j["ok"] = r.ok();
    j["checks"] = json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return j;
}

inline int cmd_verify(const Request& rq, std::ostream& out)
{
    VerifyOptions opts;
    opts.max_faces = rq.max_faces;
    const auto instances = rq.grid ? standard_grid() : std::vector<Params>{rq.params};
    std::vector<VerifyReport> reports;
    for (const auto& p : instances)
        reports.push_back(verify_instance(p, opts));
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.ok();

    if (rq.format == Format::json) {
        json j = {{"ok", ok}, {"instances", json::array()}};
        for (const auto& r : reports)
            j["instances"].push_back(report_json(r));
        out << j.dump(2) << '\n';
    } else if (rq.format == Format::csv) {
        std::vector<std::vector<std::string>> rows{{"d", "k", "n", "check", "ok", "detail"}};
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                rows.push_back({std::to_string(r.params.d), std::to_string(r.params.k), std::to_string(r.params.n),
                                c.name, c.ok ? "1" : "0", c.detail});
        print_csv(out, rows);
    } else {
        for (const auto& r : reports)
            report_text(r, out, rq.grid);
        if (rq.grid)
            out << reports.size() << " instances: " << (ok ? "all passed" : "FAILURES") << '\n';
    }
    return ok ? 0 : 1;
}

/// Parse and dispatch; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ordinary polytopes P^{d,k,n}: facets, shellings, triangulations and h-vectors", "ordpoly"};
    Request rq;
    int d = 0;
    int k = 0;
    int n = 0;
    int i_value = 0;
    std::string format = "text";
    app.add_option("verb", rq.verb, "facets | shell | triangulate | hvector | bijection | multiplex | verify")
        ->required()
        ->check(CLI::IsMember({"facets", "shell", "triangulate", "hvector", "bijection", "multiplex", "verify"}));
    auto* opt_d = app.add_option("d", d, "dimension");
    auto* opt_k = app.add_option("k", k, "degree of vertex 0 in the graph");
    auto* opt_n = app.add_option("n", n, "last vertex label (vertices 0..n)");
    auto* opt_i = app.add_option("--i", i_value, "size |U| for the bijection verb");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--method", rq.method, "h-vector computation (hvector verb)")
        ->check(CLI::IsMember({"toric", "closed", "multiplicial", "triangulation", "shelling", "all"}));
    app.add_flag("--grid", rq.grid, "run over the standard instance grid (verify, hvector)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ordpoly: " << e.what() << '\n';
        return 2;
    }

    try {
        rq.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
        if (opt_i->count() > 0)
            rq.i = i_value;
        const std::size_t given = opt_d->count() + opt_k->count() + opt_n->count();
        if (rq.grid) {
            if (rq.verb != "verify" && rq.verb != "hvector")
                throw UsageError("--grid applies to verify and hvector only");
            if (given != 0)
                throw UsageError("--grid replaces <d> <k> <n>; give one or the other");
        } else {
            if (given != 3)
                throw UsageError("expected <d> <k> <n>");
            rq.params = Params::make(d, k, n);
        }
        if (rq.i && rq.verb != "bijection")
            throw UsageError("--i applies to the bijection verb only");
        if (rq.method != "all" && rq.verb != "hvector")
            throw UsageError("--method applies to the hvector verb only");
        rq.max_faces = default_max_faces();

        static const std::map<std::string, std::function<int(const Request&, std::ostream&)>> verbs{
            {"facets", cmd_facets},       {"shell", cmd_shell},         {"triangulate", cmd_triangulate},
            {"hvector", cmd_hvector},     {"bijection", cmd_bijection}, {"multiplex", cmd_multiplex},
            {"verify", cmd_verify},
        };
        return verbs.at(rq.verb)(rq, out);
    } catch (const std::invalid_argument& e) {
        err << "ordpoly: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "ordpoly: " << e.what() << '\n';
        return 1;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace ordpoly::cli
