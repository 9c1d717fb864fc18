#include "ncf/json_io.hpp"

#include <limits>
#include <vector>

#include "ncf/errors.hpp"

namespace ncf {

using json = Json;

namespace {

BigInt bigint_from_json(const json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError("expected an integer, got " + j.dump());
}

}  // namespace

json forest_to_json(const NonCrossingForest& forest) {
    json edges = json::array();
    for (const Chord& e : forest.edges()) edges.push_back({e.u, e.v});
    return json{{"n", forest.n()}, {"edges", std::move(edges)}};
}

NonCrossingForest forest_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Chord> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair: " + e.dump());
            edges.push_back(Chord{e[0].get<int>(), e[1].get<int>()});
        }
        return NonCrossingForest::from_edges(n, edges);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed forest JSON: ") + e.what());
    }
}

json mark_to_json(const Mark& mark) {
    json j{{"vertex", mark.vertex}};
    if (mark.edge) j["edge"] = {mark.edge->u, mark.edge->v};
    return j;
}

Mark mark_from_json(const json& j) {
    try {
        Mark m = Mark::at(j.at("vertex").get<int>());
        if (j.contains("edge")) {
            const auto& e = j.at("edge");
            if (!e.is_array() || e.size() != 2) throw InputError("mark edge must be a pair: " + e.dump());
            m.edge = Chord::make(e[0].get<int>(), e[1].get<int>());
        }
        return m;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed mark JSON: ") + e.what());
    }
}

json bigint_to_json(const BigInt& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
    if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return x.convert_to<std::int64_t>();
    return x.str();
}

json qpoly_to_json(const QPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(bigint_to_json(c));
    if (out.empty()) out.push_back(0);
    return out;
}

json report_to_json(const CspReport& report) {
    json rows = json::array();
    for (const CspRow& r : report.rows) {
        json row{{"d", r.d},
                 {"closed_form", bigint_to_json(r.closed_form)},
                 {"poly_eval", r.poly_eval ? bigint_to_json(*r.poly_eval) : json(nullptr)},
                 {"brute", r.brute},
                 {"bijection", r.bijection ? json(*r.bijection) : json(nullptr)},
                 {"agree", r.agree}};
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    return json{{"n", report.n}, {"k", report.k}, {"rows", std::move(rows)}, {"verdict", report.verdict}};
}

CspReport report_from_json(const json& j) {
    try {
        CspReport report;
        report.n = j.at("n").get<int>();
        report.k = j.at("k").get<int>();
        report.verdict = j.at("verdict").get<bool>();
        for (const auto& r : j.at("rows")) {
            CspRow row;
            row.d = r.at("d").get<int>();
            row.closed_form = bigint_from_json(r.at("closed_form"));
            if (!r.at("poly_eval").is_null()) row.poly_eval = bigint_from_json(r.at("poly_eval"));
            row.brute = r.at("brute").get<std::uint64_t>();
            if (!r.at("bijection").is_null()) row.bijection = r.at("bijection").get<std::uint64_t>();
            row.agree = r.at("agree").get<bool>();
            if (r.contains("note")) row.note = r.at("note").get<std::string>();
            report.rows.push_back(std::move(row));
        }
        return report;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace ncf
