#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ncf/bijections.hpp"
#include "ncf/enumeration.hpp"
#include "ncf/errors.hpp"
#include "ncf/json_io.hpp"
#include "ncf/qcalc.hpp"

namespace ncf::cli {

namespace {

using json = Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_nk(int n, int k) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (k < 1 || k > n) throw UsageError("k must satisfy 1 <= k <= n");
}

void require_cap(int n) {
    const int cap = brute_force_cap();
    if (n > cap) {
        throw UsageError("n = " + std::to_string(n) + " exceeds the brute-force cap " + std::to_string(cap) +
                         " (raise NCF_SIEVE_MAX_N to allow it)");
    }
}

json read_json_arg(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) throw UsageError("cannot open " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
        text = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

std::string to_string(const BigInt& x) { return x.str(); }

void print_report_table(const CspReport& r, std::ostream& out) {
    out << "n=" << r.n << " k=" << r.k << "\n";
    out << std::setw(6) << "d" << std::setw(16) << "closed_form" << std::setw(16) << "poly_eval"
        << std::setw(16) << "brute" << std::setw(16) << "bijection" << std::setw(8) << "agree" << "\n";
    for (const CspRow& row : r.rows) {
        out << std::setw(6) << row.d << std::setw(16) << to_string(row.closed_form) << std::setw(16)
            << (row.poly_eval ? to_string(*row.poly_eval) : std::string("-")) << std::setw(16) << row.brute
            << std::setw(16) << (row.bijection ? std::to_string(*row.bijection) : std::string("-"))
            << std::setw(8) << (row.agree ? "yes" : "NO") << "\n";
        if (!row.note.empty()) out << "      note: " << row.note << "\n";
    }
    out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
}

int cmd_count(int n, int k, bool as_json, std::ostream& out) {
    require_nk(n, k);
    const BigInt c = count_formula(n, k);
    if (as_json) {
        out << json{{"n", n}, {"k", k}, {"count", bigint_to_json(c)}}.dump() << "\n";
    } else {
        out << c << "\n";
    }
    return kExitOk;
}

int cmd_qpoly(int n, int k, bool pretty, bool as_json, std::ostream& out) {
    require_nk(n, k);
    const QPoly f = f_poly(n, k);
    if (as_json) {
        out << json{{"n", n}, {"k", k}, {"coeffs", qpoly_to_json(f)}}.dump() << "\n";
    } else {
        out << (pretty ? f.to_pretty_string() : f.to_list_string()) << "\n";
    }
    return kExitOk;
}

int cmd_eval(int n, int k, int d, bool as_json, std::ostream& out) {
    require_nk(n, k);
    if (d < 1) throw UsageError("d must be at least 1");
    const auto value = eval_at_root(f_poly(n, k), d);
    if (as_json) {
        json j{{"n", n}, {"k", k}, {"d", d}, {"residue", qpoly_to_json(value.residue())}};
        j["value"] = value.is_integer() ? bigint_to_json(value.as_integer()) : json(nullptr);
        out << j.dump() << "\n";
    } else if (value.is_integer()) {
        out << value.as_integer() << "\n";
    } else {
        out << "residue " << value.residue().to_list_string() << " mod Phi_" << d << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(int n, std::optional<int> k, std::optional<int> d, bool dot, bool count_only,
                  std::ostream& out) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (k && (*k < 1 || *k > n)) throw UsageError("k must satisfy 1 <= k <= n");
    if (d && (*d < 1 || n % *d != 0)) throw UsageError("d must divide n");
    require_cap(n);
    std::uint64_t count = 0;
    auto emit = [&](const NonCrossingForest& f) {
        ++count;
        if (count_only) return;
        if (dot) {
            out << to_dot(f, "forest" + std::to_string(count));
        } else {
            out << forest_to_json(f).dump() << "\n";
        }
    };
    ForestStream stream(n, k);
    while (auto f = stream.next()) {
        if (!d || is_d_invariant(*f, *d)) emit(*f);
    }
    if (count_only) out << count << "\n";
    return kExitOk;
}

int cmd_fixed(int n, int k, int d, const std::string& route, bool as_json, std::ostream& out) {
    require_nk(n, k);
    if (d < 1 || n % d != 0) throw UsageError("d must divide n");
    json j{{"n", n}, {"k", k}, {"d", d}};
    const bool all = route == "all";
    if (all || route == "formula") j["closed_form"] = bigint_to_json(closed_form_eval(n, k, d));
    if (all || route == "poly") {
        const auto v = eval_at_root(f_poly(n, k), d);
        j["poly_eval"] = bigint_to_json(v.as_integer());
    }
    if (all || route == "brute") {
        require_cap(n);
        j["brute"] = fixed_count_brute(n, k, d);
    }
    if (all || route == "bijection") {
        require_cap(n);
        const auto b = fixed_count_bijection(n, k, d);
        j["bijection"] = b.count ? json(*b.count) : json(nullptr);
    }
    if (as_json) {
        out << j.dump() << "\n";
    } else if (!all) {
        const char* key = route == "formula" ? "closed_form" : route == "poly" ? "poly_eval" : route.c_str();
        const auto& v = j[key];
        out << (v.is_null() ? std::string("n/a") : v.dump()) << "\n";
    } else {
        for (const char* key : {"closed_form", "poly_eval", "brute", "bijection"}) {
            out << key << ": " << (j[key].is_null() ? std::string("n/a") : j[key].dump()) << "\n";
        }
    }
    return kExitOk;
}

int cmd_construct(const std::string& forest_arg, const std::string& mark_arg, int d, bool odd, bool dot,
                  std::istream& in, std::ostream& out) {
    const NonCrossingForest phi = forest_from_json(read_json_arg(forest_arg, in));
    const Mark mark = mark_from_json(read_json_arg(mark_arg, in));
    NonCrossingForest result = NonCrossingForest::empty(1);
    if (odd || mark.edge) {
        if (d != 2) throw UsageError("the odd-k construction only exists for d = 2");
        result = construct_c2_odd(phi, mark);
    } else {
        if (d < 2) throw UsageError("d must be at least 2");
        result = construct_cd(phi, mark.vertex, d);
    }
    out << (dot ? to_dot(result) : forest_to_json(result).dump() + "\n");
    return kExitOk;
}

int cmd_decompose(const std::string& forest_arg, int d, std::istream& in, std::ostream& out) {
    const NonCrossingForest big = forest_from_json(read_json_arg(forest_arg, in));
    if (d < 2 || big.n() % d != 0) throw UsageError("d must be at least 2 and divide n");
    const Decomposition dec = (d == 2 && big.k() % 2 == 1) ? decompose_d2_odd(big) : decompose_dd(big, d);
    out << json{{"forest", forest_to_json(dec.forest)}, {"mark", mark_to_json(dec.mark)}}.dump() << "\n";
    return kExitOk;
}

int cmd_verify(std::optional<int> n, std::optional<int> k, std::optional<int> max_n, bool as_json,
               unsigned workers, std::ostream& out) {
    if (!n && !max_n) throw UsageError("verify needs <n> or --max-n");
    std::vector<std::pair<int, int>> cells;
    const int lo = n ? *n : 1;
    const int hi = max_n ? *max_n : *n;
    if (lo < 1 || hi < lo) throw UsageError("empty or invalid n range");
    require_cap(hi);
    for (int nn = lo; nn <= hi; ++nn) {
        if (k) {
            if (*k < 1) throw UsageError("k must be at least 1");
            if (*k <= nn) cells.emplace_back(nn, *k);
            else if (!max_n) throw UsageError("k must satisfy 1 <= k <= n");
        } else {
            for (int kk = 1; kk <= nn; ++kk) cells.emplace_back(nn, kk);
        }
    }
    const auto reports = verify_cells(cells, workers);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const CspReport& r) { return r.verdict; });
    if (as_json) {
        if (reports.size() == 1) {
            out << report_to_json(reports.front()).dump() << "\n";
        } else {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            out << arr.dump() << "\n";
        }
    } else {
        for (const auto& r : reports) {
            print_report_table(r, out);
            out << "\n";
        }
        out << (ok ? "all verdicts PASS" : "some verdicts FAIL") << "\n";
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int brute_force_cap() {
    if (const char* env = std::getenv("NCF_SIEVE_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    return 12;
}

std::vector<CspReport> verify_cells(const std::vector<std::pair<int, int>>& cells, unsigned workers) {
    std::vector<CspReport> results(cells.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(cells.size(), 1));
    // Largest cells first so the slowest one does not start last.
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cells[a].first > cells[b].first;
    });
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < order.size();) {
            const auto [n, k] = cells[order[i]];
            results[order[i]] = verify_csp(n, k);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    return results;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic sieving checks for non-crossing forests", "ncf-sieve"};
    app.require_subcommand(1);

    int n = 0, k = 0, d = 0;
    bool as_json = false, pretty = false, dot = false, count_only = false, odd = false;
    std::optional<int> opt_n, opt_k, opt_d, max_n;
    std::string route = "all", forest_arg, mark_arg;
    unsigned workers = 0;

    auto* count = app.add_subcommand("count", "Number of forests f_{n,k}");
    count->add_option("n", n)->required();
    count->add_option("k", k)->required();
    count->add_flag("--json", as_json);

    auto* qpoly = app.add_subcommand("qpoly", "Coefficients of f_{n,k}(q)");
    qpoly->add_option("n", n)->required();
    qpoly->add_option("k", k)->required();
    qpoly->add_flag("--pretty", pretty, "Print as 1 + q^2 + ...");
    qpoly->add_flag("--json", as_json);

    auto* eval = app.add_subcommand("eval", "f_{n,k}(q) at a primitive d-th root of unity");
    eval->add_option("n", n)->required();
    eval->add_option("k", k)->required();
    eval->add_option("d", d)->required();
    eval->add_flag("--json", as_json);

    auto* enumerate = app.add_subcommand("enumerate", "Stream forests as JSON lines");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("--k", opt_k, "Only forests with k components");
    enumerate->add_option("--d", opt_d, "Only forests invariant under rotation by n/d");
    enumerate->add_flag("--dot", dot, "Emit Graphviz instead of JSON");
    enumerate->add_flag("--count", count_only, "Print only the number of forests");

    auto* fixed = app.add_subcommand("fixed", "Number of d-invariant forests");
    fixed->add_option("n", n)->required();
    fixed->add_option("k", k)->required();
    fixed->add_option("d", d)->required();
    fixed->add_option("--route", route)->check(CLI::IsMember({"all", "brute", "bijection", "formula", "poly"}));
    fixed->add_flag("--json", as_json);

    auto* construct = app.add_subcommand("construct", "Apply C_d (or C_2 for odd k)");
    construct->add_option("--forest", forest_arg, "Forest JSON, @file or - for stdin")->required();
    construct->add_option("--mark", mark_arg, "Mark JSON")->required();
    construct->add_option("--d", d)->required();
    construct->add_flag("--odd", odd, "Use the odd-k map even without an edge mark");
    construct->add_flag("--dot", dot);

    auto* decompose = app.add_subcommand("decompose", "Apply D_d (or D_2 for odd k)");
    decompose->add_option("--forest", forest_arg, "Forest JSON, @file or - for stdin")->required();
    decompose->add_option("--d", d)->required();

    auto* verify = app.add_subcommand("verify", "Check the cyclic sieving phenomenon");
    verify->add_option("n", opt_n);
    verify->add_option("--k", opt_k);
    verify->add_option("--max-n", max_n, "Verify every n from 1 (or <n>) up to this value");
    verify->add_flag("--json", as_json);
    verify->add_option("--workers", workers, "Worker threads (default: all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*count) return cmd_count(n, k, as_json, out);
        if (*qpoly) return cmd_qpoly(n, k, pretty, as_json, out);
        if (*eval) return cmd_eval(n, k, d, as_json, out);
        if (*enumerate) return cmd_enumerate(n, opt_k, opt_d, dot, count_only, out);
        if (*fixed) return cmd_fixed(n, k, d, route, as_json, out);
        if (*construct) return cmd_construct(forest_arg, mark_arg, d, odd, dot, in, out);
        if (*decompose) return cmd_decompose(forest_arg, d, in, out);
        if (*verify) return cmd_verify(opt_n, opt_k, max_n, as_json, workers, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace ncf::cli
