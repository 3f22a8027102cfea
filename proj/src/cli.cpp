#include "polycosec/cli.hpp"

#include "polycosec/comb_cache.hpp"
#include "polycosec/combinatorics.hpp"
#include "polycosec/polybernoulli.hpp"
#include "polycosec/polycosecant.hpp"
#include "polycosec/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>

namespace polycosec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_k_vector(const std::string& text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const long v = std::stol(piece, &used);
            if (used != piece.size())
                throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("invalid index '" + piece + "' in --k " + text);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw UsageError("empty k-vector");
    return out;
}

// Tracks memo growth so the cache is rewritten only when a table extended
// or the file on disk was unusable.
struct CacheSession {
    bool enabled;
    std::filesystem::path file;
    bool loaded_ok = false;
    std::size_t loaded_size = 0;

    explicit CacheSession(bool use_cache) : enabled(use_cache), file(cache::default_cache_file()) {
        if (!enabled)
            return;
        loaded_ok = cache::load(file);
        loaded_size = cache::serialize_tables().size();
    }

    ~CacheSession() {
        if (!enabled)
            return;
        try {
            if (!loaded_ok || cache::serialize_tables().size() != loaded_size)
                cache::save(file);
        } catch (...) {
        }
    }
};

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
    return buf;
}

struct TableRequest {
    std::string family;
    std::string k_text;
    int n_max = 20;
    std::string format = "csv";
    std::string route; // empty = canonical
    bool no_cache = false;
    bool timestamp = false;
};

SequenceTable compute_table(const TableRequest& req) {
    const std::vector<long> ks = parse_k_vector(req.k_text);
    if (req.n_max < 0)
        throw UsageError("negative n-max");

    if (req.family == "Dmulti") {
        if (!req.route.empty() && req.route != "series")
            throw UsageError("family Dmulti supports only the series route");
        return d_multi_via_series(IndexVector(ks), req.n_max);
    }
    if (ks.size() != 1)
        throw UsageError("family " + req.family + " takes a single upper index");
    const long k = ks.front();

    if (req.family == "D") {
        const std::string route = req.route.empty() ? "recurrence" : req.route;
        if (route == "recurrence")
            return d_via_recurrence(k, req.n_max);
        if (route == "series")
            return d_via_series(k, req.n_max);
        if (route == "formula1" || route == "formula2") {
            SequenceTable t(Family::D, IndexVector{k});
            for (int n = 0; n <= req.n_max; ++n)
                t.set(n,
                      route == "formula1" ? d_via_formula1(k, n) : d_via_formula2(k, n),
                      route == "formula1" ? Route::Formula1 : Route::Formula2);
            return t;
        }
        throw UsageError("unknown route " + route + " for family D");
    }

    if (req.family == "B" || req.family == "C") {
        const PolyBernoulliKind kind =
            req.family == "B" ? PolyBernoulliKind::B : PolyBernoulliKind::C;
        const std::string route = req.route.empty() ? "explicit" : req.route;
        if (route == "series")
            return pb_series_oracle(kind, k, req.n_max);
        if (route != "explicit")
            throw UsageError("unknown route " + route + " for family " + req.family);
        SequenceTable t(kind == PolyBernoulliKind::B ? Family::B : Family::C, IndexVector{k});
        for (int n = 0; n <= req.n_max; ++n)
            t.set(n, pb_explicit(kind, n, k), Route::Explicit);
        return t;
    }

    throw UsageError("unknown family " + req.family);
}

int cmd_table(const TableRequest& req, std::ostream& out) {
    CacheSession session(!req.no_cache);
    const SequenceTable table = compute_table(req);
    if (req.format == "csv") {
        out << "n,value,route\n";
        for (const auto& [n, entry] : table.entries())
            out << n << "," << entry.first.str() << "," << route_name(entry.second) << "\n";
        return kExitOk;
    }
    ordered_json doc;
    doc["family"] = family_name(table.family());
    doc["indices"] = table.indices().entries();
    ordered_json values = ordered_json::array();
    for (const auto& [n, entry] : table.entries()) {
        ordered_json v;
        v["n"] = n;
        v["value"] = entry.first.str();
        v["route"] = route_name(entry.second);
        values.push_back(std::move(v));
    }
    doc["values"] = std::move(values);
    if (req.timestamp)
        doc["generated_at"] = iso_timestamp();
    out << doc.dump(2) << "\n";
    return kExitOk;
}

struct GfRequest {
    std::string which = "4G";
    int deg = 4;
    std::string format = "csv";
    bool no_cache = false;
};

BiSeries compute_gf(const GfRequest& req) {
    if (req.deg < 0)
        throw UsageError("negative degree bound");
    const int d = req.deg;
    if (req.which == "4G")
        return scale(big_g(d, d), Rational(4));
    if (req.which == "F")
        return big_f(d, d);
    if (req.which == "f-closed")
        return f_bivariate_closed(d, d);
    if (req.which == "f-def")
        return f_bivariate_definitional(d, d);
    if (req.which == "C-gf")
        return c_generating_grid(d, d);
    throw UsageError("unknown generating function " + req.which);
}

int cmd_gf(const GfRequest& req, std::ostream& out) {
    CacheSession session(!req.no_cache);
    const BiSeries s = compute_gf(req);
    if (req.format == "csv") {
        for (int a = 0; a <= s.order_x(); ++a) {
            for (int b = 0; b <= s.order_y(); ++b)
                out << (b ? "," : "") << s.egf_coeff(a, b).str();
            out << "\n";
        }
        return kExitOk;
    }
    ordered_json doc;
    doc["which"] = req.which;
    doc["deg"] = req.deg;
    ordered_json grid = ordered_json::array();
    for (int a = 0; a <= s.order_x(); ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b <= s.order_y(); ++b)
            row.push_back(s.egf_coeff(a, b).str());
        grid.push_back(std::move(row));
    }
    doc["grid"] = std::move(grid);
    out << doc.dump(2) << "\n";
    return kExitOk;
}

struct VerifyRequest {
    std::string check;
    int n_max = -1;
    int k_max = -1;
    std::string k_range;
    int order = -1;
    int m_max = -1;
    std::string k_text;
    int r_max = 3;
    bool no_cache = false;
};

std::pair<long, long> parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("range must be lo:hi, got " + text);
    try {
        const long lo = std::stol(text.substr(0, colon));
        const long hi = std::stol(text.substr(colon + 1));
        if (lo > hi)
            throw UsageError("empty range " + text);
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("range must be lo:hi, got " + text);
    }
}

int defaulted(int value, int fallback) { return value < 0 ? fallback : value; }

VerifyReport run_verify(const VerifyRequest& req) {
    if (req.check == "duality-D") {
        const int n = defaulted(req.n_max, 10), k = defaulted(req.k_max, 10);
        VerifyReport rep = duality_report(n, k);
        rep.merge(big_f_grid_report(n, k));
        return rep;
    }
    if (req.check == "duality-B")
        return pb_duality_report(PolyBernoulliKind::B, defaulted(req.n_max, 12),
                                 defaulted(req.k_max, 12));
    if (req.check == "duality-C")
        return pb_duality_report(PolyBernoulliKind::C, defaulted(req.n_max, 12),
                                 defaulted(req.k_max, 12));
    if (req.check == "routes-D") {
        const auto [lo, hi] = parse_range(req.k_range.empty() ? "-8:8" : req.k_range);
        return route_agreement_report(lo, hi, defaulted(req.n_max, 30));
    }
    if (req.check == "gh") {
        VerifyReport rep = gh_crosscheck(defaulted(req.m_max, 8), defaulted(req.order, 20));
        rep.merge(check_btilde_extraction(defaulted(req.m_max, 8)));
        return rep;
    }
    if (req.check == "f-constant")
        return f_constant_report(defaulted(req.order, 20));
    if (req.check == "multi-recurrence") {
        const int n = defaulted(req.n_max, 16);
        if (!req.k_text.empty())
            return d_multi_recurrence_check(IndexVector(parse_k_vector(req.k_text)), n);
        VerifyReport rep("multi-recurrence");
        for (int r = 1; r <= req.r_max; ++r) {
            std::vector<long> k(static_cast<std::size_t>(r), 0);
            while (true) {
                rep.merge(d_multi_recurrence_check(IndexVector(k), n));
                int pos = r - 1;
                while (pos >= 0 && k[static_cast<std::size_t>(pos)] == 2) {
                    k[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0)
                    break;
                ++k[static_cast<std::size_t>(pos)];
            }
        }
        return rep;
    }
    if (req.check == "c-gf")
        return c_gf_check(defaulted(req.order, 8));
    throw UsageError("unknown check " + req.check);
}

int cmd_verify(const VerifyRequest& req, std::ostream& out) {
    CacheSession session(!req.no_cache);
    const VerifyReport rep = run_verify(req);
    rep.print(out);
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_selftest(bool quick, bool no_cache, std::ostream& out) {
    CacheSession session(!no_cache);
    const auto start = std::chrono::steady_clock::now();
    const auto results = selftest::run_all(out, quick);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = selftest::all_passed(results);
    out << (ok ? "selftest PASS" : "selftest FAIL") << " (" << results.size() << " criteria, "
        << std::fixed << std::setprecision(2) << secs << "s)\n";
    return ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact poly-cosecant and poly-Bernoulli number toolkit"};
    app.require_subcommand(1);

    TableRequest table_req;
    CLI::App* table = app.add_subcommand("table", "Emit one family table");
    table->add_option("--family", table_req.family, "D, Dmulti, B, or C")->required();
    table->add_option("--k", table_req.k_text, "upper index (comma-separated for Dmulti)")
        ->required();
    table->add_option("--n-max", table_req.n_max, "largest n");
    table->add_option("--format", table_req.format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--route", table_req.route,
                      "series, recurrence, formula1, formula2, or explicit");
    table->add_flag("--no-cache", table_req.no_cache, "skip cache load/store");
    table->add_flag("--timestamp", table_req.timestamp, "add a timestamp to JSON output");

    GfRequest gf_req;
    CLI::App* gf = app.add_subcommand("gf", "Emit a bivariate coefficient grid");
    gf->add_option("--which", gf_req.which, "4G, F, f-closed, f-def, or C-gf")->required();
    gf->add_option("--deg", gf_req.deg, "degree bound per variable");
    gf->add_option("--format", gf_req.format)->check(CLI::IsMember({"csv", "json"}));
    gf->add_flag("--no-cache", gf_req.no_cache);

    VerifyRequest verify_req;
    CLI::App* verify = app.add_subcommand("verify", "Run one identity check");
    verify
        ->add_option("check", verify_req.check,
                     "duality-D, duality-B, duality-C, routes-D, gh, f-constant, "
                     "multi-recurrence, or c-gf")
        ->required();
    verify->add_option("--n-max", verify_req.n_max);
    verify->add_option("--k-max", verify_req.k_max);
    verify->add_option("--k-range", verify_req.k_range, "lo:hi");
    verify->add_option("--order", verify_req.order);
    verify->add_option("--m-max", verify_req.m_max);
    verify->add_option("--k", verify_req.k_text, "index vector for multi-recurrence");
    verify->add_option("--r-max", verify_req.r_max, "sweep depth for multi-recurrence");
    verify->add_flag("--no-cache", verify_req.no_cache);

    bool quick = false;
    bool selftest_no_cache = false;
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the full verification battery");
    selftest_cmd->add_flag("--quick", quick, "reduced bounds");
    selftest_cmd->add_flag("--no-cache", selftest_no_cache);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (table->parsed())
            return cmd_table(table_req, out);
        if (gf->parsed())
            return cmd_gf(gf_req, out);
        if (verify->parsed())
            return cmd_verify(verify_req, out);
        return cmd_selftest(quick, selftest_no_cache, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}

} // namespace polycosec::cli
