#include "polycosec/selftest.hpp"

#include "polycosec/combinatorics.hpp"
#include "polycosec/polybernoulli.hpp"
#include "polycosec/polycosecant.hpp"

#include <chrono>
#include <functional>
#include <iomanip>

namespace polycosec::selftest {

namespace {

struct Bounds {
    int grid_deg = 4;
    int identity_order = 50;
    long route_k = 8;
    int route_n = 30;
    int duality_nk = 15;
    int f_grid_nk = 10;
    int triangle_m = 12;
    int operator_m = 8;
    int operator_order = 20;
    int extraction_m = 6;
    int f_constant_order = 20;
    long pb_k = 6;
    int pb_n = 20;
    int pb_duality = 12;
    int c_gf_order = 8;
    int multi_r = 3;
    int multi_n = 16;
    int spot_k = 12;
};

Bounds quick_bounds() {
    Bounds b;
    b.identity_order = 20;
    b.route_k = 3;
    b.route_n = 12;
    b.duality_nk = 6;
    b.f_grid_nk = 4;
    b.triangle_m = 6;
    b.operator_m = 4;
    b.operator_order = 12;
    b.extraction_m = 3;
    b.f_constant_order = 8;
    b.pb_k = 3;
    b.pb_n = 10;
    b.pb_duality = 6;
    b.c_gf_order = 4;
    b.multi_r = 2;
    b.multi_n = 8;
    b.spot_k = 6;
    return b;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome criterion_remark_grid(const Bounds& b) {
    static const long expected[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 4, 4, 1, 0}, {1, 8, 13, 8, 1},
    };
    const BiSeries g4 = scale(big_g(b.grid_deg, b.grid_deg), Rational(4));
    for (int total = 0; total <= b.grid_deg; ++total)
        for (int a = total; a >= 0; --a) {
            const int bb = total - a;
            const Rational want(expected[total][bb]);
            const Rational got = g4.egf_coeff(a, bb);
            if (got != want)
                return {false, "4G entry (" + std::to_string(a) + "," + std::to_string(bb) +
                                   ") = " + got.str() + ", expected " + want.str()};
        }
    return {true, "antidiagonals 1; 1,1; 1,2,1; 1,4,4,1; 1,8,13,8,1"};
}

Outcome criterion_a0_identity(const Bounds& b) {
    const int n = b.identity_order;
    const UniSeries lhs = compose(a_series(0, n), tanh_half(n));
    const UniSeries rhs = elementary(Elementary::Sinh, n);
    if (lhs == rhs)
        return {true, "A_0(tanh(t/2)) == sinh t through order " + std::to_string(n)};
    return {false, "series mismatch"};
}

Outcome report_outcome(const VerifyReport& rep, const std::string& ok_text) {
    if (rep.all_pass())
        return {true, ok_text};
    for (const auto& item : rep.items())
        if (!item.pass)
            return {false, item.label + (item.detail.empty() ? "" : ": " + item.detail)};
    return {false, "failure"};
}

Outcome criterion_routes(const Bounds& b) {
    const VerifyReport rep = route_agreement_report(-b.route_k, b.route_k, b.route_n);
    return report_outcome(rep, "four routes agree for k in [-" + std::to_string(b.route_k) + "," +
                                   std::to_string(b.route_k) + "], n <= " +
                                   std::to_string(b.route_n));
}

Outcome criterion_duality(const Bounds& b) {
    VerifyReport rep = duality_report(b.duality_nk, b.duality_nk);
    rep.merge(big_f_grid_report(b.f_grid_nk, b.f_grid_nk));
    return report_outcome(rep, "duality grid " + std::to_string(b.duality_nk) + "x" +
                                   std::to_string(b.duality_nk) + " and F extraction " +
                                   std::to_string(b.f_grid_nk) + "x" +
                                   std::to_string(b.f_grid_nk));
}

Outcome criterion_second_proof(const Bounds& b) {
    VerifyReport rep = check_dual_triangles(b.triangle_m);
    rep.merge(check_operator_expansion(b.operator_m, b.operator_order));
    rep.merge(check_btilde_extraction(b.extraction_m));
    return report_outcome(rep, "triangles m <= " + std::to_string(b.triangle_m) +
                                   ", operator identity m <= " + std::to_string(b.operator_m) +
                                   ", extraction m <= " + std::to_string(b.extraction_m));
}

Outcome criterion_f_constant(const Bounds& b) {
    const VerifyReport rep = f_constant_report(b.f_constant_order);
    std::string constant = "?";
    for (const auto& [k, v] : rep.notes())
        if (k.find("constant") != std::string::npos)
            constant = v;
    if (!rep.all_pass())
        return report_outcome(rep, "");
    return {true, "nonconstant difference zero on " + std::to_string(b.f_constant_order) + "x" +
                      std::to_string(b.f_constant_order) + " grid; constant = " + constant};
}

Outcome criterion_polybernoulli(const Bounds& b) {
    VerifyReport rep = pb_match_report(PolyBernoulliKind::B, -b.pb_k, b.pb_k, b.pb_n);
    rep.merge(pb_match_report(PolyBernoulliKind::C, -b.pb_k, b.pb_k, b.pb_n));
    rep.merge(pb_duality_report(PolyBernoulliKind::B, b.pb_duality, b.pb_duality));
    rep.merge(pb_duality_report(PolyBernoulliKind::C, b.pb_duality, b.pb_duality));
    rep.merge(c_gf_check(b.c_gf_order));
    return report_outcome(rep, "explicit == oracle, dualities, C generating function");
}

Outcome criterion_multi(const Bounds& b) {
    // All index vectors over {0,1,2}^r, r <= multi_r.
    for (int r = 1; r <= b.multi_r; ++r) {
        std::vector<long> k(static_cast<std::size_t>(r), 0);
        while (true) {
            const VerifyReport rep = d_multi_recurrence_check(IndexVector(k), b.multi_n);
            if (!rep.all_pass())
                return report_outcome(rep, "");
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
    // Depth 1 degenerates to the single-index objects.
    for (long k1 = 0; k1 <= 2; ++k1) {
        const SequenceTable multi = d_multi_via_series(IndexVector{k1}, b.multi_n);
        const SequenceTable single = d_via_series(k1, b.multi_n);
        for (int n = 0; n <= b.multi_n; ++n)
            if (multi.value(n) != single.value(n))
                return {false, "depth-1 reduction failed at k=" + std::to_string(k1) +
                                   ", n=" + std::to_string(n)};
    }
    return {true, "multi-index recurrence for r <= " + std::to_string(b.multi_r) +
                      ", indices in {0,1,2}^r, n <= " + std::to_string(b.multi_n)};
}

Outcome criterion_spot_checks(const Bounds& b) {
    const SequenceTable d1 = d_via_recurrence(1, 4);
    if (d1.value(2) != Rational(-1, 3))
        return {false, "D(2)^(1) = " + d1.value(2).str() + ", expected -1/3"};
    if (d1.value(4) != Rational(7, 15))
        return {false, "D(4)^(1) = " + d1.value(4).str() + ", expected 7/15"};
    const SequenceTable dm3 = d_via_recurrence(-3, 2);
    if (dm3.value(2) != Rational(13))
        return {false, "D(2)^(-3) = " + dm3.value(2).str() + ", expected 13"};
    for (long k = -b.spot_k; k <= b.spot_k; ++k) {
        const SequenceTable t = d_via_recurrence(k, 21);
        if (t.value(0) != Rational(1))
            return {false, "D(0)^(" + std::to_string(k) + ") != 1"};
        for (int n = 1; n <= 21; n += 2)
            if (!t.value(n).is_zero())
                return {false, "D(" + std::to_string(n) + ")^(" + std::to_string(k) + ") != 0"};
    }
    return {true, "cosecant values, D(0) row, odd vanishing"};
}

} // namespace

std::vector<CriterionResult> run_all(std::ostream& os, bool quick) {
    const Bounds b = quick ? quick_bounds() : Bounds{};
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"remark-grid (4G expansion through total degree 4)", [&] { return criterion_remark_grid(b); }},
        {"a0-identity (A_0(tanh(t/2)) == sinh t)", [&] { return criterion_a0_identity(b); }},
        {"routes-D (four-route agreement)", [&] { return criterion_routes(b); }},
        {"duality-D (index swap and F-grid extraction)", [&] { return criterion_duality(b); }},
        {"second-proof (dual triangles, operator identity, extraction)",
         [&] { return criterion_second_proof(b); }},
        {"f-constant (definitional vs closed grid audit)", [&] { return criterion_f_constant(b); }},
        {"poly-bernoulli (formulas, dualities, C grid)", [&] { return criterion_polybernoulli(b); }},
        {"multi-index (recurrence and depth-1 reduction)", [&] { return criterion_multi(b); }},
        {"spot-checks (known values)", [&] { return criterion_spot_checks(b); }},
    };

    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CriterionResult r{static_cast<int>(i) + 1, criteria[i].first, out.pass, secs, out.detail};
        os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  ["
           << std::fixed << std::setprecision(2) << r.seconds << "s]";
        if (!r.detail.empty())
            os << "  " << r.detail;
        os << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

} // namespace polycosec::selftest
