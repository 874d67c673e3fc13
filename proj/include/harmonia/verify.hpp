#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonics.hpp"
#include "invariants.hpp"
#include "liealg.hpp"
#include "report.hpp"
#include "repthy.hpp"
#include "stabilizers.hpp"

namespace harmonia {

inline Family parse_family(const std::string& s) {
    if (s == "su") return Family::su;
    if (s == "so-even") return Family::so_even;
    if (s == "so-odd") return Family::so_odd;
    throw std::invalid_argument("unknown family '" + s + "' (expected su, so-even, so-odd)");
}

// Closed-form reference values, independent of the constructive path.
inline int expected_dim_g(Family f, int n) {
    switch (f) {
        case Family::su: return n * n + 2 * n;
        case Family::so_even: return n * (2 * n + 1);
        case Family::so_odd: return (n + 1) * (2 * n + 1);
    }
    return 0;
}

inline AlgebraDims expected_dims(Family f, int n) {
    switch (f) {
        case Family::su: return {n * n + 2 * n, n * n, n, n};
        case Family::so_even: return {n * (2 * n + 1), n * (2 * n - 1), n, n};
        case Family::so_odd: return {(n + 1) * (2 * n + 1), n * (2 * n + 1), n + 1, n};
    }
    return {};
}

inline std::vector<int> expected_generator_degrees(Family f, int n) {
    std::vector<int> d;
    if (f == Family::su) {
        for (int i = 1; i <= n; ++i) d.push_back(i + 1);
        for (int j = 1; j <= n; ++j) d.push_back(j);
        return d;
    }
    for (int i = 1; i <= n; ++i) d.push_back(2 * i);
    if (f == Family::so_odd) d.push_back(n + 1);
    int phis = (f == Family::so_odd) ? n : n - 1;
    for (int j = 1; j <= phis; ++j) d.push_back(2 * j);
    if (f == Family::so_even) d.push_back(n);
    return d;
}

inline int default_max_degree(Family f, int n) {
    switch (f) {
        case Family::su: return n <= 1 ? 8 : 5;
        case Family::so_even: return n <= 1 ? 6 : 4;
        case Family::so_odd: return n <= 1 ? 5 : 4;
    }
    return 4;
}

// ---------------------------------------------------------------------------
// Envelope: each check group carries explicit size caps so a default run
// stays at desk scale. Degree-graded checks additionally require the full
// degree-d monomial space to stay small.

inline const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> reg = {"dims",       "generators",   "pfaffian",
                                                 "harmonics",  "series",       "characters",
                                                 "multiplicity", "stabilizer", "variety"};
    return reg;
}

struct EnvelopeDecision {
    bool allowed = false;
    std::string reason;
};

namespace detail {

inline const Int& degree_space_cap() {
    static const Int cap = 3200;
    return cap;
}

inline bool degree_checks_allowed(Family f, int n, int max_degree, std::string* why) {
    if (n > 2) {
        if (why) *why = "graded checks are limited to n <= 2";
        return false;
    }
    Int cells = monomial_count(expected_dim_g(f, n), max_degree);
    if (cells > degree_space_cap()) {
        if (why)
            *why = "degree " + std::to_string(max_degree) + " needs " + cells.str() +
                   " monomials, above the cap of " + degree_space_cap().str();
        return false;
    }
    return true;
}

}  // namespace detail

inline EnvelopeDecision check_envelope(const std::string& check, Family f, int n, int max_degree) {
    auto capped = [&](int cap) -> EnvelopeDecision {
        if (n <= cap) return {true, ""};
        return {false, "check '" + check + "' is limited to n <= " + std::to_string(cap) +
                           " for family " + family_name(f)};
    };
    if (check == "dims") return capped(7);
    if (check == "generators") return capped(3);
    if (check == "pfaffian") return f == Family::su ? capped(7) : capped(2);
    if (check == "harmonics" || check == "series" || check == "characters" ||
        check == "multiplicity") {
        std::string why;
        if (detail::degree_checks_allowed(f, n, max_degree, &why)) return {true, ""};
        return {false, "check '" + check + "': " + why};
    }
    if (check == "stabilizer") return f == Family::su ? capped(4) : capped(3);
    if (check == "variety") return capped(2);
    throw std::invalid_argument("unknown check '" + check + "'");
}

inline std::vector<std::string> envelope_checks(Family f, int n, int max_degree) {
    std::vector<std::string> out;
    for (const auto& c : check_registry())
        if (check_envelope(c, f, n, max_degree).allowed) out.push_back(c);
    return out;
}

struct EnvelopeRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckRequest {
    Family family = Family::su;
    int n = 1;
    int max_degree = -1;  // -1: use default_max_degree
    std::vector<std::string> checks;  // empty: everything the envelope allows
    std::uint64_t seed = 20240817u;
    bool force = false;
    bool record_timings = false;
};

// ---------------------------------------------------------------------------
// Individual check groups. Each appends VerificationReports.

namespace detail {

inline json weight_json(const Weight& w) {
    json a = json::array();
    for (int x : w) a.push_back(x);
    return a;
}

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

class ReportTimer {
  public:
    explicit ReportTimer(bool enabled) : enabled_(enabled), start_(clock::now()) {}
    long long stop() const {
        if (!enabled_) return 0;
        auto d = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_);
        return static_cast<long long>(d.count());
    }

  private:
    using clock = std::chrono::steady_clock;
    bool enabled_;
    clock::time_point start_;
};

inline VerificationReport fresh_report(const std::string& id, const MatrixLieAlgebra& g) {
    VerificationReport r;
    r.id = id;
    r.family = family_name(g.family);
    r.n = g.n;
    return r;
}

}  // namespace detail

inline void run_dims_check(const MatrixLieAlgebra& g, const CheckRequest& req,
                           std::vector<VerificationReport>& out) {
    detail::ReportTimer t(req.record_timings);
    VerificationReport r = detail::fresh_report("dims-table", g);
    AlgebraDims want = expected_dims(g.family, g.n);
    AlgebraDims got = g.dims();
    bool members = true;
    for (const auto& b : g.basis)
        if (!is_member(g, b.mat)) members = false;
    r.expected = {{"dim_g", want.dim_g}, {"dim_k", want.dim_k}, {"ell", want.rank_g}, {"k", want.rank_k}};
    r.computed = {{"dim_g", got.dim_g},
                  {"dim_k", got.dim_k},
                  {"ell", got.rank_g},
                  {"k", got.rank_k},
                  {"dim_p", g.dim_p()},
                  {"basis_members", members}};
    r.set_status(want.dim_g == got.dim_g && want.dim_k == got.dim_k && want.rank_g == got.rank_g &&
                 want.rank_k == got.rank_k && members);
    r.ms = t.stop();
    out.push_back(std::move(r));
}

inline void run_generators_check(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                 const CheckRequest& req, std::vector<VerificationReport>& out) {
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("generator-degree-sum", g);
        std::vector<int> degs = inv.degrees();
        int sum = 0;
        for (int d : degs) sum += d - 1;
        r.expected = {{"sum_deg_minus_one", g.dim_k}, {"degrees", expected_generator_degrees(g.family, g.n)}};
        r.computed = {{"sum_deg_minus_one", sum}, {"degrees", degs}};
        r.set_status(sum == g.dim_k && degs == expected_generator_degrees(g.family, g.n));
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("generator-invariance", g);
        json per = json::object();
        bool all = true;
        for (const auto& gen : inv.gens) {
            bool ok = is_invariant(g, gen.poly);
            per[gen.label] = ok;
            all = all && ok;
        }
        r.expected = {{"all_invariant", true}};
        r.computed = {{"per_generator", per}};
        r.set_status(all);
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("generator-jacobian-rank", g);
        int rank = jacobian_generic_rank(g, inv, req.seed);
        r.expected = {{"rank", g.rank_g + g.rank_k}};
        r.computed = {{"rank", rank}, {"generator_count", inv.count()}};
        r.set_status(rank == g.rank_g + g.rank_k);
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
}

inline void run_pfaffian_check(const MatrixLieAlgebra& g, const InvariantSet* inv,
                               const CheckRequest& req, std::vector<VerificationReport>& out) {
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("pfaffian-square", g);
        json per = json::object();
        bool all = true;
        for (int s : {2, 4, 6}) {
            int vars = s * (s - 1) / 2;
            PolyMatrix m(s, s, vars);
            int v = 0;
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    m.at(i, j) = Polynomial::variable(vars, v);
                    m.at(j, i) = Polynomial::variable(vars, v).scale(-1);
                    ++v;
                }
            bool ok = pfaffian(m) * pfaffian(m) == determinant(m);
            per[std::to_string(s)] = ok;
            all = all && ok;
        }
        r.expected = {{"square_equals_det", true}};
        r.computed = {{"per_size", per}};
        r.set_status(all);
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
    if (g.family == Family::su || inv == nullptr) return;
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("pfaffian-sign", g);
        const Polynomial& pf = inv->gens[inv->pf_index].poly;
        Polynomial det(g.dim_g());
        if (g.family == Family::so_odd) {
            det = determinant(g.generic_element(true, true));
        } else {
            PolyMatrix b = g.generic_element(true, false).submatrix(0, 0, 2 * g.n, 2 * g.n);
            det = determinant(b);
        }
        bool ok = pf * pf == det.scale(inv->pf_square_sign);
        r.expected = {{"identity", "pf^2 == sign * det"}};
        r.computed = {{"sign", inv->pf_square_sign}, {"holds", ok}};
        r.set_status(ok);
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
}

inline void run_harmonics_check(const MatrixLieAlgebra& g, const InvariantSet& inv, int max_degree,
                                const CheckRequest& req, std::vector<VerificationReport>& out) {
    std::vector<DirectSumReport> rows;
    detail::ReportTimer t_sum(req.record_timings);
    for (int d = 0; d <= max_degree; ++d) rows.push_back(verify_direct_sum(g, inv, d));
    long long ms_sum = t_sum.stop();
    {
        VerificationReport r = detail::fresh_report("harmonic-direct-sum", g);
        r.params = {{"max_degree", max_degree}};
        json per = json::array();
        bool all = true;
        for (const auto& row : rows) {
            per.push_back({{"degree", row.degree},
                           {"dim", row.dim_p},
                           {"harmonic", row.harmonic_dim},
                           {"ideal", row.ideal_dim},
                           {"independent", row.independent},
                           {"spans", row.spans}});
            all = all && row.ok();
        }
        r.expected = {{"independent", true}, {"spans", true}};
        r.computed = {{"per_degree", per}};
        r.set_status(all);
        r.ms = ms_sum;
        out.push_back(std::move(r));
    }
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("harmonic-hilbert", g);
        r.params = {{"max_degree", max_degree}};
        std::vector<Int> series = hilbert_coefficients(inv.degrees(), g.dim_g(), max_degree);
        json got = json::array(), want = json::array();
        bool all = true;
        for (int d = 0; d <= max_degree; ++d) {
            got.push_back(rows[d].harmonic_dim);
            want.push_back(detail::to_ll(series[d]));
            all = all && Int(rows[d].harmonic_dim) == series[d];
        }
        r.expected = {{"series_coefficients", want}};
        r.computed = {{"kernel_dimensions", got}};
        r.set_status(all);
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
}

inline void run_series_check(const MatrixLieAlgebra& g, const InvariantSet& inv, int max_degree,
                             const CheckRequest& req, std::vector<VerificationReport>& out) {
    detail::ReportTimer t(req.record_timings);
    VerificationReport r = detail::fresh_report("invariant-series", g);
    r.params = {{"max_degree", max_degree}};
    std::vector<Int> series(max_degree + 1, 0);
    series[0] = 1;
    for (int e : inv.degrees())
        for (int j = e; j <= max_degree; ++j) series[j] += series[j - e];
    json got = json::array(), want = json::array();
    bool all = true;
    for (int d = 0; d <= max_degree; ++d) {
        int dim = invariant_dimension(g, d);
        got.push_back(dim);
        want.push_back(detail::to_ll(series[d]));
        all = all && Int(dim) == series[d];
    }
    r.expected = {{"series_coefficients", want}};
    r.computed = {{"invariant_dimensions", got}};
    r.set_status(all);
    r.ms = t.stop();
    out.push_back(std::move(r));
}

inline void run_characters_check(const MatrixLieAlgebra& g, const InvariantSet& inv, int max_degree,
                                 const CheckRequest& req, std::vector<VerificationReport>& out) {
    detail::ReportTimer t(req.record_timings);
    VerificationReport r = detail::fresh_report("character-paths", g);
    r.params = {{"max_degree", max_degree}};
    json per = json::array();
    bool all = true;
    for (int d = 0; d <= max_degree; ++d) {
        TorusCharacter a = graded_harmonic_character_kernel(g, inv, d);
        TorusCharacter b = graded_harmonic_character_series(g, inv, d);
        bool agree = a == b;
        per.push_back({{"degree", d}, {"agree", agree}, {"dim", a.total()}});
        all = all && agree;
    }
    r.expected = {{"paths_agree", true}};
    r.computed = {{"per_degree", per}};
    r.set_status(all);
    r.ms = t.stop();
    out.push_back(std::move(r));
}

inline void run_multiplicity_check(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                   int max_degree, const CheckRequest& req,
                                   std::vector<VerificationReport>& out) {
    detail::ReportTimer t_led(req.record_timings);
    MultiplicityLedger led = multiplicity_report(g, inv, max_degree);
    long long ms_led = t_led.stop();

    auto ledger_json = [&led]() {
        json rows = json::array();
        for (const auto& [w, m] : led.cumulative)
            rows.push_back({{"weight", detail::weight_json(w)},
                            {"cumulative", m},
                            {"dim", detail::to_ll(led.dims.at(w))}});
        return rows;
    };

    {
        VerificationReport r = detail::fresh_report("multiplicity-bound", g);
        r.params = {{"max_degree", max_degree}};
        r.expected = {{"violations", 0}};
        int violations = 0;
        for (const auto& [w, m] : led.cumulative)
            if (Int(m) > led.dims.at(w)) ++violations;
        r.computed = {{"violations", violations}, {"ledger", ledger_json()}};
        r.set_status(led.bound_ok);
        r.ms = ms_led;
        out.push_back(std::move(r));
    }
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("saturation-profile", g);
        r.params = {{"max_degree", max_degree}};
        Weight zero(g.torus_rank(), 0);
        bool trivial_sat = false, nontrivial_sat = false;
        json sat = json::array();
        for (const auto& w : led.saturated) {
            sat.push_back(detail::weight_json(w));
            if (w == zero)
                trivial_sat = true;
            else
                nontrivial_sat = true;
        }
        bool need_full = g.family == Family::su && g.n == 1;
        bool pass = led.bound_ok && trivial_sat && nontrivial_sat &&
                    (!need_full || led.fully_saturated());
        r.expected = need_full ? json{{"all_saturated", true}}
                               : json{{"trivial_saturated", true}, {"nontrivial_saturated", true}};
        r.computed = {{"saturated", sat},
                      {"appearing", static_cast<long long>(led.cumulative.size())},
                      {"all_saturated", led.fully_saturated()}};
        if (pass)
            r.status = "pass";
        else if (led.bound_ok && trivial_sat)
            r.status = "open";  // no violation, saturation not yet reached at this cutoff
        else
            r.status = "fail";
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
    {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("regular-closure", g);
        r.params = {{"max_degree", max_degree}};
        std::vector<KTypeCount> v;
        for (const auto& [w, m] : led.cumulative)
            v.push_back({w, detail::to_ll(led.dims.at(w))});
        RegularClosureReport rep = regular_closure_check(led, v);
        r.expected = {{"computed_equals_dim", true}};
        r.computed = {{"computed", detail::to_ll(rep.computed)},
                      {"dim_v", detail::to_ll(rep.dim_v)},
                      {"all_contragredients_saturated", rep.all_contragredients_saturated}};
        if (rep.all_contragredients_saturated)
            r.set_status(rep.equality);
        else
            r.status = rep.computed <= rep.dim_v ? "open" : "fail";
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
}

inline void run_stabilizer_check(const MatrixLieAlgebra& g, const CheckRequest& req,
                                 std::vector<VerificationReport>& out) {
    bool orbit_in_range = g.family == Family::su ? g.n <= 4 : g.n <= 3;
    if (orbit_in_range) {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("stabilizer-orbit", g);
        StabilizerReport rep = verify_minimal_stabilizer(g);
        r.expected = {{"centralizer_dim", 0}, {"orbit_dim", g.dim_k}};
        r.computed = {{"member", rep.member},
                      {"centralizer_dim", rep.centralizer_dim},
                      {"orbit_dim", rep.orbit_dim},
                      {"compact_step_ok", rep.compact_step_ok},
                      {"conjugation_stable", rep.conjugation_stable}};
        r.set_status(rep.ok());
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
    if (g.family == Family::so_even) {
        detail::ReportTimer t(req.record_timings);
        VerificationReport r = detail::fresh_report("stabilizer-structure", g);
        CentralizerStructure cs = verify_centralizer_structure(g);
        r.expected = {{"centralizer_dim", g.n}};
        r.computed = {{"centralizer_dim", cs.computed_dim},
                      {"block_pattern_ok", cs.block_pattern_ok},
                      {"printed_pattern_checked", cs.printed_pattern_checked},
                      {"printed_pattern_ok", cs.printed_pattern_ok}};
        r.set_status(cs.ok());
        r.ms = t.stop();
        out.push_back(std::move(r));
    }
}

inline void run_variety_check(const MatrixLieAlgebra& g, const InvariantSet& inv,
                              const CheckRequest& req, std::vector<VerificationReport>& out) {
    detail::ReportTimer t(req.record_timings);
    VerificationReport r = detail::fresh_report("variety-nilpotency", g);
    r.params = {{"samples", 100}, {"seed", req.seed}};

    // indices whose root is strictly positive against a generic functional;
    // any combination of these is nilpotent with nilpotent compact part
    std::vector<long long> lam(g.torus_rank());
    for (int i = 0; i < g.torus_rank(); ++i) lam[i] = 1LL << (2 * (g.torus_rank() - 1 - i));
    std::vector<int> cone;
    for (int a = 0; a < g.dim_g(); ++a) {
        long long dot = 0;
        for (int i = 0; i < g.torus_rank(); ++i) dot += lam[i] * g.basis[a].weight[i];
        if (dot > 0) cone.push_back(a);
    }

    std::mt19937_64 rng(req.seed);
    auto coeff = [&rng]() { return Rational(static_cast<long long>(rng() % 7) - 3); };
    std::vector<Rational> zeros(inv.count(), 0);
    int agreements = 0, inside = 0;
    for (int s = 0; s < 100; ++s) {
        std::vector<Rational> coords(g.dim_g(), 0);
        int strategy = s % 10;
        if (strategy < 4) {
            for (auto& c : coords) c = coeff();
        } else if (strategy < 7) {
            for (int a : cone) coords[a] = coeff();
        } else {
            for (int a = g.dim_k; a < g.dim_g(); ++a) coords[a] = coeff();
        }
        RatMatrix x = g.realize(coords);
        bool fiber = in_variety(g, inv, x, zeros);
        auto [nx, nk] = nilpotency_check(g, x);
        if (fiber == (nx && nk)) ++agreements;
        if (fiber) ++inside;
    }
    r.expected = {{"agreements", 100}};
    r.computed = {{"agreements", agreements}, {"in_variety", inside}};
    r.set_status(agreements == 100);
    r.ms = t.stop();
    out.push_back(std::move(r));
}

// ---------------------------------------------------------------------------

inline RunManifest run_checks(const CheckRequest& req_in) {
    CheckRequest req = req_in;
    if (req.n < 1) throw std::invalid_argument("n must be at least 1");
    if (req.max_degree < 0) req.max_degree = default_max_degree(req.family, req.n);

    std::vector<std::string> checks = req.checks;
    if (checks.empty()) {
        checks = envelope_checks(req.family, req.n, req.max_degree);
    } else {
        std::vector<std::string> refused;
        for (const auto& c : checks) {
            EnvelopeDecision d = check_envelope(c, req.family, req.n, req.max_degree);
            if (!d.allowed && !req.force) refused.push_back(d.reason);
        }
        if (!refused.empty()) {
            std::string msg = "outside the supported envelope (use --force to override):";
            for (const auto& m : refused) msg += "\n  " + m;
            throw EnvelopeRefusal(msg);
        }
    }

    auto wanted = [&checks](const char* name) {
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };

    MatrixLieAlgebra g = build_algebra(req.family, req.n);
    bool need_inv = wanted("generators") || wanted("harmonics") || wanted("series") ||
                    wanted("characters") || wanted("multiplicity") || wanted("variety") ||
                    (wanted("pfaffian") && req.family != Family::su);
    InvariantSet inv;
    if (need_inv) inv = generator_polynomials(g);

    RunManifest man;
    man.seed = req.seed;
    for (const auto& c : check_registry()) {
        if (!wanted(c.c_str())) continue;
        if (c == "dims") run_dims_check(g, req, man.reports);
        if (c == "generators") run_generators_check(g, inv, req, man.reports);
        if (c == "pfaffian") run_pfaffian_check(g, need_inv ? &inv : nullptr, req, man.reports);
        if (c == "harmonics") run_harmonics_check(g, inv, req.max_degree, req, man.reports);
        if (c == "series") run_series_check(g, inv, req.max_degree, req, man.reports);
        if (c == "characters") run_characters_check(g, inv, req.max_degree, req, man.reports);
        if (c == "multiplicity") run_multiplicity_check(g, inv, req.max_degree, req, man.reports);
        if (c == "stabilizer") run_stabilizer_check(g, req, man.reports);
        if (c == "variety") run_variety_check(g, inv, req, man.reports);
    }
    return man;
}

}  // namespace harmonia
