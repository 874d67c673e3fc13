#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <harmonia/harmonia.hpp>

namespace {

using namespace harmonia;

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_dims(const std::string& family, int n) {
    Family f = parse_family(family);
    MatrixLieAlgebra g = build_algebra(f, n);
    AlgebraDims d = g.dims();
    std::cout << "family " << family_name(f) << "  n " << n << "\n";
    std::cout << "  dim g " << d.dim_g << "\n";
    std::cout << "  dim k " << d.dim_k << "\n";
    std::cout << "  ell   " << d.rank_g << "\n";
    std::cout << "  k     " << d.rank_k << "\n";
    std::vector<int> degs = expected_generator_degrees(f, n);
    std::cout << "  generator degrees ";
    for (std::size_t i = 0; i < degs.size(); ++i) std::cout << (i ? " " : "") << degs[i];
    std::cout << "\n";
    return 0;
}

int cmd_harmonics(const std::string& family, int n, int degree, bool emit_basis, bool force) {
    Family f = parse_family(family);
    EnvelopeDecision gen_ok = check_envelope("generators", f, n, degree);
    EnvelopeDecision deg_ok = check_envelope("harmonics", f, n, degree);
    if (!gen_ok.allowed || !deg_ok.allowed) {
        const std::string& why = gen_ok.allowed ? deg_ok.reason : gen_ok.reason;
        if (!force) {
            std::cerr << "refused: " << why << "\n";
            return 3;
        }
        std::cerr << "warning: " << why << " (forced)\n";
    }
    MatrixLieAlgebra g = build_algebra(f, n);
    InvariantSet inv = generator_polynomials(g);
    DirectSumReport rep = verify_direct_sum(g, inv, degree);
    std::vector<Int> series = hilbert_coefficients(inv.degrees(), g.dim_g(), degree);
    std::cout << "family " << family_name(f) << "  n " << n << "  degree " << degree << "\n";
    std::cout << "  dim P^d   " << rep.dim_p << "\n";
    std::cout << "  ideal     " << rep.ideal_dim << "\n";
    std::cout << "  harmonic  " << rep.harmonic_dim << "\n";
    std::cout << "  series    " << series[degree] << "\n";
    std::cout << "  direct sum " << (rep.ok() ? "pass" : "fail") << "\n";
    if (emit_basis) {
        HarmonicSpace h = harmonic_space(g, inv, degree);
        for (const auto& p : h.basis) std::cout << "  " << p.str("c") << "\n";
    }
    return rep.ok() && Int(rep.harmonic_dim) == series[degree] ? 0 : 1;
}

int cmd_verify(const std::string& family, int n, int max_degree, const std::string& checks_csv,
               const std::string& json_path, std::uint64_t seed, bool force, bool timings) {
    CheckRequest req;
    req.family = parse_family(family);
    req.n = n;
    req.max_degree = max_degree;
    req.checks = split_csv(checks_csv);
    req.seed = seed;
    req.force = force;
    req.record_timings = timings;

    if (force)
        for (const auto& c : req.checks) {
            EnvelopeDecision d = check_envelope(c, req.family, req.n,
                                                max_degree < 0 ? default_max_degree(req.family, n)
                                                               : max_degree);
            if (!d.allowed) std::cerr << "warning: " << d.reason << " (forced)\n";
        }

    RunManifest man;
    try {
        man = run_checks(req);
    } catch (const EnvelopeRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    }

    for (const auto& r : man.reports) {
        std::cout << r.status;
        for (std::size_t i = r.status.size(); i < 5; ++i) std::cout << ' ';
        std::cout << "  " << r.id << "  (" << r.family << " n=" << r.n << ")\n";
    }
    std::cout << man.reports.size() << " reports, " << man.fail_count() << " fail, "
              << man.open_count() << " open\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << man.to_json().dump(2) << "\n";
    }
    return man.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for invariant pairs (K, g)"};
    app.require_subcommand(1);

    std::string family;
    int n = 1;
    int max_degree = -1;
    int degree = 0;
    std::string checks;
    std::string json_path;
    std::uint64_t seed = 20240817u;
    bool emit_basis = false;
    bool force = false;
    bool timings = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", family, "su, so-even, or so-odd")->required();
        sub->add_option("--n", n, "family parameter, n >= 1")->required()->check(CLI::PositiveNumber);
    };

    CLI::App* dims = app.add_subcommand("dims", "print the dimension table row");
    add_common(dims);

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    add_common(verify);
    verify->add_option("--max-degree", max_degree, "graded checks go up to this degree");
    verify->add_option("--checks", checks,
                       "comma-separated subset of: " + join(harmonia::check_registry(), ", "));
    verify->add_option("--json", json_path, "write the manifest to this path");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_flag("--force", force, "run outside the envelope (with a warning)");
    verify->add_flag("--timings", timings, "record wall-clock ms in reports");

    CLI::App* harm = app.add_subcommand("harmonics", "per-degree harmonic table");
    add_common(harm);
    harm->add_option("--degree", degree, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    harm->add_flag("--emit-basis", emit_basis, "print the echelon kernel basis");
    harm->add_flag("--force", force, "run outside the envelope (with a warning)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) return cmd_dims(family, n);
        if (harm->parsed()) return cmd_harmonics(family, n, degree, emit_basis, force);
        return cmd_verify(family, n, max_degree, checks, json_path, seed, force, timings);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
