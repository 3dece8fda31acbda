#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "mink/report.hpp"

namespace mink {

namespace {

void print_apparatus(const EquiformApparatus& app) {
    auto line = [](const char* label, const Vec4& v) {
        std::printf("  %-4s % .10f  % .10f  % .10f  % .10f\n", label, v.x1, v.x2, v.x3,
                    v.x4);
    };
    std::printf("s      : %.10f\n", app.s);
    std::printf("sigma  : %.10f\n", app.sigma);
    std::printf("case   : %s\n", to_string(app.sig.frame_case));
    std::printf("kappa  : %.7f  %.7f  %.7f\n", app.frenet.kappa1, app.frenet.kappa2,
                app.frenet.kappa3);
    std::printf("|kappa|: %.7f  %.7f  %.7f\n", std::fabs(app.frenet.kappa1),
                std::fabs(app.frenet.kappa2), std::fabs(app.frenet.kappa3));
    std::printf("rho    : %.10f\n", app.rho);
    std::printf("K      : %.7f  %.7f  %.7f\n", app.ek1, app.ek2, app.ek3);
    std::printf("frame  :\n");
    line("t", app.frame[0] / app.rho);
    line("n", app.frame[1] / app.rho);
    line("b1", app.frame[2] / app.rho);
    line("b2", app.frame[3] / app.rho);
}

void print_verify(const AnalysisReport& rep, const Tolerances& tols) {
    std::printf("curve  : %s\n", rep.curve_name.c_str());
    std::printf("char   : %s, case %s, length %.10f\n",
                to_string(rep.tangent_character), to_string(rep.frame_case), rep.length);
    if (rep.residuals) {
        const ResidualSummary& r = *rep.residuals;
        if (!r.skipped_reason.empty()) {
            std::printf("residuals: %s\n", r.skipped_reason.c_str());
        } else {
            std::printf("frenet residual max    : %.3e  [%s]\n", r.frenet_max,
                        r.frenet_max < tols.tol ? "pass" : "FAIL");
            std::printf("equiform residual max  : %.3e  [%s]\n", r.equiform_max,
                        r.equiform_max < tols.tol ? "pass" : "FAIL");
            const bool helix = rep.classification && rep.classification->helix.is_helix;
            std::printf("helix identity max     : %.3e  [%s]\n", r.helix_identity_max,
                        helix ? (r.helix_identity_max <= 10.0 * tols.tol ? "pass: helix"
                                                                         : "FAIL")
                              : "not a helix");
            std::printf("identity matches verdict: %s\n",
                        r.consistent_with_helix_verdict ? "yes" : "NO");
        }
    }
    for (const HomothetyReport& h : rep.homothety) {
        std::printf("homothety lambda=%-6g max dev %.3e  [%s]\n", h.lambda, h.worst(),
                    h.worst() < 1e-7 ? "pass" : "FAIL");
    }
    if (rep.classification) {
        std::printf("verdicts:");
        if (rep.classification->verdicts.empty()) std::printf(" None");
        for (const Verdict v : rep.classification->verdicts)
            std::printf(" %s", to_string(v));
        std::printf("\n");
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Frenet and equiform invariants of curves in Minkowski 4-space"};
    app.require_subcommand(1);

    CurveSpecDocument::Overrides cli_tols;
    app.add_option_function<double>(
           "--tol", [&](double v) { cli_tols.tol = v; },
           "classification/verification tolerance (default 1e-6)")
        ->expected(1);
    app.add_option_function<double>(
           "--fd-step", [&](double v) { cli_tols.fd_step = v; },
           "finite-difference step for residual checks (default 1e-4)")
        ->expected(1);
    app.add_option_function<double>(
           "--eps-null", [&](double v) { cli_tols.eps_null = v; },
           "lightlike threshold on <x,x> (default 1e-10)")
        ->expected(1);

    std::string spec_path, out_dir = ".", format = "csv";
    double at_s = 0.0;
    std::vector<double> lambdas;

    CLI::App* analyze = app.add_subcommand("analyze", "profile, classify and report");
    analyze->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    analyze->add_option("--out", out_dir, "output directory (default .)");
    analyze->add_option("--format", format, "profile format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run residual and homothety suites");
    verify->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    verify->add_option("--lambda", lambdas, "homothety coefficients (repeatable)");

    CLI::App* catalog = app.add_subcommand("catalog", "list builtin curve families");

    CLI::App* frame = app.add_subcommand("frame", "print the apparatus at one point");
    frame->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    frame->add_option("--at", at_s, "arclength location s")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (catalog->parsed()) {
            std::printf("%-22s %-55s %-25s %s\n", "family", "components", "constraint",
                        "default domain");
            for (const auto& f : builtin_catalog())
                std::printf("%-22s %-55s %-25s [%g, %g]\n", f.name.c_str(),
                            f.components.c_str(),
                            f.constraint.empty() ? "-" : f.constraint.c_str(), f.t_min,
                            f.t_max);
            return 0;
        }

        const CurveSpecDocument spec = load_curve_spec(spec_path);
        const Tolerances tols = effective_tolerances(spec, cli_tols);

        if (analyze->parsed()) {
            const ProfileFormat fmt =
                format == "json" ? ProfileFormat::Json : ProfileFormat::Csv;
            const AnalysisReport rep = run_analyze(spec, out_dir, fmt, tols);
            std::printf("curve  : %s\n", rep.curve_name.c_str());
            std::printf("char   : %s, case %s, length %.10f\n",
                        to_string(rep.tangent_character), to_string(rep.frame_case),
                        rep.length);
            std::printf("samples: %zu", rep.profile.rows.size());
            if (!rep.dropped.empty())
                std::printf(" (%zu dropped to degeneracy)", rep.dropped.size());
            std::printf("\nverdicts:");
            if (rep.classification->verdicts.empty()) std::printf(" None");
            for (const Verdict v : rep.classification->verdicts)
                std::printf(" %s", to_string(v));
            std::printf("\nwrote %s/{profile.%s, frame.csv, report.json}\n",
                        out_dir.c_str(), format.c_str());
        } else if (verify->parsed()) {
            if (lambdas.empty()) lambdas = {2.0};
            const AnalysisReport rep = run_verify(spec, lambdas, tols);
            print_verify(rep, tols);
        } else if (frame->parsed()) {
            const UnitSpeedCurve curve =
                reparametrize_unit_speed(curve_from_spec(spec), tols);
            print_apparatus(equiform_apparatus(curve, at_s, tols));
        }
        return 0;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ComputeError& e) {
        std::fprintf(stderr, "compute error: %s\n", e.what());
        return 2;
    }
}

}  // namespace mink
