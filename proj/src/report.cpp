#include "mink/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace mink {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Spec documents
// ---------------------------------------------------------------------------

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number())
        throw SpecValidationError(field, "expected a number");
    return j.get<double>();
}

}  // namespace

CurveSpecDocument load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open spec file '" + path + "'");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecValidationError("(document)", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecValidationError("(document)", "expected an object");

    CurveSpecDocument spec;
    spec.name = doc.value("name", std::string{});

    const std::string kind = doc.value("kind", std::string{});
    if (kind == "expression")
        spec.kind = CurveSpecDocument::Kind::Expression;
    else if (kind == "builtin")
        spec.kind = CurveSpecDocument::Kind::Builtin;
    else if (kind == "samples")
        spec.kind = CurveSpecDocument::Kind::Samples;
    else
        throw SpecValidationError("kind",
                                  "must be one of 'expression', 'builtin', 'samples'");

    const bool has_components = doc.contains("components");
    const bool has_family = doc.contains("family");
    const bool has_data = doc.contains("data");
    if ((spec.kind == CurveSpecDocument::Kind::Expression && (has_family || has_data)) ||
        (spec.kind == CurveSpecDocument::Kind::Builtin && (has_components || has_data)) ||
        (spec.kind == CurveSpecDocument::Kind::Samples && (has_components || has_family)))
        throw SpecValidationError("kind", "exactly one kind payload may be present");

    switch (spec.kind) {
        case CurveSpecDocument::Kind::Expression: {
            if (!has_components)
                throw SpecValidationError("components", "required for expression kind");
            const json& comps = doc["components"];
            if (!comps.is_array() || comps.size() != 4)
                throw SpecValidationError("components",
                                          "expected an array of 4 expression strings");
            for (std::size_t i = 0; i < 4; ++i) {
                if (!comps[i].is_string())
                    throw SpecValidationError("components[" + std::to_string(i) + "]",
                                              "expected a string");
                spec.components[i] = comps[i].get<std::string>();
                try {
                    parse_expression(spec.components[i]);
                } catch (const ParseError& e) {
                    throw ParseError(e.position(), "component " + std::to_string(i + 1) +
                                                       ": " + e.what());
                }
            }
            if (!doc.contains("domain"))
                throw SpecValidationError("domain", "required for expression kind");
            break;
        }
        case CurveSpecDocument::Kind::Builtin: {
            if (!has_family)
                throw SpecValidationError("family", "required for builtin kind");
            spec.family = doc["family"].get<std::string>();
            if (doc.contains("params")) {
                for (const auto& [k, v] : doc["params"].items())
                    spec.params[k] = require_number(v, "params." + k);
            }
            // bare numeric fields are also accepted as family parameters
            for (const char* key : {"a", "m", "b", "n"})
                if (doc.contains(key)) spec.params[key] = require_number(doc[key], key);
            break;
        }
        case CurveSpecDocument::Kind::Samples: {
            if (!has_data)
                throw SpecValidationError("data", "required for samples kind");
            spec.data_path = doc["data"].get<std::string>();
            // resolve relative to the spec file
            const std::filesystem::path p(spec.data_path);
            if (p.is_relative())
                spec.data_path =
                    (std::filesystem::path(path).parent_path() / p).string();
            break;
        }
    }

    if (doc.contains("domain")) {
        const json& d = doc["domain"];
        if (!d.is_array() || d.size() != 2)
            throw SpecValidationError("domain", "expected [t_min, t_max]");
        spec.t_min = require_number(d[0], "domain[0]");
        spec.t_max = require_number(d[1], "domain[1]");
        if (!(*spec.t_min < *spec.t_max))
            throw SpecValidationError("domain", "t_min must be less than t_max");
    }

    if (doc.contains("samples")) {
        if (!doc["samples"].is_number_integer())
            throw SpecValidationError("samples", "expected an integer");
        spec.samples = doc["samples"].get<int>();
    }
    if (spec.samples < 20)
        throw SpecValidationError("samples", "need at least 20 samples");

    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        if (!t.is_object()) throw SpecValidationError("tolerances", "expected an object");
        for (const auto& [k, v] : t.items()) {
            const double val = require_number(v, "tolerances." + k);
            if (k == "tol")
                spec.overrides.tol = val;
            else if (k == "eps_null")
                spec.overrides.eps_null = val;
            else if (k == "eps_deg")
                spec.overrides.eps_deg = val;
            else if (k == "fd_step")
                spec.overrides.fd_step = val;
            else
                throw SpecValidationError("tolerances." + k, "unknown tolerance name");
        }
    }
    return spec;
}

CurveSource curve_from_spec(const CurveSpecDocument& spec) {
    switch (spec.kind) {
        case CurveSpecDocument::Kind::Expression:
            return CurveSource::from_expressions(
                spec.name.empty() ? "expression" : spec.name, spec.components,
                *spec.t_min, *spec.t_max);
        case CurveSpecDocument::Kind::Builtin: {
            CurveSource c = builtin_family(spec.family, spec.params);
            if (spec.t_min && spec.t_max) c = c.with_domain(*spec.t_min, *spec.t_max);
            return c;
        }
        case CurveSpecDocument::Kind::Samples: {
            CurveSource c = load_sampled_csv(spec.data_path);
            if (spec.t_min && spec.t_max) c = c.with_domain(*spec.t_min, *spec.t_max);
            return c;
        }
    }
    throw SpecValidationError("kind", "corrupt spec document");
}

Tolerances effective_tolerances(const CurveSpecDocument& spec,
                                const CurveSpecDocument::Overrides& cli) {
    Tolerances t;
    if (spec.overrides.tol) t.tol = *spec.overrides.tol;
    if (spec.overrides.eps_null) t.eps_null = *spec.overrides.eps_null;
    if (spec.overrides.eps_deg) t.eps_deg = *spec.overrides.eps_deg;
    if (spec.overrides.fd_step) t.fd_step = *spec.overrides.fd_step;
    if (cli.tol) t.tol = *cli.tol;
    if (cli.eps_null) t.eps_null = *cli.eps_null;
    if (cli.eps_deg) t.eps_deg = *cli.eps_deg;
    if (cli.fd_step) t.fd_step = *cli.fd_step;
    return t;
}

// ---------------------------------------------------------------------------
// Report assembly and serialization
// ---------------------------------------------------------------------------

namespace {

ordered_json profile_row_json(const ProfileRow& r) {
    ordered_json j;
    j["s"] = r.s;
    j["sigma"] = r.sigma;
    j["k1"] = r.k1;
    j["k2"] = r.k2;
    j["k3"] = r.k3;
    j["EK1"] = r.ek1;
    j["EK2"] = r.ek2;
    j["EK3"] = r.ek3;
    j["case"] = r.torsion_degenerate ? "PlanarDegenerate" : to_string(r.frame_case);
    return j;
}

ordered_json classification_json(const ClassificationReport& c) {
    ordered_json j;
    std::vector<std::string> verdicts;
    for (const Verdict v : c.verdicts) verdicts.emplace_back(to_string(v));
    if (verdicts.empty()) verdicts.emplace_back("None");
    j["verdicts"] = verdicts;
    j["tol"] = c.tol_used;
    j["general_helix"] = {{"verdict", c.helix.is_helix},
                          {"K2_dev", c.helix.k2_dev},
                          {"K3_dev", c.helix.k3_dev},
                          {"K2_mean", c.helix.k2_mean},
                          {"K3_mean", c.helix.k3_mean}};
    j["w_curve"] = {{"verdict", c.w_curve.is_w_curve},
                    {"K1_max_abs", c.w_curve.k1_max_abs}};
    j["planar_2d"] = {{"verdict", c.planar.is_planar},
                      {"K2_max_abs", c.planar.k2_max_abs},
                      {"all_torsion_degenerate", c.planar.all_torsion_degenerate},
                      {"rank_gap_ratio", c.planar.rank_gap_ratio}};
    if (c.hyperplanar) {
        const HyperplanarReport& h = *c.hyperplanar;
        j["hyperplanar"] = {
            {"verdict", h.is_hyperplanar},
            {"curvature_verdict", h.curvature_verdict},
            {"geometric_verdict", h.geometric_verdict},
            {"K3_max_abs", h.k3_max_abs},
            {"K1_max_abs", h.k1_max_abs},
            {"fit_residual", h.fit.max_residual},
            {"fit_diameter", h.fit.diameter},
            {"normal", {h.fit.normal.x1, h.fit.normal.x2, h.fit.normal.x3,
                        h.fit.normal.x4}},
            {"normal_character", to_string(h.fit.normal_character.kind)},
            {"indeterminate", h.fit.indeterminate},
        };
    } else {
        j["hyperplanar"] = {{"skipped", c.hyperplanar_skipped_reason}};
    }
    return j;
}

}  // namespace

std::string AnalysisReport::to_json() const {
    ordered_json j;
    j["curve"] = curve_name;
    j["tangent_character"] = mink::to_string(tangent_character);
    j["case"] = mink::to_string(frame_case);
    j["length"] = length;
    j["samples"] = profile.rows.size();
    j["tolerances"] = {{"tol", tolerances.tol},
                       {"eps_null", tolerances.eps_null},
                       {"eps_deg", tolerances.eps_deg},
                       {"fd_step", tolerances.fd_step},
                       {"quad_tol", tolerances.quad_tol}};
    if (!dropped.empty()) {
        ordered_json lost = ordered_json::array();
        for (const auto& d : dropped) lost.push_back({{"s", d.s}, {"reason", d.reason}});
        j["dropped_samples"] = lost;
    }
    if (classification) j["classification"] = classification_json(*classification);
    if (residuals) {
        ordered_json r;
        r["frenet_max"] = residuals->frenet_max;
        r["equiform_max"] = residuals->equiform_max;
        r["helix_identity_max"] = residuals->helix_identity_max;
        if (!residuals->skipped_reason.empty())
            r["skipped"] = residuals->skipped_reason;
        r["helix_identity_matches_verdict"] = residuals->consistent_with_helix_verdict;
        j["residuals"] = r;
    }
    if (!homothety.empty()) {
        ordered_json hs = ordered_json::array();
        for (const auto& h : homothety) {
            hs.push_back({{"lambda", h.lambda},
                          {"max_kappa_dev", h.max_kappa_dev},
                          {"max_rho_dev", h.max_rho_dev},
                          {"max_EK_dev", h.max_ek_dev},
                          {"max_sigma_dev", h.max_sigma_dev}});
        }
        j["homothety"] = hs;
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// run_analyze / run_verify
// ---------------------------------------------------------------------------

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write '" + path.string() + "'");
    out << contents;
}

std::string profile_csv(const CurvatureProfile& p) {
    std::string csv = "s,sigma,k1,k2,k3,EK1,EK2,EK3,case\n";
    for (const auto& r : p.rows) {
        csv += fmt17(r.s) + "," + fmt17(r.sigma) + "," + fmt17(r.k1) + "," +
               fmt17(r.k2) + "," + fmt17(r.k3) + "," + fmt17(r.ek1) + "," +
               fmt17(r.ek2) + "," + fmt17(r.ek3) + ",";
        csv += r.torsion_degenerate ? "PlanarDegenerate" : to_string(r.frame_case);
        csv += "\n";
    }
    return csv;
}

std::string frame_csv(const UnitSpeedCurve& curve, const CurvatureProfile& p,
                      const Tolerances& tols) {
    std::string csv =
        "s,t1,t2,t3,t4,n1,n2,n3,n4,b1_1,b1_2,b1_3,b1_4,b2_1,b2_2,b2_3,b2_4\n";
    for (const auto& r : p.rows) {
        std::array<Vec4, 4> f{};
        if (!r.torsion_degenerate) {
            f = frenet_apparatus(curve, r.s, tols).frame();
        } else {
            const std::vector<Vec4> d = curve.derivatives(r.s, 2);
            f[0] = d[0];
            f[1] = d[1] / pseudo_norm(d[1]);
            // binormals undefined on planar samples; left as zeros
        }
        csv += fmt17(r.s);
        for (const Vec4& v : f)
            csv += "," + fmt17(v.x1) + "," + fmt17(v.x2) + "," + fmt17(v.x3) + "," +
                   fmt17(v.x4);
        csv += "\n";
    }
    return csv;
}

std::vector<double> inner_grid(const UnitSpeedCurve& curve, int n) {
    // margins keep sigma- and s-stencils of the residual suites inside
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    const double lo = 0.05 * curve.length(), hi = 0.95 * curve.length();
    for (int i = 0; i < n; ++i)
        grid.push_back(lo + (hi - lo) * i / static_cast<double>(n - 1));
    return grid;
}

}  // namespace

AnalysisReport run_analyze(const CurveSpecDocument& spec, const std::string& out_dir,
                           ProfileFormat format, const Tolerances& tols) {
    const CurveSource source = curve_from_spec(spec);
    const UnitSpeedCurve curve = reparametrize_unit_speed(source, tols);

    AnalysisReport rep;
    rep.curve_name = source.name();
    rep.tangent_character = curve.tangent_character();
    rep.length = curve.length();
    rep.tolerances = tols;
    rep.profile = build_profile(curve, spec.samples, tols, &rep.dropped);
    rep.frame_case = rep.profile.rows.front().frame_case;
    rep.classification = classify_curve(curve, rep.profile, tols.tol);

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const std::filesystem::path dir(out_dir);
        if (format == ProfileFormat::Csv) {
            write_file(dir / "profile.csv", profile_csv(rep.profile));
        } else {
            ordered_json rows = ordered_json::array();
            for (const auto& r : rep.profile.rows) rows.push_back(profile_row_json(r));
            write_file(dir / "profile.json", rows.dump(2) + "\n");
        }
        write_file(dir / "frame.csv", frame_csv(curve, rep.profile, tols));
        write_file(dir / "report.json", rep.to_json());
    }
    return rep;
}

AnalysisReport run_verify(const CurveSpecDocument& spec,
                          const std::vector<double>& lambdas, const Tolerances& tols) {
    const CurveSource source = curve_from_spec(spec);
    const UnitSpeedCurve curve = reparametrize_unit_speed(source, tols);

    AnalysisReport rep;
    rep.curve_name = source.name();
    rep.tangent_character = curve.tangent_character();
    rep.length = curve.length();
    rep.tolerances = tols;
    rep.profile = build_profile(curve, spec.samples, tols, &rep.dropped);
    rep.frame_case = rep.profile.rows.front().frame_case;
    rep.classification = classify_curve(curve, rep.profile, tols.tol);

    ResidualSummary res;
    const std::vector<double> grid = inner_grid(curve, std::min(spec.samples, 100));
    if (rep.profile.all_torsion_degenerate()) {
        res.skipped_reason = "frame residual suites skipped: curve is planar";
    } else {
        res.frenet_max = 0.0;
        res.equiform_max = 0.0;
        res.helix_identity_max = 0.0;
        const double h_sigma_deriv = tols.fd_step;
        const double h_sigma_identity = 1e-3;
        for (const double s : grid) {
            res.frenet_max =
                std::max(res.frenet_max, frenet_residual(curve, s, tols.fd_step, tols));
            res.equiform_max = std::max(
                res.equiform_max, equiform_frenet_residual(curve, s, h_sigma_deriv, tols));
            res.helix_identity_max = std::max(
                res.helix_identity_max,
                helix_identity_residual(curve, s, h_sigma_identity, tols));
        }
        const bool identity_helix = res.helix_identity_max <= 10.0 * tols.tol;
        res.consistent_with_helix_verdict =
            identity_helix == rep.classification->helix.is_helix;
    }
    rep.residuals = res;

    if (!rep.profile.all_torsion_degenerate())
        for (const double lambda : lambdas)
            rep.homothety.push_back(homothety_check(curve, lambda, grid, tols));
    return rep;
}

}  // namespace mink
