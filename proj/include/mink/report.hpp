#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mink/classify.hpp"

namespace mink {

/// Parsed curve specification document (a JSON file). Exactly one payload
/// is present according to `kind`.
struct CurveSpecDocument {
    enum class Kind { Expression, Builtin, Samples };

    std::string name;
    Kind kind = Kind::Expression;

    std::array<std::string, 4> components{};      // Expression
    std::string family;                           // Builtin
    std::map<std::string, double> params;         // Builtin
    std::string data_path;                        // Samples

    std::optional<double> t_min, t_max;  // required for Expression
    int samples = 100;

    struct Overrides {
        std::optional<double> tol, eps_null, eps_deg, fd_step;
    } overrides;
};

/// Load and validate a spec document. Throws FileError,
/// SpecValidationError (with the offending field), or ParseError from the
/// expression front-end (message names the component index).
CurveSpecDocument load_curve_spec(const std::string& path);

/// Build the curve described by a document (domain defaults applied).
CurveSource curve_from_spec(const CurveSpecDocument& spec);

/// Tolerances after applying document overrides and CLI-level overrides.
Tolerances effective_tolerances(const CurveSpecDocument& spec,
                                const CurveSpecDocument::Overrides& cli = {});

enum class ProfileFormat { Csv, Json };

struct ResidualSummary {
    double frenet_max = -1.0;          // -1 when skipped
    double equiform_max = -1.0;
    double helix_identity_max = -1.0;
    std::string skipped_reason;
    bool consistent_with_helix_verdict = false;
};

struct AnalysisReport {
    std::string curve_name;
    Causality tangent_character = Causality::Spacelike;
    FrameCase frame_case = FrameCase::SpacelikeN_SpacelikeB1;
    double length = 0.0;
    CurvatureProfile profile;
    std::vector<DroppedSample> dropped;
    std::optional<ClassificationReport> classification;
    std::optional<ResidualSummary> residuals;
    std::vector<HomothetyReport> homothety;
    Tolerances tolerances;

    std::string to_json() const;  // pretty-printed, deterministic key order
};

/// Sample the apparatus, classify, and write profile/frame/report files
/// into out_dir (profile.csv or profile.json per `format`, frame.csv,
/// report.json). Deterministic output for a fixed spec and tolerances.
AnalysisReport run_analyze(const CurveSpecDocument& spec, const std::string& out_dir,
                           ProfileFormat format, const Tolerances& tols);

/// Residual suites (Frenet, equiform Frenet, helix identity) over the grid
/// plus a homothety comparison for each lambda.
AnalysisReport run_verify(const CurveSpecDocument& spec,
                          const std::vector<double>& lambdas, const Tolerances& tols);

/// Entry point used by the `equicurve` binary. Exit codes: 0 success,
/// 1 usage/validation error, 2 kernel (mathematical) error.
int cli_main(int argc, const char* const* argv);

}  // namespace mink
