#include "mink/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mink/numerics.hpp"

namespace mink {

// ---------------------------------------------------------------------------
// CurveSource
// ---------------------------------------------------------------------------

namespace {

// Divided-difference interpolation through a 6-point window; returns the
// value and first five derivatives of the interpolant at t.
std::array<double, 6> quintic_window_derivs(const double* ts, const double* xs,
                                            double t) {
    constexpr int N = 6;
    // Newton divided differences
    double coef[N];
    for (int i = 0; i < N; ++i) coef[i] = xs[i];
    for (int k = 1; k < N; ++k)
        for (int i = N - 1; i >= k; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (ts[i] - ts[i - k]);

    // Evaluate p, p', ..., p^(5) by repeated Horner on the Newton form
    std::array<double, 6> d{};
    d[0] = coef[N - 1];
    for (int i = N - 2; i >= 0; --i) {
        const double dt = t - ts[i];
        for (int k = 5; k >= 1; --k) d[k] = d[k] * dt + d[k - 1];
        d[0] = d[0] * dt + coef[i];
    }
    double fact = 1.0;
    for (int k = 2; k <= 5; ++k) {
        fact *= k;
        d[k] *= fact;
    }
    return d;
}

}  // namespace

Vec4 CurveSource::eval(double t, int order) const {
    return jet(t, order)[static_cast<std::size_t>(order)];
}

std::vector<Vec4> CurveSource::jet(double t, int max_order) const {
    if (max_order < 0 || max_order > 5)
        throw DomainError("derivative order must be in [0, 5]");
    if (t < t_min_ - 1e-12 || t > t_max_ + 1e-12)
        throw DomainError("parameter outside curve domain");

    std::vector<Vec4> out(static_cast<std::size_t>(max_order) + 1);
    if (kind_ == Kind::SampledData) {
        const auto& ts = *sample_t_;
        const auto& xs = *sample_x_;
        // window of 6 samples centered on t
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        long i = it - ts.begin();
        long lo = std::clamp<long>(i - 3, 0, static_cast<long>(ts.size()) - 6);
        const double* tw = ts.data() + lo;
        std::array<std::array<double, 6>, 4> comp{};
        for (int c = 0; c < 4; ++c) {
            double vals[6];
            for (int k = 0; k < 6; ++k) {
                const Vec4& p = xs[static_cast<std::size_t>(lo + k)];
                const double raw = (c == 0 ? p.x1 : c == 1 ? p.x2 : c == 2 ? p.x3 : p.x4);
                vals[k] = sample_scale_ * raw;
            }
            comp[static_cast<std::size_t>(c)] = quintic_window_derivs(tw, vals, t);
        }
        for (int k = 0; k <= max_order; ++k)
            out[static_cast<std::size_t>(k)] = {comp[0][static_cast<std::size_t>(k)],
                                                comp[1][static_cast<std::size_t>(k)],
                                                comp[2][static_cast<std::size_t>(k)],
                                                comp[3][static_cast<std::size_t>(k)]};
        return out;
    }

    for (int k = 0; k <= max_order; ++k) {
        const auto& row = trees_;
        Vec4 v{mink::eval(row[0][static_cast<std::size_t>(k)], t),
               mink::eval(row[1][static_cast<std::size_t>(k)], t),
               mink::eval(row[2][static_cast<std::size_t>(k)], t),
               mink::eval(row[3][static_cast<std::size_t>(k)], t)};
        if (!all_finite(v))
            throw DomainError("curve derivative is not finite at t=" + std::to_string(t));
        out[static_cast<std::size_t>(k)] = v;
    }
    return out;
}

CurveSource CurveSource::with_domain(double t_min, double t_max) const {
    if (!(t_min < t_max)) throw DomainError("empty curve domain");
    CurveSource c = *this;
    if (kind_ == Kind::SampledData) {
        if (t_min < sample_t_->front() || t_max > sample_t_->back())
            throw DomainError("domain exceeds sampled data range");
    }
    c.t_min_ = t_min;
    c.t_max_ = t_max;
    return c;
}

CurveSource CurveSource::scaled(double lambda) const {
    if (lambda == 0.0) throw ZeroScale("homothety coefficient must be nonzero");
    CurveSource c = *this;
    if (kind_ == Kind::SampledData) {
        c.sample_scale_ = sample_scale_ * lambda;
        return c;
    }
    const ExprPtr factor = make_constant(lambda);
    for (auto& comp : c.trees_)
        for (auto& tree : comp)
            tree = simplify(make_binary(ExprAst::Op::Mul, factor, tree));
    return c;
}

CurveSource CurveSource::from_expressions(const std::string& name,
                                          const std::array<std::string, 4>& components,
                                          double t_min, double t_max) {
    if (!(t_min < t_max)) throw DomainError("empty curve domain");
    CurveSource c;
    c.kind_ = Kind::SymbolicExpr;
    c.name_ = name;
    c.t_min_ = t_min;
    c.t_max_ = t_max;
    for (int i = 0; i < 4; ++i) {
        ExprPtr tree = simplify(parse_expression(components[static_cast<std::size_t>(i)]));
        for (int k = 0; k < 6; ++k) {
            c.trees_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = tree;
            tree = simplify(differentiate(tree));
        }
    }
    return c;
}

CurveSource CurveSource::from_samples(const std::string& name, std::vector<double> ts,
                                      std::vector<Vec4> points) {
    if (ts.size() != points.size())
        throw SpecValidationError("samples", "t and point counts differ");
    if (ts.size() < 11)
        throw SpecValidationError("samples", "need at least 11 sample points");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] > ts[i - 1]))
            throw SpecValidationError("samples",
                                      "parameter samples must be strictly increasing");
    for (const Vec4& p : points)
        if (!all_finite(p))
            throw SpecValidationError("samples", "sample points must be finite");

    CurveSource c;
    c.kind_ = Kind::SampledData;
    c.name_ = name;
    c.t_min_ = ts.front();
    c.t_max_ = ts.back();
    c.sample_t_ = std::make_shared<const std::vector<double>>(std::move(ts));
    c.sample_x_ = std::make_shared<const std::vector<Vec4>>(std::move(points));
    return c;
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

const std::vector<BuiltinFamilyInfo>& builtin_catalog() {
    static const std::vector<BuiltinFamilyInfo> catalog = {
        {"spacelike_w", "(a sinh(m t), a cosh(m t), b cos(n t), b sin(n t))",
         "b^2 n^2 - a^2 m^2 = 1", 0.0, 2.0},
        {"timelike_w", "(a sinh(m t), a cosh(m t), b cos(n t), b sin(n t))",
         "a^2 m^2 - b^2 n^2 = 1", 0.0, 2.0},
        {"hyperplanar_spacelike", "(sinh t, cosh t, sqrt(2) t, 0)", "", 0.0, 2.0},
        {"planar_circle", "(0, cos t, sin t, 0)", "", 0.0, 6.283185307179586},
        {"planar_timelike", "(sinh t, cosh t, 0, 0)", "", 0.0, 2.0},
        {"nonhelix_control", "(t^2/2, t, cos t, sin t)", "", 0.25, 1.3},
    };
    return catalog;
}

CurveSource builtin_family(const std::string& name,
                           const std::map<std::string, double>& params) {
    const BuiltinFamilyInfo* info = nullptr;
    for (const auto& f : builtin_catalog())
        if (f.name == name) info = &f;
    if (!info) throw UnknownFamily("unknown builtin family '" + name + "'");

    const bool is_w = (name == "spacelike_w" || name == "timelike_w");
    if (!is_w && !params.empty())
        throw BadParams("family '" + name + "' takes no parameters");

    CurveSource c;
    if (is_w) {
        std::map<std::string, double> p = params;
        auto take = [&p, &name](const char* key, double fallback) {
            auto it = p.find(key);
            if (it == p.end()) return fallback;
            const double v = it->second;
            p.erase(it);
            if (!std::isfinite(v) || v == 0.0)
                throw BadParams("family '" + name + "': parameter '" + key +
                                "' must be finite and nonzero");
            return v;
        };
        const bool spacelike = (name == "spacelike_w");
        const double a = take("a", spacelike ? 1.0 : std::sqrt(2.0));
        const double m = take("m", 1.0);
        const double b = take("b", spacelike ? std::sqrt(2.0) : 1.0);
        const double n = take("n", 1.0);
        if (!p.empty())
            throw BadParams("family '" + name + "': unknown parameter '" +
                            p.begin()->first + "'");
        const double constraint =
            spacelike ? b * b * n * n - a * a * m * m : a * a * m * m - b * b * n * n;
        if (std::fabs(constraint - 1.0) > 1e-8)
            throw BadParams("family '" + name + "': unit-speed constraint " +
                            info->constraint + " violated (got " + num(constraint) + ")");
        c = CurveSource::from_expressions(
            name,
            {num(a) + "*sinh(" + num(m) + "*t)", num(a) + "*cosh(" + num(m) + "*t)",
             num(b) + "*cos(" + num(n) + "*t)", num(b) + "*sin(" + num(n) + "*t)"},
            info->t_min, info->t_max);
    } else if (name == "hyperplanar_spacelike") {
        c = CurveSource::from_expressions(name, {"sinh(t)", "cosh(t)", "sqrt(2)*t", "0"},
                                          info->t_min, info->t_max);
    } else if (name == "planar_circle") {
        c = CurveSource::from_expressions(name, {"0", "cos(t)", "sin(t)", "0"},
                                          info->t_min, info->t_max);
    } else if (name == "planar_timelike") {
        c = CurveSource::from_expressions(name, {"sinh(t)", "cosh(t)", "0", "0"},
                                          info->t_min, info->t_max);
    } else {  // nonhelix_control
        c = CurveSource::from_expressions(name, {"t^2/2", "t", "cos(t)", "sin(t)"},
                                          info->t_min, info->t_max);
    }
    c.kind_ = CurveSource::Kind::BuiltinFamily;
    return c;
}

CurveSource load_sampled_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open sample file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw SpecValidationError("samples", "empty sample file");
    // tolerate surrounding whitespace and a BOM/CR in the header
    std::string header;
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch)) &&
            static_cast<unsigned char>(ch) < 0x80)
            header += ch;
    if (header != "t,x1,x2,x3,x4")
        throw SpecValidationError("samples", "expected header 't,x1,x2,x3,x4'");

    std::vector<double> ts;
    std::vector<Vec4> xs;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream row(line);
        double v[5];
        char comma;
        row >> v[0];
        for (int i = 1; i < 5; ++i) row >> comma >> v[i];
        if (!row)
            throw SpecValidationError("samples",
                                      "malformed row at line " + std::to_string(lineno));
        ts.push_back(v[0]);
        xs.push_back({v[1], v[2], v[3], v[4]});
    }
    return CurveSource::from_samples(path, std::move(ts), std::move(xs));
}

// ---------------------------------------------------------------------------
// Arclength and reparametrization
// ---------------------------------------------------------------------------

namespace {

double speed_at(const CurveSource& curve, double t, double eps_null) {
    const Vec4 d1 = curve.eval(t, 1);
    const double v = pseudo_norm(d1);
    if (v < eps_null)
        throw LightlikeTangent("tangent is lightlike at t=" + std::to_string(t));
    return v;
}

}  // namespace

double arclength(const CurveSource& curve, double t0, double t1, const Tolerances& tols) {
    if (t0 < curve.t_min() - 1e-12 || t1 > curve.t_max() + 1e-12 || t1 < t0)
        throw DomainError("arclength bounds outside curve domain");
    if (t0 == t1) return 0.0;
    return integrate([&](double u) { return speed_at(curve, u, tols.eps_null); }, t0, t1,
                     tols.quad_tol);
}

UnitSpeedCurve::UnitSpeedCurve(CurveSource src, Tolerances tols)
    : source_(std::move(src)), tols_(tols) {
    // causal scan: character must be constant and never lightlike
    constexpr int kScan = 512;
    int n_space = 0, n_time = 0;
    for (int i = 0; i <= kScan; ++i) {
        const double t = source_.t_min() +
                         (source_.t_max() - source_.t_min()) * i / static_cast<double>(kScan);
        const Vec4 d1 = source_.eval(t, 1);
        const CausalCharacter cc = causal_character(d1, tols_.eps_null);
        if (cc.kind == Causality::Lightlike)
            throw LightlikeTangent("tangent is lightlike at t=" + std::to_string(t));
        (cc.kind == Causality::Spacelike ? n_space : n_time) += 1;
    }
    if (n_space > 0 && n_time > 0)
        throw MixedCausality("tangent changes causal character across the domain");
    character_ = n_space > 0 ? Causality::Spacelike : Causality::Timelike;

    // monotone arclength table for inversion, built from the same per-cell
    // panels the inverse map uses so its brackets are exact
    constexpr int kGrid = 256;
    grid_t_.resize(kGrid + 1);
    grid_s_.resize(kGrid + 1);
    grid_t_[0] = source_.t_min();
    grid_s_[0] = 0.0;
    for (int i = 1; i <= kGrid; ++i) {
        const double t = source_.t_min() +
                         (source_.t_max() - source_.t_min()) * i / static_cast<double>(kGrid);
        grid_t_[static_cast<std::size_t>(i)] = t;
        grid_s_[static_cast<std::size_t>(i)] =
            grid_s_[static_cast<std::size_t>(i - 1)] +
            cell_arc(grid_t_[static_cast<std::size_t>(i - 1)], t);
    }
    length_ = grid_s_.back();
}

UnitSpeedCurve reparametrize_unit_speed(const CurveSource& curve, const Tolerances& tols) {
    return UnitSpeedCurve(curve, tols);
}

double UnitSpeedCurve::speed(double t) const {
    return speed_at(source_, t, tols_.eps_null);
}

// within-cell arclength: one Gauss-Legendre panel on a short interval is
// exact to roundoff for the smooth speeds in scope
double UnitSpeedCurve::cell_arc(double t0, double t1) const {
    return integrate_panel([&](double u) { return speed(u); }, t0, t1);
}

double UnitSpeedCurve::s_of_t(double t) const {
    if (t < source_.t_min() - 1e-12 || t > source_.t_max() + 1e-12)
        throw DomainError("parameter outside curve domain");
    t = std::clamp(t, source_.t_min(), source_.t_max());
    const auto it = std::upper_bound(grid_t_.begin(), grid_t_.end(), t);
    const std::size_t i = static_cast<std::size_t>(
        std::clamp<long>(it - grid_t_.begin() - 1, 0, static_cast<long>(grid_t_.size()) - 1));
    return grid_s_[i] + cell_arc(grid_t_[i], t);
}

double UnitSpeedCurve::t_of_s(double s) const {
    if (s < -1e-9 || s > length_ + 1e-9)
        throw DomainError("arclength outside [0, L]");
    s = std::clamp(s, 0.0, length_);
    // bracket from the table, then monotone Newton on the local remainder
    const auto it = std::upper_bound(grid_s_.begin(), grid_s_.end(), s);
    const std::size_t i = static_cast<std::size_t>(
        std::clamp<long>(it - grid_s_.begin() - 1, 0, static_cast<long>(grid_s_.size()) - 2));
    const double t_lo = grid_t_[i], t_hi = grid_t_[i + 1];
    const double s_lo = grid_s_[i];
    if (s == s_lo) return t_lo;
    return solve_monotone([&](double t) { return s_lo + cell_arc(t_lo, t) - s; },
                          [&](double t) { return speed(t); }, t_lo, t_hi);
}

Vec4 UnitSpeedCurve::position(double s) const { return source_.eval(t_of_s(s), 0); }

std::vector<Vec4> UnitSpeedCurve::derivatives(double s, int max_order) const {
    if (max_order < 1 || max_order > 5)
        throw DomainError("derivative order must be in [1, 5]");

    const double t = t_of_s(s);
    // t-derivatives of the curve, and of the speed via Q = <alpha', alpha'>;
    // order k needs the speed's derivatives only up to order k-1
    const double eps = (character_ == Causality::Spacelike) ? 1.0 : -1.0;
    const std::vector<Vec4> g = source_.jet(t, max_order);
    const double v = std::sqrt(eps * pseudo_dot(g[1], g[1]));
    double v1 = 0, v2 = 0, v3 = 0, v4 = 0;
    if (max_order >= 2) {
        const double q1 = 2.0 * pseudo_dot(g[2], g[1]);
        v1 = eps * q1 / (2.0 * v);
    }
    if (max_order >= 3) {
        const double q2 = 2.0 * (pseudo_dot(g[3], g[1]) + pseudo_dot(g[2], g[2]));
        v2 = (eps * q2 - 2.0 * v1 * v1) / (2.0 * v);
    }
    if (max_order >= 4) {
        const double q3 =
            2.0 * (pseudo_dot(g[4], g[1]) + 3.0 * pseudo_dot(g[3], g[2]));
        v3 = (eps * q3 - 6.0 * v1 * v2) / (2.0 * v);
    }
    if (max_order >= 5) {
        const double q4 = 2.0 * (pseudo_dot(g[5], g[1]) + 4.0 * pseudo_dot(g[4], g[2]) +
                                 3.0 * pseudo_dot(g[3], g[3]));
        v4 = (eps * q4 - 6.0 * v2 * v2 - 8.0 * v1 * v3) / (2.0 * v);
    }

    // derivatives of the inverse map t(s)
    const double iv = 1.0 / v;
    const double t1 = iv;
    const double t2 = -v1 * iv * iv * iv;
    const double t3 = (-v2 + 3.0 * v1 * v1 * iv) * iv * iv * iv * iv;
    const double t4 =
        (-v3 + 10.0 * v1 * v2 * iv - 15.0 * v1 * v1 * v1 * iv * iv) * std::pow(iv, 5);
    const double t5 = (-v4 + (15.0 * v1 * v3 + 10.0 * v2 * v2) * iv -
                       105.0 * v1 * v1 * v2 * iv * iv +
                       105.0 * v1 * v1 * v1 * v1 * iv * iv * iv) *
                      std::pow(iv, 6);

    // Faa di Bruno through t(s)
    std::vector<Vec4> out(static_cast<std::size_t>(max_order));
    out[0] = t1 * g[1];
    if (max_order >= 2) out[1] = (t1 * t1) * g[2] + t2 * g[1];
    if (max_order >= 3)
        out[2] = (t1 * t1 * t1) * g[3] + (3.0 * t1 * t2) * g[2] + t3 * g[1];
    if (max_order >= 4)
        out[3] = (t1 * t1 * t1 * t1) * g[4] + (6.0 * t1 * t1 * t2) * g[3] +
                 (3.0 * t2 * t2 + 4.0 * t1 * t3) * g[2] + t4 * g[1];
    if (max_order >= 5)
        out[4] = std::pow(t1, 5) * g[5] + (10.0 * t1 * t1 * t1 * t2) * g[4] +
                 (15.0 * t1 * t2 * t2 + 10.0 * t1 * t1 * t3) * g[3] +
                 (10.0 * t2 * t3 + 5.0 * t1 * t4) * g[2] + t5 * g[1];

    for (const Vec4& d : out)
        if (!all_finite(d))
            throw DomainError("arclength derivative is not finite at s=" + std::to_string(s));
    return out;
}

}  // namespace mink
