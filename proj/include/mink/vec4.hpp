#pragma once

#include <cmath>
#include <ostream>

#include "mink/errors.hpp"

namespace mink {

/// A point or vector of Minkowski 4-space with signature (-,+,+,+).
struct Vec4 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    Vec4& operator+=(const Vec4& o) noexcept {
        x1 += o.x1; x2 += o.x2; x3 += o.x3; x4 += o.x4;
        return *this;
    }
    Vec4& operator-=(const Vec4& o) noexcept {
        x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; x4 -= o.x4;
        return *this;
    }
    Vec4& operator*=(double a) noexcept {
        x1 *= a; x2 *= a; x3 *= a; x4 *= a;
        return *this;
    }
    Vec4& operator/=(double a) { return *this *= (1.0 / a); }
};

inline Vec4 operator+(Vec4 a, const Vec4& b) noexcept { return a += b; }
inline Vec4 operator-(Vec4 a, const Vec4& b) noexcept { return a -= b; }
inline Vec4 operator-(const Vec4& a) noexcept { return {-a.x1, -a.x2, -a.x3, -a.x4}; }
inline Vec4 operator*(double a, Vec4 v) noexcept { return v *= a; }
inline Vec4 operator*(Vec4 v, double a) noexcept { return v *= a; }
inline Vec4 operator/(Vec4 v, double a) { return v /= a; }

inline bool operator==(const Vec4& a, const Vec4& b) noexcept {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
}

inline std::ostream& operator<<(std::ostream& os, const Vec4& v) {
    return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ", " << v.x4 << ')';
}

inline constexpr Vec4 basis_e1{1, 0, 0, 0};
inline constexpr Vec4 basis_e2{0, 1, 0, 0};
inline constexpr Vec4 basis_e3{0, 0, 1, 0};
inline constexpr Vec4 basis_e4{0, 0, 0, 1};

/// Pseudo scalar product <x,y> = -x1*y1 + x2*y2 + x3*y3 + x4*y4.
inline double pseudo_dot(const Vec4& x, const Vec4& y) noexcept {
    return -x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3 + x.x4 * y.x4;
}

/// Pseudo norm sqrt(|<x,x>|); zero for lightlike vectors.
inline double pseudo_norm(const Vec4& x) noexcept {
    return std::sqrt(std::fabs(pseudo_dot(x, x)));
}

/// Euclidean norm, used for relative-tolerance decisions only.
inline double euclid_norm(const Vec4& x) noexcept {
    return std::sqrt(x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3 + x.x4 * x.x4);
}

inline bool all_finite(const Vec4& x) noexcept {
    return std::isfinite(x.x1) && std::isfinite(x.x2) && std::isfinite(x.x3) &&
           std::isfinite(x.x4);
}

enum class Causality { Spacelike, Timelike, Lightlike };

inline const char* to_string(Causality c) noexcept {
    switch (c) {
        case Causality::Spacelike: return "Spacelike";
        case Causality::Timelike: return "Timelike";
        case Causality::Lightlike: return "Lightlike";
    }
    return "Unknown";
}

/// Causal classification together with the raw quadratic form value.
struct CausalCharacter {
    Causality kind;
    double quadratic_form;  // <x,x>
};

inline CausalCharacter causal_character(const Vec4& x, double eps_null) noexcept {
    const double q = pseudo_dot(x, x);
    if (q > eps_null) return {Causality::Spacelike, q};
    if (q < -eps_null) return {Causality::Timelike, q};
    return {Causality::Lightlike, q};
}

/// Generalized cross product of three vectors: the formal determinant with
/// first row (-e1, e2, e3, e4). The result is pseudo-orthogonal to all three
/// arguments, and <x1 x x2 x x3, y> equals the ordinary determinant with
/// rows (y, x1, x2, x3).
///
/// The 3x3 minors are expanded through the 2x2 minors of (a, b), which makes
/// the sign flip under swapping the first two arguments bit-exact.
inline Vec4 triple_cross(const Vec4& a, const Vec4& b, const Vec4& c) noexcept {
    const double q12 = a.x1 * b.x2 - a.x2 * b.x1;
    const double q13 = a.x1 * b.x3 - a.x3 * b.x1;
    const double q14 = a.x1 * b.x4 - a.x4 * b.x1;
    const double q23 = a.x2 * b.x3 - a.x3 * b.x2;
    const double q24 = a.x2 * b.x4 - a.x4 * b.x2;
    const double q34 = a.x3 * b.x4 - a.x4 * b.x3;

    const double m11 = c.x2 * q34 - c.x3 * q24 + c.x4 * q23;
    const double m12 = c.x1 * q34 - c.x3 * q14 + c.x4 * q13;
    const double m13 = c.x1 * q24 - c.x2 * q14 + c.x4 * q12;
    const double m14 = c.x1 * q23 - c.x2 * q13 + c.x3 * q12;

    return {-m11, -m12, m13, -m14};
}

/// Central scaling x -> lambda * x.
inline Vec4 apply_homothety(const Vec4& x, double lambda) {
    if (lambda == 0.0) throw ZeroScale("homothety coefficient must be nonzero");
    return lambda * x;
}

}  // namespace mink
