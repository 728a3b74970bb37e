#pragma once

#include "tropscatter/numeric.hpp"

#include <array>
#include <compare>
#include <string>

namespace tropscatter {

/// Element of the rank-2 tangent lattice M.
struct Vec2 {
    Int x{0};
    Int y{0};

    Vec2() = default;
    Vec2(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

    bool operator==(const Vec2&) const = default;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Int& c) const { return {x * c, y * c}; }

    bool is_zero() const { return x == 0 && y == 0; }
};

inline bool operator<(const Vec2& a, const Vec2& b)
{
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// det(a b) with a, b as columns; positive iff b is counterclockwise of a.
inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Rotation by +90 degrees; <rot90(v), w> > 0 exactly on the side
/// counterclockwise of v.
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

/// gcd of the components (0 for the zero vector).
inline Int content(const Vec2& v) { return gcd_int(v.x, v.y); }

inline bool is_primitive(const Vec2& v) { return content(v) == 1; }

inline Vec2 primitive_part(const Vec2& v)
{
    Int c = content(v);
    if (c == 0) throw Error("primitive part of the zero vector");
    return {v.x / c, v.y / c};
}

inline std::string to_string(const Vec2& v)
{
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

/// Exact rational point of the plane (positions of spine vertices, endpoints).
struct QVec2 {
    Rational x{0};
    Rational y{0};

    bool operator==(const QVec2&) const = default;

    QVec2 operator+(const QVec2& o) const { return {x + o.x, y + o.y}; }
    QVec2 operator-(const QVec2& o) const { return {x - o.x, y - o.y}; }
    QVec2 operator*(const Rational& c) const { return {x * c, y * c}; }

    bool is_zero() const { return x == 0 && y == 0; }
};

inline QVec2 to_q(const Vec2& v) { return {Rational(v.x), Rational(v.y)}; }

inline QVec2 operator+(const QVec2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }

inline Rational dot(const Vec2& a, const QVec2& b) { return Rational(a.x) * b.x + Rational(a.y) * b.y; }
inline Rational cross(const Vec2& a, const QVec2& b) { return Rational(a.x) * b.y - Rational(a.y) * b.x; }
inline Rational cross(const QVec2& a, const Vec2& b) { return a.x * Rational(b.y) - a.y * Rational(b.x); }

inline std::string to_string(const QVec2& v)
{
    return "(" + v.x.str() + "," + v.y.str() + ")";
}

/// 2x2 integer matrix acting on column vectors.
struct Mat2 {
    // entries a b / c d
    Int a{1}, b{0}, c{0}, d{1};

    bool operator==(const Mat2&) const = default;

    static Mat2 identity() { return {}; }

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    QVec2 apply(const QVec2& v) const
    {
        return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
    }

    Mat2 operator*(const Mat2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Int det() const { return a * d - b * c; }

    /// Inverse of a matrix with det = +-1.
    Mat2 inverse() const
    {
        Int dt = det();
        if (dt != 1 && dt != -1) throw Error("Mat2::inverse: determinant not a unit");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

/// The unique linear map sending (u1, u2) to (v1, v2); requires u1, u2
/// linearly independent with the same determinant as v1, v2 up to exactness
/// of the division (entries must come out integral).
inline Mat2 linear_map_from_images(const Vec2& u1, const Vec2& u2, const Vec2& v1, const Vec2& v2)
{
    Int dt = cross(u1, u2);
    if (dt == 0) throw Error("linear_map_from_images: degenerate source basis");
    // M * [u1 u2] = [v1 v2]  =>  M = [v1 v2] * [u1 u2]^{-1}
    Int a = v1.x * u2.y - v2.x * u1.y;
    Int b = v2.x * u1.x - v1.x * u2.x;
    Int c = v1.y * u2.y - v2.y * u1.y;
    Int d = v2.y * u1.x - v1.y * u2.x;
    if (a % dt != 0 || b % dt != 0 || c % dt != 0 || d % dt != 0)
        throw Error("linear_map_from_images: map is not integral");
    return {a / dt, b / dt, c / dt, d / dt};
}

}  // namespace tropscatter
