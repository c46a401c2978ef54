#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zg {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown for malformed input (parse errors, invalid adjacency structure).
// Domain verdicts such as "not a zonohedron graph" are reported as values,
// never as exceptions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

struct Vec3 {
    Rat x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Vec3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

inline Vec3 operator*(const Rat& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Vec3& v) { return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0; }

inline bool collinear(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

// Strict ordering usable as a map comparator.
struct Vec3Less {
    bool operator()(const Vec3& a, const Vec3& b) const {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        c = cmp(a.y, b.y);
        if (c != 0) return c < 0;
        return cmp(a.z, b.z) < 0;
    }
};

// Shortest integer vector with the same direction: clears denominators, then
// divides out the content. Zero maps to zero.
inline Vec3 primitive(const Vec3& v) {
    if (is_zero(v)) return Vec3{};
    Int m = lcm(lcm(v.x.get_den(), v.y.get_den()), v.z.get_den());
    Int ix = v.x.get_num() * (m / v.x.get_den());
    Int iy = v.y.get_num() * (m / v.y.get_den());
    Int iz = v.z.get_num() * (m / v.z.get_den());
    Int g = gcd(gcd(abs(ix), abs(iy)), abs(iz));
    return {Rat(ix / g), Rat(iy / g), Rat(iz / g)};
}

inline std::string to_string(const Vec3& v) {
    return "(" + v.x.get_str() + ", " + v.y.get_str() + ", " + v.z.get_str() + ")";
}

}  // namespace zg
