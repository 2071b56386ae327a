#pragma once

#include <array>
#include <cmath>

namespace holo {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Row-major 3x3 rotation/linear map.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }
    static Mat3 from_columns(const Vec3& cx, const Vec3& cy, const Vec3& cz) {
        return Mat3{{cx.x, cy.x, cz.x, cx.y, cy.y, cz.y, cx.z, cy.z, cz.z}};
    }
    Vec3 col(int i) const { return {m[i], m[3 + i], m[6 + i]}; }

    // Frobenius distance of R^T R from identity.
    double orthonormality_error() const {
        Mat3 t = transposed();
        double err = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += t.m[i * 3 + k] * m[k * 3 + j];
                double target = (i == j) ? 1.0 : 0.0;
                err += (s - target) * (s - target);
            }
        }
        return std::sqrt(err);
    }
};

struct Aabb {
    Vec3 min, max;

    // Ray/box slab intersection; returns false on miss, else [t0,t1] overlap.
    bool intersect(const Vec3& o, const Vec3& d, double& t0, double& t1) const {
        t0 = -1e300;
        t1 = 1e300;
        const double omin[3] = {min.x, min.y, min.z};
        const double omax[3] = {max.x, max.y, max.z};
        const double oo[3] = {o.x, o.y, o.z};
        const double dd[3] = {d.x, d.y, d.z};
        for (int a = 0; a < 3; ++a) {
            if (dd[a] == 0.0) {
                if (oo[a] < omin[a] || oo[a] > omax[a]) return false;
                continue;
            }
            double inv = 1.0 / dd[a];
            double ta = (omin[a] - oo[a]) * inv;
            double tb = (omax[a] - oo[a]) * inv;
            if (ta > tb) std::swap(ta, tb);
            if (ta > t0) t0 = ta;
            if (tb < t1) t1 = tb;
            if (t0 > t1) return false;
        }
        return true;
    }
};

}  // namespace holo
