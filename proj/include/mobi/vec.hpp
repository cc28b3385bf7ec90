#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mobi {

/// Runtime value type for carrier elements: a scalar is a 1-vector, a pair a
/// 2-vector, and so on. Instances fix the arity.
using Vec = std::vector<double>;

inline double dist_euclid(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(double c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(-1.0, a); }

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

inline std::string to_string(const Vec& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", a[i]);
        s += buf;
    }
    s += "]";
    return s;
}

/// Deterministic uniform sampler over an axis-aligned box. Every sampler in
/// the library goes through mt19937_64 seeded explicitly, so a (seed, count)
/// pair always reproduces the same draws.
class BoxSampler {
public:
    BoxSampler(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    std::vector<Vec> operator()(std::uint64_t seed, std::size_t count) const {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<Vec> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            Vec v(lo_.size());
            for (std::size_t i = 0; i < lo_.size(); ++i)
                v[i] = lo_[i] + (hi_[i] - lo_[i]) * u(rng);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    Vec lo_, hi_;
};

} // namespace mobi
