#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambiforge {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

using cplx = std::complex<double>;

/// Base error for anything that goes wrong inside the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user input: bad arguments, malformed files, missing artifacts.
struct UserError : Error {
    explicit UserError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_user(const std::string& msg) { throw UserError(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        require(n > 0.0, "Vec3::normalized: zero vector");
        return (*this) * (1.0 / n);
    }
};

/// Multichannel audio, channel-major storage.
struct Audio {
    int sample_rate = 0;
    int channels = 0;
    std::vector<double> samples;  // [channel][frame]

    Audio() = default;
    Audio(int ch, int num_frames, int fs)
        : sample_rate(fs), channels(ch),
          samples(static_cast<size_t>(ch) * num_frames, 0.0) {}

    int frames() const {
        return channels == 0 ? 0 : static_cast<int>(samples.size()) / channels;
    }
    double* channel(int c) { return samples.data() + static_cast<size_t>(c) * frames(); }
    const double* channel(int c) const {
        return samples.data() + static_cast<size_t>(c) * frames();
    }
    double& at(int c, int n) { return samples[static_cast<size_t>(c) * frames() + n]; }
    double at(int c, int n) const { return samples[static_cast<size_t>(c) * frames() + n]; }
};

inline bool all_finite(const double* x, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (!std::isfinite(x[i])) return false;
    return true;
}

inline bool all_finite(const std::vector<double>& x) { return all_finite(x.data(), x.size()); }

}  // namespace ambiforge
