#pragma once

#include <vector>

#include "ambiforge/common.hpp"

namespace ambiforge::sphere {

/// Direction on the sphere. Inclination is measured from +z (0 = up).
struct Direction {
    double azimuth = 0.0;      // [0, 2*pi)
    double inclination = 0.0;  // [0, pi]

    Vec3 unit() const {
        double s = std::sin(inclination);
        return {s * std::cos(azimuth), s * std::sin(azimuth), std::cos(inclination)};
    }

    static Direction from_unit(const Vec3& v);
};

struct SphericalGrid {
    std::vector<Direction> directions;
    std::vector<double> weights;  // sum to 4*pi

    size_t size() const { return directions.size(); }
    void validate() const;
};

/// ACN channel indexing: acn = n^2 + n + m.
struct ShIndex {
    int order = 0;   // n >= 0
    int degree = 0;  // m in [-n, n]

    int acn() const { return order * order + order + degree; }
    static ShIndex from_acn(int acn);
};

inline int num_channels(int order) { return (order + 1) * (order + 1); }

/// Real spherical harmonics, orthonormal (N3D) normalization without the
/// Condon-Shortley phase, ACN channel order. Returns a row-major
/// [(N+1)^2 x D] matrix: row acn(n,m), column direction.
std::vector<double> eval_real_sh(int max_order, const std::vector<Direction>& dirs);

/// Near-uniform Fibonacci-spiral point set with equal weights 4*pi/count.
SphericalGrid uniform_grid(int count);

/// Gauss-Legendre x equal-azimuth product grid with rings^2 points. Its
/// weighted sums integrate spherical harmonics up to order rings-1 exactly;
/// used where quadrature must be exact rather than merely near-uniform.
SphericalGrid gauss_grid(int rings);

enum class RadialModel { open, rigid };

/// Frequency response of SH order n for a spherical array of radius r,
/// evaluated on the sphere surface.
///   open : 4*pi * i^n * j_n(kr)
///   rigid: 4*pi * i^n * (j_n(kr) - j_n'(kr)/h_n'(kr) * h_n(kr))
cplx radial_term(int n, double freq_hz, double radius_m, double speed_of_sound,
                 RadialModel model);

/// Legendre polynomial P_n(x).
double legendre_p(int n, double x);

/// Associated Legendre P_n^m(x), m >= 0, without the Condon-Shortley phase.
double assoc_legendre_p(int n, int m, double x);

}  // namespace ambiforge::sphere
