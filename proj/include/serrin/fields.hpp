#ifndef SERRIN_FIELDS_HPP
#define SERRIN_FIELDS_HPP

#include <span>
#include <vector>

#include "serrin/profile.hpp"

namespace serrin::fields {

struct Vec3 {
  double x, y, z;
};

struct SphericalVelocity {
  double v_R, v_alpha, v_theta;
};

/// Velocity components at cylindrical (r, z) from the upper-case profile:
/// (G, F, Omega)(x) / r^b. Throws PoleError on the axis or ground.
SphericalVelocity velocity_at(double r, double z, const Profile& profile);

/// Cartesian velocity at a point with z > 0, off the axis.
Vec3 velocity_cartesian(const Vec3& pos, const Profile& profile);

double speed_at(double r, double z, const Profile& profile);

/// Rectangular (r, z) sampling window; margins keep it off the singular
/// axis and ground lines.
struct GridSpec {
  double r0 = 0.01, r1 = 1.0;
  int nr = 100;
  double z0 = 0.01, z1 = 1.0;
  int nz = 100;
};

struct FieldGrid {
  GridSpec spec;
  int ncomp = 1;               // 1 for scalar, 3 for velocity components
  std::vector<double> values;  // r-major, then z, then component
  double r_at(int i) const { return spec.r0 + (spec.r1 - spec.r0) * i / (spec.nr - 1); }
  double z_at(int j) const { return spec.z0 + (spec.z1 - spec.z0) * j / (spec.nz - 1); }
  double& at(int i, int j, int comp = 0) {
    return values[(static_cast<size_t>(i) * spec.nz + j) * ncomp + comp];
  }
  double at(int i, int j, int comp = 0) const {
    return values[(static_cast<size_t>(i) * spec.nz + j) * ncomp + comp];
  }
};

FieldGrid speed_grid(const Profile& profile, const GridSpec& spec);
FieldGrid velocity_grid(const Profile& profile, const GridSpec& spec);  // Cartesian components
FieldGrid pressure_grid(const Profile& profile, const VortexParams& params, double T,
                        const GridSpec& spec);
/// Closed-form pressure path for the b = 1 family.
FieldGrid pressure_grid_analytic_b1(double c1, double c_omega, double T, const GridSpec& spec);

/// Rayleigh discriminant Phi = 2 r^{-2(1+b)} Omega [(1-b) Omega - x(1-x^2) Omega'].
double rayleigh_phi(const Profile& profile, double r, double x);

enum class Stability { Stable, Unstable };
/// Classification by the sign of min Phi over sampled interior x (r drops
/// out of the sign).
Stability classify_stability(const Profile& profile, double tol = 1e-8);
double min_rayleigh_phi(const Profile& profile, double r = 1.0);

/// Fixed-step classical RK4 particle path with emergency step halving when
/// |v| dt exceeds the local length scale. Stops on ground/axis exit or at
/// max_steps.
struct Streamline {
  std::vector<double> t;
  std::vector<Vec3> points;
};
Streamline integrate_streamline(const Profile& profile, const Vec3& start, double dt,
                                int max_steps, double exit_eps = 1e-3);

/// Least-squares slope of ln(speed) against ln(r) at fixed height z0.
double powerlaw_exponent(const Profile& profile, double z0, std::span<const double> r_samples);

/// Default radius samples for the power-law fit: geometric points close to
/// the axis where the angular factor is nearly constant.
std::vector<double> default_powerlaw_radii();

}  // namespace serrin::fields

#endif  // SERRIN_FIELDS_HPP
