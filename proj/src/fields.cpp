#include "serrin/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "serrin/analytic.hpp"
#include "serrin/residuals.hpp"

namespace serrin::fields {

namespace {

void check_grid(const GridSpec& g) {
  if (!(g.r0 > 0.0 && g.z0 > 0.0)) {
    throw std::invalid_argument("grid margins must exclude the axis and the ground");
  }
  if (g.r1 <= g.r0 || g.z1 <= g.z0 || g.nr < 2 || g.nz < 2) {
    throw std::invalid_argument("degenerate grid specification");
  }
}

}  // namespace

SphericalVelocity velocity_at(double r, double z, const Profile& profile) {
  if (r <= 0.0) throw PoleError("velocity_at: singular on the vortex axis r = 0");
  if (z < 0.0) throw std::invalid_argument("velocity_at: upper half space only");
  const double x = x_from_cylindrical(r, z);
  const double rb = std::pow(r, profile.params().b);
  const Jet F = profile.jet(0, ProfileCase::Upper, x);
  const Jet G = profile.jet(1, ProfileCase::Upper, x);
  const Jet O = profile.jet(2, ProfileCase::Upper, x);
  return {G.deriv(0) / rb, F.deriv(0) / rb, O.deriv(0) / rb};
}

Vec3 velocity_cartesian(const Vec3& pos, const Profile& profile) {
  const double r = std::hypot(pos.x, pos.y);
  const SphericalVelocity v = velocity_at(r, pos.z, profile);
  const double R = std::hypot(r, pos.z);
  const double sa = r / R, ca = pos.z / R;
  const double ct = pos.x / r, st = pos.y / r;  // cos/sin of the meridian angle
  // unit vectors: e_R = (sa ct, sa st, ca), e_alpha = (ca ct, ca st, -sa),
  // e_theta = (-st, ct, 0)
  return {v.v_R * sa * ct + v.v_alpha * ca * ct - v.v_theta * st,
          v.v_R * sa * st + v.v_alpha * ca * st + v.v_theta * ct,
          v.v_R * ca - v.v_alpha * sa};
}

double speed_at(double r, double z, const Profile& profile) {
  const SphericalVelocity v = velocity_at(r, z, profile);
  return std::sqrt(v.v_R * v.v_R + v.v_alpha * v.v_alpha + v.v_theta * v.v_theta);
}

FieldGrid speed_grid(const Profile& profile, const GridSpec& spec) {
  check_grid(spec);
  FieldGrid g{spec, 1, std::vector<double>(static_cast<size_t>(spec.nr) * spec.nz)};
  for (int i = 0; i < spec.nr; ++i) {
    for (int j = 0; j < spec.nz; ++j) {
      g.at(i, j) = speed_at(g.r_at(i), g.z_at(j), profile);
    }
  }
  return g;
}

FieldGrid velocity_grid(const Profile& profile, const GridSpec& spec) {
  check_grid(spec);
  FieldGrid g{spec, 3, std::vector<double>(static_cast<size_t>(spec.nr) * spec.nz * 3)};
  for (int i = 0; i < spec.nr; ++i) {
    for (int j = 0; j < spec.nz; ++j) {
      const Vec3 v = velocity_cartesian({g.r_at(i), 0.0, g.z_at(j)}, profile);
      g.at(i, j, 0) = v.x;
      g.at(i, j, 1) = v.y;
      g.at(i, j, 2) = v.z;
    }
  }
  return g;
}

FieldGrid pressure_grid(const Profile& profile, const VortexParams& params, double T,
                        const GridSpec& spec) {
  check_grid(spec);
  FieldGrid g{spec, 1, std::vector<double>(static_cast<size_t>(spec.nr) * spec.nz)};
  for (int i = 0; i < spec.nr; ++i) {
    for (int j = 0; j < spec.nz; ++j) {
      const double r = g.r_at(i), z = g.z_at(j);
      const double R = std::hypot(r, z);
      g.at(i, j) = residuals::pressure_from_profile(R, z / R, profile, params, T);
    }
  }
  return g;
}

FieldGrid pressure_grid_analytic_b1(double c1, double c_omega, double T, const GridSpec& spec) {
  check_grid(spec);
  FieldGrid g{spec, 1, std::vector<double>(static_cast<size_t>(spec.nr) * spec.nz)};
  for (int i = 0; i < spec.nr; ++i) {
    for (int j = 0; j < spec.nz; ++j) {
      const double r = g.r_at(i), z = g.z_at(j);
      const double R = std::hypot(r, z);
      g.at(i, j) = analytic::pressure_b1(R, z / R, c1, c_omega, T);
    }
  }
  return g;
}

double rayleigh_phi(const Profile& profile, double r, double x) {
  if (!(r > 0.0)) throw std::invalid_argument("rayleigh_phi: off-axis r required");
  const double b = profile.params().b;
  const Jet O = profile.jet(2, ProfileCase::Upper, x);
  return 2.0 / std::pow(r, 2.0 * (1.0 + b)) * O.deriv(0) *
         ((1.0 - b) * O.deriv(0) - x * (1.0 - x) * (1.0 + x) * O.deriv(1));
}

double min_rayleigh_phi(const Profile& profile, double r) {
  const Component& O = profile.azimuthal();
  const double lo = std::max(1e-3, O.domain_lo());
  const double hi = std::min(1.0 - 1e-3, O.domain_hi());
  double mn = std::numeric_limits<double>::infinity();
  const int samples = 2000;
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    mn = std::min(mn, rayleigh_phi(profile, r, x));
  }
  return mn;
}

Stability classify_stability(const Profile& profile, double tol) {
  return min_rayleigh_phi(profile) >= -tol ? Stability::Stable : Stability::Unstable;
}

Streamline integrate_streamline(const Profile& profile, const Vec3& start, double dt,
                                int max_steps, double exit_eps) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_streamline: dt must be positive");
  Streamline line;
  Vec3 p = start;
  double t = 0.0;
  line.t.push_back(t);
  line.points.push_back(p);

  auto vel = [&profile](const Vec3& q) { return velocity_cartesian(q, profile); };
  auto norm = [](const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); };

  for (int step = 0; step < max_steps; ++step) {
    const double r = std::hypot(p.x, p.y);
    if (r <= exit_eps || p.z <= exit_eps) break;  // domain exit
    double local_dt = dt;
    const double cell = 0.1 * std::min(r, p.z);
    Vec3 k1 = vel(p);
    // emergency halving keeps a step from jumping across the local scale
    while (norm(k1) * local_dt > cell && local_dt > dt * std::ldexp(1.0, -24)) {
      local_dt *= 0.5;
    }
    const Vec3 p2{p.x + 0.5 * local_dt * k1.x, p.y + 0.5 * local_dt * k1.y,
                  p.z + 0.5 * local_dt * k1.z};
    Vec3 k2 = vel(p2);
    const Vec3 p3{p.x + 0.5 * local_dt * k2.x, p.y + 0.5 * local_dt * k2.y,
                  p.z + 0.5 * local_dt * k2.z};
    Vec3 k3 = vel(p3);
    const Vec3 p4{p.x + local_dt * k3.x, p.y + local_dt * k3.y, p.z + local_dt * k3.z};
    Vec3 k4 = vel(p4);
    p = {p.x + local_dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
         p.y + local_dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
         p.z + local_dt / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
    t += local_dt;
    line.t.push_back(t);
    line.points.push_back(p);
  }
  return line;
}

double powerlaw_exponent(const Profile& profile, double z0, std::span<const double> r_samples) {
  if (r_samples.size() < 2) throw std::invalid_argument("powerlaw_exponent: need >= 2 radii");
  std::vector<double> lr, ls;
  for (double r : r_samples) {
    if (!(r > 0.0)) throw std::invalid_argument("powerlaw_exponent: radii must be positive");
    lr.push_back(std::log(r));
    ls.push_back(std::log(speed_at(r, z0, profile)));
  }
  const int n = static_cast<int>(lr.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += lr[i];
    sy += ls[i];
    sxx += lr[i] * lr[i];
    sxy += lr[i] * ls[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw std::runtime_error("powerlaw_exponent: degenerate fit");
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> default_powerlaw_radii() {
  // geometric points in [0.05, 0.25]; near the axis the angular factor of
  // the speed is nearly constant at unit height
  std::vector<double> r;
  const int n = 12;
  for (int i = 0; i < n; ++i) {
    r.push_back(0.05 * std::pow(0.25 / 0.05, static_cast<double>(i) / (n - 1)));
  }
  return r;
}

}  // namespace serrin::fields
