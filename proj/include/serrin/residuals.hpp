#ifndef SERRIN_RESIDUALS_HPP
#define SERRIN_RESIDUALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "serrin/profile.hpp"

namespace serrin::residuals {

enum class EquationId {
  C3eq,        // azimuthal momentum (convective part)
  C1C2eq,      // pressure compatibility, dC1/dalpha + 2b C2
  D3eq,        // azimuthal momentum (diffusive part)
  D1D2eq,      // compatibility, dD1/dalpha + (1+b) D2
  SerrinSys1,  // b = 1 viscous coupled system, 4th-order equation
  SerrinSys2,  // b = 1 viscous coupled system, 2nd-order equation
  FullNS_R,
  FullNS_alpha,
  FullNS_theta,
  Continuity
};

const char* equation_name(EquationId id);

struct ResidualReport {
  EquationId equation;
  std::vector<double> nodes;      // x, or flattened oracle grid points
  std::vector<double> residuals;  // aligned with nodes
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  /// Residuals are the paper's scaled forms; the removed positive factor is
  /// (1-x^2)^prefactor_exponent (0 when nothing was factored out).
  double prefactor_exponent = 0.0;

  void finalize();  // fills the norms from the residual array
};

enum class GoverningMode { InviscidReduced, ViscousB1, ViscousSplit, ViscousB2 };
GoverningMode classify_mode(const VortexParams& params);

struct CValues {
  double c1, c2, c3;
};
struct DValues {
  double d1, d2, d3;
};
struct Composites {
  double c_comp;  // dC1/dalpha + 2b C2
  double d_comp;  // dD1/dalpha + (1+b) D2
};

/// Appendix expressions evaluated in the profile's own variable case.
/// Interior x only; endpoint poles propagate as non-finite values.
CValues eval_C(double x, const Profile& p);
DValues eval_D(double x, const Profile& p);
Composites eval_composites(double x, const Profile& p);

/// Substituted b != 2 forms on (F, Omega) with G eliminated through
/// continuity; used to cross-check the transcriptions above.
double c3_substituted(double x, const Profile& upper);
double l3_substituted(double x, const Profile& upper);      // (1-x^2)^2 O'' - 2(1-b)x(1-x^2) O' - (1-b^2) O
double c1c2_substituted(double x, const Profile& upper);    // residual of eq. C1C2 = 0 (G eliminated)
double l1l2_substituted(double x, const Profile& upper);    // 4th-order F equation

/// Reduced Euler residuals at interior mesh nodes (nu = 0). For b != 2:
/// the (f, Omega) pair of equations; b = 2 redirects to the G/Omega pair.
std::pair<ResidualReport, ResidualReport> euler_residuals(const Profile& p, const Mesh& mesh);

/// Viscous residuals: b = 1 gives Serrin's coupled system; b = 2 the three
/// scaled b = 2 equations; otherwise the four-way split C3, D3, composites.
std::vector<ResidualReport> ns_residuals(const Profile& p, const VortexParams& params,
                                         const Mesh& mesh);

/// p(R, alpha) = C1/(2b R^{2b}) - nu D1/((1+b) R^{1+b}) + T.
double pressure_from_profile(double R, double x, const Profile& p, const VortexParams& params,
                             double T = 0.0);

/// Independent full-spherical-equations oracle: reconstructs (v, p) on an
/// (r, z) grid and checks the raw Navier-Stokes + continuity equations with
/// centered differences. Residuals are scaled by max(1, |convective terms|).
struct OracleGrid {
  double r0, r1;
  double z0, z1;
  double spacing;
};
std::vector<ResidualReport> fullfield_ns_residual(const Profile& p, const VortexParams& params,
                                                  const OracleGrid& grid, double T = 0.0);

}  // namespace serrin::residuals

#endif  // SERRIN_RESIDUALS_HPP
