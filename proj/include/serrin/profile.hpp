#ifndef SERRIN_PROFILE_HPP
#define SERRIN_PROFILE_HPP

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "serrin/jet.hpp"
#include "serrin/mesh.hpp"

namespace serrin {

/// Model constants of the velocity ansatz v = (G, F, Omega)(x) / r^b.
struct VortexParams {
  double b;        // power-law exponent, > 0
  double nu;       // kinematic viscosity (length^2/time), >= 0
  double c_omega;  // azimuthal amplitude near the axis, != 0

  VortexParams(double b_, double nu_, double c_omega_);
};

/// Signals evaluation at a genuine singularity (axis/ground limits).
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProfileCase { Upper, Lower };    // (F, G, Omega) vs (f, g, omega)
enum class ProfileKind { ClosedForm, Sampled };

/// One scalar profile component over x in (0, 1): value and derivatives.
class Component {
 public:
  virtual ~Component() = default;

  /// k-th derivative at x; k = 0 gives the value.
  virtual double deriv(double x, int k) const = 0;

  /// Value plus derivatives packed as a jet (orders above max_order are 0).
  virtual Jet jet_at(double x) const = 0;

  virtual int max_order() const = 0;
  virtual double domain_lo() const = 0;
  virtual double domain_hi() const = 0;

  double operator()(double x) const { return deriv(x, 0); }
};

using ComponentPtr = std::shared_ptr<const Component>;
using JetFn = std::function<Jet(const Jet&)>;

/// Component defined by a jet-valued formula; derivatives are exact.
class ClosedFormComponent final : public Component {
 public:
  explicit ClosedFormComponent(JetFn fn, int max_order = Jet::kOrder)
      : fn_(std::move(fn)), max_order_(max_order) {}

  double deriv(double x, int k) const override;
  Jet jet_at(double x) const override { return fn_(Jet::variable(x)); }
  int max_order() const override { return max_order_; }
  double domain_lo() const override { return 0.0; }
  double domain_hi() const override { return 1.0; }
  const JetFn& fn() const { return fn_; }

 private:
  JetFn fn_;
  int max_order_;
};

/// Component sampled on a uniform grid x0 + i h. Derivative tables are
/// built once with second-order stencils; point queries interpolate the
/// tables with a local cubic.
class SampledComponent final : public Component {
 public:
  SampledComponent(double x0, double h, std::vector<double> values);

  double deriv(double x, int k) const override;
  Jet jet_at(double x) const override;
  int max_order() const override { return 4; }
  double domain_lo() const override { return x0_; }
  double domain_hi() const override { return x0_ + h_ * (size() - 1); }

  int size() const { return static_cast<int>(tables_[0].size()); }
  double h() const { return h_; }
  double x0() const { return x0_; }
  std::span<const double> table(int order) const { return tables_[order]; }

 private:
  double x0_, h_;
  std::array<std::vector<double>, 5> tables_;  // [0] = values, [k] = k-th derivative
};

/// A solution triple over x in (0, 1) in one of the two variable cases.
/// Components are immutable after construction and safe to share.
class Profile {
 public:
  Profile(VortexParams params, ProfileCase pcase, ProfileKind kind, ComponentPtr meridional,
          ComponentPtr radial, ComponentPtr azimuthal);

  const VortexParams& params() const { return params_; }
  ProfileCase profile_case() const { return case_; }
  ProfileKind kind() const { return kind_; }

  // components by role: meridional = F or f, radial = G or g, azimuthal = Omega or omega
  const Component& meridional() const { return *meridional_; }
  const Component& radial() const { return *radial_; }
  const Component& azimuthal() const { return *azimuthal_; }
  ComponentPtr meridional_ptr() const { return meridional_; }
  ComponentPtr radial_ptr() const { return radial_; }
  ComponentPtr azimuthal_ptr() const { return azimuthal_; }

  /// Jet of a role component converted to the requested case at x.
  /// Conversion multiplies by (1 - x^2)^(±(1-b)/2); interior x only.
  Jet jet(int role, ProfileCase as_case, double x) const;  // role: 0=merid, 1=radial, 2=azim

 private:
  VortexParams params_;
  ProfileCase case_;
  ProfileKind kind_;
  ComponentPtr meridional_, radial_, azimuthal_;
};

/// Change of variables f = F (1-x^2)^((1-b)/2) applied to all components.
/// Closed forms convert exactly; sampled grids convert nodewise and report
/// a pole if the grid touches x = 1 while the weight diverges there.
Profile to_lowercase(const Profile& p);
Profile to_uppercase(const Profile& p);

/// g from the continuity consequence (2-b) g = sqrt(1-x^2) f'.
/// Throws std::domain_error for b = 2 (continuity degenerate).
ComponentPtr continuity_g_from_f(const ComponentPtr& f, double b);

/// G from (2-b) G = sqrt(1-x^2) F' - (1-b) x F / sqrt(1-x^2).
ComponentPtr continuity_G_from_F(const ComponentPtr& F, double b);

/// Integral form of continuity: integral of g / sqrt(1-x^2) over (0, 1).
/// Evaluated after the substitution x = sin t; adaptive refinement toward
/// the endpoints. Throws QuadratureError if the estimate exceeds 1e-8.
double flux_integral(const Component& g);

/// Flux of a profile. Sampled profiles use integration by parts on the
/// outer 10% windows, [f]/(2-b), where tabulated derivatives of the
/// boundary-singular g are unreliable; closed forms use pure quadrature.
double flux_integral(const Profile& p);

/// Psi = R^(2-b) f(x); level surfaces contain the meridional streamlines.
struct StreamFunctionSample {
  double R;
  double x;
  double psi;
};
double stream_function(double R, double x, const Profile& p);
StreamFunctionSample stream_function_sample(double R, double x, const Profile& p);

/// x = cos(alpha) = z / sqrt(r^2 + z^2) for r, z >= 0, (r, z) != (0, 0).
double x_from_cylindrical(double r, double z);

/// Derivatives of the case-change weight (1 - x^2)^q as a jet.
Jet weight_jet(const Jet& x, double q);

}  // namespace serrin

#endif  // SERRIN_PROFILE_HPP
