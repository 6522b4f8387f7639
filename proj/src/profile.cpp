#include "serrin/profile.hpp"

#include <algorithm>
#include <cmath>

#include "serrin/quadrature.hpp"

namespace serrin {

VortexParams::VortexParams(double b_, double nu_, double c_omega_)
    : b(b_), nu(nu_), c_omega(c_omega_) {
  if (!(b > 0.0)) throw std::invalid_argument("VortexParams: b must be > 0");
  if (!(nu >= 0.0)) throw std::invalid_argument("VortexParams: nu must be >= 0");
  if (c_omega == 0.0) throw std::invalid_argument("VortexParams: C_omega must be nonzero");
}

double ClosedFormComponent::deriv(double x, int k) const {
  if (k < 0 || k > max_order_) throw std::out_of_range("ClosedFormComponent: derivative order");
  return fn_(Jet::variable(x)).deriv(k);
}

SampledComponent::SampledComponent(double x0, double h, std::vector<double> values)
    : x0_(x0), h_(h) {
  if (h <= 0.0) throw std::invalid_argument("SampledComponent: h must be positive");
  if (values.size() < 8) throw std::invalid_argument("SampledComponent: too few samples");
  tables_[0] = std::move(values);
  for (int k = 1; k <= 4; ++k) tables_[k] = derivative_table(tables_[0], h_, k);
}

namespace {

// Local cubic (falling back to the available window near the ends).
double interp_table(std::span<const double> t, double x0, double h, double x) {
  const int n = static_cast<int>(t.size()) - 1;
  const double u = (x - x0) / h;
  const int cell = std::clamp(static_cast<int>(std::floor(u)), 0, n - 1);
  if (u < -1e-9 || u > n + 1e-9) {
    throw std::out_of_range("SampledComponent: evaluation outside the sampled domain");
  }
  int lo = std::clamp(cell - 1, 0, n - 3);
  const double s = u - lo;
  const double v0 = t[lo], v1 = t[lo + 1], v2 = t[lo + 2], v3 = t[lo + 3];
  // 4-point Lagrange on unit-spaced nodes 0..3
  const double c0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double c1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double c2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double c3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  return c0 * v0 + c1 * v1 + c2 * v2 + c3 * v3;
}

}  // namespace

double SampledComponent::deriv(double x, int k) const {
  if (k < 0 || k > 4) throw std::out_of_range("SampledComponent: derivative order");
  return interp_table(tables_[k], x0_, h_, x);
}

Jet SampledComponent::jet_at(double x) const {
  Jet j;
  for (int k = 0; k <= 4; ++k) j.coeff(k) = deriv(x, k) / Jet::factorial(k);
  return j;
}

Profile::Profile(VortexParams params, ProfileCase pcase, ProfileKind kind, ComponentPtr meridional,
                 ComponentPtr radial, ComponentPtr azimuthal)
    : params_(params),
      case_(pcase),
      kind_(kind),
      meridional_(std::move(meridional)),
      radial_(std::move(radial)),
      azimuthal_(std::move(azimuthal)) {
  if (!meridional_ || !radial_ || !azimuthal_) {
    throw std::invalid_argument("Profile: all three components are required");
  }
}

Jet weight_jet(const Jet& x, double q) {
  if (q == 0.0) return Jet::constant(1.0);
  return pow(1.0 - x * x, q);
}

Jet Profile::jet(int role, ProfileCase as_case, double x) const {
  const Component& comp = role == 0 ? *meridional_ : role == 1 ? *radial_ : *azimuthal_;
  Jet j = comp.jet_at(x);
  if (as_case == case_) return j;
  // lower = upper * (1-x^2)^((1-b)/2)
  const double q = (as_case == ProfileCase::Lower ? 1.0 : -1.0) * (1.0 - params_.b) / 2.0;
  return j * weight_jet(Jet::variable(x), q);
}

namespace {

Profile convert_case(const Profile& p, ProfileCase target) {
  if (p.profile_case() == target) {
    throw std::invalid_argument("case conversion: profile already in the requested case");
  }
  const double b = p.params().b;
  const double q = (target == ProfileCase::Lower ? 1.0 : -1.0) * (1.0 - b) / 2.0;

  auto convert = [&](const ComponentPtr& src) -> ComponentPtr {
    if (auto cf = std::dynamic_pointer_cast<const ClosedFormComponent>(src)) {
      JetFn inner = cf->fn();
      return std::make_shared<ClosedFormComponent>(
          [inner, q](const Jet& x) { return inner(x) * weight_jet(x, q); }, cf->max_order());
    }
    auto sc = std::dynamic_pointer_cast<const SampledComponent>(src);
    if (!sc) throw std::invalid_argument("case conversion: unknown component kind");
    const int m = sc->size();
    std::vector<double> v(m);
    for (int i = 0; i < m; ++i) {
      const double x = sc->x0() + i * sc->h();
      const double one_m_x2 = (1.0 - x) * (1.0 + x);
      if (one_m_x2 <= 0.0) {
        if (q < 0.0) {
          throw PoleError("case conversion: weight (1-x^2)^q diverges at x = 1 on this grid");
        }
        v[i] = q == 0.0 ? sc->table(0)[i] : 0.0;
        continue;
      }
      v[i] = sc->table(0)[i] * std::pow(one_m_x2, q);
    }
    return std::make_shared<SampledComponent>(sc->x0(), sc->h(), std::move(v));
  };

  return Profile(p.params(), target, p.kind(), convert(p.meridional_ptr()),
                 convert(p.radial_ptr()), convert(p.azimuthal_ptr()));
}

}  // namespace

Profile to_lowercase(const Profile& p) {
  if (p.profile_case() != ProfileCase::Upper) {
    throw std::invalid_argument("to_lowercase: expects an upper-case profile");
  }
  return convert_case(p, ProfileCase::Lower);
}

Profile to_uppercase(const Profile& p) {
  if (p.profile_case() != ProfileCase::Lower) {
    throw std::invalid_argument("to_uppercase: expects a lower-case profile");
  }
  return convert_case(p, ProfileCase::Upper);
}

ComponentPtr continuity_g_from_f(const ComponentPtr& f, double b) {
  if (b == 2.0) throw std::domain_error("continuity degenerate: b = 2 leaves g unconstrained");
  if (auto cf = std::dynamic_pointer_cast<const ClosedFormComponent>(f)) {
    JetFn inner = cf->fn();
    const int order = std::max(0, cf->max_order() - 1);
    return std::make_shared<ClosedFormComponent>(
        [inner, b](const Jet& x) {
          return sqrt(1.0 - x * x) * differentiate(inner(x)) / (2.0 - b);
        },
        order);
  }
  auto sc = std::dynamic_pointer_cast<const SampledComponent>(f);
  if (!sc) throw std::invalid_argument("continuity_g_from_f: unknown component kind");
  const int m = sc->size();
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) {
    const double x = sc->x0() + i * sc->h();
    const double s2 = std::max(0.0, (1.0 - x) * (1.0 + x));
    v[i] = std::sqrt(s2) * sc->table(1)[i] / (2.0 - b);
  }
  return std::make_shared<SampledComponent>(sc->x0(), sc->h(), std::move(v));
}

ComponentPtr continuity_G_from_F(const ComponentPtr& F, double b) {
  if (b == 2.0) throw std::domain_error("continuity degenerate: b = 2 leaves G unconstrained");
  if (auto cf = std::dynamic_pointer_cast<const ClosedFormComponent>(F)) {
    JetFn inner = cf->fn();
    const int order = std::max(0, cf->max_order() - 1);
    return std::make_shared<ClosedFormComponent>(
        [inner, b](const Jet& x) {
          const Jet s = sqrt(1.0 - x * x);
          const Jet Fj = inner(x);
          return (s * differentiate(Fj) - (1.0 - b) * x * Fj / s) / (2.0 - b);
        },
        order);
  }
  auto sc = std::dynamic_pointer_cast<const SampledComponent>(F);
  if (!sc) throw std::invalid_argument("continuity_G_from_F: unknown component kind");
  const int m = sc->size();
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) {
    const double x = sc->x0() + i * sc->h();
    const double s2 = (1.0 - x) * (1.0 + x);
    if (s2 <= 0.0) {
      if (sc->table(0)[i] != 0.0) {
        throw PoleError("continuity_G_from_F: pole at x = 1 with F(1) != 0");
      }
      // F(1) = 0: the limit of the formula needs more than samples; store a
      // placeholder at this single closed endpoint
      v[i] = 0.0;
      continue;
    }
    const double s = std::sqrt(s2);
    v[i] = (s * sc->table(1)[i] - (1.0 - b) * x * sc->table(0)[i] / s) / (2.0 - b);
  }
  return std::make_shared<SampledComponent>(sc->x0(), sc->h(), std::move(v));
}

double flux_integral(const Component& g) {
  // substitution x = sin t removes the weight singularity at x = 1
  const double t_lo = std::asin(std::max(0.0, g.domain_lo()));
  const double t_hi = std::asin(std::min(1.0, g.domain_hi()));
  auto integrand = [&g](double t) { return g.deriv(std::sin(t), 0); };
  const QuadratureResult q = integrate_adaptive(integrand, t_lo, t_hi, 1e-9, 60);
  if (!q.converged && q.error_estimate > 1e-8) {
    throw QuadratureError("flux_integral: endpoint refinement failed to converge");
  }
  return q.value;
}

double flux_integral(const Profile& p) {
  const Profile lower_view =
      p.profile_case() == ProfileCase::Lower ? p : to_lowercase(p);
  const Component& g = lower_view.radial();
  if (p.kind() == ProfileKind::ClosedForm) return flux_integral(g);

  // Sampled data: integrate g/sqrt(1-x^2) = f'/(2-b) by parts on the outer
  // windows, where tabulated derivatives of the singular g are unreliable.
  const Component& f = lower_view.meridional();
  const double b = p.params().b;
  const double lo = f.domain_lo();
  const double hi = f.domain_hi();
  const double d0 = std::max(0.10, lo);
  const double d1 = std::min(0.90, hi);
  // f -> 0 at both ends (no source/sink and the axis limit); the boundary
  // values below are those limits, so nonvanishing f near the ends shows up
  // as a nonzero flux.
  const double parts = (f.deriv(d0, 0) - 0.0) + (0.0 - f.deriv(d1, 0));
  auto integrand = [&g](double t) { return g.deriv(std::sin(t), 0); };
  const QuadratureResult q =
      integrate_adaptive(integrand, std::asin(d0), std::asin(d1), 1e-9, 60);
  if (!q.converged && q.error_estimate > 1e-8) {
    throw QuadratureError("flux_integral: refinement failed to converge");
  }
  return parts / (2.0 - b) + q.value;
}

double stream_function(double R, double x, const Profile& p) {
  if (!(R > 0.0)) throw std::invalid_argument("stream_function: R must be positive");
  const double b = p.params().b;
  double f;
  if (p.profile_case() == ProfileCase::Lower) {
    f = p.meridional()(x);
  } else {
    const double one_m_x2 = (1.0 - x) * (1.0 + x);
    if (one_m_x2 <= 0.0 && p.params().b > 1.0) {
      throw PoleError("stream_function: lower-case conversion singular at x = 1");
    }
    f = p.meridional()(x) * std::pow(std::max(one_m_x2, 0.0), (1.0 - b) / 2.0);
  }
  return std::pow(R, 2.0 - b) * f;
}

StreamFunctionSample stream_function_sample(double R, double x, const Profile& p) {
  return {R, x, stream_function(R, x, p)};
}

double x_from_cylindrical(double r, double z) {
  if (r < 0.0 || z < 0.0) throw std::invalid_argument("x_from_cylindrical: upper half space only");
  if (r == 0.0 && z == 0.0) {
    throw std::invalid_argument("x_from_cylindrical: direction undefined at the origin");
  }
  return z / std::hypot(r, z);
}

}  // namespace serrin
