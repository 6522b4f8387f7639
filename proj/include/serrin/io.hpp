#ifndef SERRIN_IO_HPP
#define SERRIN_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "serrin/fields.hpp"
#include "serrin/profile.hpp"
#include "serrin/residuals.hpp"
#include "serrin/solver_viscous.hpp"

namespace serrin::io {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk solution schema (version 1). Arrays share length, x strictly
/// increasing and uniformly spaced; samples are at interior mesh nodes.
struct SolutionFile {
  double b = 1.0;
  double nu = 0.0;
  std::optional<double> c;   // inviscid swirl constant, when applicable
  std::optional<double> c1;  // analytic b = 1 family constant
  double c_omega = 1.0;
  double h = 1e-3;
  std::vector<double> x, F, G, Omega;
  double residual_norm = 0.0;
  std::string generator;  // "analytic-b1", "trivial", "newton-inviscid", "newton-viscous-b1"
  int version = 1;
  // generator-specific extras
  std::optional<double> k;        // 1/(2 nu) for viscous runs
  std::optional<double> closure;  // viscous sixth-condition parameter
  std::vector<double> calibration_closures, calibration_objectives;
};

/// Atomic write (temp file + rename); doubles survive round trips exactly.
void save_solution(const SolutionFile& sol, const std::filesystem::path& path);
SolutionFile load_solution(const std::filesystem::path& path);

/// Sampled upper-case profile over the file's x grid.
Profile profile_from_solution(const SolutionFile& sol);

/// Samples a profile at the interior nodes of the mesh into the schema.
SolutionFile solution_from_profile(const Profile& upper, const Mesh& mesh,
                                   const std::string& generator);

void write_grid_csv(const fields::FieldGrid& grid, const std::filesystem::path& path);
void write_streamline_csv(const fields::Streamline& line, const std::filesystem::path& path);
void write_residual_csv(const std::vector<residuals::ResidualReport>& reports,
                        const std::filesystem::path& path);
void write_layer_csv(const std::vector<viscous::LayerMeasurement>& measurements,
                     const std::filesystem::path& path);

/// Serializes floats with 17 significant digits.
std::string format_double(double v);

}  // namespace serrin::io

#endif  // SERRIN_IO_HPP
