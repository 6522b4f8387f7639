#include "serrin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace serrin::io {

using nlohmann::json;

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& body) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    out << body;
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path.string() + " (" + ec.message() + ")");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void save_solution(const SolutionFile& sol, const std::filesystem::path& path) {
  json j;
  j["b"] = sol.b;
  j["nu"] = sol.nu;
  j["c"] = sol.c ? json(*sol.c) : json(nullptr);
  j["C1"] = sol.c1 ? json(*sol.c1) : json(nullptr);
  j["C_omega"] = sol.c_omega;
  j["h"] = sol.h;
  j["x"] = sol.x;
  j["F"] = sol.F;
  j["G"] = sol.G;
  j["Omega"] = sol.Omega;
  j["residual_norm"] = sol.residual_norm;
  j["generator"] = sol.generator;
  j["version"] = sol.version;
  if (sol.k) j["k"] = *sol.k;
  if (sol.closure) j["closure"] = *sol.closure;
  if (!sol.calibration_closures.empty()) {
    j["calibration"] = {{"closures", sol.calibration_closures},
                        {"objectives", sol.calibration_objectives}};
  }
  atomic_write(path, j.dump(2) + "\n");
}

SolutionFile load_solution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open solution file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw IoError("malformed solution file: " + std::string(ex.what()));
  }
  SolutionFile sol;
  try {
    sol.b = j.at("b").get<double>();
    sol.nu = j.at("nu").get<double>();
    if (!j.at("c").is_null()) sol.c = j.at("c").get<double>();
    if (!j.at("C1").is_null()) sol.c1 = j.at("C1").get<double>();
    sol.c_omega = j.at("C_omega").get<double>();
    sol.h = j.at("h").get<double>();
    sol.x = j.at("x").get<std::vector<double>>();
    sol.F = j.at("F").get<std::vector<double>>();
    sol.G = j.at("G").get<std::vector<double>>();
    sol.Omega = j.at("Omega").get<std::vector<double>>();
    sol.residual_norm = j.at("residual_norm").get<double>();
    sol.generator = j.at("generator").get<std::string>();
    sol.version = j.at("version").get<int>();
    if (j.contains("k")) sol.k = j.at("k").get<double>();
    if (j.contains("closure")) sol.closure = j.at("closure").get<double>();
    if (j.contains("calibration")) {
      sol.calibration_closures = j.at("calibration").at("closures").get<std::vector<double>>();
      sol.calibration_objectives = j.at("calibration").at("objectives").get<std::vector<double>>();
    }
  } catch (const json::exception& ex) {
    throw IoError("solution file missing fields: " + std::string(ex.what()));
  }
  const size_t n = sol.x.size();
  if (n < 8 || sol.F.size() != n || sol.G.size() != n || sol.Omega.size() != n) {
    throw IoError("solution file arrays malformed or too short");
  }
  for (size_t i = 1; i < n; ++i) {
    if (!(sol.x[i] > sol.x[i - 1])) throw IoError("solution x array must be strictly increasing");
    if (std::abs((sol.x[i] - sol.x[i - 1]) - sol.h) > 1e-9 * std::max(1.0, sol.h)) {
      throw IoError("solution x array must be uniform with spacing h");
    }
  }
  return sol;
}

Profile profile_from_solution(const SolutionFile& sol) {
  VortexParams params(sol.b, sol.nu, sol.c_omega);
  auto F = std::make_shared<SampledComponent>(sol.x.front(), sol.h, sol.F);
  auto G = std::make_shared<SampledComponent>(sol.x.front(), sol.h, sol.G);
  auto O = std::make_shared<SampledComponent>(sol.x.front(), sol.h, sol.Omega);
  return Profile(params, ProfileCase::Upper, ProfileKind::Sampled, std::move(F), std::move(G),
                 std::move(O));
}

SolutionFile solution_from_profile(const Profile& upper, const Mesh& mesh,
                                   const std::string& generator) {
  if (upper.profile_case() != ProfileCase::Upper) {
    throw std::invalid_argument("solution_from_profile: expects the upper-case profile");
  }
  SolutionFile sol;
  sol.b = upper.params().b;
  sol.nu = upper.params().nu;
  sol.c_omega = upper.params().c_omega;
  sol.h = mesh.h;
  sol.generator = generator;
  for (int i = 1; i < mesh.n; ++i) {
    const double x = mesh.node(i);
    sol.x.push_back(x);
    sol.F.push_back(upper.meridional()(x));
    sol.G.push_back(upper.radial()(x));
    sol.Omega.push_back(upper.azimuthal()(x));
  }
  return sol;
}

void write_grid_csv(const fields::FieldGrid& grid, const std::filesystem::path& path) {
  std::string body = grid.ncomp == 1 ? "r,z,value\n" : "r,z,vx,vy,vz\n";
  for (int i = 0; i < grid.spec.nr; ++i) {
    for (int j = 0; j < grid.spec.nz; ++j) {
      body += format_double(grid.r_at(i)) + "," + format_double(grid.z_at(j));
      for (int c = 0; c < grid.ncomp; ++c) body += "," + format_double(grid.at(i, j, c));
      body += "\n";
    }
  }
  atomic_write(path, body);
}

void write_streamline_csv(const fields::Streamline& line, const std::filesystem::path& path) {
  std::string body = "t,x,y,z\n";
  for (size_t i = 0; i < line.t.size(); ++i) {
    body += format_double(line.t[i]) + "," + format_double(line.points[i].x) + "," +
            format_double(line.points[i].y) + "," + format_double(line.points[i].z) + "\n";
  }
  atomic_write(path, body);
}

void write_residual_csv(const std::vector<residuals::ResidualReport>& reports,
                        const std::filesystem::path& path) {
  std::string body = "x,equation_id,residual\n";
  for (const auto& rep : reports) {
    for (size_t i = 0; i < rep.residuals.size(); ++i) {
      body += format_double(rep.nodes[i]);
      body += ",";
      body += residuals::equation_name(rep.equation);
      body += ",";
      body += format_double(rep.residuals[i]);
      body += "\n";
    }
  }
  atomic_write(path, body);
}

void write_layer_csv(const std::vector<viscous::LayerMeasurement>& measurements,
                     const std::filesystem::path& path) {
  std::string body = "nu,layer_x\n";
  for (const auto& m : measurements) {
    body += format_double(m.nu) + "," + format_double(m.layer_x) + "\n";
  }
  atomic_write(path, body);
}

}  // namespace serrin::io
