#include "subdist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "subdist/csv.hpp"
#include "subdist/distances.hpp"
#include "subdist/geodesic.hpp"
#include "subdist/metrics.hpp"
#include "subdist/sampling.hpp"
#include "subdist/schubert.hpp"
#include "subdist/volume.hpp"

namespace subdist::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

/// Argument combinations CLI11 cannot express on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> inputs;
  std::string metric = "grassmann";
  std::string family = "finite";
  std::string mode;
  std::string output;
  std::string basis_out;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int steps = 0;
  int samples = 1000;
  int k = 0;
  int l = 0;
  int n = 0;
  std::optional<int> target_l;
  double tol = kDefaultIntersectionTau;
};

const std::vector<std::string> kMetricNames = {
    "grassmann",  "asimov",    "binet_cauchy", "chordal", "fubini_study", "martin",
    "procrustes", "projection", "spectral",    "gap",     "sdd"};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    // + 0.0 folds negative zero into zero
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j) + 0.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_json(const json& j, const Config& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << j.dump() << '\n';
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw io::FileError(cfg.output + ": cannot open for writing");
  file << j.dump() << '\n';
}

std::pair<Subspace, Subspace> read_pair(const Config& cfg) {
  return {io::read_subspace_csv(cfg.inputs.at(0)), io::read_subspace_csv(cfg.inputs.at(1))};
}

// Value of --metric/--family between two subspaces. Finite family falls
// back to delta when the dimensions differ.
double metric_value(const Config& cfg, const Subspace& a, const Subspace& b) {
  if (cfg.metric == "gap") return containment_gap(a, b);
  if (cfg.metric == "sdd") return symmetric_directional(a, b);
  const DistanceKind kind = *parse_distance_kind(cfg.metric);
  if (cfg.family == "infty") return metric_infty(kind, a, b);
  return a.dim() == b.dim() ? distance(kind, a, b) : delta(kind, a, b);
}

int cmd_angles(const Config& cfg, std::ostream& out) {
  const auto [a, b] = read_pair(cfg);
  const std::vector<double> angles = principal_angles(a, b);
  const Intersection meet = intersection(a, b, cfg.tol);
  emit_json({{"angles", angles}, {"intersection_dim", meet.dim}}, cfg, out);
  return kExitOk;
}

int cmd_dist(const Config& cfg, std::ostream& out) {
  const auto [a, b] = read_pair(cfg);
  emit_json({{"value", metric_value(cfg, a, b)}}, cfg, out);
  return kExitOk;
}

int cmd_pairwise(const Config& cfg, std::ostream& out) {
  const fs::path dir = cfg.inputs.at(0);
  if (!fs::is_directory(dir)) throw io::FileError(dir.string() + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& x, const fs::path& y) {
    return x.filename().string() < y.filename().string();
  });
  if (files.empty()) throw io::FileError(dir.string() + ": no .csv files");

  std::vector<Subspace> spaces;
  spaces.reserve(files.size());
  for (const auto& f : files) spaces.push_back(io::read_subspace_csv(f));

  const bool mixed = std::any_of(spaces.begin(), spaces.end(), [&](const Subspace& s) {
    return s.dim() != spaces.front().dim();
  });
  const bool finite_family = cfg.family == "finite" && cfg.metric != "gap" && cfg.metric != "sdd";
  if (mixed && finite_family) {
    throw UsageError(
        "pairwise over subspaces of different dimensions needs --family infty or "
        "--metric gap|sdd");
  }
  for (const auto& s : spaces) require_same_ambient(spaces.front(), s);

  const std::size_t count = spaces.size();
  Matrix values = Matrix::Zero(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        for (std::size_t j = i + 1; j < count; ++j) {
          const double v = metric_value(cfg, spaces[i], spaces[j]);
          const auto ii = static_cast<Eigen::Index>(i);
          const auto jj = static_cast<Eigen::Index>(j);
          values(ii, jj) = v;
          values(jj, ii) = v;
        }
      }
    }));
  }
  for (auto& job : jobs) job.get();

  std::ostringstream csv;
  for (const auto& f : files) csv << ',' << f.filename().string();
  csv << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    csv << files[i].filename().string();
    for (std::size_t j = 0; j < count; ++j) {
      csv << ',' << io::format_double(values(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(j)));
    }
    csv << '\n';
  }
  if (cfg.output.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw io::FileError(cfg.output + ": cannot open for writing");
    file << csv.str();
  }
  return kExitOk;
}

json point_json(const Subspace& point, const Config& cfg) {
  if (!cfg.basis_out.empty()) io::write_matrix_csv(fs::path(cfg.basis_out), point.basis());
  return {{"dim", point.dim()}, {"basis", matrix_json(point.basis())}};
}

int cmd_nearest(const Config& cfg, std::ostream& out) {
  const auto [a, b] = read_pair(cfg);
  json j;
  if (cfg.mode == "contained") {
    if (cfg.target_l) throw UsageError("--l applies to --mode containing only");
    const Subspace y = nearest_contained(a, b);
    j = point_json(y, cfg);
    j["distance"] = delta(DistanceKind::grassmann, a, b);
  } else {
    const Subspace x = nearest_containing(a, b, cfg.target_l.value_or(static_cast<int>(b.dim())));
    j = point_json(x, cfg);
    j["distance"] = delta(DistanceKind::grassmann, a, b);
  }
  emit_json(j, cfg, out);
  return kExitOk;
}

int cmd_furthest(const Config& cfg, std::ostream& out) {
  const auto [a, b] = read_pair(cfg);
  if (cfg.mode == "containing") {
    const Subspace x = furthest_containing(a, b, cfg.target_l.value_or(static_cast<int>(b.dim())));
    json j = point_json(x, cfg);
    j["distance"] = grassmann_distance(x, b);
    j["metric"] = metric_infty(DistanceKind::grassmann, a, b);
    j["exact"] = true;
    emit_json(j, cfg, out);
    return kExitOk;
  }
  // No constructive maximizer is known over Ω-(B); report a sampled lower
  // bound instead.
  if (a.dim() > b.dim()) {
    throw Error(ErrorKind::DimensionError, "furthest --mode contained needs dim A <= dim B");
  }
  const std::uint64_t seed = cfg.seed.value_or(0);
  SeededGenerator g(seed);
  double best = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    const Subspace y = random_contained(b, a.dim(), g);
    best = std::max(best, grassmann_distance(y, a));
  }
  emit_json({{"estimate", best}, {"exact", false}, {"samples", cfg.samples}, {"seed", seed}}, cfg,
            out);
  return kExitOk;
}

int cmd_geodesic(const Config& cfg, std::ostream& out) {
  const auto [a, b] = read_pair(cfg);
  const GeodesicPath path = geodesic(a, b);
  const int steps = cfg.steps;
  const int width = static_cast<int>(std::to_string(steps).size());

  json frames = json::array();
  json names = json::array();
  if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);
  for (int i = 0; i <= steps; ++i) {
    const Subspace point = evaluate(path, static_cast<double>(i) / steps);
    if (cfg.out_dir.empty()) {
      frames.push_back(matrix_json(point.basis()));
    } else {
      std::string index = std::to_string(i);
      index.insert(0, static_cast<std::size_t>(width) - index.size(), '0');
      const std::string name = "gamma_" + index + ".csv";
      io::write_matrix_csv(fs::path(cfg.out_dir) / name, point.basis());
      names.push_back(name);
    }
  }
  json j = {{"length", polyline_length(path, steps)},
            {"distance", path.length()},
            {"steps", steps}};
  if (cfg.out_dir.empty()) {
    j["frames"] = std::move(frames);
  } else {
    j["files"] = std::move(names);
  }
  emit_json(j, cfg, out);
  return kExitOk;
}

int cmd_volume(const Config& cfg, std::ostream& out) {
  const double log_value = log_grassmannian_volume(cfg.k, cfg.n);
  emit_json({{"value", grassmannian_volume(cfg.k, cfg.n)}, {"log_value", log_value}}, cfg, out);
  return kExitOk;
}

int cmd_relvolume(const Config& cfg, std::ostream& out) {
  const double log_value = log_relative_volume(cfg.k, cfg.l, cfg.n);
  emit_json({{"value", relative_volume(cfg.k, cfg.l, cfg.n)}, {"log_value", log_value}}, cfg, out);
  return kExitOk;
}

int cmd_sample(const Config& cfg, std::ostream& out) {
  SeededGenerator g(cfg.seed.value_or(0));
  const Subspace s = random_subspace(cfg.k, cfg.n, g);
  if (cfg.output.empty()) {
    io::write_matrix_csv(out, s.basis());
  } else {
    io::write_matrix_csv(fs::path(cfg.output), s.basis());
  }
  return kExitOk;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  json files = json::array();
  bool parse_failed = false;
  bool rank_failed = false;
  for (const auto& path : cfg.inputs) {
    json entry = {{"path", path}};
    try {
      const Matrix m = io::read_matrix_csv(path);
      const Vector sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
      const double smax = sv(0);
      const double smin = sv(sv.size() - 1);
      const bool rank_ok = m.cols() <= m.rows() && smin > kDefaultRankTol * smax;
      const double defect =
          (m.transpose() * m - Matrix::Identity(m.cols(), m.cols())).norm();
      entry["rows"] = m.rows();
      entry["cols"] = m.cols();
      entry["sigma_max"] = smax;
      entry["sigma_min"] = m.cols() <= m.rows() ? smin : 0.0;
      entry["rank_ok"] = rank_ok;
      entry["orthonormality_error"] = defect;
      entry["orthonormal"] =
          defect <= kDefaultOrthoTol * std::sqrt(static_cast<double>(m.cols()));
      if (!rank_ok) err << "error: " << path << ": RankDeficient: columns are not independent\n";
      rank_failed = rank_failed || !rank_ok;
    } catch (const io::FileError& e) {
      entry["error"] = e.what();
      err << "error: " << e.what() << '\n';
      parse_failed = true;
    }
    files.push_back(std::move(entry));
  }
  emit_json({{"files", files}}, cfg, out);
  if (parse_failed) return kExitFile;
  if (rank_failed) return kExitNumerical;
  return kExitOk;
}

void add_output(CLI::App* cmd, Config& cfg) {
  cmd->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
}

void add_pair(CLI::App* cmd, Config& cfg) {
  cmd->add_option("inputs", cfg.inputs, "A.csv B.csv")
      ->required()
      ->expected(2);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Principal angles, distances and metrics between subspaces", "subdist"};
  app.require_subcommand(1);

  auto* angles = app.add_subcommand("angles", "Principal angles and intersection dimension");
  add_pair(angles, cfg);
  angles->add_option("--tol", cfg.tol, "Intersection threshold: cos(theta) > 1 - tol")
      ->check(CLI::Range(0.0, 1.0));
  add_output(angles, cfg);

  auto* dist = app.add_subcommand("dist", "Distance or metric between two subspaces");
  add_pair(dist, cfg);
  dist->add_option("--metric", cfg.metric)->check(CLI::IsMember(kMetricNames));
  dist->add_option("--family", cfg.family)->check(CLI::IsMember({"finite", "infty"}));
  add_output(dist, cfg);

  auto* pairwise = app.add_subcommand("pairwise", "Distance matrix over every *.csv in a directory");
  pairwise->add_option("dir", cfg.inputs)->required()->expected(1);
  pairwise->add_option("--metric", cfg.metric)->check(CLI::IsMember(kMetricNames));
  pairwise->add_option("--family", cfg.family)->check(CLI::IsMember({"finite", "infty"}));
  add_output(pairwise, cfg);

  auto* nearest = app.add_subcommand("nearest", "Nearest point of a Schubert variety");
  add_pair(nearest, cfg);
  nearest->add_option("--mode", cfg.mode)
      ->required()
      ->check(CLI::IsMember({"contained", "containing"}));
  nearest->add_option("--l", cfg.target_l, "Target dimension (defaults to dim B)")
      ->check(CLI::PositiveNumber);
  nearest->add_option("--basis-out", cfg.basis_out, "Also write the basis CSV here");
  add_output(nearest, cfg);

  auto* furthest = app.add_subcommand("furthest", "Furthest point of a Schubert variety");
  add_pair(furthest, cfg);
  furthest->add_option("--mode", cfg.mode)
      ->required()
      ->check(CLI::IsMember({"contained", "containing"}));
  furthest->add_option("--l", cfg.target_l)->check(CLI::PositiveNumber);
  furthest->add_option("--seed", cfg.seed);
  furthest->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  furthest->add_option("--basis-out", cfg.basis_out);
  add_output(furthest, cfg);

  auto* geo = app.add_subcommand("geodesic", "Sample the minimizing geodesic");
  add_pair(geo, cfg);
  geo->add_option("--steps", cfg.steps)->required()->check(CLI::PositiveNumber);
  geo->add_option("--out-dir", cfg.out_dir, "Write gamma_<i>.csv files here");
  add_output(geo, cfg);

  auto* volume = app.add_subcommand("volume", "Volume of Gr(k, n)");
  volume->add_option("--k", cfg.k)->required();
  volume->add_option("--n", cfg.n)->required();
  add_output(volume, cfg);

  auto* relvolume = app.add_subcommand("relvolume", "Relative volume of a Schubert variety");
  relvolume->add_option("--k", cfg.k)->required();
  relvolume->add_option("--l", cfg.l)->required();
  relvolume->add_option("--n", cfg.n)->required();
  add_output(relvolume, cfg);

  auto* sample = app.add_subcommand("sample", "Random subspace from the uniform distribution");
  sample->add_option("--k", cfg.k)->required();
  sample->add_option("--n", cfg.n)->required();
  sample->add_option("--seed", cfg.seed);
  add_output(sample, cfg);

  auto* check = app.add_subcommand("check", "Diagnose input files");
  check->add_option("inputs", cfg.inputs)->required();
  add_output(check, cfg);

  std::vector<const char*> argv{"subdist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (angles->parsed()) return cmd_angles(cfg, out);
    if (dist->parsed()) return cmd_dist(cfg, out);
    if (pairwise->parsed()) return cmd_pairwise(cfg, out);
    if (nearest->parsed()) return cmd_nearest(cfg, out);
    if (furthest->parsed()) return cmd_furthest(cfg, out);
    if (geo->parsed()) return cmd_geodesic(cfg, out);
    if (volume->parsed()) return cmd_volume(cfg, out);
    if (relvolume->parsed()) return cmd_relvolume(cfg, out);
    if (sample->parsed()) return cmd_sample(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace subdist::cli
