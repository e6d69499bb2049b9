#include "quatsurf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "quatsurf/export.hpp"
#include "quatsurf/json_io.hpp"
#include "quatsurf/kernels.hpp"

namespace quatsurf::cli {

namespace {

using io::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot write " + path);
  file << text;
}

void emit_json(const json& j, const std::string& path, std::ostream& out) { emit(io::dump(j) + "\n", path, out); }

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << io::dump(json{{"error", std::string(kind)}, {"message", message}}) << "\n";
}

Family parse_family(const std::string& letter) {
  if (letter == "e") return Family::E;
  if (letter == "c") return Family::C;
  return Family::D;
}

SurfaceSpec load_surface(const std::string& path, Family expected) {
  SurfaceSpec spec = io::surface_from_json(io::read_file(path));
  if (spec.family() != expected)
    throw Error(ErrorKind::FamilyMismatch, std::string("spec file describes family ") + family_letter(spec.family()) +
                                               ", --family says " + family_letter(expected));
  return spec;
}

std::vector<Rational> random_parameters(std::mt19937_64& rng, int count) {
  // at least 2 * bound + 1 distinct integers are available, so the loop ends
  const long bound = std::max(20L, static_cast<long>(count));
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 10);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::vector<Rational> deterministic_parameters(int count) {
  if (count == 1) return {Rational(0)};
  return grid_parameters(count);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quaternionic matrix splitting and circle-surface tools"};
  app.require_subcommand(1);

  std::string in_path, out_path, a_path, b_path, spec_path, family, format = "obj";
  int grid = 0, digits = kDefaultDigits, curves = 0, samples = 0;
  std::optional<unsigned long long> seed;

  auto* split_cmd = app.add_subcommand("split", "Factor a degenerate matrix as a Kronecker product");
  split_cmd->add_option("--in", in_path, "Matrix JSON")->required();
  split_cmd->add_option("--out", out_path, "Certificate JSON (default: stdout)");

  auto* degen_cmd = app.add_subcommand("degenerate", "Decide whether a matrix has left-dependent rows");
  degen_cmd->add_option("--in", in_path, "Matrix JSON")->required();
  degen_cmd->add_option("--out", out_path, "Result JSON (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify-tuple", "Check the Pythagorean identity and matrix degeneracy");
  verify_cmd->add_option("--in", in_path, "Tuple JSON")->required();
  verify_cmd->add_option("--out", out_path, "Result JSON (default: stdout)");

  auto* pair_cmd = app.add_subcommand("tuple-from-pair", "Build a Pythagorean tuple from two quaternionic polynomials");
  pair_cmd->add_option("--a", a_path, "Polynomial JSON")->required();
  pair_cmd->add_option("--b", b_path, "Polynomial JSON")->required();
  pair_cmd->add_option("--out", out_path, "Tuple JSON (default: stdout)");

  auto* gen_cmd = app.add_subcommand("gen-surface", "Sample a surface on a parameter grid and export it");
  gen_cmd->add_option("--family", family, "Surface family")->required()->check(CLI::IsMember({"e", "c", "d"}));
  gen_cmd->add_option("--spec", spec_path, "Surface JSON")->required();
  gen_cmd->add_option("--grid", grid, "Grid size N (N x N cells)")->required()->check(CLI::Range(2, 4096));
  gen_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"obj", "csv"}));
  gen_cmd->add_option("--digits", digits, "Fractional digits in the decimal output")->check(CLI::Range(0, 100));
  gen_cmd->add_option("--out", out_path, "Output file")->required();

  auto* check_cmd = app.add_subcommand("check-circles", "Verify that coordinate curves are circles");
  check_cmd->add_option("--family", family, "Surface family")->required()->check(CLI::IsMember({"e", "c"}));
  check_cmd->add_option("--spec", spec_path, "Surface JSON")->required();
  check_cmd->add_option("--curves", curves, "Curves per parameter")->required()->check(CLI::Range(1, 1000));
  check_cmd->add_option("--samples", samples, "Samples per curve")->required()->check(CLI::Range(5, 10000));
  check_cmd->add_option("--seed", seed, "Draw fixed values and samples at random with this seed");
  check_cmd->add_option("--out", out_path, "Report JSON (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (split_cmd->parsed()) {
      const Mat2 m = io::mat2_from_json(io::read_file(in_path));
      emit_json(io::to_json(split(m)), out_path, out);
    } else if (degen_cmd->parsed()) {
      const Mat2 m = io::mat2_from_json(io::read_file(in_path));
      emit_json(json{{"degenerate", is_degenerate(m)}}, out_path, out);
    } else if (verify_cmd->parsed()) {
      const auto check = check_tuple(io::tuple_from_json(io::read_file(in_path)));
      emit_json(json{{"pythagorean", check.pythagorean}, {"matrix_degenerate", check.matrix_degenerate}}, out_path,
                out);
    } else if (pair_cmd->parsed()) {
      const QPolyUV a = io::qpoly_from_json(io::read_file(a_path));
      const QPolyUV b = io::qpoly_from_json(io::read_file(b_path));
      emit_json(io::to_json(tuple_from_pair(a, b)), out_path, out);
    } else if (gen_cmd->parsed()) {
      const SurfaceSpec spec = load_surface(spec_path, parse_family(family));
      const SurfaceGrid g = sample_grid(spec, grid);
      std::ostringstream text;
      if (format == "csv")
        write_csv(g, text, digits);
      else
        write_obj(g, text, digits);
      emit(text.str(), out_path, out);
    } else if (check_cmd->parsed()) {
      const SurfaceSpec spec = load_surface(spec_path, parse_family(family));
      if (!seed) {
        if (const char* env = std::getenv("SEED_DEFAULT"); env != nullptr && *env != '\0') {
          try {
            seed = std::stoull(env);
          } catch (const std::exception&) {
            report_error(err, "UsageError", "SEED_DEFAULT must be a non-negative integer");
            return kExitUsage;
          }
        }
      }
      std::vector<Rational> fixed, params;
      if (seed) {
        std::mt19937_64 rng(*seed);
        fixed = random_parameters(rng, curves);
        params = random_parameters(rng, samples);
      } else {
        fixed = deterministic_parameters(curves);
        params = deterministic_parameters(samples);
      }
      json report = json::array();
      bool all = true;
      for (const auto& c : check_coordinate_curves(spec, fixed, params)) {
        json entry{{"axis", c.which == CurveAxis::U ? "u" : "v"},
                   {"fixed", to_string(c.fixed)},
                   {"points", c.points},
                   {"circle", c.circle}};
        if (c.error) entry["error"] = std::string(kind_name(*c.error));
        all = all && c.circle;
        report.push_back(std::move(entry));
      }
      emit_json(json{{"family", family}, {"curves", std::move(report)}, {"all_circles", all}}, out_path, out);
    }
  } catch (const Error& e) {
    report_error(err, kind_name(e.kind()), e.what());
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace quatsurf::cli
