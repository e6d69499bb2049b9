#include "quatsurf/kernels.hpp"

#include <algorithm>
#include <exception>

namespace quatsurf {

namespace {

std::optional<Point3> grid_cell(const SurfaceSpec& spec, const Rational& u, const Rational& v) {
  try {
    return surface_point(spec, u, v);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PolePoint || e.kind() == ErrorKind::BasePoint ||
        e.kind() == ErrorKind::MissingParametrization)
      return std::nullopt;
    throw;
  }
}

SurfaceGrid empty_grid(int n) {
  SurfaceGrid g;
  if (n < 2) return g;
  g.n = n;
  g.params = grid_parameters(n);
  g.cells.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  return g;
}

SplitOutcome split_one(const Mat2& m) {
  try {
    return {split(m), std::nullopt};
  } catch (const Error& e) {
    return {std::nullopt, e.kind()};
  }
}

CurveReport check_one(const SurfaceSpec& spec, CurveAxis which, const Rational& fixed,
                      std::span<const Rational> samples) {
  CurveReport report{which, fixed, 0, false, std::nullopt};
  std::vector<Point3> points;
  for (const Rational& s : samples) {
    const Rational& u = which == CurveAxis::U ? fixed : s;
    const Rational& v = which == CurveAxis::U ? s : fixed;
    if (auto p = grid_cell(spec, u, v)) points.push_back(std::move(*p));
  }
  report.points = static_cast<int>(points.size());
  try {
    report.circle = is_circle_or_line(points);
  } catch (const Error& e) {
    report.error = e.kind();
  }
  return report;
}

}  // namespace

std::size_t SurfaceGrid::valid_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); }));
}

SurfaceGrid sample_grid(const SurfaceSpec& spec, int n) {
  SurfaceGrid g = empty_grid(n);
  const long total = static_cast<long>(g.cells.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    const auto iu = static_cast<std::size_t>(idx / n);
    const auto iv = static_cast<std::size_t>(idx % n);
    try {
      g.cells[static_cast<std::size_t>(idx)] = grid_cell(spec, g.params[iu], g.params[iv]);
    } catch (...) {
#pragma omp critical(quatsurf_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return g;
}

SurfaceGrid sample_grid_serial(const SurfaceSpec& spec, int n) {
  SurfaceGrid g = empty_grid(n);
  for (int iu = 0; iu < g.n; ++iu)
    for (int iv = 0; iv < g.n; ++iv)
      g.cells[static_cast<std::size_t>(iu * n + iv)] = grid_cell(spec, g.params[iu], g.params[iv]);
  return g;
}

std::vector<SplitOutcome> split_batch(std::span<const Mat2> matrices) {
  std::vector<SplitOutcome> out(matrices.size());
  const long total = static_cast<long>(matrices.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) out[static_cast<std::size_t>(k)] = split_one(matrices[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<SplitOutcome> split_batch_serial(std::span<const Mat2> matrices) {
  std::vector<SplitOutcome> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(split_one(m));
  return out;
}

std::vector<bool> degenerate_batch(std::span<const Mat2> matrices) {
  // vector<bool> packs bits; write through a byte buffer to avoid races.
  std::vector<unsigned char> flags(matrices.size());
  const long total = static_cast<long>(matrices.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k)
    flags[static_cast<std::size_t>(k)] = is_degenerate(matrices[static_cast<std::size_t>(k)]) ? 1 : 0;
  return {flags.begin(), flags.end()};
}

std::vector<bool> degenerate_batch_serial(std::span<const Mat2> matrices) {
  std::vector<bool> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(is_degenerate(m));
  return out;
}

std::vector<CurveReport> check_coordinate_curves(const SurfaceSpec& spec, std::span<const Rational> fixed,
                                                 std::span<const Rational> samples) {
  std::vector<CurveReport> out(2 * fixed.size());
  const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const auto which = k % 2 == 0 ? CurveAxis::U : CurveAxis::V;
    out[static_cast<std::size_t>(k)] = check_one(spec, which, fixed[static_cast<std::size_t>(k / 2)], samples);
  }
  return out;
}

std::vector<CurveReport> check_coordinate_curves_serial(const SurfaceSpec& spec, std::span<const Rational> fixed,
                                                        std::span<const Rational> samples) {
  std::vector<CurveReport> out;
  out.reserve(2 * fixed.size());
  for (const Rational& f : fixed) {
    out.push_back(check_one(spec, CurveAxis::U, f, samples));
    out.push_back(check_one(spec, CurveAxis::V, f, samples));
  }
  return out;
}

}  // namespace quatsurf
