#pragma once

// Data-parallel batch kernels. Each `foo` is an OpenMP loop over independent
// items; `foo_serial` is the plain reference loop kept for tests and the
// benchmark. Both return identical results in identical order.

#include <optional>
#include <span>
#include <vector>

#include "quatsurf/split.hpp"
#include "quatsurf/surfaces.hpp"

namespace quatsurf {

/// n x n evaluation of a surface on grid_parameters(n); cell (iu, iv) is
/// stored at iu * n + iv. Pole and base points are masked (nullopt).
struct SurfaceGrid {
  int n = 0;
  std::vector<Rational> params;
  std::vector<std::optional<Point3>> cells;

  const std::optional<Point3>& at(int iu, int iv) const { return cells[static_cast<std::size_t>(iu * n + iv)]; }
  std::size_t valid_count() const;

  friend bool operator==(const SurfaceGrid&, const SurfaceGrid&) = default;
};

/// Requires n >= 2 (returns an empty grid otherwise).
SurfaceGrid sample_grid(const SurfaceSpec& spec, int n);
SurfaceGrid sample_grid_serial(const SurfaceSpec& spec, int n);

struct SplitOutcome {
  std::optional<SplitCertificate> certificate;
  std::optional<ErrorKind> error;

  friend bool operator==(const SplitOutcome&, const SplitOutcome&) = default;
};

std::vector<SplitOutcome> split_batch(std::span<const Mat2> matrices);
std::vector<SplitOutcome> split_batch_serial(std::span<const Mat2> matrices);

std::vector<bool> degenerate_batch(std::span<const Mat2> matrices);
std::vector<bool> degenerate_batch_serial(std::span<const Mat2> matrices);

struct CurveReport {
  CurveAxis which;
  Rational fixed;
  int points = 0;      // samples that projected to finite points
  bool circle = false; // is_circle_or_line on those points
  std::optional<ErrorKind> error;

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

/// For every fixed value, the u-curve and then the v-curve through it,
/// sampled at `samples`. Samples hitting a pole or base point are skipped.
std::vector<CurveReport> check_coordinate_curves(const SurfaceSpec& spec, std::span<const Rational> fixed,
                                                 std::span<const Rational> samples);
std::vector<CurveReport> check_coordinate_curves_serial(const SurfaceSpec& spec, std::span<const Rational> fixed,
                                                        std::span<const Rational> samples);

}  // namespace quatsurf
