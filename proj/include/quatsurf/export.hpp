#pragma once

#include <ostream>

#include "quatsurf/kernels.hpp"

namespace quatsurf {

inline constexpr int kDefaultDigits = 12;

/// Wavefront OBJ: one vertex per valid cell (row-major), quad faces between
/// valid 2x2 neighborhoods.
void write_obj(const SurfaceGrid& grid, std::ostream& out, int digits = kDefaultDigits);

/// "x,y,z" header, then one valid cell per row; masked cells omitted.
void write_csv(const SurfaceGrid& grid, std::ostream& out, int digits = kDefaultDigits);

}  // namespace quatsurf
