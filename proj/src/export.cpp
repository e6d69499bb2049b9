#include "quatsurf/export.hpp"

#include <vector>

namespace quatsurf {

void write_obj(const SurfaceGrid& grid, std::ostream& out, int digits) {
  out << "# quatsurf grid " << grid.n << "x" << grid.n << "\n";
  std::vector<long> index(grid.cells.size(), 0);
  long next = 1;
  for (std::size_t k = 0; k < grid.cells.size(); ++k) {
    const auto& cell = grid.cells[k];
    if (!cell) continue;
    index[k] = next++;
    out << "v " << to_decimal((*cell)[0], digits) << ' ' << to_decimal((*cell)[1], digits) << ' '
        << to_decimal((*cell)[2], digits) << "\n";
  }
  const auto at = [&](int iu, int iv) { return index[static_cast<std::size_t>(iu * grid.n + iv)]; };
  for (int iu = 0; iu + 1 < grid.n; ++iu)
    for (int iv = 0; iv + 1 < grid.n; ++iv) {
      const long a = at(iu, iv), b = at(iu + 1, iv), c = at(iu + 1, iv + 1), d = at(iu, iv + 1);
      if (a && b && c && d) out << "f " << a << ' ' << b << ' ' << c << ' ' << d << "\n";
    }
}

void write_csv(const SurfaceGrid& grid, std::ostream& out, int digits) {
  out << "x,y,z\n";
  for (const auto& cell : grid.cells) {
    if (!cell) continue;
    out << to_decimal((*cell)[0], digits) << ',' << to_decimal((*cell)[1], digits) << ','
        << to_decimal((*cell)[2], digits) << "\n";
  }
}

}  // namespace quatsurf
