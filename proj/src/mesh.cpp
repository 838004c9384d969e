#include "slant/io/mesh.hpp"

#include <sstream>

#include "slant/errors.hpp"
#include "slant/frame.hpp"
#include "slant/io/report.hpp"

namespace slant::io {

std::string export_obj(const RuledSurfaceSpec& surface, std::size_t columns, double v_min, double v_max,
                       std::size_t rows) {
  if (columns < 2 || rows < 2) throw BadParams("mesh grid needs at least 2 columns and 2 rows");
  if (!(v_max > v_min)) throw BadParams("mesh v range is degenerate");

  const SampleGrid us = SampleGrid::uniform(surface.range, columns);
  const SampleGrid vs = SampleGrid::uniform({v_min, v_max}, rows);

  std::ostringstream out;
  out << "# slant ruled surface mesh: " << columns << " x " << rows << "\n";
  for (double u : us.u) {
    const Vec3 f = surface.base_curve(u).d0;
    const Vec3 q = surface.director(u).d0;
    for (double v : vs.u) {
      const Vec3 r = f + v * q;
      out << "v " << format_double(r.x) << ' ' << format_double(r.y) << ' ' << format_double(r.z) << '\n';
    }
  }
  auto index = [rows](std::size_t i, std::size_t j) { return i * rows + j + 1; };
  for (std::size_t i = 0; i + 1 < columns; ++i) {
    for (std::size_t j = 0; j + 1 < rows; ++j) {
      out << "f " << index(i, j) << ' ' << index(i, j + 1) << ' ' << index(i + 1, j + 1) << '\n';
      out << "f " << index(i, j) << ' ' << index(i + 1, j + 1) << ' ' << index(i + 1, j) << '\n';
    }
  }
  return out.str();
}

}  // namespace slant::io
