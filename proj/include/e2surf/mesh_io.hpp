#pragma once

#include <string>
#include <vector>

#include "e2surf/surface_grid.hpp"

namespace e2surf {

// Wavefront OBJ export: one `v x y z` line per sample in row-major order,
// each quad cell split into two triangles, 1-based face indices, numbers
// printed with 17 significant digits. Byte-identical across runs for
// identical grids. Throws IoError on unwritable paths or non-finite data.
void export_mesh(const SurfaceGrid& grid, const std::string& path);

struct CurveSample {
    double u;
    double x1, x2, x3;
};

// CSV export with header `u,x1,x2,x3`, 17 significant digits per field.
void export_curve(const std::vector<CurveSample>& samples, const std::string& path);

// 17-significant-digit decimal formatting shared by the exporters.
std::string format_sig17(double x);

}  // namespace e2surf
