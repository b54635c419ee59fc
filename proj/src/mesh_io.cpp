#include "e2surf/mesh_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "e2surf/errors.hpp"

namespace e2surf {

std::string format_sig17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void export_mesh(const SurfaceGrid& grid, const std::string& path) {
    if (grid.nu < 2 || grid.nv < 2) throw IoError("export_mesh: grid must be at least 2x2");
    for (const auto& s : grid.samples) {
        if (!std::isfinite(s.pos.x) || !std::isfinite(s.pos.y) || !std::isfinite(s.pos.z)) {
            throw IoError("export_mesh: non-finite vertex; narrow the (u, v) ranges");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("export_mesh: cannot open '" + path + "'");

    for (const auto& s : grid.samples) {
        out << "v " << format_sig17(s.pos.x) << ' ' << format_sig17(s.pos.y) << ' '
            << format_sig17(s.pos.z) << '\n';
    }
    for (int iv = 0; iv + 1 < grid.nv; ++iv) {
        for (int iu = 0; iu + 1 < grid.nu; ++iu) {
            const int a = iv * grid.nu + iu + 1;  // OBJ indices are 1-based
            const int b = a + 1;
            const int c = a + grid.nu + 1;
            const int d = a + grid.nu;
            out << "f " << a << ' ' << b << ' ' << c << '\n';
            out << "f " << a << ' ' << c << ' ' << d << '\n';
        }
    }
    if (!out) throw IoError("export_mesh: write failure on '" + path + "'");
}

void export_curve(const std::vector<CurveSample>& samples, const std::string& path) {
    for (const auto& s : samples) {
        if (!std::isfinite(s.x1) || !std::isfinite(s.x2) || !std::isfinite(s.x3)) {
            throw IoError("export_curve: non-finite sample");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("export_curve: cannot open '" + path + "'");
    out << "u,x1,x2,x3\n";
    for (const auto& s : samples) {
        out << format_sig17(s.u) << ',' << format_sig17(s.x1) << ',' << format_sig17(s.x2)
            << ',' << format_sig17(s.x3) << '\n';
    }
    if (!out) throw IoError("export_curve: write failure on '" + path + "'");
}

}  // namespace e2surf
