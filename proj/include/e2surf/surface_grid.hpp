#pragma once

#include <complex>
#include <vector>

#include "e2surf/e2_core.hpp"

namespace e2surf {

// One sampled point of an immersed surface with its diagnostics.
struct SurfaceSample {
    GroupElement pos;
    std::complex<double> g;  // projected Gauss map
    double rho2 = 0.0;       // conformal factor of the induced metric
    double kgauss = 0.0;     // Gauss curvature
};

// Rectangular (u, v) sampling of an immersion, row-major in v:
// sample index = iv * nu + iu.
struct SurfaceGrid {
    double u_min = 0.0, u_max = 0.0;
    double v_min = 0.0, v_max = 0.0;
    int nu = 0, nv = 0;
    std::vector<SurfaceSample> samples;

    double u_at(int iu) const {
        return u_min + (u_max - u_min) * iu / (nu - 1);
    }
    double v_at(int iv) const {
        return v_min + (v_max - v_min) * iv / (nv - 1);
    }
    const SurfaceSample& at(int iu, int iv) const {
        return samples[static_cast<std::size_t>(iv) * nu + iu];
    }
};

}  // namespace e2surf
