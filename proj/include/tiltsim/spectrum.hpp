#pragma once

#include <Eigen/Dense>

#include <vector>

#include "tiltsim/params.hpp"
#include "tiltsim/sectors.hpp"

namespace tiltsim {

struct GapRecord {
    int lower_band = 0;   // gap between bands lower_band and lower_band+1 (0-based)
    double tilt = 0.0;    // grid point of the smallest sampled gap
    double gap = 0.0;
};

/// Sorted eigenvalues of one symmetry sector on an ascending tilt grid.
/// The chemical potential is re-derived per grid point (CP value) unless the
/// template fixes it explicitly.
struct SpectrumSweep {
    ModelParams params;   // template; tilt replaced per grid point
    SectorBasis sector;
    std::vector<double> tilt_grid;
    std::vector<Eigen::VectorXd> energies; // one ascending vector per grid point
    std::vector<GapRecord> gaps;           // per adjacent band pair, minimum over the grid
};

SpectrumSweep sweep_spectrum(const ModelParams& params, const SectorBasis& sector,
                             const std::vector<double>& tilt_grid);

struct AvoidedCrossing {
    int lower_band = 0;
    double tilt = 0.0;    // refined location of the gap minimum
    double gap = 0.0;     // refined minimum gap
};

/// Interior local minima of each adjacent band gap, bracketed on the grid and
/// refined by golden-section search to `tilt_tol`. Monotone gaps contribute
/// nothing. Results are sorted by tilt.
std::vector<AvoidedCrossing> find_avoided_crossings(const SpectrumSweep& sweep,
                                                    double tilt_tol = 1e-6);

} // namespace tiltsim
