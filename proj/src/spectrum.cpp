#include "tiltsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tiltsim {

namespace {

Eigen::VectorXd sector_eigenvalues(const ModelParams& tmpl, const SectorBasis& sector, double tilt) {
    ModelParams p = tmpl;
    p.tilt = tilt;
    const auto sh = sector_hamiltonian(p, sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sh.matrix, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("sweep_spectrum: eigensolver failed at tilt " + std::to_string(tilt));
    return es.eigenvalues();
}

} // namespace

SpectrumSweep sweep_spectrum(const ModelParams& params, const SectorBasis& sector,
                             const std::vector<double>& tilt_grid) {
    if (tilt_grid.empty())
        throw std::invalid_argument("sweep_spectrum: empty tilt grid");
    if (std::adjacent_find(tilt_grid.begin(), tilt_grid.end(),
                           [](double a, double b) { return a >= b; }) != tilt_grid.end())
        throw std::invalid_argument("sweep_spectrum: tilt grid must be strictly increasing");

    SpectrumSweep sweep;
    sweep.params = params;
    sweep.sector = sector;
    sweep.tilt_grid = tilt_grid;
    sweep.energies.reserve(tilt_grid.size());
    for (double e : tilt_grid) sweep.energies.push_back(sector_eigenvalues(params, sector, e));

    const int bands = int(sweep.energies.front().size());
    for (int b = 0; b + 1 < bands; ++b) {
        GapRecord rec{b, tilt_grid.front(), std::numeric_limits<double>::infinity()};
        for (std::size_t i = 0; i < tilt_grid.size(); ++i) {
            const double g = sweep.energies[i](b + 1) - sweep.energies[i](b);
            if (g < rec.gap) {
                rec.gap = g;
                rec.tilt = tilt_grid[i];
            }
        }
        sweep.gaps.push_back(rec);
    }
    return sweep;
}

std::vector<AvoidedCrossing> find_avoided_crossings(const SpectrumSweep& sweep, double tilt_tol) {
    const std::size_t npts = sweep.tilt_grid.size();
    std::vector<AvoidedCrossing> out;
    if (npts < 3) return out;

    const int bands = int(sweep.energies.front().size());
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);

    for (int b = 0; b + 1 < bands; ++b) {
        auto gap_at = [&](double tilt) {
            const auto ev = sector_eigenvalues(sweep.params, sweep.sector, tilt);
            return ev(b + 1) - ev(b);
        };
        std::vector<double> g(npts);
        for (std::size_t i = 0; i < npts; ++i)
            g[i] = sweep.energies[i](b + 1) - sweep.energies[i](b);

        for (std::size_t i = 1; i + 1 < npts; ++i) {
            if (!(g[i] < g[i - 1] && g[i] <= g[i + 1])) continue;
            // golden-section on the bracketing interval
            double lo = sweep.tilt_grid[i - 1], hi = sweep.tilt_grid[i + 1];
            double x1 = hi - golden * (hi - lo);
            double x2 = lo + golden * (hi - lo);
            double f1 = gap_at(x1), f2 = gap_at(x2);
            while (hi - lo > tilt_tol) {
                if (f1 <= f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - golden * (hi - lo);
                    f1 = gap_at(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + golden * (hi - lo);
                    f2 = gap_at(x2);
                }
            }
            const double tilt = 0.5 * (lo + hi);
            out.push_back({b, tilt, gap_at(tilt)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AvoidedCrossing& a, const AvoidedCrossing& c) { return a.tilt < c.tilt; });
    return out;
}

} // namespace tiltsim
