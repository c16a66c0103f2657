#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "tiltsim/basis.hpp"
#include "tiltsim/params.hpp"

namespace tiltsim {

/// Combined charge-conjugation/center-reflection image of a state:
/// U n_j U+ = 1 - n_{N-j+1}.
std::uint32_t cp_image(std::uint32_t m, int n_sites);

struct SectorLabel {
    std::optional<int> particle_number; // set only for the half-filled sectors
    int parity = +1;                    // CP eigenvalue, +1 or -1
};

/// One CP equivalence class. `period` is 2 when the class has two distinct
/// members {rep, cp_image(rep)} and 1 when the representative is CP
/// self-symmetric. The representative is the numerically larger member.
struct SectorElement {
    std::uint32_t representative = 0;
    int period = 1;
};

struct SectorBasis {
    SectorLabel label;
    int n_sites = 0;
    std::vector<SectorElement> elements;

    std::size_t dimension() const { return elements.size(); }

    /// Basis vector `i` as a normalized vector over the full 2^N Fock space
    /// (states in increasing integer order): (|r> + parity |cp(r)>)/sqrt(2)
    /// for period-2 classes, |r> for period-1 classes.
    Eigen::VectorXd embed(std::size_t i) const;
};

/// CP symmetry sectors at mu = -E(N+1)/4. For even N the half-filled
/// subspace splits into combined (n = N/2, parity) sectors; the remaining
/// states form parity-only sectors. For odd N only parity sectors exist.
/// Rejects a non-CP-symmetric chemical potential.
std::vector<SectorBasis> cp_sectors(const ModelParams& params);

struct SectorHamiltonian {
    SectorBasis sector;
    Eigen::MatrixXd matrix;
};

SectorHamiltonian sector_hamiltonian(const ModelParams& params, const SectorBasis& sector);

} // namespace tiltsim
