#pragma once

#include <Eigen/Dense>

#include "tiltsim/basis.hpp"
#include "tiltsim/params.hpp"

namespace tiltsim {

/// Diagonal energy of a single occupation state: interaction term plus
/// onsite potential, both measured relative to half filling.
double configuration_energy(std::uint32_t m, const ModelParams& params);

/// Hamiltonian matrix in the given Fock basis. Hopping contributes J/2
/// between states differing by one adjacent particle move; the diagonal is
/// configuration_energy.
Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const FockBasis& basis);

} // namespace tiltsim
