#pragma once

#include <Eigen/Dense>

#include <vector>

#include "tiltsim/basis.hpp"
#include "tiltsim/operators.hpp"
#include "tiltsim/params.hpp"

namespace tiltsim {

/// Vectorized Lindbladian (column stacking) over the 4^N operator space.
struct Superoperator {
    ModelParams params;
    int n_modes = 0;
    std::size_t dim = 0;          // 4^n_modes
    SparseC matrix;
    SparseC hamiltonian;          // 2^n_modes
    std::vector<SparseC> jumps;
};

/// Assembles -i[H, .] plus the boundary dissipators
/// L+_{1,N} = sqrt(Gamma(1 +- f)/8) c+_{1,N}, L-_{1,N} = sqrt(Gamma(1 -+ f)/8) c_{1,N}.
Superoperator build_superoperator(const ModelParams& params);

enum class NessMethod { automatic, dense, iterative };

struct DensityMatrix {
    Eigen::MatrixXcd matrix;
    FockBasis basis;
    double residual = 0.0; // ||L rho|| / (||L||_F ||rho||_F)
};

/// Steady state of the Lindbladian, Hermitized and trace-normalized.
/// `dense` diagonalizes the full superoperator and picks the null eigenvector
/// (requires 4^N <= 4096); `iterative` solves a bordered sparse linear system
/// on the particle-number-difference-conserving block, which contains the
/// steady state. `automatic` selects dense when it fits.
/// Throws on ambiguous null spaces and on residuals above tolerance.
DensityMatrix solve_ness(const Superoperator& superop, NessMethod method = NessMethod::automatic);

/// Internals shared with the mesoscopic-leads module.
namespace detail {
Eigen::MatrixXcd ness_dense(const SparseC& superop, int n_modes);
Eigen::MatrixXcd ness_iterative(const SparseC& superop, int n_modes);
double ness_residual(const SparseC& superop, const Eigen::MatrixXcd& rho);
void check_density_matrix(const Eigen::MatrixXcd& rho);
} // namespace detail

} // namespace tiltsim
