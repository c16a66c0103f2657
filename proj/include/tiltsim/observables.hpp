#pragma once

#include <Eigen/Dense>

#include <vector>

#include "tiltsim/lindblad.hpp"
#include "tiltsim/params.hpp"
#include "tiltsim/sectors.hpp"

namespace tiltsim {

struct NessObservables {
    Eigen::VectorXd populations;    // <n_j>, j = 1..N
    Eigen::VectorXd bond_currents;  // <J_j>, j = 1..N-1
    double current = 0.0;           // mean bond current
    double current_from_n1 = 0.0;   // Gamma/8 (f + 1 - 2 <n_1>)
    double impurity = 0.0;          // 1 - tr(rho^2)
    double osee = 0.0;              // operator space entanglement entropy, half cut
};

NessObservables observables(const DensityMatrix& rho, const ModelParams& params);

/// Operator entanglement entropy of rho across sites [1..cut] | [cut+1..N]:
/// -sum lambda^2 log2 lambda^2 over the Schmidt coefficients of the
/// vectorized, Frobenius-normalized density matrix.
double operator_entanglement(const Eigen::MatrixXcd& rho, int n_sites, int cut);

struct SectorDecomposition {
    SectorLabel label;
    Eigen::VectorXd eigenvalues;        // ascending sector spectrum
    Eigen::MatrixXcd rho;               // <mu|rho|nu> in the sector eigenbasis
    Eigen::MatrixXcd current_elements;  // <nu|J_q|mu>
};

struct EigenbasisDecomposition {
    int bond = 1;
    std::vector<SectorDecomposition> sectors;
    double probability_sum = 0.0;      // sum of all sector eigenstate probabilities
    double reassembled_current = 0.0;  // sum_s sum_{mu nu} rho^s_{mu nu} J^s_{nu mu}
};

/// Decomposition of the steady state over the CP sector eigenbases. Requires
/// the CP-symmetric chemical potential; throws when a sector eigenbasis
/// fails the orthonormality check.
EigenbasisDecomposition eigenbasis_decomposition(const DensityMatrix& rho,
                                                 const ModelParams& params, int bond);

struct Rectification {
    double forward = 0.0;       // current at +|f|
    double reverse = 0.0;       // current at -|f|
    double coefficient = 1.0;   // R = -J_F / J_R
    bool overflow = false;      // |J_R| below representable threshold
};

Rectification rectification(const ModelParams& params,
                            NessMethod method = NessMethod::automatic);

} // namespace tiltsim
