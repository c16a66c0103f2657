#pragma once

#include <Eigen/Sparse>

#include <complex>
#include <vector>

#include "tiltsim/params.hpp"

namespace tiltsim {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;

/// n_j over `n_modes` sites, bit j-1 = site j.
SparseC number_op(int site, int n_modes);

/// Hardcore lowering operator sigma^-_j (no fermionic string).
SparseC lowering_spin(int site, int n_modes);

/// Fermionic annihilation c_j with the Jordan-Wigner parity string over
/// sites < j.
SparseC lowering_fermi(int site, int n_modes);

/// amp * (c+_i c_j + c+_j c_i). With `fermionic` the Jordan-Wigner string
/// between i and j is applied; for |i-j| = 1 both conventions coincide.
SparseC hopping_term(int i, int j, double amp, int n_modes, bool fermionic);

/// Particle current on the bond (site, site+1): i J/2 (c+_j c_{j+1} - h.c.).
SparseC bond_current(int site, double hopping, int n_modes);

/// Chain Hamiltonian of `params` as a sparse matrix over the full Fock space.
SparseC sparse_hamiltonian(const ModelParams& params);

/// Column-stacked Liouvillian: -i (I (x) H - H^T (x) I) plus, per jump L,
/// conj(L) (x) L - 1/2 I (x) L+L - 1/2 (L+L)^T (x) I.
SparseC liouvillian(const SparseC& hamiltonian, const std::vector<SparseC>& jumps);

} // namespace tiltsim
