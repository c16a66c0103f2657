#pragma once

#include "tiltsim/params.hpp"

namespace tiltsim {

/// Zeroth- and second-order energies of the n-particle domain states pinned
/// to the left and right boundaries:
///   E_{n,L/R} = 1/4 [Delta (N-3) -+ E n (N-n)],
///   corrected by J^2/(4 Delta - 2 E) and J^2/(4 Delta + 2 E) respectively.
struct DomainEnergies {
    double left = 0.0;
    double right = 0.0;
    double corrected_left = 0.0;
    double corrected_right = 0.0;
};

/// Throws when a perturbative denominator is within `pole_tol` of zero.
DomainEnergies perturbative_energies(const ModelParams& params, int n,
                                     double pole_tol = 1e-9);

/// Closed-form second-order energies of the three remaining half-filled even
/// CP basis states of the four-site chain. Labels read site 1 first.
struct N4Energies {
    double e_1010 = 0.0;      // alternating state occupying odd sites
    double e_0101 = 0.0;      // alternating state occupying even sites
    double e_1001_plus = 0.0; // even combination of the edge pair states
};

N4Energies perturbative_energies_n4(const ModelParams& params, double pole_tol = 1e-9);

/// Tilt at which the corrected left-domain energy meets the corrected
/// e_1001_plus level for N=4, located by bisection on [lo, hi].
double perturbative_crossing_n4(const ModelParams& params, double lo = 0.1, double hi = 4.0);

} // namespace tiltsim
