#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tiltsim {

/// Parameters of the boundary-driven tilted chain.
///
/// The Hamiltonian is
///   H = sum_j [ J/2 (c+_j c_{j+1} + h.c.) + Delta (n_j - 1/2)(n_{j+1} - 1/2) ]
///     + sum_j (mu + E/2 j)(n_j - 1/2),
/// driven at the boundaries by jump operators
///   L+_{1,N} = sqrt(Gamma (1 +- f)/8) c+_{1,N},
///   L-_{1,N} = sqrt(Gamma (1 -+ f)/8) c_{1,N}.
/// When chem_potential is unset, mu = -E (N+1)/4, the value at which the
/// model has combined charge-conjugation/reflection (CP) symmetry.
struct ModelParams {
    int n_sites = 2;
    double hopping = 1.0;       // J, sets the energy scale
    double interaction = 0.0;   // Delta
    double tilt = 0.0;          // E; the potential slope is E/2 per site
    std::optional<double> chem_potential;
    double coupling = 1.0;      // Gamma
    double driving = 1.0;       // f in [-1, 1]

    double mu() const {
        return chem_potential ? *chem_potential
                              : -tilt * double(n_sites + 1) / 4.0;
    }

    bool has_cp_symmetric_mu(double tol = 1e-12) const {
        return std::abs(mu() + tilt * double(n_sites + 1) / 4.0) <= tol;
    }

    void validate() const {
        if (n_sites < 2)
            throw std::invalid_argument("ModelParams: n_sites must be >= 2");
        if (std::abs(driving) > 1.0 + 1e-15)
            throw std::invalid_argument("ModelParams: |driving| must be <= 1");
        if (coupling <= 0.0)
            throw std::invalid_argument("ModelParams: coupling must be > 0");
    }

    ModelParams with_driving(double f) const {
        ModelParams p = *this;
        p.driving = f;
        return p;
    }

    ModelParams with_tilt(double e) const {
        ModelParams p = *this;
        p.tilt = e;
        if (!chem_potential) p.chem_potential.reset();
        return p;
    }
};

} // namespace tiltsim
