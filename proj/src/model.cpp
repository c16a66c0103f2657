#include "tiltsim/model.hpp"

#include <stdexcept>

namespace tiltsim {

double configuration_energy(std::uint32_t m, const ModelParams& params) {
    const int n = params.n_sites;
    const double mu = params.mu();
    double e = 0.0;
    for (int j = 1; j < n; ++j) {
        const double nj = occupied(m, j) ? 0.5 : -0.5;
        const double nj1 = occupied(m, j + 1) ? 0.5 : -0.5;
        e += params.interaction * nj * nj1;
    }
    for (int j = 1; j <= n; ++j) {
        const double nj = occupied(m, j) ? 0.5 : -0.5;
        e += (mu + 0.5 * params.tilt * double(j)) * nj;
    }
    return e;
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const FockBasis& basis) {
    params.validate();
    if (basis.n_sites != params.n_sites)
        throw std::invalid_argument("build_hamiltonian: basis and params disagree on n_sites");

    const auto dim = Eigen::Index(basis.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const std::uint32_t m = basis.states[std::size_t(col)];
        h(col, col) = configuration_energy(m, params);
        for (int j = 1; j < params.n_sites; ++j) {
            if (occupied(m, j) == occupied(m, j + 1)) continue;
            const std::uint32_t swapped = m ^ ((1u << (j - 1)) | (1u << j));
            const Eigen::Index row = Eigen::Index(basis.index_of(swapped));
            h(row, col) += 0.5 * params.hopping;
        }
    }
    return h;
}

} // namespace tiltsim
