#include "tiltsim/operators.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <bit>
#include <stdexcept>

#include "tiltsim/basis.hpp"
#include "tiltsim/model.hpp"

namespace tiltsim {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseC from_triplets(std::vector<Triplet>& t, Eigen::Index dim) {
    SparseC m(dim, dim);
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

int string_parity(std::uint32_t m, int below_site) {
    const std::uint32_t mask = (1u << (below_site - 1)) - 1u;
    return (std::popcount(m & mask) & 1) ? -1 : 1;
}

} // namespace

SparseC number_op(int site, int n_modes) {
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m)
        if (occupied(m, site)) t.emplace_back(m, m, Complex(1.0, 0.0));
    return from_triplets(t, dim);
}

SparseC lowering_spin(int site, int n_modes) {
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    const std::uint32_t bit = 1u << (site - 1);
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m)
        if (m & bit) t.emplace_back(m ^ bit, m, Complex(1.0, 0.0));
    return from_triplets(t, dim);
}

SparseC lowering_fermi(int site, int n_modes) {
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    const std::uint32_t bit = 1u << (site - 1);
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m)
        if (m & bit) t.emplace_back(m ^ bit, m, Complex(double(string_parity(m, site)), 0.0));
    return from_triplets(t, dim);
}

SparseC hopping_term(int i, int j, double amp, int n_modes, bool fermionic) {
    if (i == j) throw std::invalid_argument("hopping_term: sites must differ");
    const int lo = std::min(i, j), hi = std::max(i, j);
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    const std::uint32_t bi = 1u << (lo - 1), bj = 1u << (hi - 1);
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m) {
        const bool oi = m & bi, oj = m & bj;
        if (oi == oj) continue;
        double sign = 1.0;
        if (fermionic) {
            // parity of occupied sites strictly between lo and hi
            const std::uint32_t between = (m >> lo) & ((1u << (hi - lo - 1)) - 1u);
            if (std::popcount(between) & 1) sign = -1.0;
        }
        t.emplace_back(m ^ (bi | bj), m, Complex(amp * sign, 0.0));
    }
    return from_triplets(t, dim);
}

SparseC bond_current(int site, double hopping, int n_modes) {
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    const std::uint32_t bi = 1u << (site - 1), bj = 1u << site;
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m) {
        const bool oi = m & bi, oj = m & bj;
        if (oi == oj) continue;
        // i J/2 c+_j c_{j+1} acting on states with site+1 occupied, minus h.c.
        const double s = oj ? 1.0 : -1.0;
        t.emplace_back(m ^ (bi | bj), m, Complex(0.0, 0.5 * hopping * s));
    }
    return from_triplets(t, dim);
}

SparseC sparse_hamiltonian(const ModelParams& params) {
    params.validate();
    const int n = params.n_sites;
    const Eigen::Index dim = Eigen::Index(1) << n;
    std::vector<Triplet> t;
    for (std::uint32_t m = 0; m < std::uint32_t(dim); ++m) {
        t.emplace_back(m, m, Complex(configuration_energy(m, params), 0.0));
        for (int j = 1; j < n; ++j) {
            if (occupied(m, j) == occupied(m, j + 1)) continue;
            t.emplace_back(m ^ ((1u << (j - 1)) | (1u << j)), m, Complex(0.5 * params.hopping, 0.0));
        }
    }
    return from_triplets(t, dim);
}

SparseC liouvillian(const SparseC& hamiltonian, const std::vector<SparseC>& jumps) {
    const Eigen::Index d = hamiltonian.rows();
    SparseC id(d, d);
    id.setIdentity();

    const Complex minus_i(0.0, -1.0);
    SparseC out = minus_i * Eigen::kroneckerProduct(id, hamiltonian).eval();
    out += (Complex(0.0, 1.0) * Eigen::kroneckerProduct(SparseC(hamiltonian.transpose()), id)).eval();

    for (const auto& jump : jumps) {
        const SparseC jdag_j = SparseC(jump.adjoint()) * jump;
        out += Eigen::kroneckerProduct(jump.conjugate(), jump).eval();
        out -= (Complex(0.5, 0.0) * Eigen::kroneckerProduct(id, jdag_j)).eval();
        out -= (Complex(0.5, 0.0) * Eigen::kroneckerProduct(SparseC(jdag_j.transpose()), id)).eval();
    }
    out.makeCompressed();
    return out;
}

} // namespace tiltsim
