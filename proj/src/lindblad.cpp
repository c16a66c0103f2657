#include "tiltsim/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tiltsim {

Superoperator build_superoperator(const ModelParams& params) {
    params.validate();
    const int n = params.n_sites;
    if (n > 9)
        throw std::invalid_argument("build_superoperator: 4^N exceeds the sparse backend limit (N <= 9)");

    Superoperator s;
    s.params = params;
    s.n_modes = n;
    s.dim = std::size_t(1) << (2 * n);
    s.hamiltonian = sparse_hamiltonian(params);

    const double g = params.coupling, f = params.driving;
    const auto raise1 = SparseC(lowering_spin(1, n).adjoint());
    const auto raiseN = SparseC(lowering_spin(n, n).adjoint());
    s.jumps.push_back(std::sqrt(g * (1.0 + f) / 8.0) * raise1);          // inject at 1
    s.jumps.push_back(std::sqrt(g * (1.0 - f) / 8.0) * lowering_spin(1, n)); // eject at 1
    s.jumps.push_back(std::sqrt(g * (1.0 - f) / 8.0) * raiseN);          // inject at N
    s.jumps.push_back(std::sqrt(g * (1.0 + f) / 8.0) * lowering_spin(n, n)); // eject at N

    s.matrix = liouvillian(s.hamiltonian, s.jumps);
    return s;
}

namespace detail {

namespace {

Eigen::MatrixXcd finalize(Eigen::MatrixXcd rho) {
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-300)
        throw std::runtime_error("solve_ness: null vector has vanishing trace");
    rho /= tr;
    return rho;
}

} // namespace

double ness_residual(const SparseC& superop, const Eigen::MatrixXcd& rho) {
    const Eigen::Index d2 = rho.size();
    Eigen::Map<const Eigen::VectorXcd> v(rho.data(), d2);
    const double num = (superop * v).norm();
    return num / (superop.norm() * v.norm());
}

void check_density_matrix(const Eigen::MatrixXcd& rho) {
    const double herm = (rho - rho.adjoint()).norm();
    if (herm > 1e-10)
        throw std::runtime_error("density matrix failed Hermiticity check");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10)
        throw std::runtime_error("density matrix failed trace check");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw std::runtime_error("density matrix failed positivity check: min eigenvalue " +
                                 std::to_string(es.eigenvalues().minCoeff()));
}

Eigen::MatrixXcd ness_dense(const SparseC& superop, int n_modes) {
    const Eigen::Index d2 = superop.rows();
    if (d2 > 4096)
        throw std::invalid_argument("solve_ness(dense): superoperator dimension exceeds 4096");
    Eigen::MatrixXcd full = Eigen::MatrixXcd(superop);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(full, true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("solve_ness(dense): eigensolver failed");

    const auto& vals = es.eigenvalues();
    Eigen::Index best = 0, second = -1;
    for (Eigen::Index i = 1; i < vals.size(); ++i)
        if (std::abs(vals(i)) < std::abs(vals(best))) best = i;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (i == best) continue;
        if (second < 0 || std::abs(vals(i)) < std::abs(vals(second))) second = i;
    }
    const double scale = vals.cwiseAbs().maxCoeff();
    if (std::abs(vals(best)) > 1e-8 * scale)
        throw std::runtime_error("solve_ness(dense): no eigenvalue near zero (smallest " +
                                 std::to_string(std::abs(vals(best))) + ")");
    if (second >= 0 && std::abs(vals(second)) < 10.0 * std::abs(vals(best)) &&
        std::abs(vals(second)) < 1e-8 * scale)
        throw std::runtime_error("solve_ness(dense): ambiguous null space (dimension > 1)");

    const Eigen::Index d = Eigen::Index(1) << n_modes;
    Eigen::VectorXcd v = es.eigenvectors().col(best);
    Eigen::Map<const Eigen::MatrixXcd> rho(v.data(), d, d);
    return finalize(rho);
}

Eigen::MatrixXcd ness_iterative(const SparseC& superop, int n_modes) {
    const Eigen::Index d = Eigen::Index(1) << n_modes;

    // The Lindbladian conserves the particle-number difference between bra
    // and ket; the steady state lives in the balanced block (equal counts).
    std::vector<Eigen::Index> block_of(std::size_t(d) * std::size_t(d), -1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t col = 0; col < std::uint32_t(d); ++col) {
        for (std::uint32_t row = 0; row < std::uint32_t(d); ++row) {
            if (std::popcount(row) != std::popcount(col)) continue;
            block_of[std::size_t(col) * std::size_t(d) + row] = Eigen::Index(pairs.size());
            pairs.emplace_back(row, col);
        }
    }
    const Eigen::Index bdim = Eigen::Index(pairs.size());

    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(std::size_t(superop.nonZeros()) / 2);
    for (int k = 0; k < superop.outerSize(); ++k) {
        const Eigen::Index bcol = block_of[std::size_t(k)];
        if (bcol < 0) continue;
        for (SparseC::InnerIterator it(superop, k); it; ++it) {
            const Eigen::Index brow = block_of[std::size_t(it.row())];
            if (brow < 0) continue;
            trips.emplace_back(brow, bcol, it.value());
        }
    }

    // Border with the trace functional: solving (L0 + e_i0 t^T) x = e_i0
    // yields the unique trace-normalizable null vector.
    Eigen::Index anchor = -1;
    for (Eigen::Index i = 0; i < bdim; ++i)
        if (pairs[std::size_t(i)].first == pairs[std::size_t(i)].second) {
            anchor = i;
            break;
        }
    for (Eigen::Index i = 0; i < bdim; ++i)
        if (pairs[std::size_t(i)].first == pairs[std::size_t(i)].second)
            trips.emplace_back(anchor, i, Complex(1.0, 0.0));

    SparseC bordered(bdim, bdim);
    bordered.setFromTriplets(trips.begin(), trips.end());
    bordered.makeCompressed();

    Eigen::SparseLU<SparseC> lu;
    lu.compute(bordered);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("solve_ness(iterative): factorization failed "
                                 "(singular bordered system; null space may be degenerate)");

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(bdim);
    rhs(anchor) = 1.0;
    Eigen::VectorXcd x = lu.solve(rhs);
    // one refinement pass
    x += lu.solve((rhs - bordered * x).eval());

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < bdim; ++i)
        rho(pairs[std::size_t(i)].first, pairs[std::size_t(i)].second) = x(i);
    return finalize(rho);
}

} // namespace detail

DensityMatrix solve_ness(const Superoperator& superop, NessMethod method) {
    if (method == NessMethod::automatic)
        method = superop.dim <= 4096 ? NessMethod::dense : NessMethod::iterative;

    Eigen::MatrixXcd rho = method == NessMethod::dense
                               ? detail::ness_dense(superop.matrix, superop.n_modes)
                               : detail::ness_iterative(superop.matrix, superop.n_modes);

    DensityMatrix out;
    out.matrix = std::move(rho);
    out.basis = build_basis(superop.n_modes);
    out.residual = detail::ness_residual(superop.matrix, out.matrix);
    if (out.residual > 1e-9)
        throw std::runtime_error("solve_ness: residual " + std::to_string(out.residual) +
                                 " above tolerance (possible degenerate steady state)");
    detail::check_density_matrix(out.matrix);
    return out;
}

} // namespace tiltsim
