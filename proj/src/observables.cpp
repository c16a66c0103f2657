#include "tiltsim/observables.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "tiltsim/operators.hpp"

namespace tiltsim {

namespace {

double real_trace_product(const SparseC& op, const Eigen::MatrixXcd& rho) {
    // tr(op rho) = sum_{m,n} op(m,n) rho(n,m)
    Complex acc(0.0, 0.0);
    for (int k = 0; k < op.outerSize(); ++k)
        for (SparseC::InnerIterator it(op, k); it; ++it)
            acc += it.value() * rho(it.col(), it.row());
    return acc.real();
}

} // namespace

double operator_entanglement(const Eigen::MatrixXcd& rho, int n_sites, int cut) {
    if (cut < 1 || cut >= n_sites)
        throw std::invalid_argument("operator_entanglement: cut outside [1, N-1]");
    const Eigen::Index da = Eigen::Index(1) << cut;
    const Eigen::Index db = Eigen::Index(1) << (n_sites - cut);

    // group (row_a, col_a) indices against (row_b, col_b)
    Eigen::MatrixXcd m(da * da, db * db);
    for (Eigen::Index col = 0; col < rho.cols(); ++col) {
        const Eigen::Index ca = col % da, cb = col / da;
        for (Eigen::Index row = 0; row < rho.rows(); ++row) {
            const Eigen::Index ra = row % da, rb = row / da;
            m(ra + da * ca, rb + db * cb) = rho(row, col);
        }
    }
    m /= rho.norm();

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double s = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double w = svd.singularValues()(i) * svd.singularValues()(i);
        if (w > 1e-300) s -= w * std::log2(w);
    }
    return s;
}

NessObservables observables(const DensityMatrix& rho, const ModelParams& params) {
    const int n = params.n_sites;
    if (rho.matrix.rows() != (Eigen::Index(1) << n))
        throw std::invalid_argument("observables: density matrix dimension does not match params");

    NessObservables out;
    out.populations.resize(n);
    for (int j = 1; j <= n; ++j) {
        double p = 0.0;
        for (Eigen::Index m = 0; m < rho.matrix.rows(); ++m)
            if (occupied(std::uint32_t(m), j)) p += rho.matrix(m, m).real();
        out.populations(j - 1) = p;
    }

    out.bond_currents.resize(n - 1);
    for (int j = 1; j < n; ++j)
        out.bond_currents(j - 1) = real_trace_product(bond_current(j, params.hopping, n), rho.matrix);
    out.current = out.bond_currents.mean();
    out.current_from_n1 =
        params.coupling / 8.0 * (params.driving + 1.0 - 2.0 * out.populations(0));
    out.impurity = 1.0 - rho.matrix.squaredNorm();
    out.osee = operator_entanglement(rho.matrix, n, n / 2);
    return out;
}

EigenbasisDecomposition eigenbasis_decomposition(const DensityMatrix& rho,
                                                 const ModelParams& params, int bond) {
    if (bond < 1 || bond >= params.n_sites)
        throw std::invalid_argument("eigenbasis_decomposition: bond outside [1, N-1]");

    const auto current_op = bond_current(bond, params.hopping, params.n_sites);
    EigenbasisDecomposition out;
    out.bond = bond;

    for (const auto& sector : cp_sectors(params)) {
        const auto sh = sector_hamiltonian(params, sector);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sh.matrix);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigenbasis_decomposition: sector eigensolver failed");

        const auto dim = Eigen::Index(sector.dimension());
        Eigen::MatrixXd embedded(rho.matrix.rows(), dim);
        for (Eigen::Index i = 0; i < dim; ++i) embedded.col(i) = sector.embed(std::size_t(i));
        Eigen::MatrixXd vectors = embedded * es.eigenvectors(); // full-space eigenvectors

        const double gram = (vectors.transpose() * vectors - Eigen::MatrixXd::Identity(dim, dim)).norm();
        if (gram > 1e-10)
            throw std::runtime_error("eigenbasis_decomposition: sector eigenbasis not orthonormal");

        const Eigen::MatrixXcd vc = vectors.cast<Complex>();
        SectorDecomposition sd;
        sd.label = sector.label;
        sd.eigenvalues = es.eigenvalues();
        sd.rho = vc.adjoint() * rho.matrix * vc;
        sd.current_elements = vc.adjoint() * (current_op * vc);
        out.probability_sum += sd.rho.trace().real();
        out.reassembled_current += (sd.rho.transpose().cwiseProduct(sd.current_elements)).sum().real();
        out.sectors.push_back(std::move(sd));
    }
    return out;
}

Rectification rectification(const ModelParams& params, NessMethod method) {
    const double f = std::abs(params.driving);
    if (f == 0.0) throw std::invalid_argument("rectification: driving must be nonzero");

    const ModelParams fwd = params.with_driving(f);
    const ModelParams rev = params.with_driving(-f);

    Rectification out;
    out.forward = observables(solve_ness(build_superoperator(fwd), method), fwd).current;
    out.reverse = observables(solve_ness(build_superoperator(rev), method), rev).current;
    if (std::abs(out.reverse) < 1e-300) {
        out.overflow = true;
        out.coefficient = std::numeric_limits<double>::infinity();
    } else {
        out.coefficient = -out.forward / out.reverse;
    }
    return out;
}

} // namespace tiltsim
