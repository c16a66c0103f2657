#include "tiltsim/perturbation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tiltsim {

namespace {

void check_pole(double denom, double tol, const char* what) {
    if (std::abs(denom) < tol)
        throw std::domain_error(std::string("perturbative energies: denominator ") + what +
                                " within tolerance of zero (degenerate correction)");
}

} // namespace

DomainEnergies perturbative_energies(const ModelParams& params, int n, double pole_tol) {
    params.validate();
    if (n < 0 || n > params.n_sites)
        throw std::invalid_argument("perturbative_energies: particle number outside [0, N]");

    const double delta = params.interaction;
    const double e = params.tilt;
    const double j2 = params.hopping * params.hopping;
    const double dl = 4.0 * delta - 2.0 * e;
    const double dr = 4.0 * delta + 2.0 * e;
    check_pole(dl, pole_tol, "4*Delta - 2*E");
    check_pole(dr, pole_tol, "4*Delta + 2*E");

    DomainEnergies out;
    const double base = 0.25 * delta * double(params.n_sites - 3);
    const double split = 0.25 * e * double(n) * double(params.n_sites - n);
    out.left = base - split;
    out.right = base + split;
    out.corrected_left = out.left + j2 / dl;
    out.corrected_right = out.right + j2 / dr;
    return out;
}

N4Energies perturbative_energies_n4(const ModelParams& params, double pole_tol) {
    params.validate();
    if (params.n_sites != 4)
        throw std::invalid_argument("perturbative_energies_n4: requires N = 4");

    const double delta = params.interaction;
    const double e = params.tilt;
    const double j2 = params.hopping * params.hopping;
    check_pole(e - 2.0 * delta, pole_tol, "E - 2*Delta");
    check_pole(e + delta, pole_tol, "E + Delta");
    check_pole(e - delta, pole_tol, "E - Delta");
    check_pole(e + 2.0 * delta, pole_tol, "E + 2*Delta");

    N4Energies out;
    out.e_1010 = -0.25 * (2.0 * e + 3.0 * delta) +
                 0.5 * j2 * (1.0 / (e - 2.0 * delta) - 2.0 / (e + delta));
    out.e_0101 = 0.25 * (2.0 * e - 3.0 * delta) +
                 0.5 * j2 * (2.0 / (e - delta) - 1.0 / (e + 2.0 * delta));
    out.e_1001_plus = -0.25 * delta + j2 * (1.0 / (delta + e) + 1.0 / (delta - e));
    return out;
}

double perturbative_crossing_n4(const ModelParams& params, double lo, double hi) {
    if (params.n_sites != 4)
        throw std::invalid_argument("perturbative_crossing_n4: requires N = 4");

    auto gap = [&](double e) {
        ModelParams p = params.with_tilt(e);
        const double left = perturbative_energies(p, 2).corrected_left;
        const double other = perturbative_energies_n4(p).e_1001_plus;
        return left - other;
    };

    double glo = gap(lo), ghi = gap(hi);
    if (glo * ghi > 0.0)
        throw std::domain_error("perturbative_crossing_n4: bracket does not contain a sign change");
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = gap(mid);
        if (glo * gm <= 0.0) {
            hi = mid;
            ghi = gm;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace tiltsim
