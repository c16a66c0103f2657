#include "tiltsim/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "tiltsim/model.hpp"

namespace tiltsim {

std::uint32_t cp_image(std::uint32_t m, int n_sites) {
    std::uint32_t reflected = 0;
    for (int j = 1; j <= n_sites; ++j)
        if (occupied(m, j)) reflected |= 1u << (n_sites - j);
    const std::uint32_t mask = (1u << n_sites) - 1u;
    return ~reflected & mask;
}

namespace {

std::vector<SectorElement> collect_classes(const std::vector<std::uint32_t>& states, int n_sites) {
    std::vector<SectorElement> classes;
    std::vector<std::uint32_t> seen;
    for (std::uint32_t m : states) {
        const std::uint32_t partner = cp_image(m, n_sites);
        const std::uint32_t rep = std::max(m, partner);
        if (std::find(seen.begin(), seen.end(), rep) != seen.end()) continue;
        seen.push_back(rep);
        classes.push_back({rep, partner == m ? 1 : 2});
    }
    std::sort(classes.begin(), classes.end(), [](const SectorElement& a, const SectorElement& b) {
        if (a.period != b.period) return a.period > b.period;
        return a.representative > b.representative;
    });
    return classes;
}

} // namespace

std::vector<SectorBasis> cp_sectors(const ModelParams& params) {
    params.validate();
    if (!params.has_cp_symmetric_mu())
        throw std::invalid_argument(
            "cp_sectors: chemical potential breaks CP symmetry; expected mu = -E(N+1)/4, got mu = " +
            std::to_string(params.mu()));

    const int n = params.n_sites;
    std::vector<SectorBasis> sectors;

    auto make_sector = [&](SectorLabel label, const std::vector<SectorElement>& classes) {
        SectorBasis s;
        s.label = label;
        s.n_sites = n;
        for (const auto& c : classes) {
            if (label.parity == -1 && c.period == 1) continue; // self-symmetric classes are even only
            s.elements.push_back(c);
        }
        return s;
    };

    if (n % 2 == 0) {
        const auto half = build_basis(n, n / 2);
        const auto half_classes = collect_classes(half.states, n);
        sectors.push_back(make_sector({n / 2, +1}, half_classes));
        sectors.push_back(make_sector({n / 2, -1}, half_classes));

        std::vector<std::uint32_t> rest;
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) != n / 2) rest.push_back(m);
        const auto rest_classes = collect_classes(rest, n);
        sectors.push_back(make_sector({std::nullopt, +1}, rest_classes));
        sectors.push_back(make_sector({std::nullopt, -1}, rest_classes));
    } else {
        std::vector<std::uint32_t> all(1u << n);
        for (std::uint32_t m = 0; m < (1u << n); ++m) all[m] = m;
        const auto classes = collect_classes(all, n);
        sectors.push_back(make_sector({std::nullopt, +1}, classes));
        sectors.push_back(make_sector({std::nullopt, -1}, classes));
    }
    return sectors;
}

Eigen::VectorXd SectorBasis::embed(std::size_t i) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index(1) << n_sites);
    const auto& el = elements.at(i);
    if (el.period == 1) {
        v(el.representative) = 1.0;
    } else {
        const double w = 1.0 / std::sqrt(2.0);
        v(el.representative) = w;
        v(cp_image(el.representative, n_sites)) = double(label.parity) * w;
    }
    return v;
}

SectorHamiltonian sector_hamiltonian(const ModelParams& params, const SectorBasis& sector) {
    params.validate();
    if (sector.n_sites != params.n_sites)
        throw std::invalid_argument("sector_hamiltonian: sector and params disagree on n_sites");

    const auto dim = Eigen::Index(sector.dimension());

    // state -> (element index, amplitude of the state within that element)
    std::unordered_map<std::uint32_t, std::pair<Eigen::Index, double>> lookup;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& el = sector.elements[std::size_t(i)];
        if (el.period == 1) {
            lookup[el.representative] = {i, 1.0};
        } else {
            const double w = 1.0 / std::sqrt(2.0);
            lookup[el.representative] = {i, w};
            lookup[cp_image(el.representative, sector.n_sites)] = {i, double(sector.label.parity) * w};
        }
    }

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    auto accumulate = [&](Eigen::Index col, std::uint32_t target, double amp) {
        auto it = lookup.find(target);
        if (it == lookup.end()) return; // projected out of this sector
        h(it->second.first, col) += it->second.second * amp;
    };

    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto& el = sector.elements[std::size_t(col)];
        std::vector<std::pair<std::uint32_t, double>> members;
        if (el.period == 1) {
            members.emplace_back(el.representative, 1.0);
        } else {
            const double w = 1.0 / std::sqrt(2.0);
            members.emplace_back(el.representative, w);
            members.emplace_back(cp_image(el.representative, sector.n_sites),
                                 double(sector.label.parity) * w);
        }
        for (const auto& [m, coeff] : members) {
            accumulate(col, m, coeff * configuration_energy(m, params));
            for (int j = 1; j < params.n_sites; ++j) {
                if (occupied(m, j) == occupied(m, j + 1)) continue;
                const std::uint32_t swapped = m ^ ((1u << (j - 1)) | (1u << j));
                accumulate(col, swapped, coeff * 0.5 * params.hopping);
            }
        }
    }

    // symmetrize away representation round-off
    h = 0.5 * (h + h.transpose()).eval();
    return {sector, h};
}

} // namespace tiltsim
