#include "tiltsim/basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tiltsim {

FockBasis build_basis(int n_sites, std::optional<int> sector) {
    if (n_sites < 2)
        throw std::invalid_argument("build_basis: n_sites must be >= 2");
    if (n_sites > 20)
        throw std::invalid_argument("build_basis: n_sites too large for dense Fock enumeration");
    if (sector && (*sector < 0 || *sector > n_sites))
        throw std::invalid_argument("build_basis: particle number outside [0, N]");

    FockBasis basis;
    basis.n_sites = n_sites;
    basis.sector = sector;
    const std::uint32_t dim = 1u << n_sites;
    basis.states.reserve(sector ? 0 : dim);
    for (std::uint32_t m = 0; m < dim; ++m) {
        if (!sector || std::popcount(m) == *sector) basis.states.push_back(m);
    }
    return basis;
}

std::size_t FockBasis::index_of(std::uint32_t m) const {
    auto it = std::lower_bound(states.begin(), states.end(), m);
    if (it == states.end() || *it != m)
        throw std::out_of_range("FockBasis::index_of: state not in basis");
    return std::size_t(it - states.begin());
}

std::string occupation_string(std::uint32_t m, int n_sites) {
    std::string s(std::size_t(n_sites), '0');
    for (int j = 1; j <= n_sites; ++j)
        if (occupied(m, j)) s[std::size_t(j - 1)] = '1';
    return s;
}

} // namespace tiltsim
