#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tiltsim {

/// Ordered Fock basis of occupation bitstrings. Bit j-1 of a state encodes
/// the occupation of site j, so site 1 is the least significant bit.
/// States are listed in strictly increasing integer order; with a particle
/// number filter only states of that particle number appear.
struct FockBasis {
    int n_sites = 0;
    std::optional<int> sector;           // particle-number filter
    std::vector<std::uint32_t> states;

    std::size_t dimension() const { return states.size(); }

    /// Position of state `m` in the basis; throws if absent.
    std::size_t index_of(std::uint32_t m) const;
};

FockBasis build_basis(int n_sites, std::optional<int> sector = std::nullopt);

/// Occupation pattern of state `m` written site 1 first, e.g. 0b0011 with
/// N=4 prints as "1100" (sites 1 and 2 occupied).
std::string occupation_string(std::uint32_t m, int n_sites);

inline bool occupied(std::uint32_t m, int site) {
    return (m >> (site - 1)) & 1u;
}

} // namespace tiltsim
