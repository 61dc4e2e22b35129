#ifndef MWS_CONSTRUCTIONS_HPP
#define MWS_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mws/code.hpp"

namespace mws {

inline constexpr unsigned kBinaryFamilyMaxK = 20;
inline constexpr std::uint64_t kHyperplaneSumMaxPoints = 1000;
inline constexpr std::uint64_t kPowersOfTwoMaxPoints = 24;

/// B_k: the k x (2^k - 1) binary matrix whose row i (1-based) has ones in
/// its first 2^i - 1 positions.
GeneratorMatrix construct_bk(unsigned k);

/// D_q: for t = 1..q-1, t columns (1, alpha^t); then q columns (1, 0), with
/// alpha the field's primitive element. Length q(q+1)/2, dimension 2.
GeneratorMatrix construct_dq(const Field& field);

/// mult(p) = sum of the indices i of the hyperplanes H_i through p.
ProjectiveMultiset construct_hyperplane_sum(const Field& field, unsigned k);

/// mult(point labeling[i]) = 2^i. The labeling defaults to the identity.
/// Distinct hyperplanes hold distinct point sets, so all characters differ.
ProjectiveMultiset construct_powers_of_two(const Field& field, unsigned k,
                                           const std::optional<std::vector<std::size_t>>& labeling = std::nullopt);

}  // namespace mws

#endif  // MWS_CONSTRUCTIONS_HPP
