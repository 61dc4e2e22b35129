#include "mws/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mws {

GeneratorMatrix construct_bk(unsigned k) {
  if (k < 1 || k > kBinaryFamilyMaxK)
    throw std::invalid_argument("B_k needs 1 <= k <= " + std::to_string(kBinaryFamilyMaxK));
  const std::size_t n = (std::size_t{1} << k) - 1;
  GeneratorMatrix g(Field::make(2), k, n);
  for (unsigned i = 1; i <= k; ++i)
    for (std::size_t c = 0; c < (std::size_t{1} << i) - 1; ++c) g.set(i - 1, c, 1);
  return g;
}

GeneratorMatrix construct_dq(const Field& field) {
  const std::uint32_t q = field.order();
  const Element alpha = field.primitive_element();
  GeneratorMatrix g(field, 2, std::size_t{q} * (q + 1) / 2);
  std::size_t col = 0;
  for (std::uint32_t t = 1; t < q; ++t) {
    const Element power = field.pow(alpha, t);
    for (std::uint32_t rep = 0; rep < t; ++rep, ++col) {
      g.set(0, col, 1);
      g.set(1, col, power);
    }
  }
  for (std::uint32_t rep = 0; rep < q; ++rep, ++col) g.set(0, col, 1);
  return g;
}

ProjectiveMultiset construct_hyperplane_sum(const Field& field, unsigned k) {
  if (k < 2) throw std::invalid_argument("hyperplane-sum construction needs k >= 2");
  const auto space = ProjectiveSpace::build(field, k, kHyperplaneSumMaxPoints);
  std::vector<std::uint64_t> mult(space->size(), 0);
  for (std::size_t i = 0; i < space->size(); ++i)
    for (std::uint32_t p : space->hyperplane(i)) mult[p] += i;
  return ProjectiveMultiset(space, std::move(mult));
}

ProjectiveMultiset construct_powers_of_two(const Field& field, unsigned k,
                                           const std::optional<std::vector<std::size_t>>& labeling) {
  if (k < 2) throw std::invalid_argument("powers-of-two construction needs k >= 2");
  const auto space = ProjectiveSpace::build(field, k, kPowersOfTwoMaxPoints);
  const std::size_t qk = space->size();
  std::vector<std::size_t> sigma(qk);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  if (labeling) {
    std::vector<std::size_t> sorted = *labeling;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != sigma) throw std::invalid_argument("labeling is not a permutation of the point indices");
    sigma = *labeling;
  }
  std::vector<std::uint64_t> mult(qk, 0);
  for (std::size_t i = 0; i < qk; ++i) mult[sigma[i]] = std::uint64_t{1} << i;
  return ProjectiveMultiset(space, std::move(mult));
}

}  // namespace mws
