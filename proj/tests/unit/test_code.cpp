#include <doctest.h>

#include "mws/code.hpp"
#include "mws/search.hpp"
#include "oracles.hpp"

using namespace mws;

namespace {

GeneratorMatrix random_matrix(const Field& f, std::size_t k, std::size_t n, SplitMix64& rng) {
  GeneratorMatrix g(f, k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) g.set(r, c, static_cast<Element>(rng.below(f.order())));
  return g;
}

}  // namespace

TEST_CASE("exhaustive weights match the explicit codeword oracle") {
  SplitMix64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto [p, m] = prime_power(q);
    const Field f = Field::make(p, m);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t k = 1 + rng.below(3);
      const std::size_t n = 1 + rng.below(12);
      const auto g = random_matrix(f, k, n, rng);
      CAPTURE(q);
      CHECK(weights_exhaustive(g) == oracle::weights(g));
    }
  }
}

TEST_CASE("projective weights agree with exhaustive on full-rank non-degenerate codes") {
  SplitMix64 rng(12);
  int checked = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    const auto [p, m] = prime_power(q);
    const Field f = Field::make(p, m);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_matrix(f, 1 + rng.below(3), 3 + rng.below(15), rng);
      if (find_zero_column(g) || rank(g) != g.rows()) continue;
      ++checked;
      const auto mset = multiset_from_code(g);
      CHECK(mset.length() == g.cols());
      CHECK(weights_projective(mset) == oracle::weights(g));
      CHECK(weights_exhaustive(code_from_multiset(mset)) == oracle::weights(g));
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("multiset and matrix round trip") {
  const auto space = ProjectiveSpace::build(Field::make(3), 2);
  ProjectiveMultiset m(space, {2, 0, 1, 3});
  const auto g = code_from_multiset(m);
  CHECK(g.cols() == 6);
  CHECK(multiset_from_code(g) == m);
  CHECK(m.spans());
  CHECK(m.support_rank() == 2);
}

TEST_CASE("degenerate and rank-deficient inputs") {
  const Field f = Field::make(2);
  GeneratorMatrix g(f, 2, 3, {1, 0, 1, 0, 0, 1});
  CHECK(find_zero_column(g) == 1);
  try {
    multiset_from_code(g);
    FAIL("expected DegenerateCode");
  } catch (const DegenerateCode& e) {
    CHECK(e.column() == 1);
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
  // A degenerate code still has a well-defined exhaustive distribution.
  CHECK(weights_exhaustive(g) == oracle::weights(g));

  const auto space = ProjectiveSpace::build(f, 3);
  ProjectiveMultiset flat(space, {3, 1, 0, 0, 0, 0, 0});  // points on one line
  CHECK_FALSE(flat.spans());
  CHECK_THROWS_AS(code_from_multiset(flat), std::invalid_argument);
  CHECK_THROWS(weights_projective(flat));
  CHECK_THROWS(ProjectiveMultiset(space, {1, 2, 3}));
}

TEST_CASE("characters and hyperplane weights") {
  const auto space = ProjectiveSpace::build(Field::make(2), 2);
  ProjectiveMultiset m(space, {1, 2, 4});
  const auto chars = hyperplane_characters(m);
  for (std::size_t s = 0; s < chars.size(); ++s) CHECK(chars[s] == char_of_hyperplane(m, s));
  CHECK_THROWS_AS(char_of_hyperplane(m, 3), std::out_of_range);
  const auto wd = weights_projective(m);
  CHECK(wd.weight_set() == std::vector<std::uint64_t>{3, 5, 6});
  CHECK(wd.min_distance() == 3);
  CHECK(wd.total() == 4);
  CHECK(wd.weight_sum() == 14);
}

TEST_CASE("codeword visiting order and work limit") {
  const Field f = Field::make(3);
  GeneratorMatrix g(f, 2, 2, {1, 0, 0, 1});
  std::vector<std::vector<Element>> seen;
  for_each_codeword(g, [&](std::span<const Element> c) { seen.emplace_back(c.begin(), c.end()); });
  REQUIRE(seen.size() == 9);
  CHECK(seen[1] == std::vector<Element>{1, 0});  // m_0 varies fastest
  CHECK(seen[3] == std::vector<Element>{0, 1});
  CHECK_THROWS_AS(weights_exhaustive(g, 10), std::length_error);
}
