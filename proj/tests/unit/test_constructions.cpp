#include <doctest.h>

#include "mws/constructions.hpp"
#include "mws/spectrum.hpp"
#include "oracles.hpp"

using namespace mws;

TEST_CASE("B_k layout and spectrum") {
  const auto g = construct_bk(3);
  CHECK(g.entries() == std::vector<Element>{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1});
  for (unsigned k = 1; k <= 8; ++k) {
    const auto wd = oracle::weights(construct_bk(k));
    std::vector<std::uint64_t> all;
    for (std::uint64_t w = 1; w < (1u << k); ++w) all.push_back(w);
    CHECK(wd.weight_set() == all);
  }
  CHECK_THROWS(construct_bk(0));
  CHECK_THROWS(construct_bk(21));
}

TEST_CASE("D_q matches the brute-force spectrum") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto [p, m] = prime_power(q);
    const auto g = construct_dq(Field::make(p, m));
    REQUIRE(g.rows() == 2);
    REQUIRE(g.cols() == q * (q + 1) / 2);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t w = q * (q - 1) / 2; w <= q * (q + 1) / 2; ++w) expected.push_back(w);
    CHECK(oracle::weights(g).weight_set() == expected);
  }
}

TEST_CASE("hyperplane-sum multiplicities") {
  const Field f = Field::make(3);
  for (unsigned k = 2; k <= 3; ++k) {
    const auto m = construct_hyperplane_sum(f, k);
    const auto& space = m.space();
    for (std::size_t p = 0; p < space.size(); ++p) {
      std::uint64_t expected = 0;
      for (std::size_t s = 0; s < space.size(); ++s)
        if (space.incident(p, s)) expected += s;
      CHECK(m[p] == expected);
    }
  }
  CHECK_THROWS(construct_hyperplane_sum(f, 1));
  CHECK_THROWS(construct_hyperplane_sum(Field::make(2), 10));
}

TEST_CASE("powers-of-two construction") {
  const Field f = Field::make(2);
  const auto m = construct_powers_of_two(f, 3);
  for (std::size_t p = 0; p < 7; ++p) CHECK(m[p] == (std::uint64_t{1} << p));
  const auto wd = oracle::weights(code_from_multiset(m));
  CHECK(wd.weight_set().size() == 7);
  CHECK(wd == weights_projective(m));

  const std::vector<std::size_t> labeling{6, 5, 4, 3, 2, 1, 0};
  const auto rev = construct_powers_of_two(f, 3, labeling);
  CHECK(rev[6] == 1);
  CHECK(classify(weights_projective(rev), 2, 3).is_mws);
  CHECK_THROWS(construct_powers_of_two(f, 3, std::vector<std::size_t>{0, 0, 1, 2, 3, 4, 5}));
  CHECK_THROWS(construct_powers_of_two(f, 3, std::vector<std::size_t>{0, 1}));
  CHECK_THROWS(construct_powers_of_two(f, 5));
}
