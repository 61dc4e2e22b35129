#include <doctest.h>

#include "mws/verify.hpp"

using namespace mws;

TEST_CASE("verify sweep passes with exactly the documented deviation families") {
  const auto report = run_verify(4, 3);
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::fail) == 0);
  CHECK(report.count(CheckStatus::pass) > 100);
  CHECK(report.deviation_kinds() == std::vector<std::string>{kDeviationCompactParams, kDeviationHyperplaneSumSpread,
                                                             kDeviationPowersOfTwoDistance});
  for (const auto& r : report.records)
    if (r.status == CheckStatus::fail) FAIL(r.check << " [" << r.params << "] " << r.expected << " vs " << r.measured);
}
