#ifndef MWS_VERIFY_HPP
#define MWS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mws {

enum class CheckStatus { pass, fail, deviation };

struct VerifyRecord {
  std::string check;
  std::string params;
  std::string expected;
  std::string measured;
  CheckStatus status = CheckStatus::pass;
  /// Deviation family, set only for status == deviation.
  std::string deviation_kind;
};

/// Deviation families: formulas whose printed form disagrees with what the
/// constructions measurably produce.
inline constexpr const char* kDeviationPowersOfTwoDistance = "powers_of_two_distance_formula";
inline constexpr const char* kDeviationHyperplaneSumSpread = "hyperplane_sum_spread_formula";
inline constexpr const char* kDeviationCompactParams = "compact_params_formula";

struct VerifyReport {
  std::vector<VerifyRecord> records;

  std::size_t count(CheckStatus s) const;
  /// Distinct deviation families, sorted.
  std::vector<std::string> deviation_kinds() const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  std::string to_text() const;
};

/// Sweeps every checkable invariant over all prime powers q <= q_max and
/// 1 <= k <= k_max that fit the module guards.
VerifyReport run_verify(std::uint32_t q_max, unsigned k_max);

}  // namespace mws

#endif  // MWS_VERIFY_HPP
