#ifndef MWS_SPECTRUM_HPP
#define MWS_SPECTRUM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mws/code.hpp"
#include "mws/rational.hpp"

namespace mws {

/// One named inequality evaluated against a code.
///
/// Informational checks are reported but never count as violations: they are
/// bounds that are known not to hold for every code (see check_bounds).
struct BoundCheck {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

struct SpectrumReport {
  std::uint64_t q = 0;
  unsigned k = 0;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t qk = 0;
  std::vector<std::uint64_t> weights;  // S(C), ascending
  bool is_mws = false;
  bool is_compact = false;
  bool is_strictly_compact = false;
  bool is_fws = false;
  bool is_degenerate = false;
  std::optional<std::int64_t> spread;  // set for MWS codes
  std::optional<std::int64_t> h;       // quantization index, MWS codes with k >= 2
  std::vector<BoundCheck> bounds;

  /// Names of failed non-informational checks.
  std::vector<std::string> bound_violations() const;
};

/// Spread of an MWS weight set: q_k * n - q_k(q_k - 1)/2 - sum(S).
std::int64_t spread_mws(std::span<const std::uint64_t> weights, std::uint64_t n, std::uint64_t qk);

/// sum over sorted positions of (target_i - weight_i). Antisymmetric.
Rational spread_wrt(std::span<const std::uint64_t> weights, std::span<const std::uint64_t> target);

SpectrumReport classify(const WeightDistribution& wd, std::uint64_t q, unsigned k);

struct CodeParameters {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// [(q/2) q_k, k, (q/2 - 1) q_k + 1]; nullopt when q and k are both odd.
std::optional<CodeParameters> predict_strictly_compact(std::uint64_t q, unsigned k);

/// n = (q/2) q_k + spread / q_{k-1}. Throws std::domain_error when this is
/// not a positive integer, std::invalid_argument for k < 2 or negative spread.
std::uint64_t length_from_spread(std::uint64_t q, unsigned k, const Rational& spread);

/// Whether an integer spread is admissible for an [n, k]_q MWS code.
bool spread_quantization(std::uint64_t q, unsigned k, std::int64_t spread);

/// h with spread = h q_{k-1} (q k even) or (2h + 1)/2 q_{k-1} (q k odd).
std::optional<std::int64_t> quantization_index(std::uint64_t q, unsigned k, std::int64_t spread);

struct DistanceBounds {
  std::uint64_t n = 0;
  std::int64_t d_min = 0;  // printed lower bound, floored at 1
  std::int64_t d_max = 0;
  std::int64_t d_min_raw = 0;  // printed lower bound before flooring
};

/// Length and distance window of an MWS code with quantization index h.
DistanceBounds d_bounds(std::uint64_t q, unsigned k, std::uint64_t h);

/// Lower distance bound implied by the length/spread identity alone:
/// d >= n - q_k + 1 - spread. Always valid; used to audit d_bounds.
std::int64_t d_lower_from_spread(std::uint64_t q, unsigned k, std::uint64_t h);

struct CompactParameters {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t s_first = 0;  // S = {s_first, ..., s_last}
  std::uint64_t s_last = 0;
  std::uint64_t printed_s_last = 0;  // endpoint as printed, (q/2 + 1) q_k + j(q - 1) [+ 1/2]
};

/// Parameters of a compact MWS code indexed by j, as stated for the compact
/// family. S ends at d + q_k - 1. Only j = 0 is consistent with the
/// weight-sum identity in general; see compact_length_consistent.
CompactParameters compact_params(std::uint64_t q, unsigned k, std::uint64_t j);

/// Length of a compact MWS code whose largest weight is n - j, derived
/// directly from the length/spread identity: (q/2) q_k + j q_k / q_{k-1}.
/// nullopt when that is not an integer.
std::optional<std::uint64_t> compact_length_consistent(std::uint64_t q, unsigned k, std::uint64_t j);

inline constexpr std::uint64_t kEnumerateMaxPoints = 16;
inline constexpr std::uint64_t kEnumerateMaxLength = 64;

/// All q_k-subsets W of {1..n} with sum(W) = n q^{k-1}, lexicographic.
std::vector<std::vector<std::uint64_t>> enumerate_weight_sets(std::uint64_t q, unsigned k, std::uint64_t n);

/// Evaluates every named bound against a classified code.
std::vector<BoundCheck> check_bounds(const SpectrumReport& report);

/// sum_{i=0}^{r} C(n, i) (q - 1)^i >= q^k, evaluated exactly with early exit.
bool delsarte_holds(std::uint64_t q, unsigned k, std::uint64_t n, std::uint64_t r);

/// Smallest nonzero beta whose per-codeword occurrence counts are pairwise
/// distinct over the whole code, if any.
std::optional<Element> has_property_A(const GeneratorMatrix& g, std::uint64_t work_limit = kEnumerationWorkLimit);

/// (q-2)(q^k - q)(q^{k+1} - 1) / (4 (q-2)^2 q), evaluated as written.
Rational property_A_spread_bound(std::uint64_t q, unsigned k);

}  // namespace mws

#endif  // MWS_SPECTRUM_HPP
