#include "mws/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mws {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t as_signed(std::uint64_t v) { return narrow(static_cast<i128>(v)); }

std::int64_t exact_half(i128 twice) {
  if (twice % 2 != 0) throw std::logic_error("expected an even quantity");
  return narrow(twice / 2);
}

bool qk_even(std::uint64_t q, unsigned k) { return q % 2 == 0 || k % 2 == 0; }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

BoundCheck make_check(std::string name, bool passed, std::string detail, bool informational = false) {
  return BoundCheck{std::move(name), passed, informational, std::move(detail)};
}

}  // namespace

std::vector<std::string> SpectrumReport::bound_violations() const {
  std::vector<std::string> names;
  for (const auto& b : bounds)
    if (!b.passed && !b.informational) names.push_back(b.name);
  return names;
}

std::int64_t spread_mws(std::span<const std::uint64_t> weights, std::uint64_t n, std::uint64_t qk) {
  if (weights.size() != qk)
    throw std::invalid_argument("spread needs " + std::to_string(qk) + " weights, got " +
                                std::to_string(weights.size()));
  i128 sum = 0;
  for (std::uint64_t w : weights) {
    if (w < 1 || w > n) throw std::invalid_argument("weight " + std::to_string(w) + " outside [1, n]");
    sum += w;
  }
  const i128 qk_i = static_cast<i128>(qk);
  return narrow(qk_i * static_cast<i128>(n) - qk_i * (qk_i - 1) / 2 - sum);
}

Rational spread_wrt(std::span<const std::uint64_t> weights, std::span<const std::uint64_t> target) {
  if (weights.size() != target.size())
    throw std::invalid_argument("spread_wrt needs weight sets of equal size (" + std::to_string(weights.size()) +
                                " vs " + std::to_string(target.size()) + ")");
  std::vector<std::uint64_t> a(weights.begin(), weights.end());
  std::vector<std::uint64_t> b(target.begin(), target.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  i128 total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<i128>(b[i]) - static_cast<i128>(a[i]);
  return Rational(narrow(total));
}

SpectrumReport classify(const WeightDistribution& wd, std::uint64_t q, unsigned k) {
  SpectrumReport r;
  r.q = q;
  r.k = k;
  r.n = wd.length();
  r.d = wd.min_distance();
  r.qk = gaussian_count(q, k);
  r.weights = wd.weight_set();

  // Every nonzero coordinate is nonzero in exactly q^k - q^{k-1} codewords.
  const i128 per_coordinate = static_cast<i128>(checked_pow(q, k)) - checked_pow(q, k - 1);
  r.is_degenerate = static_cast<i128>(wd.weight_sum()) != per_coordinate * static_cast<i128>(r.n);

  r.is_mws = r.weights.size() == r.qk;
  r.is_compact = r.is_mws && r.weights.back() - r.weights.front() == r.qk - 1;
  r.is_strictly_compact = r.is_compact && r.weights.back() == r.n;
  r.is_fws = r.is_strictly_compact && r.d == 1;
  if (r.is_mws) {
    r.spread = spread_mws(r.weights, r.n, r.qk);
    if (k >= 2) r.h = quantization_index(q, k, *r.spread);
  }
  r.bounds = check_bounds(r);
  return r;
}

std::optional<CodeParameters> predict_strictly_compact(std::uint64_t q, unsigned k) {
  if (!qk_even(q, k)) return std::nullopt;
  const std::uint64_t qk = gaussian_count(q, k);
  const std::uint64_t n = q * qk / 2;
  return CodeParameters{n, n - qk + 1};
}

std::uint64_t length_from_spread(std::uint64_t q, unsigned k, const Rational& spread) {
  if (k < 2) throw std::invalid_argument("length_from_spread needs k >= 2");
  if (spread < Rational(0)) throw std::invalid_argument("spread must be non-negative");
  const Rational n = Rational(as_signed(q * gaussian_count(q, k)), 2) +
                     spread / Rational(as_signed(gaussian_count(q, k - 1)));
  if (!n.is_integer() || n.numerator() <= 0)
    throw std::domain_error("spread " + spread.to_string() + " is infeasible for q=" + std::to_string(q) +
                            ", k=" + std::to_string(k) + ": length would be " + n.to_string());
  return static_cast<std::uint64_t>(n.numerator());
}

std::optional<std::int64_t> quantization_index(std::uint64_t q, unsigned k, std::int64_t spread) {
  if (spread < 0) return std::nullopt;
  if (k < 2) return spread == 0 ? std::optional<std::int64_t>(0) : std::nullopt;
  const std::int64_t below = as_signed(gaussian_count(q, k - 1));
  if (qk_even(q, k)) {
    if (spread % below != 0) return std::nullopt;
    return spread / below;
  }
  if ((2 * spread) % below != 0) return std::nullopt;
  const std::int64_t odd = 2 * spread / below;
  if (odd % 2 == 0) return std::nullopt;
  return (odd - 1) / 2;
}

bool spread_quantization(std::uint64_t q, unsigned k, std::int64_t spread) {
  return quantization_index(q, k, spread).has_value();
}

DistanceBounds d_bounds(std::uint64_t q, unsigned k, std::uint64_t h) {
  if (k < 2) throw std::invalid_argument("d_bounds needs k >= 2");
  const i128 qk = gaussian_count(q, k);
  const i128 below = gaussian_count(q, k - 1);
  const i128 hh = h;
  const bool even = qk_even(q, k);
  // Twice every quantity so the half terms of the odd case stay integral.
  const i128 twice_n = static_cast<i128>(q) * qk + 2 * hh + (even ? 0 : 1);
  const i128 twice_base = (static_cast<i128>(q) - 2) * qk + (even ? 2 : 3);
  const i128 lower = twice_base + 2 * hh * (1 - below);
  const std::int64_t ceil_term = ceil_div(narrow(hh * below), narrow(qk));
  const i128 upper = twice_base + 2 * hh - 2 * static_cast<i128>(ceil_term);

  DistanceBounds b;
  b.n = static_cast<std::uint64_t>(exact_half(twice_n));
  b.d_min_raw = exact_half(lower);
  b.d_min = std::max<std::int64_t>(1, b.d_min_raw);
  b.d_max = exact_half(upper);
  return b;
}

std::int64_t d_lower_from_spread(std::uint64_t q, unsigned k, std::uint64_t h) {
  const i128 qk = gaussian_count(q, k);
  const i128 below = gaussian_count(q, k - 1);
  const bool even = qk_even(q, k);
  const i128 twice_spread = even ? 2 * static_cast<i128>(h) * below : (2 * static_cast<i128>(h) + 1) * below;
  const i128 twice_n = static_cast<i128>(q) * qk + 2 * static_cast<i128>(h) + (even ? 0 : 1);
  return exact_half(twice_n - 2 * qk + 2 - twice_spread);
}

CompactParameters compact_params(std::uint64_t q, unsigned k, std::uint64_t j) {
  const std::uint64_t qk = gaussian_count(q, k);
  CompactParameters c;
  if (qk_even(q, k)) {
    c.n = q * qk / 2 + j * q;
    c.d = (q - 2) * qk / 2 + j * (q - 1) + 1;
    c.printed_s_last = (q + 2) * qk / 2 + j * (q - 1);
  } else {
    c.n = (q * qk + 1) / 2 + j * q;
    c.d = ((q - 2) * qk + 3) / 2 + j * (q - 1);
    c.printed_s_last = ((q + 2) * qk + 1) / 2 + j * (q - 1);
  }
  c.s_first = c.d;
  c.s_last = c.d + qk - 1;
  return c;
}

std::optional<std::uint64_t> compact_length_consistent(std::uint64_t q, unsigned k, std::uint64_t j) {
  if (k < 2) return std::nullopt;
  const std::int64_t qk = as_signed(gaussian_count(q, k));
  const Rational n = Rational(as_signed(q) * qk, 2) +
                     Rational(as_signed(j) * qk, as_signed(gaussian_count(q, k - 1)));
  if (!n.is_integer()) return std::nullopt;
  return static_cast<std::uint64_t>(n.numerator());
}

std::vector<std::vector<std::uint64_t>> enumerate_weight_sets(std::uint64_t q, unsigned k, std::uint64_t n) {
  const std::uint64_t qk = gaussian_count(q, k);
  if (qk > kEnumerateMaxPoints || n > kEnumerateMaxLength)
    throw std::length_error("weight-set enumeration limited to q_k <= " + std::to_string(kEnumerateMaxPoints) +
                            " and n <= " + std::to_string(kEnumerateMaxLength));
  const std::uint64_t target = n * checked_pow(q, k - 1);
  std::vector<std::vector<std::uint64_t>> out;
  if (qk > n) return out;

  std::vector<std::uint64_t> chosen;
  chosen.reserve(qk);
  // Backtrack over increasing sequences; `sum` is the total chosen so far.
  auto rec = [&](auto&& self, std::uint64_t next, std::uint64_t sum) -> void {
    const std::uint64_t left = qk - chosen.size();
    if (left == 0) {
      if (sum == target) out.push_back(chosen);
      return;
    }
    for (std::uint64_t v = next; v + left - 1 <= n; ++v) {
      // Smallest completion: v, v+1, ..., v+left-1. Largest: v, n-left+2, ..., n.
      const std::uint64_t low = sum + left * v + left * (left - 1) / 2;
      if (low > target) break;
      const std::uint64_t high = sum + v + (left - 1) * n - (left - 1) * (left - 2) / 2;
      if (high < target) continue;
      chosen.push_back(v);
      self(self, v + 1, sum + v);
      chosen.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

bool delsarte_holds(std::uint64_t q, unsigned k, std::uint64_t n, std::uint64_t r) {
  const i128 target = checked_pow(q, k);
  i128 sum = 0;
  i128 term = 1;  // C(n, i) (q-1)^i
  for (std::uint64_t i = 0; i <= std::min(r, n); ++i) {
    sum += term;
    if (sum >= target) return true;
    term = term * static_cast<i128>(n - i) / static_cast<i128>(i + 1) * static_cast<i128>(q - 1);
  }
  return sum >= target;
}

std::vector<BoundCheck> check_bounds(const SpectrumReport& r) {
  std::vector<BoundCheck> checks;
  const std::uint64_t q = r.q;
  const unsigned k = r.k;
  const std::string q_s = std::to_string(q);

  checks.push_back(make_check("delsarte", delsarte_holds(q, k, r.n, r.weights.size()),
                              "q^k <= sum_{i<=|S|} C(n,i)(q-1)^i with |S|=" + std::to_string(r.weights.size())));

  if (k >= 2)
    checks.push_back(make_check("compact_distance_one", !(r.is_compact && q > 2 && r.d == 1),
                                "no compact non-binary MWS code has d = 1"));

  if (!r.is_mws || k < 2 || r.is_degenerate) return checks;

  const i128 qk = r.qk;
  const i128 below = gaussian_count(q, k - 1);
  const i128 spread = *r.spread;

  checks.push_back(make_check("length_lower", 2 * static_cast<i128>(r.n) >= static_cast<i128>(q) * qk,
                              "n >= ceil(q q_k / 2)"));
  checks.push_back(make_check("spread_nonnegative", spread >= 0, "spread >= 0"));
  checks.push_back(make_check("length_spread_identity",
                              2 * static_cast<i128>(r.n) * below == static_cast<i128>(q) * qk * below + 2 * spread,
                              "n q_{k-1} = (q/2) q_k q_{k-1} + spread"));
  checks.push_back(make_check("spread_quantization", spread_quantization(q, k, *r.spread), "spread admissible"));

  // Holds for k = 2 and fails in general for k >= 3 (e.g. an MWS [7007,3,7]_3 code).
  const i128 twice_d_floor = (static_cast<i128>(q) - 2) * qk + 2;
  checks.push_back(make_check("distance_lower", 2 * static_cast<i128>(r.d) >= twice_d_floor,
                              "d >= ceil((q/2) q_k - q_k + 1)", k >= 3));

  if (r.h) {
    const auto window = d_bounds(q, k, static_cast<std::uint64_t>(*r.h));
    const auto d = static_cast<std::int64_t>(r.d);
    checks.push_back(make_check("distance_upper", d <= window.d_max, "d <= " + std::to_string(window.d_max)));
    checks.push_back(make_check("distance_window_lower", d >= window.d_min,
                                "d >= " + std::to_string(window.d_min) + " (printed lower bound)", true));
    checks.push_back(make_check("distance_lower_from_spread", d >= d_lower_from_spread(q, k, *r.h),
                                "d >= n - q_k + 1 - spread"));
  }

  if (r.is_strictly_compact) {
    const auto predicted = predict_strictly_compact(q, k);
    checks.push_back(make_check("strictly_compact_parameters",
                                predicted && predicted->n == r.n && predicted->d == r.d,
                                "[(q/2) q_k, k, (q/2 - 1) q_k + 1]"));
  }

  if (k >= 3) {
    const unsigned e = (k * k + k - 4) / 2;
    bool below_upper = true;
    try {
      below_upper = r.n < checked_pow(q, e);
    } catch (const std::overflow_error&) {
    }
    // Bounds the shortest MWS length, not every MWS code.
    checks.push_back(make_check("length_upper_existence", below_upper,
                                "n < " + q_s + "^" + std::to_string(e), true));
  }
  return checks;
}

std::optional<Element> has_property_A(const GeneratorMatrix& g, std::uint64_t work_limit) {
  const std::uint32_t q = g.field().order();
  std::vector<std::vector<std::uint32_t>> counts(q);
  for_each_codeword(
      g,
      [&](std::span<const Element> word) {
        std::vector<std::uint32_t> tally(q, 0);
        for (Element e : word) ++tally[e];
        for (Element beta = 1; beta < q; ++beta) counts[beta].push_back(tally[beta]);
      },
      work_limit);
  for (Element beta = 1; beta < q; ++beta) {
    auto& c = counts[beta];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) == c.end()) return beta;
  }
  return std::nullopt;
}

Rational property_A_spread_bound(std::uint64_t q, unsigned k) {
  if (q == 2) throw std::domain_error("property (A) spread bound is undefined at q = 2");
  const std::int64_t qs = as_signed(q);
  const std::int64_t num = (qs - 2) * (as_signed(checked_pow(q, k)) - qs) * (as_signed(checked_pow(q, k + 1)) - 1);
  const std::int64_t den = 4 * (qs - 2) * (qs - 2) * qs;
  return Rational(num, den);
}

}  // namespace mws
