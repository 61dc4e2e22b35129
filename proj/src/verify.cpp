#include "mws/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mws/code.hpp"
#include "mws/constructions.hpp"
#include "mws/search.hpp"
#include "mws/spectrum.hpp"

namespace mws {

namespace {

std::string fmt_qk(const Field& f, unsigned k) { return "q=" + f.name() + " k=" + std::to_string(k); }

template <class T>
std::string str(const T& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void expect(std::string check, std::string params, const std::string& expected, const std::string& measured) {
    report_.records.push_back({std::move(check), std::move(params), expected, measured,
                               expected == measured ? CheckStatus::pass : CheckStatus::fail, {}});
  }

  void expect_true(std::string check, std::string params, bool ok, std::string detail = "true") {
    report_.records.push_back({std::move(check), std::move(params), std::move(detail), ok ? detail : "false",
                               ok ? CheckStatus::pass : CheckStatus::fail, {}});
  }

  /// The printed value is "expected"; a mismatch is a documented deviation.
  void printed(std::string check, std::string params, const std::string& printed_value, const std::string& measured,
               const char* kind) {
    const bool same = printed_value == measured;
    report_.records.push_back({std::move(check), std::move(params), printed_value, measured,
                               same ? CheckStatus::pass : CheckStatus::deviation, same ? "" : kind});
  }

 private:
  VerifyReport& report_;
};

void check_field(Recorder& rec, const Field& f) {
  const std::uint32_t q = f.order();
  const std::string params = "q=" + f.name();
  if (q <= 16) {
    bool ok = true;
    for (Element a = 0; a < q && ok; ++a) {
      for (Element b = 0; b < q && ok; ++b) {
        ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (Element c = 0; c < q && ok; ++c)
          ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
               f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
      }
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      ok = ok && f.add(a, f.neg(a)) == 0;
    }
    rec.expect_true("field_axioms", params, ok);
  }
  std::set<Element> powers;
  for (Element x = 1, i = 0; i + 1 < q; ++i, x = f.mul(x, f.primitive_element())) powers.insert(x);
  rec.expect("primitive_element_generates", params, std::to_string(q - 1), std::to_string(powers.size()));
}

void check_geometry(Recorder& rec, const Field& f, unsigned k) {
  const auto space = ProjectiveSpace::build(f, k, 1000);
  const std::string params = fmt_qk(f, k);
  const std::uint64_t q = f.order();
  rec.expect("pg_point_count", params, std::to_string(gaussian_count(q, k)), std::to_string(space->size()));
  if (k < 2) return;
  bool sizes = true;
  bool consistent = true;
  for (std::size_t s = 0; s < space->size(); ++s) {
    const auto h = space->hyperplane(s);
    sizes = sizes && h.size() == gaussian_count(q, k - 1);
    for (std::uint32_t p : h) consistent = consistent && space->incident(p, s);
  }
  rec.expect_true("pg_hyperplane_size", params, sizes, "q_{k-1} points each");
  rec.expect_true("pg_incidence_consistent", params, consistent);
  if (k >= 3 && space->size() <= 400) {
    bool pairs = true;
    std::vector<std::uint32_t> common;
    for (std::size_t s = 0; s < space->size() && pairs; ++s) {
      for (std::size_t t = s + 1; t < space->size() && pairs; ++t) {
        common.clear();
        const auto a = space->hyperplane(s);
        const auto b = space->hyperplane(t);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        pairs = common.size() == gaussian_count(q, k - 2);
      }
    }
    rec.expect_true("pg_pairwise_intersection", params, pairs, "q_{k-2} common points");
  }
}

// Invariants every code touched by the sweep must satisfy.
void check_code(Recorder& rec, const std::string& name, const std::string& params, const WeightDistribution& wd,
                std::uint64_t q, unsigned k) {
  const SpectrumReport r = classify(wd, q, k);
  const std::uint64_t per = checked_pow(q, k) - checked_pow(q, k - 1);
  rec.expect(name + ":link_n_weights", params, std::to_string(r.n * per), std::to_string(wd.weight_sum()));
  std::string violations;
  for (const auto& v : r.bound_violations()) violations += (violations.empty() ? "" : ",") + v;
  rec.expect(name + ":bounds", params, "", violations);
  if (!r.is_mws || k < 2) return;
  rec.expect(name + ":length_from_spread", params, std::to_string(r.n),
             std::to_string(length_from_spread(q, k, Rational(*r.spread))));
  rec.expect_true(name + ":spread_quantization", params, spread_quantization(q, k, *r.spread));
  if (r.qk <= kEnumerateMaxPoints && r.n <= kEnumerateMaxLength) {
    const auto sets = enumerate_weight_sets(q, k, r.n);
    rec.expect_true(name + ":weight_set_enumerated", params,
                    std::find(sets.begin(), sets.end(), r.weights) != sets.end());
  }
}

void check_random_equivalence(Recorder& rec, const Field& f, unsigned k) {
  const auto space = ProjectiveSpace::build(f, k);
  SplitMix64 rng(0x5eed0000ULL + f.order() * 16 + k);
  const std::uint64_t q = f.order();
  int cases = 0;
  int agree = 0;
  for (int attempt = 0; cases < 8 && attempt < 200; ++attempt) {
    const std::uint64_t n = k + rng.below(40 - k + 1);
    std::vector<std::uint64_t> mult(space->size(), 0);
    for (std::uint64_t u = 0; u < n; ++u) ++mult[rng.below(space->size())];
    ProjectiveMultiset m(space, mult);
    if (!m.spans() || checked_pow(q, k) * n > kEnumerationWorkLimit) continue;
    ++cases;
    const auto projective = weights_projective(m);
    if (weights_exhaustive(code_from_multiset(m)) == projective) ++agree;
    check_code(rec, "random", fmt_qk(f, k) + " n=" + std::to_string(n), projective, q, k);
  }
  rec.expect("algorithm_equivalence", fmt_qk(f, k), std::to_string(cases), std::to_string(agree));
}

void check_bk(Recorder& rec, unsigned k) {
  const auto g = construct_bk(k);
  const auto wd = weights_exhaustive(g);
  const auto r = classify(wd, 2, k);
  const std::string params = "k=" + std::to_string(k);
  rec.expect("bk:fws", params, "1", str(r.is_fws));
  rec.expect("bk:parameters", params, "[" + std::to_string((1u << k) - 1) + "," + std::to_string(k) + ",1]",
             "[" + std::to_string(r.n) + "," + std::to_string(k) + "," + std::to_string(r.d) + "]");
  rec.expect("bk:spread", params, "0", std::to_string(r.spread.value_or(-1)));
  rec.expect_true("bk:algorithm_equivalence", params, weights_projective(multiset_from_code(g)) == wd);
  check_code(rec, "bk", params, wd, 2, k);
}

void check_dq(Recorder& rec, const Field& f) {
  const std::uint64_t q = f.order();
  const auto g = construct_dq(f);
  const auto wd = weights_exhaustive(g);
  const auto r = classify(wd, q, 2);
  const std::string params = "q=" + f.name();
  rec.expect("dq:strictly_compact", params, "1", str(r.is_strictly_compact));
  rec.expect("dq:parameters", params,
             "[" + std::to_string(q * (q + 1) / 2) + ",2," + std::to_string(q * (q - 1) / 2) + "]",
             "[" + std::to_string(r.n) + ",2," + std::to_string(r.d) + "]");
  rec.expect("dq:spread", params, "0", std::to_string(r.spread.value_or(-1)));
  rec.expect_true("dq:algorithm_equivalence", params, weights_projective(multiset_from_code(g)) == wd);
  check_code(rec, "dq", params, wd, q, 2);
}

void check_hyperplane_sum(Recorder& rec, const Field& f, unsigned k) {
  const std::uint64_t q = f.order();
  const std::uint64_t qk = gaussian_count(q, k);
  const std::uint64_t q1 = gaussian_count(q, k - 1);
  const std::uint64_t q2 = gaussian_count(q, k - 2);
  const std::uint64_t pairs = qk * (qk - 1) / 2;
  const std::string params = fmt_qk(f, k);
  const auto m = construct_hyperplane_sum(f, k);
  const auto wd = weights_projective(m);
  const auto r = classify(wd, q, k);

  rec.expect("hsum:length", params, std::to_string(q1 * pairs), std::to_string(r.n));
  rec.expect("hsum:distance", params, std::to_string(checked_pow(q, k - 2) * (pairs - qk + 1)), std::to_string(r.d));
  bool affine = true;
  for (std::size_t s = 0; s < qk; ++s) affine = affine && char_of_hyperplane(m, s) == q2 * pairs + (q1 - q2) * s;
  rec.expect_true("hsum:char_affine", params, affine, "Char(H_s) = q_{k-2} C(q_k,2) + (q_{k-1}-q_{k-2}) s");
  rec.expect("hsum:mws", params, "1", str(r.is_mws));

  const std::int64_t spread = r.spread.value_or(-1);
  const auto qk_s = static_cast<std::int64_t>(qk);
  const auto q1_s = static_cast<std::int64_t>(q1);
  const auto q_s = static_cast<std::int64_t>(q);
  const std::int64_t corrected = qk_s * q1_s * (qk_s * q1_s - q1_s - q_s) / 2;
  const std::int64_t printed_form = qk_s * q1_s * (qk_s * q1_s + q1_s - q_s) / 2;
  rec.expect("hsum:spread_corrected", params, std::to_string(corrected), std::to_string(spread));
  rec.printed("hsum:spread_printed", params, std::to_string(printed_form), std::to_string(spread),
              kDeviationHyperplaneSumSpread);
  if (checked_pow(q, k) * r.n <= kEnumerationWorkLimit)
    rec.expect_true("hsum:algorithm_equivalence", params, weights_exhaustive(code_from_multiset(m)) == wd);
  check_code(rec, "hsum", params, wd, q, k);
}

void check_powers_of_two(Recorder& rec, const Field& f, unsigned k) {
  const std::uint64_t q = f.order();
  const std::uint64_t qk = gaussian_count(q, k);
  const std::string params = fmt_qk(f, k);
  const auto m = construct_powers_of_two(f, k);
  const auto wd = weights_projective(m);
  const auto r = classify(wd, q, k);
  rec.expect("pow2:length", params, std::to_string((std::uint64_t{1} << qk) - 1), std::to_string(r.n));
  rec.expect("pow2:mws", params, "1", str(r.is_mws));
  const std::uint64_t printed_d = (std::uint64_t{1} << (checked_pow(q, k - 1) - 1)) - 1;
  rec.printed("pow2:distance_printed", params, std::to_string(printed_d), std::to_string(r.d),
              kDeviationPowersOfTwoDistance);
  check_code(rec, "pow2", params, wd, q, k);
}

void check_compact_params(Recorder& rec, std::uint64_t q, unsigned k) {
  const std::string params = "q=" + std::to_string(q) + " k=" + std::to_string(k);
  const auto c0 = compact_params(q, k, 0);
  if (const auto strict = predict_strictly_compact(q, k)) {
    rec.expect("compact:j0_matches_strictly_compact", params,
               std::to_string(strict->n) + "," + std::to_string(strict->d),
               std::to_string(c0.n) + "," + std::to_string(c0.d));
  }
  rec.printed("compact:printed_endpoint", params + " j=0", std::to_string(c0.printed_s_last),
              std::to_string(c0.s_last), kDeviationCompactParams);
  const auto c1 = compact_params(q, k, 1);
  const auto consistent = compact_length_consistent(q, k, 1);
  rec.printed("compact:printed_length", params + " j=1", std::to_string(c1.n),
              consistent ? std::to_string(*consistent) : "non-integral", kDeviationCompactParams);
}

void check_min_length(Recorder& rec, const Field& f, unsigned k) {
  const std::uint64_t q = f.order();
  const std::uint64_t qk = gaussian_count(q, k);
  const std::uint64_t bound = (q * qk + 1) / 2;
  if (multiset_count(bound, qk) > 200'000) return;
  const std::string params = fmt_qk(f, k);
  const std::uint64_t found = min_length_probe(f, k, bound + 2);
  rec.expect_true("min_length_at_least_bound", params, found >= bound, "n >= " + std::to_string(bound));
  if (const auto strict = predict_strictly_compact(q, k))
    rec.expect("min_length_strictly_compact", params, std::to_string(strict->n), std::to_string(found));
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::deviation:
      return "DEVIATION";
  }
  return "?";
}

}  // namespace

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const VerifyRecord& r) { return r.status == s; }));
}

std::vector<std::string> VerifyReport::deviation_kinds() const {
  std::set<std::string> kinds;
  for (const auto& r : records)
    if (r.status == CheckStatus::deviation) kinds.insert(r.deviation_kind);
  return {kinds.begin(), kinds.end()};
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : records) {
    out << status_name(r.status) << ' ' << r.check << " [" << r.params << "] expected=" << r.expected
        << " measured=" << r.measured;
    if (r.status == CheckStatus::deviation) out << " kind=" << r.deviation_kind;
    out << '\n';
  }
  out << "summary pass " << count(CheckStatus::pass) << " fail " << count(CheckStatus::fail) << " deviation "
      << count(CheckStatus::deviation) << '\n';
  const auto kinds = deviation_kinds();
  out << "documented deviations " << kinds.size();
  for (const auto& k : kinds) out << ' ' << k;
  out << '\n';
  return out.str();
}

VerifyReport run_verify(std::uint32_t q_max, unsigned k_max) {
  VerifyReport report;
  Recorder rec(report);
  for (std::uint32_t q = 2; q <= q_max; ++q) {
    const auto [p, m] = prime_power(q);
    if (p == 0) continue;
    const Field f = Field::make(p, m);
    check_field(rec, f);
    if (k_max >= 2) check_dq(rec, f);
    for (unsigned k = 1; k <= k_max; ++k) {
      if (gaussian_count(q, k) > 1000) break;
      check_geometry(rec, f, k);
      check_random_equivalence(rec, f, k);
      if (k < 2) continue;
      check_compact_params(rec, q, k);
      check_hyperplane_sum(rec, f, k);
      if (gaussian_count(q, k) <= 21) check_powers_of_two(rec, f, k);
      check_min_length(rec, f, k);
    }
  }
  for (unsigned k = 1; k <= k_max && k <= 12; ++k) check_bk(rec, k);
  return report;
}

}  // namespace mws
