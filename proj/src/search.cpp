#include "mws/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace mws {

namespace {

// Incrementally maintained hyperplane characters and their collision count.
class CharacterState {
 public:
  CharacterState(const ProjectiveSpace& space, std::uint64_t n) : space_(space), hist_(n + 1, 0) {}

  void reset(const std::vector<std::uint64_t>& mult) {
    std::fill(hist_.begin(), hist_.end(), 0);
    chars_.assign(space_.size(), 0);
    energy_ = 0;
    for (std::size_t s = 0; s < space_.size(); ++s) {
      for (std::uint32_t p : space_.hyperplane(s)) chars_[s] += mult[p];
      insert(chars_[s]);
    }
  }

  // Adds delta units at a point: every hyperplane through it shifts.
  void shift_point(std::size_t point, int delta) {
    for (std::uint32_t s : space_.hyperplane(point)) {
      erase(chars_[s]);
      chars_[s] = static_cast<std::uint64_t>(static_cast<std::int64_t>(chars_[s]) + delta);
      insert(chars_[s]);
    }
  }

  std::uint64_t energy() const { return energy_; }

 private:
  void insert(std::uint64_t v) { energy_ += hist_[v]++; }
  void erase(std::uint64_t v) { energy_ -= --hist_[v]; }

  const ProjectiveSpace& space_;
  std::vector<std::uint64_t> chars_;
  std::vector<std::uint64_t> hist_;
  std::uint64_t energy_ = 0;
};

SearchResult search_exhaustive(const SearchConfig& cfg, const SpacePtr& space) {
  const std::size_t qk = space->size();
  const std::uint64_t count = multiset_count(cfg.n, qk);
  if (count > kExhaustiveMultisetLimit)
    throw std::invalid_argument("exhaustive search over " + std::to_string(count) + " multisets exceeds limit " +
                                std::to_string(kExhaustiveMultisetLimit));

  SearchResult result;
  std::vector<std::uint64_t> mult(qk, 0);
  std::vector<std::uint64_t> chars(qk, 0);
  std::vector<std::uint64_t> scratch(qk);

  auto distinct = [&] {
    std::copy(chars.begin(), chars.end(), scratch.begin());
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
  };
  auto add_at = [&](std::size_t point, std::int64_t delta) {
    for (std::uint32_t s : space->hyperplane(point))
      chars[s] = static_cast<std::uint64_t>(static_cast<std::int64_t>(chars[s]) + delta);
  };

  // Point i takes 0..remaining in increasing order; the last point takes the rest.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> bool {
    if (i + 1 == qk) {
      mult[i] = remaining;
      add_at(i, static_cast<std::int64_t>(remaining));
      ++result.stats.iterations;
      bool found = distinct();
      if (found) {
        ProjectiveMultiset candidate(space, mult);
        found = candidate.spans();
        if (found) result.hit = std::move(candidate);
      }
      add_at(i, -static_cast<std::int64_t>(remaining));
      mult[i] = 0;
      return found;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
      mult[i] = v;
      if (v > 0) add_at(i, 1);
      if (self(self, i + 1, remaining - v)) return true;
    }
    add_at(i, -static_cast<std::int64_t>(remaining));
    mult[i] = 0;
    return false;
  };
  rec(rec, 0, cfg.n);
  return result;
}

SearchResult search_randomized(const SearchConfig& cfg, const SpacePtr& space) {
  const std::size_t qk = space->size();
  SearchResult result;
  if (qk == 1) {
    result.hit = ProjectiveMultiset(space, {cfg.n});
    return result;
  }
  CharacterState state(*space, cfg.n);
  std::vector<std::uint64_t> mult(qk);

  for (std::uint64_t restart = 0; result.stats.iterations < cfg.max_iters; ++restart) {
    result.stats.restarts = restart;
    SplitMix64 rng(cfg.seed ^ restart);
    std::fill(mult.begin(), mult.end(), 0);
    for (std::uint64_t unit = 0; unit < cfg.n; ++unit) ++mult[rng.below(qk)];
    state.reset(mult);
    std::uint64_t best = state.energy();
    std::uint64_t stale = 0;
    result.stats.energy_trace.emplace_back(result.stats.iterations, best);

    while (result.stats.iterations < cfg.max_iters) {
      if (state.energy() == 0) {
        ProjectiveMultiset candidate(space, mult);
        if (candidate.spans()) {
          result.hit = std::move(candidate);
          return result;
        }
        break;
      }
      ++result.stats.iterations;
      std::size_t from = rng.below(qk);
      while (mult[from] == 0) from = rng.below(qk);
      std::size_t to = rng.below(qk - 1);
      if (to >= from) ++to;

      const std::uint64_t before = state.energy();
      state.shift_point(from, -1);
      state.shift_point(to, +1);
      if (state.energy() > before) {
        state.shift_point(to, -1);
        state.shift_point(from, +1);
        ++stale;
      } else {
        --mult[from];
        ++mult[to];
        if (state.energy() < best) {
          best = state.energy();
          stale = 0;
          result.stats.energy_trace.emplace_back(result.stats.iterations, best);
        } else {
          ++stale;
        }
      }
      if (stale > cfg.plateau) break;
    }
  }
  return result;
}

}  // namespace

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t points) {
  if (points == 0) return n == 0 ? 1 : 0;
  // C(n + points - 1, r) with r = min(n, points - 1), built incrementally.
  const std::uint64_t top = n + points - 1;
  const std::uint64_t r = std::min(n, points - 1);
  __extension__ using u128 = unsigned __int128;
  u128 c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (top - r + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t collision_energy(const ProjectiveMultiset& m) {
  std::vector<std::uint64_t> chars = hyperplane_characters(m);
  std::sort(chars.begin(), chars.end());
  std::uint64_t energy = 0;
  for (std::size_t i = 0, j = 0; i < chars.size(); i = j) {
    while (j < chars.size() && chars[j] == chars[i]) ++j;
    const std::uint64_t run = j - i;
    energy += run * (run - 1) / 2;
  }
  return energy;
}

SearchResult search_mws(const SearchConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("search needs k >= 1");
  if (cfg.n < cfg.k) throw std::invalid_argument("search needs n >= k for a spanning multiset");
  const auto space = ProjectiveSpace::build(cfg.field, cfg.k);
  return cfg.mode == SearchMode::exhaustive ? search_exhaustive(cfg, space) : search_randomized(cfg, space);
}

std::uint64_t min_length_probe(const Field& field, unsigned k, std::uint64_t n_max) {
  for (std::uint64_t n = k; n <= n_max; ++n) {
    SearchConfig cfg{.field = field, .k = k, .n = n, .mode = SearchMode::exhaustive};
    if (search_mws(cfg).hit) return n;
  }
  throw std::runtime_error("no MWS code of dimension " + std::to_string(k) + " over GF(" + field.name() +
                           ") with length <= " + std::to_string(n_max));
}

std::uint64_t powers_of_two_distance(const SpacePtr& space, const std::vector<std::size_t>& labeling) {
  std::vector<std::uint64_t> mult(space->size());
  for (std::size_t i = 0; i < labeling.size(); ++i) mult[labeling[i]] = std::uint64_t{1} << i;
  const std::uint64_t n = (std::uint64_t{1} << labeling.size()) - 1;
  std::uint64_t max_char = 0;
  for (std::size_t s = 0; s < space->size(); ++s) {
    std::uint64_t c = 0;
    for (std::uint32_t p : space->hyperplane(s)) c += mult[p];
    max_char = std::max(max_char, c);
  }
  return n - max_char;
}

std::vector<std::size_t> optimize_labeling(const ProjectiveMultiset& m, LabelingObjective objective,
                                           std::uint64_t seed, std::uint64_t max_iters) {
  const std::size_t qk = m.space().size();
  std::vector<std::size_t> labeling(qk, qk);
  for (std::size_t p = 0; p < qk; ++p) {
    const std::uint64_t v = m[p];
    if (v == 0 || (v & (v - 1)) != 0 || std::countr_zero(v) >= static_cast<int>(qk) ||
        labeling[static_cast<std::size_t>(std::countr_zero(v))] != qk)
      throw std::invalid_argument("multiset is not a powers-of-two construction");
    labeling[static_cast<std::size_t>(std::countr_zero(v))] = p;
  }

  const auto better = [objective](std::uint64_t a, std::uint64_t b) {
    return objective == LabelingObjective::maximize_distance ? a > b : a < b;
  };
  std::vector<std::size_t> best = labeling;
  std::uint64_t best_d = powers_of_two_distance(m.space_ptr(), labeling);
  std::uint64_t current_d = best_d;
  if (qk < 2) return best;

  SplitMix64 rng(seed);
  for (std::uint64_t it = 0; it < max_iters; ++it) {
    const std::size_t a = rng.below(qk);
    std::size_t b = rng.below(qk - 1);
    if (b >= a) ++b;
    std::swap(labeling[a], labeling[b]);
    const std::uint64_t d = powers_of_two_distance(m.space_ptr(), labeling);
    if (better(current_d, d)) {
      std::swap(labeling[a], labeling[b]);
      continue;
    }
    current_d = d;
    if (better(d, best_d)) {
      best_d = d;
      best = labeling;
    }
  }
  return best;
}

}  // namespace mws
