#ifndef MWS_SEARCH_HPP
#define MWS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mws/code.hpp"

namespace mws {

/// SplitMix64. Bounded draws use the multiply-high reduction
/// (x * bound) >> 64, so sequences are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

enum class SearchMode { exhaustive, randomized };

inline constexpr std::uint64_t kExhaustiveMultisetLimit = 10'000'000;

struct SearchConfig {
  Field field;
  unsigned k = 2;
  std::uint64_t n = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 1'000'000;
  SearchMode mode = SearchMode::randomized;
  /// Non-improving moves tolerated before a randomized restart.
  std::uint64_t plateau = 20'000;
};

struct SearchStats {
  std::uint64_t iterations = 0;  // moves (randomized) or multisets visited (exhaustive)
  std::uint64_t restarts = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> energy_trace;  // (iteration, energy)
};

struct SearchResult {
  std::optional<ProjectiveMultiset> hit;
  SearchStats stats;
};

/// C(n + points - 1, points - 1), saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t points);

/// Number of unordered hyperplane pairs with equal characters. Zero iff the
/// multiset has q_k distinct weights.
std::uint64_t collision_energy(const ProjectiveMultiset& m);

/// Looks for a spanning multiset of size n whose hyperplane characters are
/// pairwise distinct (an MWS code).
///
/// Exhaustive mode walks the multisets in lexicographic order of the
/// multiplicity vector. Randomized mode hill-climbs on collision_energy by
/// moving one unit of multiplicity between points, restarting after
/// `plateau` non-improving moves; restart r draws from SplitMix64(seed ^ r).
/// Results depend only on the config.
SearchResult search_mws(const SearchConfig& cfg);

/// Smallest n <= n_max admitting an MWS multiset, by exhaustive search.
std::uint64_t min_length_probe(const Field& field, unsigned k, std::uint64_t n_max);

enum class LabelingObjective { maximize_distance, minimize_distance };

/// Minimum distance of the powers-of-two code with the given labeling.
std::uint64_t powers_of_two_distance(const SpacePtr& space, const std::vector<std::size_t>& labeling);

/// Seeded local search over transpositions of the point labels of a
/// powers-of-two multiset. Returns the best labeling found; the labeling
/// already carried by `m` is returned when nothing beats it.
std::vector<std::size_t> optimize_labeling(const ProjectiveMultiset& m, LabelingObjective objective,
                                           std::uint64_t seed, std::uint64_t max_iters);

}  // namespace mws

#endif  // MWS_SEARCH_HPP
