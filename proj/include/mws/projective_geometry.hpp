#ifndef MWS_PROJECTIVE_GEOMETRY_HPP
#define MWS_PROJECTIVE_GEOMETRY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mws/galois_field.hpp"

namespace mws {

/// q_j = (q^j - 1)/(q - 1): the number of points of PG(j-1, q). q_0 = 0.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t gaussian_count(std::uint64_t q, unsigned j);

/// Integer power with overflow detection.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

inline constexpr std::uint64_t kProjectivePointCeiling = 100000;

/// Points and hyperplanes of PG(k-1, q).
///
/// Points are the normalized nonzero k-vectors (first nonzero coordinate 1),
/// sorted lexicographically by element index with the leftmost coordinate
/// most significant. Hyperplane H_s is the orthogonal complement of point s
/// under the standard dot product. The polarity is symmetric: point i lies on
/// H_s exactly when point s lies on H_i, so hyperplane(i) is also the list of
/// hyperplanes through point i.
class ProjectiveSpace {
 public:
  static std::shared_ptr<const ProjectiveSpace> build(const Field& field, unsigned k,
                                                      std::uint64_t ceiling = kProjectivePointCeiling);

  const Field& field() const { return field_; }
  unsigned dimension() const { return k_; }
  std::size_t size() const { return codes_.size(); }

  std::span<const Element> point(std::size_t i) const {
    return {coords_.data() + i * k_, k_};
  }

  /// Index of the projective point spanned by v, or nullopt for the zero vector.
  std::optional<std::size_t> index_of(std::span<const Element> v) const;

  /// Sorted point indices lying on H_s.
  std::span<const std::uint32_t> hyperplane(std::size_t s) const {
    return {members_.data() + s * per_hyperplane_, per_hyperplane_};
  }

  bool incident(std::size_t point, std::size_t hyperplane) const;

  /// Rank of the span of the given points.
  std::size_t rank_of(std::span<const std::size_t> points) const;

 private:
  ProjectiveSpace(Field field, unsigned k) : field_(std::move(field)), k_(k) {}

  Field field_;
  unsigned k_;
  std::vector<Element> coords_;       // size() x k, row-major
  std::vector<std::uint64_t> codes_;  // base-q code of each point, ascending
  std::size_t per_hyperplane_ = 0;
  std::vector<std::uint32_t> members_;  // size() x per_hyperplane_
};

using SpacePtr = std::shared_ptr<const ProjectiveSpace>;

/// Rank over the field of the rows of a dense matrix (row-major, rows x cols).
std::size_t matrix_rank(const Field& field, std::vector<Element> entries, std::size_t rows, std::size_t cols);

}  // namespace mws

#endif  // MWS_PROJECTIVE_GEOMETRY_HPP
