#ifndef MWS_CODE_HPP
#define MWS_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mws/galois_field.hpp"
#include "mws/projective_geometry.hpp"

namespace mws {

/// Upper bound on q^k * n for codeword enumeration.
inline constexpr std::uint64_t kEnumerationWorkLimit = 100'000'000;

/// Upper bound on the length of a materialized generator matrix.
inline constexpr std::uint64_t kMaterializeLimit = 10'000'000;

/// k x n generator matrix over GF(q), stored row-major as element indices.
class GeneratorMatrix {
 public:
  GeneratorMatrix(Field field, std::size_t rows, std::size_t cols);
  GeneratorMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element value);

  std::span<const Element> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::vector<Element> column(std::size_t c) const;
  const std::vector<Element>& entries() const { return entries_; }

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

std::size_t rank(const GeneratorMatrix& g);

/// First all-zero column, if any. A code is degenerate iff one exists.
std::optional<std::size_t> find_zero_column(const GeneratorMatrix& g);

/// Non-degenerate code as multiplicities on the points of PG(k-1, q).
class ProjectiveMultiset {
 public:
  ProjectiveMultiset(SpacePtr space, std::vector<std::uint64_t> mult);

  const ProjectiveSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Field& field() const { return space_->field(); }
  unsigned dimension() const { return space_->dimension(); }

  std::span<const std::uint64_t> multiplicities() const { return mult_; }
  std::uint64_t operator[](std::size_t i) const { return mult_[i]; }

  /// n = sum of multiplicities.
  std::uint64_t length() const { return length_; }

  /// Rank of the points carrying nonzero multiplicity.
  std::size_t support_rank() const;
  bool spans() const { return support_rank() == dimension(); }

  friend bool operator==(const ProjectiveMultiset& a, const ProjectiveMultiset& b) {
    return a.space_->field() == b.space_->field() && a.dimension() == b.dimension() && a.mult_ == b.mult_;
  }

 private:
  SpacePtr space_;
  std::vector<std::uint64_t> mult_;
  std::uint64_t length_ = 0;
};

/// Weight distribution A_0..A_n.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t length() const { return counts.size() - 1; }
  std::uint64_t operator[](std::size_t i) const { return counts[i]; }

  /// Sorted distinct nonzero weights S(C).
  std::vector<std::uint64_t> weight_set() const;

  /// Smallest nonzero weight; 0 if the code has no nonzero codeword.
  std::uint64_t min_distance() const;

  std::uint64_t total() const;

  /// sum_i i * A_i.
  std::uint64_t weight_sum() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Column multiset expanded in canonical point order.
GeneratorMatrix code_from_multiset(const ProjectiveMultiset& m, std::uint64_t max_length = kMaterializeLimit);

/// Normalizes and tallies the columns. Throws DegenerateCode on a zero column.
ProjectiveMultiset multiset_from_code(const GeneratorMatrix& g, SpacePtr space = nullptr);

/// Thrown when a generator matrix has an all-zero column.
class DegenerateCode : public std::invalid_argument {
 public:
  explicit DegenerateCode(std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Visits every codeword mG in odometer order over message element indices,
/// m_0 varying fastest. The span is only valid during the call.
void for_each_codeword(const GeneratorMatrix& g, const std::function<void(std::span<const Element>)>& visit,
                       std::uint64_t work_limit = kEnumerationWorkLimit);

/// Weight distribution by enumerating all q^k codewords.
WeightDistribution weights_exhaustive(const GeneratorMatrix& g, std::uint64_t work_limit = kEnumerationWorkLimit);

/// Char(H_s): total multiplicity of the points on hyperplane s.
std::uint64_t char_of_hyperplane(const ProjectiveMultiset& m, std::size_t s);

/// Char(H_s) for every hyperplane, in hyperplane order.
std::vector<std::uint64_t> hyperplane_characters(const ProjectiveMultiset& m);

/// Weight distribution from hyperplane characters: each H_s accounts for the
/// q-1 codewords of weight n - Char(H_s).
WeightDistribution weights_projective(const ProjectiveMultiset& m);

}  // namespace mws

#endif  // MWS_CODE_HPP
