#include "mws/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mws {

GeneratorMatrix::GeneratorMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

GeneratorMatrix::GeneratorMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("generator matrix entry count mismatch");
  for (Element e : entries_)
    if (!field_.contains(e)) throw std::out_of_range("matrix entry " + std::to_string(e) + " outside GF(" + field_.name() + ")");
}

void GeneratorMatrix::set(std::size_t r, std::size_t c, Element value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!field_.contains(value)) throw std::out_of_range("matrix entry outside field");
  entries_[r * cols_ + c] = value;
}

std::vector<Element> GeneratorMatrix::column(std::size_t c) const {
  std::vector<Element> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

std::size_t rank(const GeneratorMatrix& g) { return matrix_rank(g.field(), g.entries(), g.rows(), g.cols()); }

std::optional<std::size_t> find_zero_column(const GeneratorMatrix& g) {
  for (std::size_t c = 0; c < g.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < g.rows() && zero; ++r) zero = g(r, c) == 0;
    if (zero) return c;
  }
  return std::nullopt;
}

DegenerateCode::DegenerateCode(std::size_t column)
    : std::invalid_argument("degenerate code: column " + std::to_string(column) + " is identically zero"),
      column_(column) {}

ProjectiveMultiset::ProjectiveMultiset(SpacePtr space, std::vector<std::uint64_t> mult)
    : space_(std::move(space)), mult_(std::move(mult)) {
  if (!space_) throw std::invalid_argument("multiset needs a projective space");
  if (mult_.size() != space_->size())
    throw std::invalid_argument("multiset has " + std::to_string(mult_.size()) + " entries, expected " +
                                std::to_string(space_->size()));
  length_ = std::accumulate(mult_.begin(), mult_.end(), std::uint64_t{0});
}

std::size_t ProjectiveMultiset::support_rank() const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) support.push_back(i);
  return space_->rank_of(support);
}

std::vector<std::uint64_t> WeightDistribution::weight_set() const {
  std::vector<std::uint64_t> s;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) s.push_back(i);
  return s;
}

std::uint64_t WeightDistribution::min_distance() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return i;
  return 0;
}

std::uint64_t WeightDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t WeightDistribution::weight_sum() const {
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) s += i * counts[i];
  return s;
}

GeneratorMatrix code_from_multiset(const ProjectiveMultiset& m, std::uint64_t max_length) {
  const std::size_t k = m.dimension();
  if (const auto r = m.support_rank(); r < k)
    throw std::invalid_argument("rank-deficient multiset: support has rank " + std::to_string(r) + " < k = " +
                                std::to_string(k));
  const std::uint64_t n = m.length();
  if (n > max_length)
    throw std::length_error("code length " + std::to_string(n) + " exceeds materialization limit " +
                            std::to_string(max_length));
  GeneratorMatrix g(m.field(), k, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < m.space().size(); ++i) {
    const auto p = m.space().point(i);
    for (std::uint64_t rep = 0; rep < m[i]; ++rep, ++col)
      for (std::size_t r = 0; r < k; ++r) g.set(r, col, p[r]);
  }
  return g;
}

ProjectiveMultiset multiset_from_code(const GeneratorMatrix& g, SpacePtr space) {
  if (const auto zero = find_zero_column(g)) throw DegenerateCode(*zero);
  if (!space) space = ProjectiveSpace::build(g.field(), static_cast<unsigned>(g.rows()));
  if (!(space->field() == g.field()) || space->dimension() != g.rows())
    throw std::invalid_argument("projective space does not match the generator matrix");
  std::vector<std::uint64_t> mult(space->size(), 0);
  for (std::size_t c = 0; c < g.cols(); ++c) ++mult[*space->index_of(g.column(c))];
  return ProjectiveMultiset(std::move(space), std::move(mult));
}

void for_each_codeword(const GeneratorMatrix& g, const std::function<void(std::span<const Element>)>& visit,
                       std::uint64_t work_limit) {
  const Field& f = g.field();
  const std::uint32_t q = f.order();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::uint64_t messages = 1;
  for (std::size_t r = 0; r < k; ++r) {
    messages *= q;
    if (messages * std::max<std::size_t>(n, 1) > work_limit)
      throw std::length_error("codeword enumeration of " + std::to_string(q) + "^" + std::to_string(k) +
                              " messages x length " + std::to_string(n) + " exceeds work limit");
  }

  std::vector<Element> digits(k, 0);
  std::vector<Element> word(n, 0);
  for (std::uint64_t count = 0;; ++count) {
    visit(word);
    if (count + 1 == messages) break;
    // Odometer step: bump digit r, rolling lower digits over to zero.
    for (std::size_t r = 0; r < k; ++r) {
      const Element from = digits[r];
      const Element to = from + 1 == q ? 0 : from + 1;
      const Element diff = f.sub(to, from);
      const auto row = g.row(r);
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] != 0) word[j] = f.add(word[j], f.mul(diff, row[j]));
      digits[r] = to;
      if (to != 0) break;
    }
  }
}

WeightDistribution weights_exhaustive(const GeneratorMatrix& g, std::uint64_t work_limit) {
  WeightDistribution wd{std::vector<std::uint64_t>(g.cols() + 1, 0)};
  for_each_codeword(
      g,
      [&](std::span<const Element> word) {
        const auto zeros = static_cast<std::size_t>(std::count(word.begin(), word.end(), Element{0}));
        ++wd.counts[word.size() - zeros];
      },
      work_limit);
  return wd;
}

std::uint64_t char_of_hyperplane(const ProjectiveMultiset& m, std::size_t s) {
  if (s >= m.space().size())
    throw std::out_of_range("hyperplane index " + std::to_string(s) + " out of range [0, " +
                            std::to_string(m.space().size()) + ")");
  std::uint64_t total = 0;
  for (std::uint32_t p : m.space().hyperplane(s)) total += m[p];
  return total;
}

std::vector<std::uint64_t> hyperplane_characters(const ProjectiveMultiset& m) {
  std::vector<std::uint64_t> chars(m.space().size());
  for (std::size_t s = 0; s < chars.size(); ++s) chars[s] = char_of_hyperplane(m, s);
  return chars;
}

WeightDistribution weights_projective(const ProjectiveMultiset& m) {
  if (const auto r = m.support_rank(); r < m.dimension())
    throw std::invalid_argument("rank-deficient multiset: support has rank " + std::to_string(r) + " < k = " +
                                std::to_string(m.dimension()));
  const std::uint64_t n = m.length();
  const std::uint64_t scalars = m.field().order() - 1;
  WeightDistribution wd{std::vector<std::uint64_t>(n + 1, 0)};
  wd.counts[0] = 1;
  for (std::size_t s = 0; s < m.space().size(); ++s) wd.counts[n - char_of_hyperplane(m, s)] += scalars;
  return wd;
}

}  // namespace mws
