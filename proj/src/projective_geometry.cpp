#include "mws/projective_geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mws {

namespace {

// Normalized nonzero vectors of length len in canonical order, flattened.
std::vector<Element> normalized_vectors(std::uint32_t q, unsigned len) {
  std::vector<Element> out;
  for (unsigned lead = len; lead-- > 0;) {
    const unsigned tail = len - 1 - lead;
    const std::uint64_t count = checked_pow(q, tail);
    std::vector<Element> v(len, 0);
    v[lead] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t rest = t;
      for (unsigned i = len; i-- > lead + 1;) {
        v[i] = static_cast<Element>(rest % q);
        rest /= q;
      }
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error(std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t gaussian_count(std::uint64_t q, unsigned j) {
  if (q < 2) throw std::invalid_argument("gaussian_count requires q >= 2");
  // 1 + q + ... + q^{j-1}
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (unsigned i = 0; i < j; ++i) {
    if (sum > std::numeric_limits<std::uint64_t>::max() - term)
      throw std::overflow_error("q_" + std::to_string(j) + " overflows 64 bits");
    sum += term;
    if (i + 1 < j) term = checked_pow(q, i + 1);
  }
  return sum;
}

std::size_t matrix_rank(const Field& field, std::vector<Element> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const Element inv = field.inv(a[rank * cols + col]);
    for (std::size_t c = col; c < cols; ++c) a[rank * cols + c] = field.mul(a[rank * cols + c], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Element f = a[r * cols + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        a[r * cols + c] = field.sub(a[r * cols + c], field.mul(f, a[rank * cols + c]));
    }
    ++rank;
  }
  return rank;
}

std::shared_ptr<const ProjectiveSpace> ProjectiveSpace::build(const Field& field, unsigned k, std::uint64_t ceiling) {
  if (k < 1) throw std::invalid_argument("projective space needs k >= 1");
  const std::uint32_t q = field.order();
  const std::uint64_t qk = gaussian_count(q, k);
  if (qk > ceiling)
    throw std::length_error("PG(" + std::to_string(k - 1) + "," + field.name() + ") has " + std::to_string(qk) +
                            " points, over ceiling " + std::to_string(ceiling));

  std::shared_ptr<ProjectiveSpace> space(new ProjectiveSpace(field, k));
  space->coords_ = normalized_vectors(q, k);
  space->codes_.reserve(qk);
  for (std::size_t i = 0; i < qk; ++i) {
    std::uint64_t code = 0;
    for (unsigned c = 0; c < k; ++c) code = code * q + space->coords_[i * k + c];
    space->codes_.push_back(code);
  }

  // Points of H_s: solve p_s . x = 0 for the lead coordinate of p_s (which
  // is 1) over all normalized choices of the remaining coordinates.
  const std::vector<Element> free_vectors = normalized_vectors(q, k - 1);
  const std::size_t per = k > 1 ? free_vectors.size() / (k - 1) : 0;
  space->per_hyperplane_ = per;
  space->members_.resize(qk * per);
  std::vector<Element> x(k);
  for (std::size_t s = 0; s < qk; ++s) {
    const auto p = space->point(s);
    const unsigned lead = static_cast<unsigned>(std::find_if(p.begin(), p.end(), [](Element e) { return e != 0; }) -
                                                p.begin());
    for (std::size_t f = 0; f < per; ++f) {
      Element acc = 0;
      for (unsigned c = 0, src = 0; c < k; ++c) {
        if (c == lead) continue;
        x[c] = free_vectors[f * (k - 1) + src++];
        acc = field.add(acc, field.mul(p[c], x[c]));
      }
      x[lead] = field.neg(acc);
      space->members_[s * per + f] = static_cast<std::uint32_t>(*space->index_of(x));
    }
    std::sort(space->members_.begin() + static_cast<std::ptrdiff_t>(s * per),
              space->members_.begin() + static_cast<std::ptrdiff_t>((s + 1) * per));
  }
  return space;
}

std::optional<std::size_t> ProjectiveSpace::index_of(std::span<const Element> v) const {
  if (v.size() != k_) throw std::invalid_argument("vector length does not match projective dimension");
  const auto first = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
  if (first == v.end()) return std::nullopt;
  const Element scale = field_.inv(*first);
  const std::uint32_t q = field_.order();
  std::uint64_t code = 0;
  for (Element e : v) {
    if (!field_.contains(e)) throw std::out_of_range("vector entry outside GF(" + field_.name() + ")");
    code = code * q + field_.mul(e, scale);
  }
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  return static_cast<std::size_t>(it - codes_.begin());
}

bool ProjectiveSpace::incident(std::size_t point_index, std::size_t hyperplane_index) const {
  if (point_index >= size() || hyperplane_index >= size()) throw std::out_of_range("projective index out of range");
  const auto a = point(point_index);
  const auto b = point(hyperplane_index);
  Element acc = 0;
  for (unsigned c = 0; c < k_; ++c) acc = field_.add(acc, field_.mul(a[c], b[c]));
  return acc == 0;
}

std::size_t ProjectiveSpace::rank_of(std::span<const std::size_t> points) const {
  std::vector<Element> rows;
  rows.reserve(points.size() * k_);
  for (std::size_t i : points) {
    const auto p = point(i);
    rows.insert(rows.end(), p.begin(), p.end());
  }
  return matrix_rank(field_, std::move(rows), points.size(), k_);
}

}  // namespace mws
