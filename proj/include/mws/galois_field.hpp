#ifndef MWS_GALOIS_FIELD_HPP
#define MWS_GALOIS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mws {

/// Field element encoded as an integer index in [0, q).
///
/// The base-p digits of the index are the polynomial coefficients
/// (c_0 least significant), so 0 is the zero element and 1 is the unit.
using Element = std::uint32_t;

inline constexpr std::uint64_t kFieldOrderCeiling = std::uint64_t{1} << 20;

/// Full add/mul tables are kept up to this order.
inline constexpr std::uint32_t kFieldTableLimit = 256;

bool is_prime(std::uint64_t n);

/// If n = p^m for a prime p, returns {p, m}; otherwise {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n);

/// GF(p^m) with the canonical modulus.
///
/// The modulus is the monic irreducible polynomial of degree m whose
/// non-leading coefficients, read as a base-p number with c_{m-1} most
/// significant, are smallest. That number is the same integer as the element
/// index of the polynomial's low part, which makes the choice bit-exact and
/// portable across file formats. Instances are immutable and cheap to copy.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t m = 1,
                    std::uint64_t ceiling = kFieldOrderCeiling);

  /// Accepts "p", "p^m" or a prime-power order such as "4".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  /// Coefficients c_0..c_m of the modulus (c_m = 1). Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  /// "p" for prime fields, "p^m" otherwise.
  std::string name() const;

  bool contains(Element a) const { return a < order(); }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Element a) const;

  /// Smallest-index element of multiplicative order q-1 (1 for GF(2)).
  Element primitive_element() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Exhaustive irreducibility test for a monic polynomial over GF(p),
/// coefficients low-first. Trial division by every monic polynomial of
/// degree at most deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace mws

#endif  // MWS_GALOIS_FIELD_HPP
