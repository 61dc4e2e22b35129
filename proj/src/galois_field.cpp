#include "mws/galois_field.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace mws {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = std::uint64_t{lead} * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint32_t> to_digits(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> d(m, 0);
  for (std::uint32_t j = 0; j < m; ++j) {
    d[j] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return d;
}

std::uint64_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint64_t index = 0;
  for (std::size_t j = d.size(); j-- > 0;) index = index * p + d[j];
  return index;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(n), 1};
  std::uint32_t m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // All monic divisors of degree d: low coefficients range over p^d values.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = to_digits(low, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  // Dense tables, present when q <= kFieldTableLimit.
  std::vector<Element> add_table;
  std::vector<Element> mul_table;
  std::vector<Element> neg_table;
  std::vector<Element> inv_table;
  Element primitive = 1;

  Element add_slow(Element a, Element b) const {
    if (m == 1) return static_cast<Element>((std::uint64_t{a} + b) % p);
    Element r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }

  Element neg_slow(Element a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    Element r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }

  Element mul_slow(Element a, Element b) const {
    if (m == 1) return static_cast<Element>(std::uint64_t{a} * b % p);
    const Poly x = to_digits(a, p, m);
    const Poly y = to_digits(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(m, 0);
    return static_cast<Element>(from_digits(r, p));
  }

  Element pow_slow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Element add(Element a, Element b) const {
    return add_table.empty() ? add_slow(a, b) : add_table[std::size_t{a} * q + b];
  }
  Element mul(Element a, Element b) const {
    return mul_table.empty() ? mul_slow(a, b) : mul_table[std::size_t{a} * q + b];
  }
};

Field Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t ceiling) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > ceiling)
      throw std::length_error("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds ceiling " +
                              std::to_string(ceiling));
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);

  if (m > 1) {
    // Canonical modulus: smallest low part, scanned in index order.
    for (std::uint64_t low = 0; low < q; ++low) {
      Poly cand = to_digits(low, p, m);
      cand.push_back(1);
      if (is_irreducible(p, cand)) {
        impl->modulus = std::move(cand);
        break;
      }
    }
  }

  if (q <= kFieldTableLimit) {
    impl->add_table.resize(q * q);
    impl->mul_table.resize(q * q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        impl->add_table[a * q + b] = impl->add_slow(a, b);
        impl->mul_table[a * q + b] = impl->mul_slow(a, b);
      }
    }
    impl->neg_table.assign(q, 0);
    for (Element a = 0; a < q; ++a) impl->neg_table[a] = impl->neg_slow(a);
    impl->inv_table.assign(q, 0);
    for (Element a = 1; a < q; ++a)
      for (Element b = 1; b < q; ++b)
        if (impl->mul_table[a * q + b] == 1) impl->inv_table[a] = b;
  }

  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    for (Element a = 2; a < q; ++a) {
      bool generator = true;
      for (std::uint64_t r : factors) {
        if (impl->pow_slow(a, (q - 1) / r) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) {
        impl->primitive = a;
        break;
      }
    }
  }
  return Field(std::move(impl));
}

Field Field::parse(std::string_view text) {
  auto to_u32 = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed field order '" + std::string(text) + "'");
    return v;
  };
  if (const auto caret = text.find('^'); caret != std::string_view::npos)
    return make(to_u32(text.substr(0, caret)), to_u32(text.substr(caret + 1)));
  const std::uint32_t q = to_u32(text);
  const auto [p, m] = prime_power(q);
  if (p == 0) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make(p, m);
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->m; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

std::string Field::name() const {
  if (impl_->m == 1) return std::to_string(impl_->p);
  return std::to_string(impl_->p) + "^" + std::to_string(impl_->m);
}

Element Field::add(Element a, Element b) const { return impl_->add(a, b); }

Element Field::neg(Element a) const {
  return impl_->neg_table.empty() ? impl_->neg_slow(a) : impl_->neg_table[a];
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const { return impl_->mul(a, b); }

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inversion of zero in GF(" + name() + ")");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return impl_->pow_slow(a, impl_->q - 2);
}

Element Field::pow(Element a, std::uint64_t e) const { return impl_->pow_slow(a, e); }

std::uint64_t Field::multiplicative_order(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t order = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++order;
  return order;
}

Element Field::primitive_element() const { return impl_->primitive; }

bool operator==(const Field& a, const Field& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m);
}

}  // namespace mws
