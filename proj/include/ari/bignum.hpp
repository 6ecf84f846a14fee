// Arbitrary-precision unsigned integers, sized for enumeration-number work:
// multiplication, exponentiation with an abort bound, decimal conversion.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ari {

class Nat {
public:
  Nat() = default;
  Nat(std::uint64_t v) {
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  static Nat from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Nat: empty decimal literal");
    Nat r;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("Nat: bad decimal digit");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
    }
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Nat: does not fit uint64");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  std::size_t limb_count() const { return limbs_.size(); }

  friend int cmp(const Nat& a, const Nat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
  }
  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Nat& a, const Nat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Nat& a, const Nat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Nat& a, const Nat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Nat& a, const Nat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Nat& a, const Nat& b) { return cmp(a, b) >= 0; }

  friend Nat operator+(const Nat& a, const Nat& b) {
    Nat r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry;
      if (i < x.size()) s += x[i];
      if (i < y.size()) s += y[i];
      r.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
      carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires a >= b.
  friend Nat operator-(const Nat& a, const Nat& b) {
    if (a < b) throw std::underflow_error("Nat: negative subtraction");
    Nat r;
    r.limbs_.reserve(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
      if (d < 0) {
        d += (std::int64_t{1} << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r.limbs_.push_back(static_cast<std::uint32_t>(d));
    }
    r.trim();
    return r;
  }

  friend Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat{};
    Nat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  // Quotient in place, returns remainder. d must be nonzero.
  std::uint32_t div_small_inplace(std::uint32_t d) {
    if (d == 0) throw std::domain_error("Nat: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  // Multiplicity of prime p in *this (counts exact divisions). Zero input yields 0.
  std::uint32_t multiplicity(std::uint32_t p) const {
    if (is_zero()) return 0;
    Nat n = *this;
    std::uint32_t count = 0;
    while (!n.is_zero()) {
      Nat q = n;
      std::uint32_t r = q.div_small_inplace(p);
      if (r != 0) break;
      n = std::move(q);
      ++count;
      if (n.is_one()) break;
    }
    return count;
  }

  // Divide out p^k; requires exact divisibility for each step.
  Nat remove_factor(std::uint32_t p, std::uint32_t k) const {
    Nat n = *this;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t r = n.div_small_inplace(p);
      if (r != 0) throw std::domain_error("Nat: remove_factor not exact");
    }
    return n;
  }

  // b^e, aborting with nullopt once the result would exceed limb_cap limbs.
  static std::optional<Nat> pow_checked(const Nat& base, std::uint64_t e, std::size_t limb_cap) {
    Nat result{1};
    Nat b = base;
    if (e == 0) return result;
    if (base.is_zero()) return Nat{};
    while (true) {
      if (e & 1) {
        result = result * b;
        if (result.limb_count() > limb_cap) return std::nullopt;
      }
      e >>= 1;
      if (e == 0) break;
      b = b * b;
      if (b.limb_count() > limb_cap) return std::nullopt;
    }
    return result;
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    Nat n = *this;
    std::string out;
    while (!n.is_zero()) {
      std::uint32_t chunk = n.div_small_inplace(1000000000u);
      if (n.is_zero()) {
        out = std::to_string(chunk) + out;
      } else {
        std::string part = std::to_string(chunk);
        out = std::string(9 - part.size(), '0') + part + out;
      }
    }
    return out;
  }

  std::size_t decimal_digit_count() const {
    if (is_zero()) return 1;
    return to_decimal().size();
  }

  void add_small_inplace(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; i < limbs_.size() && carry; ++i) {
      std::uint64_t cur = limbs_[i] + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void mul_small_inplace(std::uint32_t v) {
    if (v == 0) {
      limbs_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * v + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // little-endian, base 2^32, no trailing zeros
};

// 10^e as a Nat.
inline Nat nat_pow10(std::uint64_t e) {
  auto r = Nat::pow_checked(Nat{10}, e, std::numeric_limits<std::size_t>::max());
  return *r;
}

}  // namespace ari
