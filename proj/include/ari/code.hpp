// Symbolic enumeration numbers. An En-number is kept as a canonical
// prime-exponent tower and only materialized to an exact integer on demand,
// under an explicit decimal-digit budget. Real codes have exponent towers
// whose values dwarf any feasible integer representation, so every predicate
// on codes works structurally (exponent extraction, structural equality).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ari/bignum.hpp"

namespace ari {

// ---------------------------------------------------------------------------
// prime tables

namespace detail {
inline std::vector<std::uint32_t>& prime_cache() {
  static std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  return primes;
}
inline void grow_primes_until(std::size_t count_or_value, bool by_value) {
  auto& primes = prime_cache();
  auto is_prime = [&](std::uint32_t n) {
    for (std::uint32_t p : primes) {
      if (static_cast<std::uint64_t>(p) * p > n) break;
      if (n % p == 0) return false;
    }
    return true;
  };
  std::uint32_t candidate = primes.back() + 2;
  while (by_value ? primes.back() < count_or_value : primes.size() < count_or_value) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate += 2;
  }
}
}  // namespace detail

// g-th prime, zero-based: p_0 = 2, p_1 = 3, ...
inline std::uint32_t nth_prime(std::uint32_t g) {
  detail::grow_primes_until(static_cast<std::size_t>(g) + 1, false);
  return detail::prime_cache()[g];
}

inline std::optional<std::uint32_t> prime_index(std::uint32_t p) {
  if (p < 2) return std::nullopt;
  detail::grow_primes_until(p, true);
  const auto& primes = detail::prime_cache();
  auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it != primes.end() && *it == p)
    return static_cast<std::uint32_t>(it - primes.begin());
  return std::nullopt;
}

// Naive factorization oracle bound: we never factorize explicit integers
// above this, matching the module contract.
inline constexpr std::uint64_t kNaiveFactorBound = 1000000000ull;

struct PrimeFactor {
  std::uint32_t prime;
  std::uint32_t mult;
};

// Trial division. Returns nullopt when n exceeds the naive bound.
inline std::optional<std::vector<PrimeFactor>> factorize_small(std::uint64_t n) {
  if (n > kNaiveFactorBound) return std::nullopt;
  std::vector<PrimeFactor> out;
  if (n < 2) return out;
  for (std::uint32_t g = 0;; ++g) {
    std::uint32_t p = nth_prime(g);
    if (static_cast<std::uint64_t>(p) * p > n) break;
    std::uint32_t m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m) out.push_back({p, m});
  }
  if (n > 1) out.push_back({static_cast<std::uint32_t>(n), 1});
  return out;
}

// ---------------------------------------------------------------------------
// Code

class Code;
using CodePtr = std::shared_ptr<const Code>;

struct CodeFactor {
  std::uint32_t prime_index;  // g in p_g
  CodePtr exponent;           // never denotes zero
};

// Canonical form: explicit values at or below the naive factorization bound
// are a Lit; everything built from a known factorization stays a Product with
// factor indices strictly increasing and no zero exponents. Explicit values
// above the bound (numeroid lengths, extracted exponents) are also Lits;
// equality against a Product is then decided by bounded materialization.
class Code {
public:
  using Lit = Nat;
  using Product = std::vector<CodeFactor>;

  explicit Code(Lit v) : rep_(std::move(v)) {}
  explicit Code(Product f) : rep_(std::move(f)) {}

  bool is_lit() const { return std::holds_alternative<Lit>(rep_); }
  const Lit& lit() const { return std::get<Lit>(rep_); }
  const Product& factors() const { return std::get<Product>(rep_); }

  bool is_zero() const { return is_lit() && lit().is_zero(); }
  bool is_one() const { return is_lit() && lit().is_one(); }

private:
  std::variant<Lit, Product> rep_;
};

inline CodePtr code_lit(Nat v) { return std::make_shared<Code>(std::move(v)); }
inline CodePtr code_lit(std::uint64_t v) { return code_lit(Nat{v}); }

struct TooLarge {
  Nat digit_lower_bound;  // certified lower bound on the decimal digit count
};
using Materialized = std::variant<Nat, TooLarge>;

inline bool materialized_ok(const Materialized& m) { return std::holds_alternative<Nat>(m); }

Materialized materialize(const CodePtr& c, std::uint64_t digit_budget);
Nat digits_lower_bound(const CodePtr& c);

// Internal bound: products whose value is at most the naive factorization
// bound normalize to a Lit, so structural equality below that is trivial.
namespace detail {
inline std::optional<Nat> tiny_value(const Code::Product& fs) {
  Nat acc{1};
  for (const auto& f : fs) {
    if (!f.exponent->is_lit()) return std::nullopt;
    const Nat& e = f.exponent->lit();
    if (!e.fits_u64() || e.to_u64() > 64) return std::nullopt;
    auto powed = Nat::pow_checked(Nat{nth_prime(f.prime_index)}, e.to_u64(), 3);
    if (!powed) return std::nullopt;
    acc = acc * *powed;
    if (acc.limb_count() > 2 || (acc.fits_u64() && acc.to_u64() > kNaiveFactorBound))
      return std::nullopt;
  }
  return acc;
}
}  // namespace detail

// Builds the canonical code for a factor list (sorted, zero exponents dropped).
inline CodePtr code_product(Code::Product factors) {
  Code::Product kept;
  kept.reserve(factors.size());
  for (auto& f : factors) {
    if (f.exponent->is_zero()) continue;
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end(),
            [](const CodeFactor& a, const CodeFactor& b) { return a.prime_index < b.prime_index; });
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (kept[i - 1].prime_index == kept[i].prime_index)
      throw std::invalid_argument("code_product: duplicate prime index");
  }
  if (kept.empty()) return code_lit(1);
  if (auto v = detail::tiny_value(kept)) return code_lit(*v);
  return std::make_shared<Code>(std::move(kept));
}

inline CodePtr code_prime_power(std::uint32_t g, CodePtr exponent) {
  return code_product({CodeFactor{g, std::move(exponent)}});
}

bool code_eq(const CodePtr& a, const CodePtr& b);

namespace detail {
inline bool factor_lists_eq(const Code::Product& x, const Code::Product& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].prime_index != y[i].prime_index) return false;
    if (!code_eq(x[i].exponent, y[i].exponent)) return false;
  }
  return true;
}
}  // namespace detail

// Structural equality on canonical forms; a Lit against a Product is decided
// by materializing the product within the Lit's own digit count.
inline bool code_eq(const CodePtr& a, const CodePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_lit() && b->is_lit()) return a->lit() == b->lit();
  if (!a->is_lit() && !b->is_lit()) return detail::factor_lists_eq(a->factors(), b->factors());
  const CodePtr& l = a->is_lit() ? a : b;
  const CodePtr& p = a->is_lit() ? b : a;
  Materialized m = materialize(p, l->lit().decimal_digit_count() + 1);
  if (!materialized_ok(m)) return false;  // product provably has more digits
  return std::get<Nat>(m) == l->lit();
}

// Exponent of p_g in the canonical factorization. Total: zero and absent
// primes yield Lit(0); explicit literals are probed by repeated division.
inline CodePtr code_exp(const CodePtr& c, std::uint32_t g) {
  if (c->is_lit()) {
    const Nat& n = c->lit();
    if (n.is_zero() || n.is_one()) return code_lit(0);
    return code_lit(n.multiplicity(nth_prime(g)));
  }
  for (const auto& f : c->factors()) {
    if (f.prime_index == g) return f.exponent;
    if (f.prime_index > g) break;
  }
  return code_lit(0);
}

// Largest prime index present; by convention 0 for values 0 and 1.
// Explicit literals above the naive factorization bound are rejected.
inline std::uint32_t code_largest_prime_index(const CodePtr& c) {
  if (c->is_lit()) {
    const Nat& n = c->lit();
    if (n.is_zero() || n.is_one()) return 0;
    if (!n.fits_u64()) throw std::domain_error("len: literal beyond factorization bound");
    auto fs = factorize_small(n.to_u64());
    if (!fs) throw std::domain_error("len: literal beyond factorization bound");
    auto idx = prime_index(fs->back().prime);
    return *idx;
  }
  return c->factors().back().prime_index;
}

// ---------------------------------------------------------------------------
// materialization

namespace detail {
// floor(log10(p) * 10^6), rounded down: a rational lower bound on log10 p.
inline std::uint64_t log10_scaled_floor(std::uint32_t p) {
  long double v = std::log10(static_cast<long double>(p));
  auto scaled = static_cast<std::uint64_t>(v * 1000000.0L);
  return scaled > 0 ? scaled - 1 : 0;  // stay on the safe side of rounding
}
inline constexpr std::uint64_t kDigitBoundSaturation = 5000;
}  // namespace detail

// Certified lower bound on the decimal digit count of the denoted integer.
inline Nat digits_lower_bound(const CodePtr& c) {
  if (c->is_lit()) return Nat{c->lit().decimal_digit_count()};
  Nat best{1};
  for (const auto& f : c->factors()) {
    // value >= p_g ^ e, so digits >= floor(e_lb * log10 p_g) + 1
    Nat e_lb;
    if (f.exponent->is_lit()) {
      e_lb = f.exponent->lit();
    } else {
      Nat ed = digits_lower_bound(f.exponent);
      std::uint64_t d = ed.fits_u64() ? ed.to_u64() : detail::kDigitBoundSaturation;
      d = std::min<std::uint64_t>(d, detail::kDigitBoundSaturation);
      e_lb = nat_pow10(d - 1);  // any d-digit number is >= 10^(d-1)
    }
    Nat scaled = e_lb;
    scaled.mul_small_inplace(static_cast<std::uint32_t>(detail::log10_scaled_floor(nth_prime(f.prime_index))));
    scaled.div_small_inplace(1000000u);
    scaled.add_small_inplace(1);
    if (scaled > best) best = scaled;
  }
  return best;
}

inline Materialized materialize(const CodePtr& c, std::uint64_t digit_budget) {
  if (c->is_lit()) {
    if (c->lit().decimal_digit_count() <= digit_budget) return c->lit();
    return TooLarge{Nat{c->lit().decimal_digit_count()}};
  }
  // limbs hold ~9.63 decimal digits each; small slack, exact re-check at the end
  std::size_t limb_cap = static_cast<std::size_t>(digit_budget / 9 + 3);
  Nat acc{1};
  for (const auto& f : c->factors()) {
    Materialized em = materialize(f.exponent, 20);
    if (!materialized_ok(em)) return TooLarge{digits_lower_bound(c)};
    const Nat& e = std::get<Nat>(em);
    if (!e.fits_u64()) return TooLarge{digits_lower_bound(c)};
    auto powed = Nat::pow_checked(Nat{nth_prime(f.prime_index)}, e.to_u64(), limb_cap);
    if (!powed) return TooLarge{digits_lower_bound(c)};
    acc = acc * *powed;
    if (acc.limb_count() > limb_cap) return TooLarge{digits_lower_bound(c)};
  }
  std::size_t digits = acc.decimal_digit_count();
  if (digits > digit_budget) {
    Nat lb = digits_lower_bound(c);
    Nat exact{digits};
    return TooLarge{exact > lb ? exact : lb};
  }
  return acc;
}

// ---------------------------------------------------------------------------
// arithmetic on codes (exact, factorization-preserving)

// Factor list of a code, when one is available: Products carry theirs, small
// literals are trial-factored. Opaque large literals have none.
inline std::optional<Code::Product> code_factor_list(const CodePtr& c) {
  if (!c->is_lit()) return c->factors();
  const Nat& n = c->lit();
  if (n.is_zero()) return std::nullopt;
  if (!n.fits_u64()) return std::nullopt;
  auto fs = factorize_small(n.to_u64());
  if (!fs) return std::nullopt;
  Code::Product out;
  for (const auto& pf : *fs) {
    auto idx = prime_index(pf.prime);
    out.push_back({*idx, code_lit(pf.mult)});
  }
  return out;
}

// Addition is only defined where both sides are explicit or one is zero;
// codes carry factorizations, and sums of towers have none.
inline CodePtr code_add(const CodePtr& a, const CodePtr& b) {
  if (a->is_zero()) return b;
  if (b->is_zero()) return a;
  auto expl = [](const CodePtr& c, std::uint64_t budget) -> std::optional<Nat> {
    Materialized m = materialize(c, budget);
    if (!materialized_ok(m)) return std::nullopt;
    return std::get<Nat>(m);
  };
  auto av = expl(a, 100000);
  auto bv = expl(b, 100000);
  if (!av || !bv) throw std::domain_error("code_add: sum of symbolic towers has no canonical form");
  Nat s = *av + *bv;
  if (s <= Nat{kNaiveFactorBound}) return code_lit(s);
  return code_lit(s);
}

inline CodePtr code_mul(const CodePtr& a, const CodePtr& b) {
  if (a->is_zero() || b->is_zero()) return code_lit(0);
  if (a->is_one()) return b;
  if (b->is_one()) return a;
  if (a->is_lit() && b->is_lit()) {
    Nat prod = a->lit() * b->lit();
    if (prod <= Nat{kNaiveFactorBound}) return code_lit(prod);
  }
  auto fa = code_factor_list(a);
  auto fb = code_factor_list(b);
  if (!fa || !fb) {
    // explicit but unfactorable operands still multiply exactly
    if (a->is_lit() && b->is_lit()) return code_lit(a->lit() * b->lit());
    throw std::domain_error("code_mul: operand has no available factorization");
  }
  Code::Product merged;
  std::size_t i = 0, j = 0;
  while (i < fa->size() || j < fb->size()) {
    if (j >= fb->size() || (i < fa->size() && (*fa)[i].prime_index < (*fb)[j].prime_index)) {
      merged.push_back((*fa)[i++]);
    } else if (i >= fa->size() || (*fb)[j].prime_index < (*fa)[i].prime_index) {
      merged.push_back((*fb)[j++]);
    } else {
      merged.push_back({(*fa)[i].prime_index, code_add((*fa)[i].exponent, (*fb)[j].exponent)});
      ++i;
      ++j;
    }
  }
  return code_product(std::move(merged));
}

// base^e with e an arbitrary code; base must have a known factorization.
inline CodePtr code_pow(const CodePtr& base, const CodePtr& e) {
  if (e->is_zero()) return code_lit(1);
  if (e->is_one()) return base;
  if (base->is_zero()) return code_lit(0);
  if (base->is_one()) return code_lit(1);
  auto fb = code_factor_list(base);
  if (!fb) throw std::domain_error("code_pow: base has no available factorization");
  Code::Product out;
  for (const auto& f : *fb) {
    CodePtr fe = f.exponent->is_one() ? e : code_mul(f.exponent, e);
    out.push_back({f.prime_index, fe});
  }
  return code_product(std::move(out));
}

// |a - b| where at least one route to an explicit value exists, or the codes
// are structurally equal.
inline CodePtr code_absdiff(const CodePtr& a, const CodePtr& b) {
  if (code_eq(a, b)) return code_lit(0);
  auto expl = [](const CodePtr& c) -> std::optional<Nat> {
    Materialized m = materialize(c, 100000);
    if (!materialized_ok(m)) return std::nullopt;
    return std::get<Nat>(m);
  };
  auto av = expl(a);
  auto bv = expl(b);
  if (!av || !bv)
    throw std::domain_error("msd: operands are neither equal nor both materializable");
  Nat d = *av >= *bv ? *av - *bv : *bv - *av;
  return code_lit(d);
}

// ---------------------------------------------------------------------------
// text form: p(0)^15 * p(1)^23 * p(2)^529, integer literals, parenthesized
// exponents for nested towers

inline void print_code(std::ostream& os, const CodePtr& c) {
  if (c->is_lit()) {
    os << c->lit().to_decimal();
    return;
  }
  bool first = true;
  for (const auto& f : c->factors()) {
    if (!first) os << " * ";
    first = false;
    os << "p(" << f.prime_index << ")^";
    if (f.exponent->is_lit()) {
      os << f.exponent->lit().to_decimal();
    } else {
      os << "(";
      print_code(os, f.exponent);
      os << ")";
    }
  }
}

inline std::string code_to_string(const CodePtr& c) {
  std::ostringstream os;
  print_code(os, c);
  return os.str();
}

namespace detail {

struct CodeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("code expression: expected '" + std::string(1, c) +
                                  "' at offset " + std::to_string(pos));
  }

  Nat number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw std::invalid_argument("code expression: expected number at offset " + std::to_string(pos));
    return Nat::from_decimal(text.substr(start, pos - start));
  }

  CodePtr atom() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'p') {
      ++pos;
      expect('(');
      Nat g = number();
      expect(')');
      CodePtr e = code_lit(1);
      if (eat('^')) {
        if (eat('(')) {
          e = product();
          expect(')');
        } else {
          skip_ws();
          if (pos < text.size() && text[pos] == 'p') {
            e = atom();
          } else {
            e = code_lit(number());
          }
        }
      }
      if (!g.fits_u64() || g.to_u64() > 1000000)
        throw std::invalid_argument("code expression: prime index out of range");
      return code_prime_power(static_cast<std::uint32_t>(g.to_u64()), e);
    }
    if (eat('(')) {
      CodePtr inner = product();
      expect(')');
      return inner;
    }
    return code_lit(number());
  }

  CodePtr product() {
    CodePtr acc = atom();
    while (eat('*')) {
      acc = code_mul(acc, atom());
    }
    return acc;
  }
};

}  // namespace detail

inline CodePtr parse_code(std::string_view text) {
  detail::CodeParser p{text};
  CodePtr c = p.product();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("code expression: trailing input at offset " + std::to_string(p.pos));
  return c;
}

}  // namespace ari
