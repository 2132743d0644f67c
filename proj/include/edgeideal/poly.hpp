#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edgeideal {

// Overflow-checked 64-bit arithmetic. Throws std::overflow_error instead of
// wrapping; the invariants downstream are integer-exact and a silent wrap
// would corrupt them.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Univariate polynomial in t with exact integer coefficients.
// coeffs[i] is the degree-i coefficient. The zero polynomial is the empty
// vector; otherwise the trailing coefficient is nonzero.
struct IntPoly {
  std::vector<std::int64_t> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> c);

  static IntPoly constant(std::int64_t c);
  static IntPoly monomial(std::int64_t c, int degree);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coeff(int i) const;

  bool operator==(const IntPoly&) const = default;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly power(const IntPoly& p, int e);

// Sum of coefficients.
std::int64_t eval_at_one(const IntPoly& p);

// Exact quotient p / (1-t); requires p(1) == 0 (throws std::domain_error
// otherwise). One-pass synthetic division.
IntPoly divide_by_one_minus_t(const IntPoly& p);

// Rendered as "c0 + c1*t + c2*t^2 + ...", zero terms omitted.
std::string to_string(const IntPoly& p);

// num(t) / (1-t)^denom_exp. Canonical form: the numerator is zero (with
// denom_exp = 0), or denom_exp = 0, or (1-t) does not divide the numerator.
struct RationalSeries {
  IntPoly num;
  int denom_exp = 0;

  bool operator==(const RationalSeries&) const = default;
};

bool is_canonical(const RationalSeries& s);

// Cancels (1-t) factors between numerator and denominator. denom_exp floors
// at zero: surplus factors stay in the numerator.
RationalSeries normalize(RationalSeries s);

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

// Power-series coefficients of s up to degree `order` inclusive.
std::vector<std::int64_t> series_expand(const RationalSeries& s, int order);

std::string to_string(const RationalSeries& s);

}  // namespace edgeideal
