#include "edgeideal/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace edgeideal {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

IntPoly::IntPoly(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly IntPoly::constant(std::int64_t c) {
  return c == 0 ? IntPoly{} : IntPoly{{c}};
}

IntPoly IntPoly::monomial(std::int64_t c, int degree) {
  if (c == 0) return {};
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly{std::move(v)};
}

std::int64_t IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[i];
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> r(std::max(p.coeffs.size(), q.coeffs.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(p.coeff(static_cast<int>(i)), q.coeff(static_cast<int>(i)));
  return IntPoly{std::move(r)};
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> r(std::max(p.coeffs.size(), q.coeffs.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(p.coeff(static_cast<int>(i)),
                       checked_mul(-1, q.coeff(static_cast<int>(i))));
  return IntPoly{std::move(r)};
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<std::int64_t> r(p.coeffs.size() + q.coeffs.size() - 1, 0);
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    for (size_t j = 0; j < q.coeffs.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(p.coeffs[i], q.coeffs[j]));
  return IntPoly{std::move(r)};
}

IntPoly power(const IntPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

std::int64_t eval_at_one(const IntPoly& p) {
  std::int64_t s = 0;
  for (auto c : p.coeffs) s = checked_add(s, c);
  return s;
}

IntPoly divide_by_one_minus_t(const IntPoly& p) {
  if (p.is_zero()) return {};
  if (eval_at_one(p) != 0)
    throw std::domain_error("polynomial is not divisible by (1-t)");
  // p = (1-t) q  <=>  q_k = p_0 + ... + p_k (the last prefix sum, p(1), is 0).
  std::vector<std::int64_t> q(p.coeffs.size() - 1, 0);
  std::int64_t run = 0;
  for (size_t k = 0; k + 1 < p.coeffs.size(); ++k) {
    run = checked_add(run, p.coeffs[k]);
    q[k] = run;
  }
  return IntPoly{std::move(q)};
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    std::int64_t c = p.coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::uint64_t mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

bool is_canonical(const RationalSeries& s) {
  if (s.num.is_zero()) return s.denom_exp == 0;
  return s.denom_exp == 0 || eval_at_one(s.num) != 0;
}

RationalSeries normalize(RationalSeries s) {
  if (s.num.is_zero()) return {IntPoly{}, 0};
  while (s.denom_exp > 0 && eval_at_one(s.num) == 0) {
    s.num = divide_by_one_minus_t(s.num);
    s.denom_exp -= 1;
    if (s.num.is_zero()) return {IntPoly{}, 0};
  }
  return s;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  return normalize({mul(a.num, b.num), a.denom_exp + b.denom_exp});
}

std::vector<std::int64_t> series_expand(const RationalSeries& s, int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  // 1/(1-t)^e has coefficients C(e-1+i, i).
  std::vector<std::int64_t> inv(order + 1, 0);
  inv[0] = 1;
  for (int i = 1; i <= order; ++i) {
    if (s.denom_exp == 0) break;
    std::int64_t v = checked_mul(inv[i - 1], s.denom_exp - 1 + i);
    inv[i] = v / i;  // exact: running binomial recurrence
  }
  std::vector<std::int64_t> out(order + 1, 0);
  for (int i = 0; i <= order; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j)
      acc = checked_add(acc, checked_mul(s.num.coeff(j), inv[i - j]));
    out[i] = acc;
  }
  return out;
}

std::string to_string(const RationalSeries& s) {
  if (s.num.is_zero()) return "0";
  if (s.denom_exp == 0) return to_string(s.num);
  std::ostringstream out;
  out << "(" << to_string(s.num) << ")/(1 - t)";
  if (s.denom_exp > 1) out << "^" << s.denom_exp;
  return out.str();
}

}  // namespace edgeideal
