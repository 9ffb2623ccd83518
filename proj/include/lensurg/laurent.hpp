#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lensurg/checked.hpp"

namespace lensurg {

/// Laurent polynomial with exact integer coefficients. Zero coefficients are
/// never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant) { add_term(0, constant); }

  static LaurentPoly monomial(int exponent, Int coeff = 1) {
    LaurentPoly r;
    r.add_term(exponent, coeff);
    return r;
  }

  void add_term(int exponent, Int coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second = checked::add(it->second, coeff);
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const std::map<int, Int> &terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] int min_exponent() const { return nonzero().terms_.begin()->first; }
  [[nodiscard]] int max_exponent() const { return nonzero().terms_.rbegin()->first; }
  [[nodiscard]] Int coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentPoly &operator+=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  LaurentPoly &operator-=(const LaurentPoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, checked::sub(0, c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly &a) { return LaurentPoly() - a; }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_)
        r.add_term(ea + eb, checked::mul(ca, cb));
    return r;
  }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  /// Multiplies by t^k.
  [[nodiscard]] LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto &[e, c] : terms_)
      r.terms_.emplace(e + k, c);
    return r;
  }

  /// Substitutes t -> t^factor (factor may be negative).
  [[nodiscard]] LaurentPoly substitute_power(int factor) const {
    LaurentPoly r;
    for (const auto &[e, c] : terms_)
      r.add_term(e * factor, c);
    return r;
  }

  /// Exact quotient; throws if the division leaves a remainder.
  [[nodiscard]] LaurentPoly exact_div(const LaurentPoly &d) const {
    if (d.is_zero())
      throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = d.max_exponent();
    const Int dcoef = d.terms_.rbegin()->second;
    const int dspan = dlead - d.min_exponent();
    while (!rem.is_zero()) {
      const int rlead = rem.max_exponent();
      const Int rcoef = rem.terms_.rbegin()->second;
      if (rcoef % dcoef != 0 || rlead - rem.min_exponent() < dspan)
        throw std::domain_error("polynomial division is not exact");
      LaurentPoly step = monomial(rlead - dlead, rcoef / dcoef);
      quot += step;
      rem -= step * d;
    }
    return quot;
  }

  /// Value at an integer t; negative exponents require t = ±1.
  [[nodiscard]] Int evaluate(Int t) const {
    Int sum = 0;
    for (const auto &[e, c] : terms_) {
      if (e < 0 && t != 1 && t != -1)
        throw std::domain_error("negative exponent evaluated away from t = ±1");
      Int power = 1;
      const int n = e < 0 ? -e : e;
      for (int i = 0; i < n; ++i)
        power = checked::mul(power, t);
      sum = checked::add(sum, checked::mul(c, power));
    }
    return sum;
  }

  /// Representative of the class {±t^k * f}: exponents centred on zero
  /// (lower half rounded down), sign chosen so the value at t = 1 is positive,
  /// or the top coefficient when that value is zero.
  [[nodiscard]] LaurentPoly unit_normalized() const {
    if (is_zero())
      return *this;
    const int lo = min_exponent();
    const int hi = max_exponent();
    const int span = hi - lo;
    LaurentPoly r = shifted(-lo - span / 2);
    const Int at_one = r.evaluate(1);
    const bool negate = at_one != 0 ? at_one < 0 : r.terms_.rbegin()->second < 0;
    return negate ? -r : r;
  }

  [[nodiscard]] bool equal_up_to_unit(const LaurentPoly &o) const {
    return unit_normalized() == o.unit_normalized();
  }

  /// `exponent:coefficient` pairs, ascending, space separated; "0" when zero.
  [[nodiscard]] std::string to_string() const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (!first)
        os << ' ';
      os << e << ':' << c;
      first = false;
    }
    return os.str();
  }

  static LaurentPoly parse(const std::string &text) {
    LaurentPoly r;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      if (tok == "0")
        continue;
      const auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("bad polynomial term: " + tok);
      r.add_term(std::stoi(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1)));
    }
    return r;
  }

  bool operator==(const LaurentPoly &) const = default;

private:
  const LaurentPoly &nonzero() const {
    if (terms_.empty())
      throw std::domain_error("zero polynomial has no degree");
    return *this;
  }

  std::map<int, Int> terms_;
};

} // namespace lensurg
