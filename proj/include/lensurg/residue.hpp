#pragma once

// Residue sequence q*j mod p, the first-occurrence index Psi, the
// smaller-predecessor count Phi, and the longitudinal-surgery criterion
// p*Phi(u) - u*Psi(u) in {1, -1, 1-p, -1-p}.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lensurg/checked.hpp"

namespace lensurg {

/// A coprime pair (p, q) with p >= 2 and 0 < q < p, naming L(p, q).
class LensParams {
public:
  LensParams(Int p, Int q) : p_(p), q_(q) {
    if (p < 2)
      throw std::invalid_argument("lens space requires p >= 2, got p=" + std::to_string(p));
    if (q <= 0 || q >= p)
      throw std::invalid_argument("lens space requires 0 < q < p, got q=" + std::to_string(q));
    if (checked::gcd(p, q) != 1)
      throw std::invalid_argument("p and q must be coprime, got (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
  }

  [[nodiscard]] Int p() const noexcept { return p_; }
  [[nodiscard]] Int q() const noexcept { return q_; }

  auto operator<=>(const LensParams &) const = default;

private:
  Int p_;
  Int q_;
};

/// The dual knot K(L(p,q); u), 1 <= u <= p-1.
class DualKnotSpec {
public:
  DualKnotSpec(LensParams params, Int u) : params_(params), u_(u) {
    if (u < 1 || u > params.p() - 1)
      throw std::invalid_argument("u must lie in [1, p-1], got u=" + std::to_string(u));
  }

  [[nodiscard]] const LensParams &params() const noexcept { return params_; }
  [[nodiscard]] Int p() const noexcept { return params_.p(); }
  [[nodiscard]] Int q() const noexcept { return params_.q(); }
  [[nodiscard]] Int u() const noexcept { return u_; }

  auto operator<=>(const DualKnotSpec &) const = default;

private:
  LensParams params_;
  Int u_;
};

/// s_j = q*j mod p for j = 1..p, with the first-occurrence table precomputed.
class ResidueProfile {
public:
  explicit ResidueProfile(LensParams params) : params_(params) {
    const Int p = params.p();
    s_.resize(static_cast<std::size_t>(p));
    first_.assign(static_cast<std::size_t>(p), 0);
    Int value = 0;
    for (Int j = 1; j <= p; ++j) {
      value = checked::mod(checked::add(value, params.q()), p);
      s_[static_cast<std::size_t>(j - 1)] = value;
      if (first_[static_cast<std::size_t>(value)] == 0)
        first_[static_cast<std::size_t>(value)] = j;
    }
  }

  [[nodiscard]] const LensParams &params() const noexcept { return params_; }

  /// s_j, 1-based.
  [[nodiscard]] Int at(Int j) const {
    if (j < 1 || j > params_.p())
      throw std::out_of_range("residue index out of range: " + std::to_string(j));
    return s_[static_cast<std::size_t>(j - 1)];
  }

  /// The whole sequence s_1..s_p.
  [[nodiscard]] const std::vector<Int> &values() const noexcept { return s_; }

  [[nodiscard]] Int first_index(Int k) const {
    check_residue(k);
    return first_[static_cast<std::size_t>(k)];
  }

  void check_residue(Int k) const {
    if (k < 1 || k > params_.p() - 1)
      throw std::out_of_range("residue k must lie in [1, p-1], got k=" + std::to_string(k));
  }

private:
  LensParams params_;
  std::vector<Int> s_;
  std::vector<Int> first_; // first_[k] = smallest j with s_j = k
};

inline ResidueProfile residue_sequence(const LensParams &params) { return ResidueProfile(params); }

/// Smallest j with s_j = k.
inline Int psi(const ResidueProfile &profile, Int k) { return profile.first_index(k); }

/// Number of s_j with 1 <= j < psi(k) and s_j < k.
inline Int phi(const ResidueProfile &profile, Int k) {
  const Int stop = psi(profile, k);
  const auto &s = profile.values();
  return std::count_if(s.begin(), s.begin() + (stop - 1), [k](Int v) { return v < k; });
}

struct CriterionResult {
  Int u = 0;
  Int psi = 0;
  Int phi = 0;
  Int value = 0; // p*phi - u*psi
  bool passes = false;

  bool operator==(const CriterionResult &) const = default;
};

inline bool criterion_value_passes(Int p, Int value) {
  return value == 1 || value == -1 || value == 1 - p || value == -1 - p;
}

/// Necessary condition for K(L(p,q); u) to admit a longitudinal surgery
/// yielding S^3. Passing never certifies anything on its own.
inline CriterionResult saito_criterion(const ResidueProfile &profile, Int u) {
  const Int p = profile.params().p();
  CriterionResult r;
  r.u = u;
  r.psi = psi(profile, u);
  r.phi = phi(profile, u);
  r.value = checked::sub(checked::mul(p, r.phi), checked::mul(u, r.psi));
  r.passes = criterion_value_passes(p, r.value);
  if (r.passes && checked::gcd(p, u) != 1)
    throw std::logic_error("criterion passed with gcd(p,u) != 1");
  return r;
}

inline CriterionResult saito_criterion(const DualKnotSpec &spec) {
  return saito_criterion(residue_sequence(spec.params()), spec.u());
}

/// Closed form of s_j for (4n, 2n-1) on 1 <= j <= 2n-1.
inline Int klein_closed_form(Int n, Int j) {
  if (n < 2)
    throw std::invalid_argument("klein_closed_form requires n >= 2");
  const Int two_n = checked::mul(2, n);
  if (j < 1 || j > two_n - 1)
    throw std::out_of_range("klein_closed_form requires 1 <= j <= 2n-1");
  return (j % 2 == 1) ? two_n - j : checked::mul(4, n) - j;
}

/// All (n, u) with n_min <= n <= n_max and 1 <= u <= 2n for which the
/// criterion passes on L(4n, 2n-1).
inline std::vector<std::pair<Int, Int>> klein_candidates(Int n_min, Int n_max) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("klein_candidates requires 2 <= n_min <= n_max");
  std::vector<std::pair<Int, Int>> out;
  for (Int n = n_min; n <= n_max; ++n) {
    const LensParams params(checked::mul(4, n), checked::mul(2, n) - 1);
    const ResidueProfile profile(params);
    for (Int u = 1; u <= 2 * n; ++u)
      if (saito_criterion(profile, u).passes)
        out.emplace_back(n, u);
  }
  return out;
}

} // namespace lensurg
