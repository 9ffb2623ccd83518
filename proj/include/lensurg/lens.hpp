#pragma once

// Lens spaces up to (possibly orientation-reversing) homeomorphism, and
// normalization of the dual-knot parameter u.

#include <algorithm>
#include <stdexcept>

#include "lensurg/checked.hpp"
#include "lensurg/residue.hpp"

namespace lensurg {

/// Smallest representative of {±q, ±q^-1} mod p in (0, p/2].
inline LensParams canonical_form(const LensParams &params) {
  const Int p = params.p();
  const Int q = params.q();
  const Int qinv = checked::inverse_mod(q, p);
  Int best = p;
  for (Int c : {q, p - q, qinv, checked::mod(p - qinv, p)}) {
    c = checked::mod(c, p);
    if (c > 0 && 2 * c <= p)
      best = std::min(best, c);
  }
  return LensParams(p, best);
}

inline bool homeomorphic(const LensParams &a, const LensParams &b) {
  if (a.p() != b.p())
    return false;
  const Int p = a.p();
  const Int qq = checked::mod(checked::mul(a.q(), b.q()), p);
  return checked::mod(a.q() - b.q(), p) == 0 || checked::mod(a.q() + b.q(), p) == 0 || qq == 1 ||
         qq == p - 1;
}

/// K(L(p,q); u) is isotopic to K(L(p,q); p-u); pick the smaller index.
inline DualKnotSpec normalize_u(const DualKnotSpec &spec) {
  return DualKnotSpec(spec.params(), std::min(spec.u(), spec.p() - spec.u()));
}

namespace oracle {

/// Surgery on the (r, s)-torus knot with slope r*s + sign.
struct TorusKnotSurgery {
  Int r;
  Int s;
  int sign;

  TorusKnotSurgery(Int r_, Int s_, int sign_) : r(r_), s(s_), sign(sign_) {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("torus surgery sign must be +1 or -1");
    if ((r < 0 ? -r : r) < 2 || (s < 0 ? -s : s) < 2)
      throw std::invalid_argument("torus knot parameters need |r|, |s| >= 2");
    if (checked::gcd(r, s) != 1)
      throw std::invalid_argument("torus knot parameters must be coprime");
  }
};

/// (rs + sign)-surgery on T(r, s) is L(|rs + sign|, s^2), canonicalized.
inline LensParams moser_lens_space(const TorusKnotSurgery &t) {
  const Int slope = checked::add(checked::mul(t.r, t.s), t.sign);
  const Int p = slope < 0 ? -slope : slope;
  if (p <= 1)
    throw std::invalid_argument("degenerate torus knot surgery: |rs + sign| <= 1");
  return canonical_form(LensParams(p, checked::mod(checked::mul(t.s, t.s), p)));
}

} // namespace oracle
} // namespace lensurg
