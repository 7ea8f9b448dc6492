#include "liecomb/affine.hpp"

#include "liecomb/errors.hpp"

namespace liecomb {

AffineWeight affine_zero(const RootSystem& rs) {
  return AffineWeight{rs.zero_weight(), Rat(0), Rat(0)};
}

AffineWeight fundamental_affine_weight(const RootSystem& rs, int i) {
  AffineWeight w = affine_zero(rs);
  if (i == 0) {
    w.level = Rat(1);
  } else {
    w.classical.coords[i - 1] = Rat(1);
    w.level = Rat(rs.comark(i - 1));
  }
  return w;
}

Rat pair_affine(const RootSystem& rs, const AffineWeight& w, int i) {
  if (i == 0) return w.level - rs.pair_theta_covee(w.classical);
  return w.classical.coords[i - 1];
}

AffineWeight subtract_alpha(const RootSystem& rs, const AffineWeight& w, int i,
                            const Rat& k) {
  AffineWeight r = w;
  if (i == 0) {
    // alpha_0 = delta - theta
    for (int j = 0; j < rs.rank(); ++j)
      r.classical.coords[j] += k * rs.theta_weight().coords[j];
    r.delta -= k;
  } else {
    for (int j = 0; j < rs.rank(); ++j)
      r.classical.coords[j] -= k * rs.simple_root(i - 1).coords[j];
  }
  return r;
}

AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w) {
  return subtract_alpha(rs, w, i, pair_affine(rs, w, i));
}

AffineWeight translate(const RootSystem& rs, const Weight& mu,
                       const AffineWeight& w) {
  if (!rs.in_translation_lattice(mu))
    throw PreconditionError("translation weight not in nu(coweight lattice)");
  AffineWeight r = w;
  for (int j = 0; j < rs.rank(); ++j)
    r.classical.coords[j] += w.level * mu.coords[j];
  r.delta -= rs.form(w.classical, mu) + rs.form(mu, mu) * Rat(1, 2) * w.level;
  return r;
}

}  // namespace liecomb
