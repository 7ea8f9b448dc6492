// The affine weight lattice: classical part + Lambda_0-level + delta
// coefficient, affine simple reflections s_0..s_n, and translations t_mu
// for mu in L = nu(coweight lattice).
//
// alpha_0 = delta - theta and alpha_0^vee = K - theta^vee, so
// <Lambda, alpha_0^vee> = level(Lambda) - <classical, theta^vee>.
// The delta coefficient of t_mu is completed as
//   t_mu(Lambda) = Lambda + level*mu - ((classical,mu) + (mu,mu)/2 * level) delta,
// the unique completion under which t_theta = s_0 s_theta holds exactly
// and t_mu t_mu' = t_{mu+mu'}.

#ifndef LIECOMB_AFFINE_HPP
#define LIECOMB_AFFINE_HPP

#include <vector>

#include "liecomb/root_system.hpp"

namespace liecomb {

struct AffineWeight {
  Weight classical;  // rank-many coordinates in the omega basis
  Rat level;         // coefficient of Lambda_0, i.e. <Lambda, K>
  Rat delta;         // coefficient of delta

  bool operator==(const AffineWeight& o) const {
    return level == o.level && delta == o.delta && classical == o.classical;
  }
  bool operator!=(const AffineWeight& o) const { return !(*this == o); }
};

// strict total order (level, delta, classical coords); used for canonical
// term ordering in characters and serialized output
struct AffineWeightLess {
  bool operator()(const AffineWeight& a, const AffineWeight& b) const {
    if (a.level != b.level) return a.level < b.level;
    if (a.delta != b.delta) return a.delta < b.delta;
    return std::lexicographical_compare(
        a.classical.coords.begin(), a.classical.coords.end(),
        b.classical.coords.begin(), b.classical.coords.end());
  }
};

AffineWeight affine_zero(const RootSystem& rs);
// Lambda_0 and, via Lambda_i = omega_i + a_i^vee Lambda_0, all fundamental
// affine weights; index 0..n
AffineWeight fundamental_affine_weight(const RootSystem& rs, int i);

// <Lambda, alpha_i^vee> for i = 0..n
Rat pair_affine(const RootSystem& rs, const AffineWeight& w, int i);

// s_i(Lambda) = Lambda - <Lambda, alpha_i^vee> alpha_i, i = 0..n
AffineWeight affine_reflect(const RootSystem& rs, int i, const AffineWeight& w);

// Lambda - k * alpha_i (alpha_0 expanded as delta - theta)
AffineWeight subtract_alpha(const RootSystem& rs, const AffineWeight& w, int i,
                            const Rat& k);

// t_mu for mu in L; throws PreconditionError otherwise
AffineWeight translate(const RootSystem& rs, const Weight& mu,
                       const AffineWeight& w);

}  // namespace liecomb

#endif
