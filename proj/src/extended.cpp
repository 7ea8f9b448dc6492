#include "liecomb/extended.hpp"

#include <cstdint>

#include "liecomb/errors.hpp"

namespace liecomb {

DiagramAut DiagramAut::identity(int rank) {
  DiagramAut a;
  a.perm.resize(rank + 1);
  for (int i = 0; i <= rank; ++i) a.perm[i] = i;
  a.shift.assign(rank + 1, Rat(0));
  return a;
}

bool DiagramAut::is_identity() const {
  for (int i = 0; i < (int)perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

namespace {

// affine Cartan matrix entry <alpha_j, alpha_i^vee>, indices 0..n
std::int64_t affine_cartan(const RootSystem& rs, int i, int j) {
  if (i == 0 && j == 0) return 2;
  if (i == 0) {
    // <alpha_j, K - theta^vee> = -<alpha_j, theta^vee>
    Rat v(0);
    for (int k = 0; k < rs.rank(); ++k)
      v += Rat(rs.comark(k)) * rs.simple_root(j - 1).coords[k];
    return -v.as_integer();
  }
  if (j == 0) {
    // <delta - theta, alpha_i^vee> = -theta coordinate i
    return -rs.theta_weight().coords[i - 1].as_integer();
  }
  return rs.cartan(i - 1, j - 1);
}

}  // namespace

bool is_affine_diagram_automorphism(const RootSystem& rs,
                                    const std::vector<int>& perm) {
  int n = rs.rank();
  if ((int)perm.size() != n + 1) return false;
  std::vector<bool> hit(n + 1, false);
  for (int i = 0; i <= n; ++i) {
    if (perm[i] < 0 || perm[i] > n || hit[perm[i]]) return false;
    hit[perm[i]] = true;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (affine_cartan(rs, perm[i], perm[j]) != affine_cartan(rs, i, j))
        return false;
  return true;
}

AffineWeight apply_aut(const RootSystem& rs, const DiagramAut& aut,
                       const AffineWeight& w) {
  // Lambda = sum_i c_i Lambda_i + z delta with c_i = <Lambda, alpha_i^vee>
  int n = rs.rank();
  AffineWeight r = affine_zero(rs);
  r.delta = w.delta;
  for (int i = 0; i <= n; ++i) {
    Rat c = pair_affine(rs, w, i);
    if (c.is_zero()) continue;
    int p = aut.perm[i];
    if (p == 0) {
      r.level += c;
    } else {
      r.classical.coords[p - 1] += c;
      r.level += c * Rat(rs.comark(p - 1));
    }
    r.delta += c * aut.shift[i];
  }
  return r;
}

AffineWeight apply_element(const RootSystem& rs, const ExtendedElement& e,
                           const AffineWeight& w) {
  AffineWeight r = apply_aut(rs, e.sigma, w);
  for (int j = (int)e.word.size() - 1; j >= 0; --j)
    r = affine_reflect(rs, e.word[j], r);
  return r;
}

ExtendedElement decompose_translation(const RootSystem& rs,
                                      const Coweight& lambda_vee,
                                      WalkTieBreak tb) {
  if (!rs.is_integral(lambda_vee) || !rs.is_dominant(lambda_vee))
    throw PreconditionError(
        "decompose_translation requires a dominant integral coweight");
  int n = rs.rank();

  Coweight dual = rs.w0_dual(lambda_vee);
  Weight mu = rs.nu(dual);
  Weight neg_mu;
  neg_mu.coords.resize(n);
  for (int i = 0; i < n; ++i) neg_mu.coords[i] = -mu.coords[i];

  // rho-hat = sum of all fundamental affine weights: every coroot pairing
  // is 1, and no affine wall passes through it
  AffineWeight p0 = affine_zero(rs);
  for (int i = 0; i < n; ++i) p0.classical.coords[i] = Rat(1);
  p0.level = Rat(rs.dual_coxeter_number());

  AffineWeight q = translate(rs, neg_mu, p0);
  std::vector<int> word;
  while (true) {
    int violating = -1;
    if (tb == WalkTieBreak::SmallestIndex) {
      for (int i = 0; i <= n; ++i)
        if (pair_affine(rs, q, i) < Rat(0)) {
          violating = i;
          break;
        }
    } else {
      for (int i = n; i >= 0; --i)
        if (pair_affine(rs, q, i) < Rat(0)) {
          violating = i;
          break;
        }
    }
    if (violating < 0) break;
    q = affine_reflect(rs, violating, q);
    word.push_back(violating);
  }

  // residual alcove-preserving map: apply the composed operator to each
  // fundamental affine weight and match the image
  DiagramAut aut;
  aut.perm.resize(n + 1);
  aut.shift.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    AffineWeight y = translate(rs, neg_mu, fundamental_affine_weight(rs, i));
    for (int s : word) y = affine_reflect(rs, s, y);
    int match = -1;
    for (int j = 0; j <= n; ++j) {
      AffineWeight fj = fundamental_affine_weight(rs, j);
      if (y.level == fj.level && y.classical == fj.classical) {
        match = j;
        break;
      }
    }
    if (match < 0)
      throw IntegrityError("alcove walk residual is not a diagram automorphism");
    aut.perm[i] = match;
    aut.shift[i] = y.delta;
  }
  if (!is_affine_diagram_automorphism(rs, aut.perm))
    throw IntegrityError("residual permutation does not fix the affine diagram");
  return ExtendedElement{std::move(aut), std::move(word)};
}

}  // namespace liecomb
