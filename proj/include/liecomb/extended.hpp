// The extended affine Weyl group: diagram automorphisms sigma, elements
// w*sigma given by a reduced word in s_0..s_n, and the alcove walk that
// decomposes the translation t_{-nu(lambda_*^vee)} attached to a dominant
// coweight.
//
// A DiagramAut acts linearly on affine weights through the basis
// {Lambda_0..Lambda_n, delta}: Lambda_i -> Lambda_{perm[i]} + shift[i]*delta,
// delta -> delta.  Automorphisms produced by decompose_translation carry the
// exact delta shifts of the underlying group element, so that composing the
// word with sigma reproduces the translation exactly, delta included.
// Automorphisms built directly (e.g. from the CLI) default to zero shifts.

#ifndef LIECOMB_EXTENDED_HPP
#define LIECOMB_EXTENDED_HPP

#include <vector>

#include "liecomb/affine.hpp"

namespace liecomb {

struct DiagramAut {
  std::vector<int> perm;    // permutation of the affine nodes 0..n
  std::vector<Rat> shift;   // delta shift per fundamental affine weight

  static DiagramAut identity(int rank);
  bool is_identity() const;
};

// checks that perm preserves the affine Cartan matrix
bool is_affine_diagram_automorphism(const RootSystem& rs,
                                    const std::vector<int>& perm);

// sigma(Lambda): expand Lambda over {Lambda_i, delta} via the coroot
// pairings, permute, add the shifts
AffineWeight apply_aut(const RootSystem& rs, const DiagramAut& aut,
                       const AffineWeight& w);

struct ExtendedElement {
  DiagramAut sigma;
  std::vector<int> word;  // reduced; the element is s_{word[0]}...s_{word[k-1]} * sigma
};

// sigma first, then the reflections: s_{word[0]}(...s_{word[k-1]}(sigma(Lambda)))
AffineWeight apply_element(const RootSystem& rs, const ExtendedElement& e,
                           const AffineWeight& w);

enum class WalkTieBreak { SmallestIndex, LargestIndex };

// Decomposes t_{-nu(lambda_*^vee)}, lambda_*^vee = -w0(lambda^vee), as
// word * sigma by an alcove walk: act on the interior point rho-hat of the
// fundamental alcove and unfold across violated walls.  Only reduced words
// are emitted.  The input must be a dominant integral coweight.
ExtendedElement decompose_translation(const RootSystem& rs,
                                      const Coweight& lambda_vee,
                                      WalkTieBreak tb = WalkTieBreak::SmallestIndex);

}  // namespace liecomb

#endif
