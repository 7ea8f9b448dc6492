// The group algebra Z[P-hat] with Demazure operators: characters of the
// modules D(level, lambda^vee), their restriction to graded classical
// characters, and decomposition of classical characters into finite
// irreducibles by highest-weight stripping.

#ifndef LIECOMB_CHARACTER_HPP
#define LIECOMB_CHARACTER_HPP

#include <cstdint>
#include <map>

#include "liecomb/extended.hpp"

namespace liecomb {

struct Character {
  // canonical sparse form: no zero multiplicities
  std::map<AffineWeight, std::int64_t, AffineWeightLess> terms;

  void add(const AffineWeight& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms.emplace(w, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const Character& o) const { return terms == o.terms; }
};

// classical character: omega-basis coordinates -> multiplicity
using ClassicalChar = std::map<std::vector<Rat>, std::int64_t>;

struct GradedClassicalCharacter {
  Rat level;
  std::map<std::int64_t, ClassicalChar> layers;  // energy -> layer

  std::int64_t total_dimension() const;
  ClassicalChar total() const;  // forget the grading
};

// The Demazure operator D_i extended linearly over the terms:
//   e^mu -> e^mu + e^{mu-alpha_i} + ... + e^{s_i mu}    if <mu,a_i^vee> >= 0
//   e^mu -> 0                                           if <mu,a_i^vee> = -1
//   e^mu -> -(e^{mu+alpha_i} + ... + e^{s_i mu-alpha_i}) otherwise
Character demazure_step(const RootSystem& rs, int i, const Character& chi);

// char of D(level, lambda^vee): decompose t_{-nu(lambda_*^vee)} = word*sigma
// and apply D_{word[0]} o ... o D_{word[k-1]} to e^{sigma(level*Lambda_0)}
Character demazure_character(const RootSystem& rs, std::int64_t level,
                             const Coweight& lambda_vee,
                             WalkTieBreak tb = WalkTieBreak::SmallestIndex);

std::int64_t dimension(const Character& chi);

// energy k = (max delta over terms) - (term delta); all terms must share
// one level and the energies must come out as nonnegative integers
GradedClassicalCharacter restrict_graded(const Character& chi);

ClassicalChar classical_product(const ClassicalChar& a, const ClassicalChar& b);

bool is_weyl_symmetric(const RootSystem& rs, const ClassicalChar& c);

// character of the finite irreducible V(mu), computed by generating the
// finite path crystal from the straight path and counting endpoints
ClassicalChar irreducible_character(const RootSystem& rs, const Weight& mu,
                                    std::size_t cap = 200000);

// highest-weight stripping of a Weyl-symmetric classical character; keys of
// the result are dominant weights
ClassicalChar decompose_into_irreducibles(const RootSystem& rs,
                                          const ClassicalChar& c,
                                          std::size_t cap = 200000);

}  // namespace liecomb

#endif
