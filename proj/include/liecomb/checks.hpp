// Executable verification of the desk-scale-checkable identities behind
// this library: dimension ladders and product formulas, fusion character
// identities, the crystal/character cross-check, limit stabilization of
// graded characters, and the algebraic property suite.  Each check returns
// a structured report with the computed witnesses.

#ifndef LIECOMB_CHECKS_HPP
#define LIECOMB_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liecomb/character.hpp"
#include "liecomb/crystal.hpp"

namespace liecomb::checks {

struct CheckInstance {
  std::string input;     // which case was run
  std::string expected;  // expected value / relation
  std::string computed;  // what the engine produced
  std::string basis;     // where the expectation comes from:
                         // "reference" (published value), "cross-check"
                         // (independent recomputation), "identity" (forced)
  bool pass = false;
};

struct CheckReport {
  std::string id;
  bool experimental = false;
  std::vector<std::string> notes;
  std::vector<CheckInstance> instances;
  double seconds = 0.0;  // not serialized; reports stay byte-stable

  bool overall() const {
    for (const auto& i : instances)
      if (!i.pass) return false;
    return true;
  }
};

// dim D(1, m*omega^vee) = 2^m over A_1 for m = 1..m_max
CheckReport check_sl2_dims(int m_max);

// dim D(1, lambda^vee) = prod_i dim D(1, omega_i^vee)^{m_i}
CheckReport check_product_formula(const RootSystem& rs, const Coweight& lv);
// driver over every dominant coweight with coordinate sum <= max_sum
CheckReport check_product_formula_suite(const std::vector<std::string>& types,
                                        int max_sum);

// total classical character of D(level, sum parts) equals the pointwise
// product of the parts' total classical characters
CheckReport check_fusion_character(const RootSystem& rs, std::int64_t level,
                                   const std::vector<Coweight>& parts);
CheckReport check_fusion_suite();

// the C_2 gap: dim D(1, omega_1^vee) = 11 while the corresponding
// level-one cyclic module bound is 16 = 4^2 > 11
CheckReport check_c2_counterexample();

// |demazure_paths| = dim(character), endpoint multisets match, and in
// simply-laced types every path has the Lambda_0-prefix form
CheckReport check_crystal_vs_character(const RootSystem& rs, const Coweight& lv,
                                       std::size_t cap = kDefaultCrystalCap);
CheckReport check_crystal_suite(std::int64_t dim_cap = 500,
                                std::size_t cap = kDefaultCrystalCap);

// graded layers of D(m, n*theta^vee) are containment-monotone in n and the
// low layers stabilize
CheckReport check_limit_stabilization(const RootSystem& rs, std::int64_t m,
                                      int n_max, int k_max,
                                      std::size_t cap = kDefaultCrystalCap);

// EXPERIMENTAL: character-level evidence for the fusion conjecture beyond
// the proven range; never fails a verification run
CheckReport check_conjectural_fusion(const RootSystem& rs,
                                     const std::vector<Coweight>& parts);
CheckReport check_conjectural_suite();

// operator idempotence, reduced-word independence, e/f inversion on
// generated edges, reflection involutivity, translation composition
CheckReport check_property_suite(std::uint64_t seed = 0x5eedULL);

std::vector<std::string> known_check_ids();
// selector: "all" or a known id
std::vector<CheckReport> run_checks(const std::vector<std::string>& selectors);

std::string report_records(const CheckReport& r);
std::string report_table(const CheckReport& r);

}  // namespace liecomb::checks

#endif
