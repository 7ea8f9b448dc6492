// Finite root-system data for the simple types A..G in Bourbaki numbering,
// with the normalized invariant form ((theta,theta) = 2) and the map nu
// identifying coweights with weights.
//
// Conventions used throughout the library:
//   * cartan[i][j] = <alpha_j, alpha_i^vee>, so column j of the Cartan
//     matrix gives the coordinates of alpha_j in the fundamental-weight
//     basis, and row i gives the coordinates of alpha_i^vee in the
//     fundamental-coweight basis.
//   * Weights are stored in the fundamental-weight basis (coroot pairings
//     are coordinate reads), coweights in the fundamental-coweight basis.
//   * d[i] = (alpha_i,alpha_i)/2 = comark_i / mark_i.

#ifndef LIECOMB_ROOT_SYSTEM_HPP
#define LIECOMB_ROOT_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liecomb/rational.hpp"

namespace liecomb {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// weight in the fundamental-weight basis omega_1..omega_n
struct Weight {
  std::vector<Rat> coords;
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
};

// coweight in the fundamental-coweight basis omega_1^vee..omega_n^vee
struct Coweight {
  std::vector<Rat> coords;
  bool operator==(const Coweight& o) const { return coords == o.coords; }
  bool operator!=(const Coweight& o) const { return !(*this == o); }
};

class RootSystem {
public:
  RootSystem(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  // cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based node indices
  std::int64_t cartan(int i, int j) const { return cartan_[i][j]; }

  // positive roots in simple-root coordinates, ordered by height then lex
  const std::vector<std::vector<std::int64_t>>& positive_roots() const {
    return positive_roots_;
  }

  std::int64_t mark(int i) const { return marks_[i]; }          // a_i
  std::int64_t comark(int i) const { return comarks_[i]; }      // a_i^vee
  const std::vector<std::int64_t>& marks() const { return marks_; }
  const std::vector<std::int64_t>& comarks() const { return comarks_; }
  std::int64_t dual_coxeter_number() const { return h_dual_; }  // 1 + sum a_i^vee

  // simple-root coordinates of the highest root (equal to the marks)
  const std::vector<std::int64_t>& theta() const { return theta_; }
  // highest root as a weight
  const Weight& theta_weight() const { return theta_omega_; }

  Rat d(int i) const { return d_[i]; }  // (alpha_i,alpha_i)/2

  // (beta,beta)/2 for any positive root, by index into positive_roots()
  Rat root_half_square(int positive_root_index) const;
  // (beta^vee,beta^vee)/2: 1 on roots of full length, 2 or 3 on short ones;
  // the level scale picked up by the coroot of beta + s*delta
  std::int64_t coroot_level_scale(int positive_root_index) const;

  // alpha_j as a weight (column j of the Cartan matrix)
  const Weight& simple_root(int j) const { return alpha_omega_[j]; }

  // <w, alpha_i^vee>: a coordinate read
  const Rat& pair(const Weight& w, int i) const { return w.coords[i]; }
  // <w, theta^vee> = sum_i a_i^vee w_i
  Rat pair_theta_covee(const Weight& w) const;

  // simple-root coordinates of a weight, via the inverse Cartan matrix
  std::vector<Rat> to_root_coords(const Weight& w) const;
  // sum of simple-root coordinates
  Rat height(const Weight& w) const;

  // normalized invariant form on the weight space, (theta,theta) = 2
  Rat form(const Weight& a, const Weight& b) const;

  // nu(coweight): sum m_i omega_i^vee -> sum m_i (a_i/a_i^vee) omega_i
  Weight nu(const Coweight& cw) const;
  // inverse of nu
  Coweight nu_inverse(const Weight& w) const;
  // true iff w lies in L = nu(coweight lattice)
  bool in_translation_lattice(const Weight& w) const;

  // simple reflections
  Weight reflect(int i, const Weight& w) const;
  Coweight reflect(int i, const Coweight& cw) const;

  bool is_dominant(const Weight& w) const;
  bool is_dominant(const Coweight& cw) const;
  bool is_integral(const Coweight& cw) const;

  // dual coweight -w0(cw); the input must be dominant
  Coweight w0_dual(const Coweight& cw) const;

  Weight zero_weight() const { return Weight{std::vector<Rat>(rank_, Rat(0))}; }
  Coweight zero_coweight() const {
    return Coweight{std::vector<Rat>(rank_, Rat(0))};
  }

private:
  void enumerate_positive_roots();
  void check_invariants() const;

  Series series_;
  int rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<Rat>> cartan_inv_;
  std::vector<std::vector<std::int64_t>> positive_roots_;
  std::vector<std::int64_t> marks_, comarks_, theta_;
  std::vector<Rat> d_;
  std::vector<Weight> alpha_omega_;
  Weight theta_omega_;
  std::int64_t h_dual_ = 0;
};

RootSystem build_root_system(Series series, int rank);
// parses tokens like "A1", "C2", "E8"
RootSystem build_root_system(const std::string& type_token);

}  // namespace liecomb

#endif
