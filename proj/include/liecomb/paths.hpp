// Piecewise-linear path model over the classical-plus-Lambda_0 space.
//
// A path is stored, up to reparametrization, as its list of breakpoint
// displacements: nonzero vectors with consecutive same-ray neighbours
// merged.  Coordinates are (omega_1..omega_n, Lambda_0); an optional extra
// trailing coordinate carries an explicit delta component (used to test
// that the root operators commute with the projection that drops delta).
//
// Root operators use the standard minimum-based cut-point construction:
// for f_i, reflect the portion between the last attainment of the minimum
// of h_i(t) = <pi(t), alpha_i^vee> and the first subsequent attainment of
// min+1; for e_i, the portion between the last attainment of min+1 before
// the first attainment of the minimum.  With displacements, translating
// the tail is a no-op, so only the cut block is reflected.

#ifndef LIECOMB_PATHS_HPP
#define LIECOMB_PATHS_HPP

#include <optional>
#include <vector>

#include "liecomb/affine.hpp"

namespace liecomb {

struct Path {
  // each step has size rank+1 (classical, level) or rank+2 (plus delta)
  std::vector<std::vector<Rat>> steps;

  bool empty() const { return steps.empty(); }
  bool operator==(const Path& o) const { return steps == o.steps; }
  bool operator!=(const Path& o) const { return !(*this == o); }
  bool operator<(const Path& o) const { return steps < o.steps; }

  std::vector<Rat> endpoint() const;

  // (direction, duration) view: k equal-duration segments, direction =
  // k * displacement so that endpoint = sum direction * duration
  struct Segment {
    std::vector<Rat> direction;
    Rat duration;
  };
  std::vector<Segment> segments() const;
};

// merges consecutive same-ray steps and drops zero steps
Path canonical_path(std::vector<std::vector<Rat>> steps);

// straight path from the origin; the zero vector yields the empty path
Path straight_path(const std::vector<Rat>& v);
// straight path to a classical weight (level coordinate 0)
Path straight_path(const RootSystem& rs, const Weight& w);
// straight path to Lambda_0 projected to the classical-plus-level space
Path lambda0_path(const RootSystem& rs);

// traverse p1 then p2; the empty path is a neutral element
Path concat(const Path& p1, const Path& p2);

// <v, alpha_i^vee> for a displacement/position vector, i = 0..n
Rat pair_vector(const RootSystem& rs, const std::vector<Rat>& v, int i);

// s_i applied to a displacement vector (updates the delta coordinate when
// present and i = 0)
std::vector<Rat> reflect_vector(const RootSystem& rs, int i,
                                const std::vector<Rat>& v);

// drops the trailing delta coordinate
Path project_classical(const Path& p);

std::optional<Path> root_f(const RootSystem& rs, int i, const Path& p);
std::optional<Path> root_e(const RootSystem& rs, int i, const Path& p);

// all h_i stay >= 0, i.e. every root_e is undefined
bool is_dominant_path(const RootSystem& rs, const Path& p);

// applies root_e for the smallest defined index until none is defined
Path raise_to_dominant(const RootSystem& rs, const Path& p,
                       const std::vector<int>& alphabet);

std::vector<int> full_alphabet(const RootSystem& rs);     // 0..n
std::vector<int> classical_alphabet(const RootSystem& rs);  // 1..n

}  // namespace liecomb

#endif
