// Crystal graphs generated from a seed path by the root operators, the
// Demazure path sets obtained by closing a dominant seed under f-powers
// along a reduced word, and byte-stable DOT export.

#ifndef LIECOMB_CRYSTAL_HPP
#define LIECOMB_CRYSTAL_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "liecomb/extended.hpp"
#include "liecomb/paths.hpp"

namespace liecomb {

inline constexpr std::size_t kDefaultCrystalCap = 200000;

struct CrystalGraph {
  std::vector<Path> vertices;                    // BFS discovery order
  std::set<std::tuple<int, int, int>> edges;     // (src, dst, label): f_label(src) = dst
  int seed_index = 0;
};

// BFS closure of the seed under {e_i, f_i : i in alphabet}; deterministic
// vertex order (FIFO discovery, alphabet ascending, f before e)
CrystalGraph generate_crystal(const RootSystem& rs, const Path& seed,
                              const std::vector<int>& alphabet,
                              std::size_t cap = kDefaultCrystalCap);

// Demazure path set: iterate over the word right to left, closing each
// stage under all powers of f_{word[j]}
std::set<Path> demazure_paths(const RootSystem& rs, const ExtendedElement& e,
                              const Path& seed,
                              std::size_t cap = kDefaultCrystalCap);

// Dominant seed for the level-one Demazure crystal of lambda^vee: raise the
// concatenation psi(pi_{Lambda_0}) * pi_{-nu(lambda_*^vee)} to its dominant
// path; it ends in the classical projection of sigma(Lambda_0).
Path demazure_seed(const RootSystem& rs, const Coweight& lambda_vee);

// endpoint -> count over the classical-plus-level coordinates
std::map<std::vector<Rat>, std::int64_t> endpoint_multiset(
    const std::set<Path>& paths);

// every path factors as psi(pi_{Lambda_0}) followed by a level-zero path
bool has_lambda0_prefix_form(const RootSystem& rs, const Path& p);

std::string crystal_dot(const RootSystem& rs, const CrystalGraph& g);
// DOT of the f-arrow graph induced on a Demazure path set
std::string path_set_dot(const RootSystem& rs, const std::set<Path>& paths);

}  // namespace liecomb

#endif
