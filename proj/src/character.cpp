#include "liecomb/character.hpp"

#include "liecomb/crystal.hpp"
#include "liecomb/errors.hpp"

namespace liecomb {

std::int64_t GradedClassicalCharacter::total_dimension() const {
  std::int64_t d = 0;
  for (const auto& [k, layer] : layers)
    for (const auto& [w, m] : layer) d += m;
  return d;
}

ClassicalChar GradedClassicalCharacter::total() const {
  ClassicalChar t;
  for (const auto& [k, layer] : layers)
    for (const auto& [w, m] : layer) t[w] += m;
  return t;
}

Character demazure_step(const RootSystem& rs, int i, const Character& chi) {
  Character out;
  for (const auto& [mu, mult] : chi.terms) {
    Rat k = pair_affine(rs, mu, i);
    if (!k.is_integer())
      throw IntegrityError("non-integral coroot pairing in a character term");
    std::int64_t m = k.as_integer();
    if (m >= 0) {
      for (std::int64_t j = 0; j <= m; ++j)
        out.add(subtract_alpha(rs, mu, i, Rat(j)), mult);
    } else if (m <= -2) {
      for (std::int64_t j = 1; j <= -m - 1; ++j)
        out.add(subtract_alpha(rs, mu, i, Rat(-j)), -mult);
    }
    // m == -1 contributes nothing
  }
  return out;
}

Character demazure_character(const RootSystem& rs, std::int64_t level,
                             const Coweight& lambda_vee, WalkTieBreak tb) {
  if (level < 1) throw PreconditionError("Demazure level must be >= 1");
  if (!rs.is_integral(lambda_vee) || !rs.is_dominant(lambda_vee))
    throw PreconditionError(
        "demazure_character requires a dominant integral coweight");
  ExtendedElement e = decompose_translation(rs, lambda_vee, tb);

  AffineWeight top = affine_zero(rs);
  top.level = Rat(level);
  AffineWeight start = apply_aut(rs, e.sigma, top);

  Character chi;
  chi.add(start, 1);
  for (int j = (int)e.word.size() - 1; j >= 0; --j)
    chi = demazure_step(rs, e.word[j], chi);
  return chi;
}

std::int64_t dimension(const Character& chi) {
  std::int64_t d = 0;
  for (const auto& [w, m] : chi.terms) d += m;
  return d;
}

GradedClassicalCharacter restrict_graded(const Character& chi) {
  GradedClassicalCharacter g;
  if (chi.terms.empty()) return g;
  g.level = chi.terms.begin()->first.level;
  Rat max_delta = chi.terms.begin()->first.delta;
  for (const auto& [w, m] : chi.terms) {
    if (w.level != g.level)
      throw PreconditionError("mixed levels in graded restriction");
    if (w.delta > max_delta) max_delta = w.delta;
  }
  for (const auto& [w, m] : chi.terms) {
    Rat energy = max_delta - w.delta;
    if (!energy.is_integer() || energy < Rat(0))
      throw IntegrityError("non-integral energy offset in character");
    g.layers[energy.as_integer()][w.classical.coords] += m;
  }
  return g;
}

ClassicalChar classical_product(const ClassicalChar& a, const ClassicalChar& b) {
  ClassicalChar out;
  for (const auto& [wa, ma] : a) {
    for (const auto& [wb, mb] : b) {
      std::vector<Rat> w = wa;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += wb[j];
      auto it = out.find(w);
      std::int64_t m = ma * mb;
      if (it == out.end())
        out.emplace(std::move(w), m);
      else if ((it->second += m) == 0)
        out.erase(it);
    }
  }
  return out;
}

bool is_weyl_symmetric(const RootSystem& rs, const ClassicalChar& c) {
  for (int i = 0; i < rs.rank(); ++i) {
    for (const auto& [coords, m] : c) {
      Weight w{coords};
      auto it = c.find(rs.reflect(i, w).coords);
      if (it == c.end() || it->second != m) return false;
    }
  }
  return true;
}

ClassicalChar irreducible_character(const RootSystem& rs, const Weight& mu,
                                    std::size_t cap) {
  if (!rs.is_dominant(mu))
    throw PreconditionError("irreducible_character requires a dominant weight");
  for (const Rat& c : mu.coords)
    if (!c.is_integer())
      throw PreconditionError("irreducible_character requires an integral weight");
  ClassicalChar out;
  Path seed = straight_path(rs, mu);
  if (seed.empty()) {
    out[rs.zero_weight().coords] = 1;
    return out;
  }
  CrystalGraph g = generate_crystal(rs, seed, classical_alphabet(rs), cap);
  for (const Path& p : g.vertices) {
    std::vector<Rat> e = p.endpoint();
    if (e.empty()) e.assign(rs.rank() + 1, Rat(0));
    ++out[std::vector<Rat>(e.begin(), e.end() - 1)];
  }
  return out;
}

ClassicalChar decompose_into_irreducibles(const RootSystem& rs,
                                          const ClassicalChar& c,
                                          std::size_t cap) {
  if (!is_weyl_symmetric(rs, c))
    throw PreconditionError("input is not Weyl-group symmetric");
  ClassicalChar rest = c;
  ClassicalChar out;
  while (!rest.empty()) {
    // largest weight present, ordered by height then coordinates; by
    // symmetry it is dominant
    auto best = rest.begin();
    Rat best_h = rs.height(Weight{best->first});
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      Rat h = rs.height(Weight{it->first});
      if (best_h < h || (h == best_h && best->first < it->first)) {
        best = it;
        best_h = h;
      }
    }
    Weight mu{best->first};
    std::int64_t mult = best->second;
    if (!rs.is_dominant(mu) || mult < 0)
      throw IntegrityError("input is not a genuine character");
    out[mu.coords] = mult;
    ClassicalChar irr = irreducible_character(rs, mu, cap);
    for (const auto& [w, m] : irr) {
      auto it = rest.find(w);
      if (it == rest.end())
        throw IntegrityError("input is not a genuine character");
      it->second -= mult * m;
      if (it->second == 0)
        rest.erase(it);
      else if (it->second < 0)
        throw IntegrityError("input is not a genuine character");
    }
  }
  return out;
}

}  // namespace liecomb
