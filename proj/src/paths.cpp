#include "liecomb/paths.hpp"

#include <algorithm>

#include "liecomb/errors.hpp"

namespace liecomb {

namespace {

bool is_zero_vec(const std::vector<Rat>& v) {
  for (const Rat& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// w = c*v for some c > 0
bool same_ray(const std::vector<Rat>& v, const std::vector<Rat>& w) {
  int k = -1;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!v[i].is_zero()) {
      k = i;
      break;
    }
  if (k < 0) return false;
  if (w[k].is_zero()) return false;
  Rat c = w[k] / v[k];
  if (!(c > Rat(0))) return false;
  for (int i = 0; i < (int)v.size(); ++i)
    if (w[i] != c * v[i]) return false;
  return true;
}

std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r = a;
  for (int i = 0; i < (int)b.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<Rat> scale_vec(const std::vector<Rat>& a, const Rat& c) {
  std::vector<Rat> r = a;
  for (Rat& x : r) x *= c;
  return r;
}

}  // namespace

std::vector<Rat> Path::endpoint() const {
  if (steps.empty()) return {};
  std::vector<Rat> e(steps[0].size(), Rat(0));
  for (const auto& s : steps) e = add_vec(e, s);
  return e;
}

std::vector<Path::Segment> Path::segments() const {
  std::vector<Segment> out;
  auto k = (std::int64_t)steps.size();
  out.reserve(steps.size());
  for (const auto& s : steps)
    out.push_back(Segment{scale_vec(s, Rat(k)), Rat(1, k)});
  return out;
}

Path canonical_path(std::vector<std::vector<Rat>> steps) {
  Path p;
  for (auto& s : steps) {
    if (is_zero_vec(s)) continue;
    if (!p.steps.empty() && same_ray(p.steps.back(), s))
      p.steps.back() = add_vec(p.steps.back(), s);
    else
      p.steps.push_back(std::move(s));
  }
  return p;
}

Path straight_path(const std::vector<Rat>& v) {
  return canonical_path({v});
}

Path straight_path(const RootSystem& rs, const Weight& w) {
  (void)rs;
  std::vector<Rat> v = w.coords;
  v.push_back(Rat(0));
  return straight_path(v);
}

Path lambda0_path(const RootSystem& rs) {
  std::vector<Rat> v(rs.rank() + 1, Rat(0));
  v[rs.rank()] = Rat(1);
  return straight_path(v);
}

Path concat(const Path& p1, const Path& p2) {
  std::vector<std::vector<Rat>> steps = p1.steps;
  steps.insert(steps.end(), p2.steps.begin(), p2.steps.end());
  return canonical_path(std::move(steps));
}

Rat pair_vector(const RootSystem& rs, const std::vector<Rat>& v, int i) {
  int n = rs.rank();
  if (i == 0) {
    Rat r = v[n];  // level coordinate
    for (int j = 0; j < n; ++j) r -= Rat(rs.comark(j)) * v[j];
    return r;
  }
  return v[i - 1];
}

std::vector<Rat> reflect_vector(const RootSystem& rs, int i,
                                const std::vector<Rat>& v) {
  int n = rs.rank();
  std::vector<Rat> r = v;
  Rat k = pair_vector(rs, v, i);
  if (i == 0) {
    // alpha_0 acts as delta - theta; level is untouched
    for (int j = 0; j < n; ++j) r[j] += k * rs.theta_weight().coords[j];
    if ((int)v.size() == n + 2) r[n + 1] -= k;
  } else {
    for (int j = 0; j < n; ++j) r[j] -= k * rs.simple_root(i - 1).coords[j];
  }
  return r;
}

Path project_classical(const Path& p) {
  std::vector<std::vector<Rat>> steps;
  steps.reserve(p.steps.size());
  for (const auto& s : p.steps)
    steps.emplace_back(s.begin(), s.end() - 1);
  return canonical_path(std::move(steps));
}

namespace {

// node values of h_i along the path (size steps+1, starts at 0)
std::vector<Rat> node_values(const RootSystem& rs, int i, const Path& p) {
  std::vector<Rat> h;
  h.reserve(p.steps.size() + 1);
  h.push_back(Rat(0));
  for (const auto& s : p.steps) h.push_back(h.back() + pair_vector(rs, s, i));
  return h;
}

Rat min_value(const std::vector<Rat>& h) {
  Rat m = h[0];
  for (const Rat& v : h)
    if (v < m) m = v;
  return m;
}

}  // namespace

std::optional<Path> root_f(const RootSystem& rs, int i, const Path& p) {
  if (p.empty()) return std::nullopt;
  std::vector<Rat> h = node_values(rs, i, p);
  Rat m = min_value(h);
  if (!m.is_integer())
    throw PreconditionError("root operator on a path with non-integral minimum");
  if (h.back() - m < Rat(1)) return std::nullopt;

  int k0 = 0;  // last node attaining the minimum
  for (int k = 0; k < (int)h.size(); ++k)
    if (h[k] == m) k0 = k;

  Rat target = m + Rat(1);
  std::vector<std::vector<Rat>> out(p.steps.begin(), p.steps.begin() + k0);
  std::vector<std::vector<Rat>> block;
  int k = k0;
  std::vector<std::vector<Rat>> tail;
  while (true) {
    // h stays in [m, target) until the first crossing, which must exist
    if (h[k + 1] < target) {
      block.push_back(p.steps[k]);
      ++k;
      continue;
    }
    if (h[k + 1] == target) {
      block.push_back(p.steps[k]);
      tail.assign(p.steps.begin() + k + 1, p.steps.end());
    } else {
      Rat x = (target - h[k]) / (h[k + 1] - h[k]);
      block.push_back(scale_vec(p.steps[k], x));
      tail.push_back(scale_vec(p.steps[k], Rat(1) - x));
      tail.insert(tail.end(), p.steps.begin() + k + 1, p.steps.end());
    }
    break;
  }
  for (auto& s : block) out.push_back(reflect_vector(rs, i, s));
  out.insert(out.end(), tail.begin(), tail.end());
  return canonical_path(std::move(out));
}

std::optional<Path> root_e(const RootSystem& rs, int i, const Path& p) {
  if (p.empty()) return std::nullopt;
  std::vector<Rat> h = node_values(rs, i, p);
  Rat m = min_value(h);
  if (!m.is_integer())
    throw PreconditionError("root operator on a path with non-integral minimum");
  if (m > Rat(-1)) return std::nullopt;

  int k1 = 0;  // first node attaining the minimum
  for (int k = (int)h.size() - 1; k >= 0; --k)
    if (h[k] == m) k1 = k;

  Rat target = m + Rat(1);  // <= 0 = h[0], so a crossing below exists
  std::vector<std::vector<Rat>> out, block;
  std::vector<std::vector<Rat>> tail(p.steps.begin() + k1, p.steps.end());
  int k = k1 - 1;
  while (true) {
    if (h[k] < target) {
      block.insert(block.begin(), p.steps[k]);
      --k;
      continue;
    }
    if (h[k] == target) {
      out.assign(p.steps.begin(), p.steps.begin() + k);
      block.insert(block.begin(), p.steps[k]);
    } else {
      Rat x = (h[k] - target) / (h[k] - h[k + 1]);
      out.assign(p.steps.begin(), p.steps.begin() + k);
      out.push_back(scale_vec(p.steps[k], x));
      block.insert(block.begin(), scale_vec(p.steps[k], Rat(1) - x));
    }
    break;
  }
  for (const auto& s : block) out.push_back(reflect_vector(rs, i, s));
  out.insert(out.end(), tail.begin(), tail.end());
  return canonical_path(std::move(out));
}

bool is_dominant_path(const RootSystem& rs, const Path& p) {
  for (int i = 0; i <= rs.rank(); ++i)
    if (min_value(node_values(rs, i, p)) < Rat(0)) return false;
  return true;
}

Path raise_to_dominant(const RootSystem& rs, const Path& p,
                       const std::vector<int>& alphabet) {
  Path cur = p;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : alphabet) {
      if (auto up = root_e(rs, i, cur)) {
        cur = std::move(*up);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<int> full_alphabet(const RootSystem& rs) {
  std::vector<int> a(rs.rank() + 1);
  for (int i = 0; i <= rs.rank(); ++i) a[i] = i;
  return a;
}

std::vector<int> classical_alphabet(const RootSystem& rs) {
  std::vector<int> a(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) a[i - 1] = i;
  return a;
}

}  // namespace liecomb
