#include "liecomb/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "liecomb/errors.hpp"

namespace liecomb {

namespace {

// expected number of positive roots per type
std::int64_t positive_root_count(Series s, int n) {
  switch (s) {
    case Series::A: return (std::int64_t)n * (n + 1) / 2;
    case Series::B:
    case Series::C: return (std::int64_t)n * n;
    case Series::D: return (std::int64_t)n * (n - 1);
    case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return -1;
}

bool valid_type(Series s, int n) {
  switch (s) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

// Dynkin data in Bourbaki numbering (0-based node indices internally).
// cartan[i][j] = <alpha_j, alpha_i^vee>.
void fill_type_data(Series s, int n,
                    std::vector<std::vector<std::int64_t>>& cartan,
                    std::vector<std::int64_t>& marks, std::vector<Rat>& d) {
  cartan.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  auto edge = [&](int i, int j) {  // simple edge, equal lengths
    cartan[i][j] = -1;
    cartan[j][i] = -1;
  };
  marks.assign(n, 1);
  d.assign(n, Rat(1));

  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Series::B:
      // alpha_n short; arrow from n-1 to n
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      cartan[n - 2][n - 1] = -1;  // <alpha_short, alpha_long^vee>
      cartan[n - 1][n - 2] = -2;  // <alpha_long, alpha_short^vee>
      for (int i = 1; i < n; ++i) marks[i] = 2;
      d[n - 1] = Rat(1, 2);
      break;
    case Series::C:
      // alpha_n long; arrow from n to n-1
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      cartan[n - 2][n - 1] = -2;  // <alpha_long, alpha_short^vee>
      cartan[n - 1][n - 2] = -1;
      for (int i = 0; i + 1 < n; ++i) marks[i] = 2;
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      for (int i = 1; i <= n - 3; ++i) marks[i] = 2;
      break;
    case Series::E:
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 4; i < n; ++i) edge(i - 1, i);
      if (n == 6) marks = {1, 2, 2, 3, 2, 1};
      if (n == 7) marks = {2, 2, 3, 4, 3, 2, 1};
      if (n == 8) marks = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    case Series::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1);
      edge(2, 3);
      cartan[1][2] = -1;
      cartan[2][1] = -2;
      marks = {2, 3, 4, 2};
      d = {Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)};
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long
      cartan[0][1] = -3;  // <alpha_2, alpha_1^vee>
      cartan[1][0] = -1;
      marks = {3, 2};
      d = {Rat(1, 3), Rat(1)};
      break;
  }
}

std::vector<std::vector<Rat>> invert(
    const std::vector<std::vector<std::int64_t>>& m) {
  int n = (int)m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    assert(pivot >= 0 && "Cartan matrix is invertible");
    std::swap(a[col], a[pivot]);
    Rat inv = Rat(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

RootSystem::RootSystem(Series series, int rank) : series_(series), rank_(rank) {
  if (!valid_type(series, rank))
    throw ConfigError("invalid simple type " + name());
  fill_type_data(series, rank, cartan_, marks_, d_);
  cartan_inv_ = invert(cartan_);

  comarks_.resize(rank_);
  h_dual_ = 1;
  for (int i = 0; i < rank_; ++i) {
    Rat c = d_[i] * Rat(marks_[i]);
    if (!c.is_integer()) throw ConfigError("non-integral comark");
    comarks_[i] = c.as_integer();
    h_dual_ += comarks_[i];
  }

  alpha_omega_.resize(rank_);
  for (int j = 0; j < rank_; ++j) {
    alpha_omega_[j].coords.resize(rank_);
    for (int i = 0; i < rank_; ++i) alpha_omega_[j].coords[i] = Rat(cartan_[i][j]);
  }

  enumerate_positive_roots();
  check_invariants();
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

void RootSystem::enumerate_positive_roots() {
  // closure under simple-root addition, expanding by height; beta + alpha_i
  // is a root iff p - <beta, alpha_i^vee> >= 1 where p is the depth of the
  // alpha_i-string below beta
  std::map<std::vector<std::int64_t>, int> seen;  // root -> height
  std::vector<std::vector<std::int64_t>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<std::int64_t> a(rank_, 0);
    a[i] = 1;
    seen.emplace(a, 1);
    frontier.push_back(a);
  }
  int height = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        std::int64_t k = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < rank_; ++j) k += cartan_[i][j] * beta[j];
        std::int64_t p = 0;
        std::vector<std::int64_t> down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = true;
          for (auto c : down) nonneg = nonneg && c >= 0;
          bool is_root = nonneg && (down == std::vector<std::int64_t>(rank_, 0)
                                        ? false
                                        : seen.count(down) > 0);
          if (!is_root) break;
          ++p;
        }
        if (p - k >= 1) {
          std::vector<std::int64_t> up = beta;
          up[i] += 1;
          if (seen.emplace(up, height + 1).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
    ++height;
  }

  positive_roots_.clear();
  positive_roots_.reserve(seen.size());
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> by_height;
  for (const auto& [root, h] : seen) {
    std::int64_t ht = 0;
    for (auto c : root) ht += c;
    by_height.emplace_back(ht, root);
  }
  std::sort(by_height.begin(), by_height.end());
  for (auto& [ht, root] : by_height) positive_roots_.push_back(root);

  // highest root: unique root with no simple root addable
  theta_ = positive_roots_.back();
  theta_omega_.coords.assign(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      theta_omega_.coords[i] += Rat(cartan_[i][j] * theta_[j]);
}

void RootSystem::check_invariants() const {
  if ((std::int64_t)positive_roots_.size() != positive_root_count(series_, rank_))
    throw ConfigError("positive root count mismatch for " + name());
  if (theta_ != marks_) throw ConfigError("highest root != marks for " + name());
  // symmetrizability: d_i cartan[i][j] == d_j cartan[j][i]
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (d_[i] * Rat(cartan_[i][j]) != d_[j] * Rat(cartan_[j][i]))
        throw ConfigError("Cartan matrix is not symmetrizable for " + name());
  // (theta, theta) = 2
  if (form(theta_omega_, theta_omega_) != Rat(2))
    throw ConfigError("form normalization broken for " + name());
}

Rat RootSystem::root_half_square(int positive_root_index) const {
  const auto& coords = positive_roots_[positive_root_index];
  Weight beta = zero_weight();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      beta.coords[i] += Rat(cartan_[i][j] * coords[j]);
  return form(beta, beta) * Rat(1, 2);
}

std::int64_t RootSystem::coroot_level_scale(int positive_root_index) const {
  // (beta^vee,beta^vee)/2 = 1 / ((beta,beta)/2) in the (theta,theta) = 2
  // normalization
  Rat eps = Rat(1) / root_half_square(positive_root_index);
  return eps.as_integer();
}

Rat RootSystem::pair_theta_covee(const Weight& w) const {
  Rat r(0);
  for (int i = 0; i < rank_; ++i) r += Rat(comarks_[i]) * w.coords[i];
  return r;
}

std::vector<Rat> RootSystem::to_root_coords(const Weight& w) const {
  std::vector<Rat> c(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += cartan_inv_[i][j] * w.coords[j];
  return c;
}

Rat RootSystem::height(const Weight& w) const {
  Rat h(0);
  for (const Rat& c : to_root_coords(w)) h += c;
  return h;
}

Rat RootSystem::form(const Weight& a, const Weight& b) const {
  // (a, b) = sum_j c_j d_j <a, alpha_j^vee> where b = sum c_j alpha_j
  std::vector<Rat> c = to_root_coords(b);
  Rat r(0);
  for (int j = 0; j < rank_; ++j) r += c[j] * d_[j] * a.coords[j];
  return r;
}

Weight RootSystem::nu(const Coweight& cw) const {
  Weight w;
  w.coords.resize(rank_);
  for (int i = 0; i < rank_; ++i)
    w.coords[i] = cw.coords[i] * Rat(marks_[i], comarks_[i]);
  return w;
}

Coweight RootSystem::nu_inverse(const Weight& w) const {
  Coweight cw;
  cw.coords.resize(rank_);
  for (int i = 0; i < rank_; ++i)
    cw.coords[i] = w.coords[i] * Rat(comarks_[i], marks_[i]);
  return cw;
}

bool RootSystem::in_translation_lattice(const Weight& w) const {
  Coweight cw = nu_inverse(w);
  for (const Rat& c : cw.coords)
    if (!c.is_integer()) return false;
  return true;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  // s_i(w) = w - <w, alpha_i^vee> alpha_i
  Weight r = w;
  Rat k = w.coords[i];
  for (int j = 0; j < rank_; ++j) r.coords[j] -= k * Rat(cartan_[j][i]);
  return r;
}

Coweight RootSystem::reflect(int i, const Coweight& cw) const {
  // s_i on coweights: subtract <alpha_i, cw> alpha_i^vee (row i of cartan)
  Coweight r = cw;
  Rat k = cw.coords[i];
  for (int j = 0; j < rank_; ++j) r.coords[j] -= k * Rat(cartan_[i][j]);
  return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const Rat& c : w.coords)
    if (c < Rat(0)) return false;
  return true;
}

bool RootSystem::is_dominant(const Coweight& cw) const {
  for (const Rat& c : cw.coords)
    if (c < Rat(0)) return false;
  return true;
}

bool RootSystem::is_integral(const Coweight& cw) const {
  for (const Rat& c : cw.coords)
    if (!c.is_integer()) return false;
  return true;
}

Coweight RootSystem::w0_dual(const Coweight& cw) const {
  if (!is_dominant(cw))
    throw PreconditionError("w0_dual requires a dominant coweight");
  // dominance-restoring reflections applied to -cw terminate at -w0(cw)
  Coweight m;
  m.coords.resize(rank_);
  for (int i = 0; i < rank_; ++i) m.coords[i] = -cw.coords[i];
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (m.coords[i] < Rat(0)) {
        m = reflect(i, m);
        moved = true;
        break;
      }
    }
  }
  return m;
}

RootSystem build_root_system(Series series, int rank) {
  return RootSystem(series, rank);
}

RootSystem build_root_system(const std::string& type_token) {
  if (type_token.size() < 2) throw ConfigError("bad type token: " + type_token);
  char c = type_token[0];
  if (c < 'A' || c > 'G') throw ConfigError("bad type letter: " + type_token);
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(type_token.substr(1), &pos);
    if (pos + 1 != type_token.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("bad rank in type token: " + type_token);
  }
  return RootSystem(static_cast<Series>(c), rank);
}

}  // namespace liecomb
