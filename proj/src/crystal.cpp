#include "liecomb/crystal.hpp"

#include <deque>
#include <sstream>

#include "liecomb/errors.hpp"

namespace liecomb {

CrystalGraph generate_crystal(const RootSystem& rs, const Path& seed,
                              const std::vector<int>& alphabet,
                              std::size_t cap) {
  CrystalGraph g;
  std::map<Path, int> index;
  std::deque<int> queue;

  auto intern = [&](const Path& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    if (g.vertices.size() >= cap)
      throw ResourceError("crystal cap " + std::to_string(cap) + " exceeded");
    int id = (int)g.vertices.size();
    g.vertices.push_back(p);
    index.emplace(p, id);
    queue.push_back(id);
    return id;
  };

  g.seed_index = intern(seed);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i : alphabet) {
      Path cur = g.vertices[v];
      if (auto down = root_f(rs, i, cur)) {
        int w = intern(*down);
        g.edges.emplace(v, w, i);
      }
      if (auto up = root_e(rs, i, cur)) {
        int w = intern(*up);
        g.edges.emplace(w, v, i);
      }
    }
  }
  return g;
}

std::set<Path> demazure_paths(const RootSystem& rs, const ExtendedElement& e,
                              const Path& seed, std::size_t cap) {
  std::set<Path> stage{seed};
  for (int j = (int)e.word.size() - 1; j >= 0; --j) {
    int i = e.word[j];
    std::set<Path> next;
    for (const Path& p : stage) {
      Path cur = p;
      next.insert(cur);
      while (auto down = root_f(rs, i, cur)) {
        cur = std::move(*down);
        next.insert(cur);
        if (next.size() > cap)
          throw ResourceError("crystal cap " + std::to_string(cap) +
                              " exceeded");
      }
    }
    stage = std::move(next);
  }
  return stage;
}

Path demazure_seed(const RootSystem& rs, const Coweight& lambda_vee) {
  if (!rs.is_integral(lambda_vee) || !rs.is_dominant(lambda_vee))
    throw PreconditionError("demazure_seed requires a dominant integral coweight");
  Weight mu = rs.nu(rs.w0_dual(lambda_vee));
  Weight neg;
  neg.coords.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) neg.coords[i] = -mu.coords[i];
  Path eta = concat(lambda0_path(rs), straight_path(rs, neg));
  return raise_to_dominant(rs, eta, full_alphabet(rs));
}

std::map<std::vector<Rat>, std::int64_t> endpoint_multiset(
    const std::set<Path>& paths) {
  std::map<std::vector<Rat>, std::int64_t> out;
  for (const Path& p : paths) ++out[p.endpoint()];
  return out;
}

bool has_lambda0_prefix_form(const RootSystem& rs, const Path& p) {
  if (p.empty()) return false;
  int n = rs.rank();
  // first displacement is exactly Lambda_0, the rest are level zero
  const auto& first = p.steps.front();
  for (int j = 0; j < n; ++j)
    if (!first[j].is_zero()) return false;
  if (first[n] != Rat(1)) return false;
  for (std::size_t k = 1; k < p.steps.size(); ++k)
    if (!p.steps[k][n].is_zero()) return false;
  return true;
}

namespace {

std::string endpoint_label(const RootSystem& rs, const Path& p) {
  std::vector<Rat> e = p.endpoint();
  if (e.empty()) e.assign(rs.rank() + 1, Rat(0));
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < rs.rank(); ++j) {
    if (j) os << ", ";
    os << e[j].str();
  }
  os << "; " << e[rs.rank()].str() << ")";
  return os.str();
}

}  // namespace

std::string crystal_dot(const RootSystem& rs, const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << endpoint_label(rs, g.vertices[v])
       << "\"];\n";
  for (const auto& [src, dst, label] : g.edges)
    os << "  v" << src << " -> v" << dst << " [label=\"" << label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string path_set_dot(const RootSystem& rs, const std::set<Path>& paths) {
  std::vector<Path> verts(paths.begin(), paths.end());
  std::map<Path, int> index;
  for (int v = 0; v < (int)verts.size(); ++v) index.emplace(verts[v], v);

  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int v = 0; v < (int)verts.size(); ++v)
    os << "  v" << v << " [label=\"" << endpoint_label(rs, verts[v]) << "\"];\n";
  for (int v = 0; v < (int)verts.size(); ++v) {
    for (int i = 0; i <= rs.rank(); ++i) {
      if (auto down = root_f(rs, i, verts[v])) {
        auto it = index.find(*down);
        if (it != index.end())
          os << "  v" << v << " -> v" << it->second << " [label=\"" << i
             << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace liecomb
