#include "liecomb/io.hpp"

#include <sstream>

namespace liecomb {

namespace {

std::string coords_frac(const std::vector<Rat>& v) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += ",";
    s += v[j].frac_str();
  }
  return s;
}

std::string coords_pretty(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += ", ";
    s += v[j].str();
  }
  return s + ")";
}

}  // namespace

std::string character_records(const RootSystem& rs, const Character& chi) {
  (void)rs;
  std::ostringstream os;
  for (const auto& [w, m] : chi.terms) {
    os << "term level=" << w.level.frac_str() << " delta=" << w.delta.frac_str()
       << " classical=" << coords_frac(w.classical.coords) << " mult=" << m
       << "\n";
  }
  os << "total dim=" << dimension(chi) << " terms=" << chi.terms.size() << "\n";
  return os.str();
}

std::string graded_records(const RootSystem& rs,
                           const GradedClassicalCharacter& g) {
  (void)rs;
  std::ostringstream os;
  for (const auto& [k, layer] : g.layers)
    for (const auto& [w, m] : layer)
      os << "record energy=" << k << " classical=" << coords_frac(w)
         << " mult=" << m << "\n";
  os << "total level=" << g.level.frac_str() << " dim=" << g.total_dimension()
     << "\n";
  return os.str();
}

std::string graded_table(const RootSystem& rs,
                         const GradedClassicalCharacter& g) {
  (void)rs;
  std::ostringstream os;
  os << "graded classical character, level " << g.level.str() << "\n";
  for (const auto& [k, layer] : g.layers) {
    std::int64_t dim = 0;
    for (const auto& [w, m] : layer) dim += m;
    os << "energy " << k << " (dim " << dim << "):";
    for (const auto& [w, m] : layer) {
      os << " " << coords_pretty(w);
      if (m != 1) os << "x" << m;
    }
    os << "\n";
  }
  os << "total dim " << g.total_dimension() << "\n";
  return os.str();
}

}  // namespace liecomb
