// Records-format serialization: one term per line, every rational rendered
// as an explicit numerator/denominator pair, deterministic ordering.

#ifndef LIECOMB_IO_HPP
#define LIECOMB_IO_HPP

#include <string>

#include "liecomb/character.hpp"

namespace liecomb {

// term level=p/q delta=p/q classical=p/q,... mult=m
std::string character_records(const RootSystem& rs, const Character& chi);

// record energy=k classical=p/q,... mult=m   (plus a trailing total line)
std::string graded_records(const RootSystem& rs,
                           const GradedClassicalCharacter& g);

// aligned human-readable layer table
std::string graded_table(const RootSystem& rs,
                         const GradedClassicalCharacter& g);

}  // namespace liecomb

#endif
