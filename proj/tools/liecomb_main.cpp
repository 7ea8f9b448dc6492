// liecomb: exact computations for affine Demazure characters, their graded
// classical restrictions, the associated level-one path crystals, and the
// built-in verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource cap.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liecomb/checks.hpp"
#include "liecomb/errors.hpp"
#include "liecomb/io.hpp"

namespace {

using namespace liecomb;

struct CommonOpts {
  std::string type;
  std::int64_t level = 1;
  std::string coweight;
  std::string format;
  std::size_t cap = kDefaultCrystalCap;
  std::string tiebreak = "smallest";
  int verbosity = 0;
};

Coweight parse_coweight(const RootSystem& rs, const std::string& text) {
  Coweight cw = rs.zero_coweight();
  std::vector<std::int64_t> vals;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw ConfigError("empty coweight coordinate");
      vals.push_back(std::stoll(cur));
      cur.clear();
    } else if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
      cur += c;
    } else {
      throw ConfigError("bad character in coweight: " + text);
    }
  }
  if ((int)vals.size() != rs.rank())
    throw ConfigError("coweight needs " + std::to_string(rs.rank()) +
                      " coordinates, got " + std::to_string(vals.size()));
  for (int i = 0; i < rs.rank(); ++i) {
    if (vals[i] < 0) throw ConfigError("coweight must be dominant");
    cw.coords[i] = Rat(vals[i]);
  }
  return cw;
}

WalkTieBreak parse_tiebreak(const std::string& s) {
  if (s == "smallest") return WalkTieBreak::SmallestIndex;
  if (s == "largest") return WalkTieBreak::LargestIndex;
  throw ConfigError("tiebreak must be smallest or largest");
}

int cmd_dim(const CommonOpts& o) {
  RootSystem rs = build_root_system(o.type);
  Coweight cw = parse_coweight(rs, o.coweight);
  Character chi = demazure_character(rs, o.level, cw, parse_tiebreak(o.tiebreak));
  std::cout << dimension(chi) << "\n";
  return 0;
}

int cmd_char(const CommonOpts& o) {
  RootSystem rs = build_root_system(o.type);
  Coweight cw = parse_coweight(rs, o.coweight);
  Character chi = demazure_character(rs, o.level, cw, parse_tiebreak(o.tiebreak));
  GradedClassicalCharacter g = restrict_graded(chi);
  std::string format = o.format.empty() ? "records" : o.format;
  if (format == "records")
    std::cout << graded_records(rs, g);
  else if (format == "table")
    std::cout << graded_table(rs, g);
  else if (format == "terms")  // raw affine terms with level and delta
    std::cout << character_records(rs, chi);
  else
    throw ConfigError("char supports formats: records, table, terms");
  return 0;
}

int cmd_crystal(const CommonOpts& o) {
  RootSystem rs = build_root_system(o.type);
  Coweight cw = parse_coweight(rs, o.coweight);
  if (o.level != 1)
    throw ConfigError("the path-model crystal is a level-1 construction");
  std::string format = o.format.empty() ? "dot" : o.format;
  if (format != "dot") throw ConfigError("crystal supports format: dot");
  ExtendedElement e =
      decompose_translation(rs, cw, parse_tiebreak(o.tiebreak));
  std::set<Path> paths = demazure_paths(rs, e, demazure_seed(rs, cw), o.cap);
  std::cout << path_set_dot(rs, paths);
  return 0;
}

int cmd_verify(const std::vector<std::string>& selectors,
               const std::string& format, int verbosity) {
  std::vector<checks::CheckReport> reports = checks::run_checks(selectors);
  bool ok = true;
  for (const auto& r : reports) {
    if (format == "records")
      std::cout << checks::report_records(r);
    else
      std::cout << checks::report_table(r);
    if (verbosity > 0)
      std::cerr << "# " << r.id << " took " << r.seconds << "s\n";
    if (!r.experimental && !r.overall()) ok = false;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact affine Demazure character and path-model crystal calculator"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<std::string> selectors;
  std::string verify_checks;
  std::string verify_format = "table";

  auto add_common = [&](CLI::App* sub, bool needs_level) {
    sub->add_option("--type", o.type, "simple type token, e.g. A1, C2, D4")
        ->required();
    sub->add_option("--coweight", o.coweight,
                    "comma-separated dominant coweight coordinates")
        ->required();
    if (needs_level)
      sub->add_option("--level", o.level, "level of the module (default 1)");
    sub->add_option("--format", o.format, "output format");
    sub->add_option("--cap", o.cap, "crystal vertex cap");
    sub->add_option("--tiebreak", o.tiebreak,
                    "alcove walk tie-break: smallest|largest");
    sub->add_option("-v,--verbosity", o.verbosity, "verbosity level");
  };

  CLI::App* dim = app.add_subcommand("dim", "dimension of D(level, coweight)");
  add_common(dim, true);
  CLI::App* chr =
      app.add_subcommand("char", "graded classical character of D(level, coweight)");
  add_common(chr, true);
  CLI::App* cry = app.add_subcommand(
      "crystal", "DOT graph of the level-1 Demazure path crystal");
  add_common(cry, true);
  CLI::App* ver = app.add_subcommand("verify", "run verification checks");
  ver->add_option("selectors", selectors, "check ids or 'all' (default all)");
  ver->add_option("--checks", verify_checks, "comma-separated check ids");
  ver->add_option("--format", verify_format, "records|table");
  ver->add_option("-v,--verbosity", o.verbosity, "verbosity level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (dim->parsed()) return cmd_dim(o);
    if (chr->parsed()) return cmd_char(o);
    if (cry->parsed()) return cmd_crystal(o);
    if (ver->parsed()) {
      if (!verify_checks.empty()) {
        std::string cur;
        for (char c : verify_checks + ",") {
          if (c == ',') {
            if (!cur.empty()) selectors.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
      }
      if (selectors.empty()) selectors.push_back("all");
      if (verify_format != "records" && verify_format != "table")
        throw ConfigError("verify supports formats: records, table");
      return cmd_verify(selectors, verify_format, o.verbosity);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
