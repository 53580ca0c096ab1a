// Command-line front end: diagram parsing, the invariant, odd-chord deletion,
// simplification, bounded orbit and equivalence search, group words, movie
// verification, slice-movie search and projection, and the example catalog.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "freeknots/catalog.hpp"
#include "freeknots/cobordism.hpp"
#include "freeknots/dihedral.hpp"
#include "freeknots/diagram.hpp"
#include "freeknots/invariant.hpp"
#include "freeknots/json_io.hpp"
#include "freeknots/movie_generator.hpp"
#include "freeknots/moves.hpp"
#include "freeknots/parity.hpp"

namespace {

using namespace freeknots;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const VerifierReport& rep) {
  std::cout << "ok: " << (rep.ok ? "true" : "false") << "\n";
  if (rep.genus_defined) {
    std::cout << "genus: " << rep.genus.num;
    if (!rep.genus.integral()) std::cout << "/" << rep.genus.den;
    std::cout << "\n";
  } else {
    std::cout << "genus: undefined (replay aborted)\n";
  }
  std::cout << "reeb tree: " << (rep.reeb_is_tree ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    const auto& l = rep.levels[i];
    std::cout << "level " << i << ": " << l.components << " component(s), labels {";
    for (std::size_t k = 0; k < l.label_multiset.size(); ++k)
      std::cout << (k ? "," : "") << l.label_multiset[k];
    std::cout << "}\n";
  }
  for (const auto& v : rep.violations) {
    std::cout << "violation " << violation_kind_name(v.kind);
    if (v.level >= 0) std::cout << " at level " << v.level;
    if (v.event >= 0) std::cout << " (event " << v.event << ")";
    std::cout << ": " << v.detail << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"free-knot invariants, moves and cobordism movies"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string code, code2, path;
  int max_chords = 8;
  std::size_t max_nodes = 100000;
  int max_events = 6;
  bool iterate = false, strict = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a Gauss code and print its canonical form");
  cmd_parse->add_option("code", code)->required();

  auto* cmd_inv = app.add_subcommand("invariant", "invariant of a one-component diagram");
  cmd_inv->add_option("code", code)->required();

  auto* cmd_fmap = app.add_subcommand("fmap", "delete all odd chords");
  cmd_fmap->add_option("code", code)->required();
  cmd_fmap->add_flag("--iterate", iterate, "iterate to the all-even fixed point");

  auto* cmd_simplify = app.add_subcommand("simplify", "apply decreasing moves until none applies");
  cmd_simplify->add_option("code", code)->required();

  auto* cmd_orbit = app.add_subcommand("orbit", "bounded closure under all moves");
  cmd_orbit->add_option("code", code)->required();
  cmd_orbit->add_option("--max-chords", max_chords);
  cmd_orbit->add_option("--max-nodes", max_nodes);

  auto* cmd_equiv = app.add_subcommand("equiv", "bounded equivalence test");
  cmd_equiv->add_option("code", code)->required();
  cmd_equiv->add_option("code2", code2)->required();
  cmd_equiv->add_option("--max-chords", max_chords);
  cmd_equiv->add_option("--max-nodes", max_nodes);

  auto* cmd_word = app.add_subcommand("word", "evaluate a letter expression in the group");
  cmd_word->add_option("letters", code)->required();

  auto* cmd_movie = app.add_subcommand("movie", "cobordism movies");
  cmd_movie->require_subcommand(1);
  auto* cmd_verify = cmd_movie->add_subcommand("verify", "verify a movie file");
  cmd_verify->add_option("file", path)->required();
  cmd_verify->add_flag("--strict", strict, "require Gaussian labels at every knot level");
  auto* cmd_search = cmd_movie->add_subcommand("search", "look for a genus-0 movie");
  cmd_search->add_option("code", code)->required();
  cmd_search->add_option("--max-events", max_events);
  cmd_search->add_option("--max-chords", max_chords);
  auto* cmd_fproject = cmd_movie->add_subcommand("fproject", "delete all odd double lines");
  cmd_fproject->add_option("file", path)->required();
  auto* cmd_random = cmd_movie->add_subcommand("random", "generate a valid movie (seeded)");
  cmd_random->add_option("--max-events", max_events);
  cmd_random->add_option("--max-chords", max_chords);

  auto* cmd_catalog = app.add_subcommand("catalog", "list the named examples");

  CLI11_PARSE(app, argc, argv);

  if (cmd_parse->parsed()) {
    FreeLink link = FreeLink::parse(code);
    std::string canon = canonical_form(link);
    if (as_json) {
      std::cout << json{{"canonical", canon},
                        {"chords", link.chord_count()},
                        {"components", link.component_count()}}
                << "\n";
    } else {
      std::cout << "canonical: " << canon << "\n";
      std::cout << "chords: " << link.chord_count()
                << ", components: " << link.component_count() << "\n";
    }
    return 0;
  }

  if (cmd_inv->parsed()) {
    InvariantResult res = invariant_l(FreeLink::parse(code));
    if (as_json) {
      std::cout << invariant_result_to_json(res) << "\n";
    } else {
      std::cout << "word: " << format_letters(res.word) << "\n";
      std::cout << "point: (" << res.point.x << "," << res.point.y << ")\n";
      std::cout << "L: " << res.L << "\n";
      for (const auto& [name, label] : res.parity)
        std::cout << "  " << name << ": " << label_name(label) << "\n";
    }
    return 0;
  }

  if (cmd_fmap->parsed()) {
    FreeLink link = FreeLink::parse(code);
    FreeLink out = iterate ? f_star(link) : f_map(link);
    if (as_json)
      std::cout << json{{"result", out.gauss_code()}, {"canonical", canonical_form(out)}} << "\n";
    else
      std::cout << out.gauss_code() << "\n";
    return 0;
  }

  if (cmd_simplify->parsed()) {
    FreeLink out = simplify(FreeLink::parse(code));
    if (as_json)
      std::cout << json{{"result", out.gauss_code()}, {"canonical", canonical_form(out)}} << "\n";
    else
      std::cout << out.gauss_code() << "\n";
    return 0;
  }

  if (cmd_orbit->parsed()) {
    OrbitResult res = orbit(FreeLink::parse(code), max_chords, max_nodes);
    if (as_json) {
      json arr = json::array();
      for (const auto& c : res.canon) arr.push_back(c);
      std::cout << json{{"orbit", arr}, {"complete", res.complete}} << "\n";
    } else {
      for (const auto& c : res.canon) std::cout << c << "\n";
      std::cout << (res.complete ? "complete" : "budget exhausted") << "\n";
    }
    return 0;
  }

  if (cmd_equiv->parsed()) {
    EquivResult res =
        are_equivalent_bounded(FreeLink::parse(code), FreeLink::parse(code2), max_chords, max_nodes);
    const char* verdict = res.verdict == EquivVerdict::Equivalent ? "Equivalent"
                          : res.verdict == EquivVerdict::Distinct ? "Distinct"
                                                                  : "Unknown";
    if (as_json) {
      json j{{"verdict", verdict}};
      if (res.have_l) {
        j["L1"] = res.l_first;
        j["L2"] = res.l_second;
      }
      std::cout << j << "\n";
    } else {
      std::cout << verdict;
      if (res.verdict == EquivVerdict::Distinct)
        std::cout << " (L " << res.l_first << " vs " << res.l_second << ")";
      std::cout << "\n";
    }
    return res.verdict == EquivVerdict::Unknown ? 1 : 0;
  }

  if (cmd_word->parsed()) {
    auto letters = parse_letter_expr(code);
    CayleyPoint p = eval_word(letters);
    if (as_json) {
      json j{{"x", p.x}, {"y", p.y}};
      if (p.x == 0) j["L"] = conj_class_l(p);
      std::cout << j << "\n";
    } else {
      std::cout << "point: (" << p.x << "," << p.y << ")\n";
      if (p.x == 0) std::cout << "class L: " << conj_class_l(p) << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    Movie movie = movie_from_json(json::parse(read_file(path)));
    VerifierReport rep = verify_movie(movie, strict);
    if (as_json)
      std::cout << verifier_report_to_json(rep) << "\n";
    else
      print_report(rep);
    return 0;
  }

  if (cmd_search->parsed()) {
    SliceSearchResult res = search_slice_movie(FreeLink::parse(code), max_events, max_chords);
    if (!res.found) {
      if (as_json)
        std::cout << json{{"found", false}} << "\n";
      else
        std::cout << "NotFoundWithinBounds\n";
      return 1;
    }
    if (as_json)
      std::cout << json{{"found", true}, {"movie", movie_to_json(res.movie)}} << "\n";
    else
      std::cout << movie_to_json(res.movie).dump(2) << "\n";
    return 0;
  }

  if (cmd_fproject->parsed()) {
    Movie movie = movie_from_json(json::parse(read_file(path)));
    Movie projected = f_project_movie(movie);
    std::cout << movie_to_json(projected).dump(as_json ? -1 : 2) << "\n";
    return 0;
  }

  if (cmd_random->parsed()) {
    GeneratorBounds bounds;
    bounds.events = max_events;
    bounds.max_chords = max_chords;
    Movie movie = random_valid_movie(seed, bounds);
    std::cout << movie_to_json(movie).dump(as_json ? -1 : 2) << "\n";
    return 0;
  }

  if (cmd_catalog->parsed()) {
    if (as_json) {
      json arr = json::array();
      for (const auto& e : freeknots::catalog()) {
        json j{{"name", e.name}, {"code", e.code}, {"note", e.note}};
        if (e.expected_l) j["expectedL"] = *e.expected_l;
        arr.push_back(j);
      }
      std::cout << arr << "\n";
    } else {
      for (const auto& e : freeknots::catalog()) {
        std::cout << e.name;
        if (e.expected_l) std::cout << " (L=" << *e.expected_l << ")";
        std::cout << ": " << e.code << "\n    " << e.note << "\n";
      }
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const freeknots::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
