#pragma once

// Gaussian parity and its justified refinement, the axiom checker for move
// events, and evaluation of the parity cocycle on edge-cycles.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/moves.hpp"

namespace freeknots {

// Even chords emit the letter a, odd chords b or b' by type.
enum class ParityLabel { Even, OddB, OddBPrime };

inline bool is_odd(ParityLabel p) { return p != ParityLabel::Even; }

inline const char* letter_of(ParityLabel p) {
  switch (p) {
    case ParityLabel::Even: return "a";
    case ParityLabel::OddB: return "b";
    case ParityLabel::OddBPrime: return "b'";
  }
  return "?";
}

inline const char* label_name(ParityLabel p) {
  switch (p) {
    case ParityLabel::Even: return "Even";
    case ParityLabel::OddB: return "OddB";
    case ParityLabel::OddBPrime: return "OddBPrime";
  }
  return "?";
}

// Keyed by chord name so tables stay comparable across moves.
using ParityTable = std::map<std::string, ParityLabel>;

// A chord is even iff it is linked with an even number of chords. Odd chords
// come out as OddB placeholders until justified_type resolves them.
inline ParityTable gaussian_parity(const FreeLink& link) {
  if (!link.one_component())
    fail(ErrorKind::MultiComponent, "Gaussian parity is defined on one-component links");
  ParityTable table;
  for (int a = 0; a < link.chord_count(); ++a) {
    int linked = 0;
    for (int b = 0; b < link.chord_count(); ++b)
      if (b != a) linked += linking_mod2(link, a, b);
    table[link.chord_name(a)] = (linked % 2 == 0) ? ParityLabel::Even : ParityLabel::OddB;
  }
  return table;
}

// An odd chord is of the first type (b) iff it is linked with an even number
// of even chords.
inline ParityTable justified_type(const FreeLink& link, const ParityTable& parity) {
  if (!link.one_component())
    fail(ErrorKind::MultiComponent, "justified parity is defined on one-component links");
  ParityTable out = parity;
  for (int a = 0; a < link.chord_count(); ++a) {
    const std::string& name = link.chord_name(a);
    if (!is_odd(out.at(name))) continue;
    int even_linked = 0;
    for (int b = 0; b < link.chord_count(); ++b) {
      if (b == a) continue;
      if (!is_odd(parity.at(link.chord_name(b))) && linking_mod2(link, a, b)) ++even_linked;
    }
    out[name] = (even_linked % 2 == 0) ? ParityLabel::OddB : ParityLabel::OddBPrime;
  }
  return out;
}

inline ParityTable gaussian_justified(const FreeLink& link) {
  return justified_type(link, gaussian_parity(link));
}

struct AxiomViolation {
  enum class Kind {
    R1Odd,              // loop chord of a first move is odd
    R2Mismatch,         // bigon pair labels differ
    R3ParityMismatch,   // corresponding triangle chords change parity
    R3OddCount,         // odd chords in the triangle number 1 or 3
    R3TypeNotFlipped,   // a two-odd triangle kept an odd chord's type
    UntouchedChanged,   // a chord away from the move changed label
    MissingChord,       // the correspondence is broken
  };
  Kind kind{};
  std::string detail;
};

// Checks the parity and justified-parity axioms for one move, given label
// tables before and after. The correspondence is name identity: untouched
// chords keep their names, and the triangle chords of a third move keep
// theirs as well.
inline std::vector<AxiomViolation> check_parity_axioms(const FreeLink& before,
                                                       const FreeLink& after,
                                                       const MoveDescriptor& move,
                                                       const ParityTable& p_before,
                                                       const ParityTable& p_after) {
  using Kind = AxiomViolation::Kind;
  std::vector<AxiomViolation> out;
  auto label_in = [&out](const ParityTable& t, const std::string& name,
                         ParityLabel* dst) -> bool {
    auto it = t.find(name);
    if (it == t.end()) {
      out.push_back({Kind::MissingChord, "no label for chord \"" + name + "\""});
      return false;
    }
    *dst = it->second;
    return true;
  };

  std::set<std::string> participating(move.chords.begin(), move.chords.end());

  switch (move.kind) {
    case MoveKind::R1Add:
    case MoveKind::R1Remove: {
      const FreeLink& host = move.kind == MoveKind::R1Remove ? before : after;
      const ParityTable& table = move.kind == MoveKind::R1Remove ? p_before : p_after;
      (void)host;
      ParityLabel l{};
      if (label_in(table, move.chords.at(0), &l) && is_odd(l))
        out.push_back({Kind::R1Odd, "loop chord \"" + move.chords[0] + "\" is odd"});
      break;
    }
    case MoveKind::R2Add:
    case MoveKind::R2Remove: {
      const ParityTable& table = move.kind == MoveKind::R2Remove ? p_before : p_after;
      ParityLabel l0{}, l1{};
      if (label_in(table, move.chords.at(0), &l0) && label_in(table, move.chords.at(1), &l1) &&
          l0 != l1)
        out.push_back({Kind::R2Mismatch, "bigon pair {" + move.chords[0] + "," + move.chords[1] +
                                             "} labeled " + label_name(l0) + " vs " +
                                             label_name(l1)});
      break;
    }
    case MoveKind::R3: {
      int odd = 0;
      std::vector<std::pair<ParityLabel, ParityLabel>> pairs;
      for (const auto& name : move.chords) {
        ParityLabel lb{}, la{};
        if (!label_in(p_before, name, &lb) || !label_in(p_after, name, &la)) continue;
        if (is_odd(lb) != is_odd(la))
          out.push_back({Kind::R3ParityMismatch, "chord \"" + name + "\" changed parity"});
        if (is_odd(lb)) ++odd;
        pairs.emplace_back(lb, la);
      }
      if (odd != 0 && odd != 2)
        out.push_back({Kind::R3OddCount,
                       "triangle has " + std::to_string(odd) + " odd chords, expected 0 or 2"});
      if (odd == 2) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          auto [lb, la] = pairs[i];
          if (is_odd(lb) && is_odd(la) && lb == la)
            out.push_back({Kind::R3TypeNotFlipped,
                           "odd chord \"" + move.chords[i] + "\" kept type " + label_name(lb)});
        }
      }
      break;
    }
  }

  // untouched chords keep their labels
  for (int id = 0; id < before.chord_count(); ++id) {
    const std::string& name = before.chord_name(id);
    if (participating.count(name)) continue;
    if (!after.find_chord(name)) {
      out.push_back({Kind::MissingChord, "chord \"" + name + "\" disappeared away from the move"});
      continue;
    }
    ParityLabel lb{}, la{};
    if (label_in(p_before, name, &lb) && label_in(p_after, name, &la) && lb != la)
      out.push_back({Kind::UntouchedChanged, "chord \"" + name + "\" relabeled " +
                                                 label_name(lb) + " -> " + label_name(la)});
  }
  for (int id = 0; id < after.chord_count(); ++id) {
    const std::string& name = after.chord_name(id);
    if (participating.count(name)) continue;
    if (!before.find_chord(name))
      out.push_back({Kind::MissingChord, "chord \"" + name + "\" appeared away from the move"});
  }
  return out;
}

// Value of the parity cocycle on an edge-cycle, given as a set of global arc
// indices. The value is the mod-2 sum of parity bits over the vertices where
// the cycle turns, that is, uses exactly two half-edges from different
// passages of the vertex.
inline int cocycle_value(const FreeLink& link, const ParityTable& table,
                         const std::vector<int>& arcs) {
  std::set<int> in_cycle(arcs.begin(), arcs.end());
  int total_arcs = arc_count(link);
  for (int a : arcs)
    if (a < 0 || a >= total_arcs) fail(ErrorKind::BadInput, "arc index out of range");

  // per chord, the (slot, side) incidences contributed by the cycle
  std::map<int, std::vector<std::pair<SlotRef, int>>> incidences;
  for (int a : in_cycle) {
    ArcEnds ends = arc_ends(link, a);
    int from_chord = link.component(ends.from.component)[ends.from.slot];
    int to_chord = link.component(ends.to.component)[ends.to.slot];
    incidences[from_chord].push_back({ends.from, 0});
    incidences[to_chord].push_back({ends.to, 1});
  }
  int value = 0;
  for (int id = 0; id < link.chord_count(); ++id) {
    auto it = incidences.find(id);
    std::size_t n = it == incidences.end() ? 0 : it->second.size();
    if (n != 0 && n != 2 && n != 4)
      fail(ErrorKind::NotACycle,
           "chord \"" + link.chord_name(id) + "\" has " + std::to_string(n) + " half-edges");
    if (n != 2) continue;
    const auto& inc = it->second;
    bool opposite = inc[0].first == inc[1].first;  // same slot, in and out
    if (opposite) continue;
    auto lt = table.find(link.chord_name(id));
    if (lt == table.end()) fail(ErrorKind::BadInput, "no parity for chord " + link.chord_name(id));
    if (is_odd(lt->second)) value ^= 1;
  }
  return value;
}

}  // namespace freeknots
