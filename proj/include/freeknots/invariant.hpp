#pragma once

// The word read along a knot diagram (one letter per chord endpoint, by
// justified parity), the integer invariant L it induces, the basepointed
// variant, and the map that deletes all odd chords.

#include <string>
#include <vector>

#include "freeknots/dihedral.hpp"
#include "freeknots/diagram.hpp"
#include "freeknots/moves.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

struct Basepoint {
  int component = 0;
  int gap = 0;       // position before slot `gap`
  bool reversed = false;
};

inline Letter label_letter(ParityLabel p) {
  switch (p) {
    case ParityLabel::Even: return Letter::A;
    case ParityLabel::OddB: return Letter::B;
    case ParityLabel::OddBPrime: return Letter::BPrime;
  }
  fail(ErrorKind::BadInput, "bad parity label");
}

// Walks the core circle from the basepoint, emitting the justified-parity
// letter of the chord at each endpoint slot.
inline std::vector<Letter> gamma_word(const FreeLink& link, Basepoint base) {
  if (!link.one_component())
    fail(ErrorKind::MultiComponent, "the word is read along a one-component link");
  if (base.component != 0) fail(ErrorKind::BadBasepoint, "component index out of range");
  int len = link.slots_in(0);
  if (base.gap < 0 || base.gap > std::max(len - 1, 0))
    fail(ErrorKind::BadBasepoint, "gap index out of range");
  ParityTable table = gaussian_justified(link);
  std::vector<Letter> word;
  word.reserve(len);
  const auto& comp = link.component(0);
  for (int i = 0; i < len; ++i) {
    int pos = base.reversed ? ((base.gap - 1 - i) % len + len) % len : (base.gap + i) % len;
    word.push_back(label_letter(table.at(link.chord_name(comp[pos]))));
  }
  return word;
}

struct InvariantResult {
  std::vector<Letter> word;
  CayleyPoint point;
  long long L = 0;
  ParityTable parity;
};

// L of a knot diagram. The value does not depend on the basepoint or the
// direction; the reported word uses the stored anchor, forward.
inline InvariantResult invariant_l(const FreeLink& link) {
  InvariantResult res;
  res.parity = gaussian_justified(link);
  res.word = gamma_word(link, Basepoint{});
  res.point = eval_word(res.word);
  res.L = conj_class_l(res.point);
  return res;
}

// Signed second coordinate at a fixed basepoint. Not basepoint-invariant;
// unchanged by moves performed away from the basepoint.
inline long long long_invariant(const FreeLink& link, Basepoint base) {
  return eval_word(gamma_word(link, base)).y;
}

// Deletes every chord that is odd under Gaussian parity and rejoins the
// circle. Surviving chords are relabeled 1..k by first occurrence.
inline FreeLink f_map(const FreeLink& link) {
  ParityTable parity = gaussian_parity(link);
  const auto& comp = link.component(0);
  std::vector<std::string> kept;
  for (int id : comp)
    if (!is_odd(parity.at(link.chord_name(id)))) kept.push_back(link.chord_name(id));
  std::map<std::string, std::string> relabel;
  std::vector<std::string> seq;
  seq.reserve(kept.size());
  for (const auto& name : kept) {
    auto it = relabel.find(name);
    if (it == relabel.end())
      it = relabel.emplace(name, std::to_string(relabel.size() + 1)).first;
    seq.push_back(it->second);
  }
  return FreeLink::from_components({seq});
}

// Least fixed point of f_map; every chord of the result is even. Terminates
// because each step strictly decreases the chord count.
inline FreeLink f_star(const FreeLink& link) {
  FreeLink cur = link;
  while (true) {
    FreeLink next = f_map(cur);
    if (next.chord_count() == cur.chord_count()) return next;
    cur = std::move(next);
  }
}

enum class EquivVerdict { Equivalent, Distinct, Unknown };

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::Unknown;
  long long l_first = 0, l_second = 0;  // filled when both inputs are knots
  bool have_l = false;
};

// Bounded equivalence test. Distinct only on an invariant mismatch, which is
// a sound separation; Equivalent iff the bounded orbits intersect; Unknown
// otherwise (including when the node budget runs out).
inline EquivResult are_equivalent_bounded(const FreeLink& d1, const FreeLink& d2, int max_chords,
                                          std::size_t max_nodes) {
  EquivResult res;
  if (d1.one_component() && d2.one_component()) {
    res.l_first = invariant_l(d1).L;
    res.l_second = invariant_l(d2).L;
    res.have_l = true;
    if (res.l_first != res.l_second) {
      res.verdict = EquivVerdict::Distinct;
      return res;
    }
  }
  std::string target = canonical_form(d2);
  if (canonical_form(d1) == target) {
    res.verdict = EquivVerdict::Equivalent;
    return res;
  }
  OrbitResult orb = orbit(d1, max_chords, max_nodes);
  if (orb.canon.count(target)) {
    res.verdict = EquivVerdict::Equivalent;
    return res;
  }
  res.verdict = EquivVerdict::Unknown;
  return res;
}

}  // namespace freeknots
