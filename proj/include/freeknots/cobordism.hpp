#pragma once

// Combinatorial cobordism movies: an initial free link followed by Morse
// events (birth, death, saddle) and Reidemeister events, ending at the empty
// link. Each crossing belongs to a double line tracked by a lifetime id; the
// line's parity never changes, and an odd line's type flips exactly at third
// moves with two odd participants. The verifier replays the movie and checks
// the label axioms, the per-component word constraints, the genus accounting
// and the saddle label rule at every level.

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/dihedral.hpp"
#include "freeknots/invariant.hpp"
#include "freeknots/moves.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

enum class EventKind { Birth, Death, Saddle, R1Add, R1Remove, R2Add, R2Remove, R3 };

inline const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::Birth: return "Birth";
    case EventKind::Death: return "Death";
    case EventKind::Saddle: return "Saddle";
    case EventKind::R1Add: return "R1Add";
    case EventKind::R1Remove: return "R1Remove";
    case EventKind::R2Add: return "R2Add";
    case EventKind::R2Remove: return "R2Remove";
    case EventKind::R3: return "R3";
  }
  return "?";
}

struct MovieEvent {
  EventKind kind{};
  int component = 0;                // Death target
  int comp_a = 0, gap_a = 0;        // Saddle site / insertion site
  int comp_b = 0, gap_b = 0;        // Saddle second site / second insertion
  bool flip = false;                // Saddle merge: reverse the second circle
  BigonVariant variant = BigonVariant::Parallel;  // R2Add pattern
  std::vector<std::string> chords;  // participating or created chord names
  std::string lifetime;             // R2Add: fresh double-line id
  std::array<ArcRef, 3> arcs{};     // R3 triangle
};

struct Movie {
  FreeLink initial;
  std::vector<MovieEvent> events;
  // birth labels of double lines not present at level 0, keyed by lifetime id
  std::map<std::string, ParityLabel> labels;
};

// A movie level: the link plus, per chord, its double line and the line's
// current label at this level. Level-0 chords start their own lines named
// after themselves.
struct Level {
  FreeLink link;
  std::vector<std::string> lifetimes;  // per chord id
  std::vector<ParityLabel> labels;     // per chord id

  ParityTable label_table() const {
    ParityTable t;
    for (int id = 0; id < link.chord_count(); ++id) t[link.chord_name(id)] = labels[id];
    return t;
  }
};

namespace detail {

struct ChordInfo {
  std::string lifetime;
  ParityLabel label;
};

inline std::map<std::string, ChordInfo> chord_info(const Level& level) {
  std::map<std::string, ChordInfo> m;
  for (int id = 0; id < level.link.chord_count(); ++id)
    m[level.link.chord_name(id)] = {level.lifetimes[id], level.labels[id]};
  return m;
}

inline Level level_with(const FreeLink& link, const std::map<std::string, ChordInfo>& info) {
  Level out;
  out.link = link;
  out.lifetimes.resize(link.chord_count());
  out.labels.resize(link.chord_count(), ParityLabel::Even);
  for (int id = 0; id < link.chord_count(); ++id) {
    auto it = info.find(link.chord_name(id));
    if (it == info.end())
      fail(ErrorKind::SiteInvalid, "no line info for chord \"" + link.chord_name(id) + "\"");
    out.lifetimes[id] = it->second.lifetime;
    out.labels[id] = it->second.label;
  }
  return out;
}

inline std::vector<std::string> rotate_left(std::vector<std::string> seq, int k) {
  if (seq.empty()) return seq;
  k = ((k % static_cast<int>(seq.size())) + static_cast<int>(seq.size())) %
      static_cast<int>(seq.size());
  std::rotate(seq.begin(), seq.begin() + k, seq.end());
  return seq;
}

}  // namespace detail

// Builds the level-0 state: lines named after the chords, labels from the
// Gaussian justified parity when the initial link is a knot, otherwise from
// the provided birth labels.
inline Level initial_level(const Movie& movie) {
  Level out;
  out.link = movie.initial;
  int n = out.link.chord_count();
  out.lifetimes.resize(n);
  out.labels.resize(n, ParityLabel::Even);
  for (int id = 0; id < n; ++id) out.lifetimes[id] = out.link.chord_name(id);
  if (out.link.one_component()) {
    ParityTable table = gaussian_justified(out.link);
    for (int id = 0; id < n; ++id) out.labels[id] = table.at(out.link.chord_name(id));
  } else {
    for (int id = 0; id < n; ++id) {
      auto it = movie.labels.find(out.link.chord_name(id));
      out.labels[id] = it == movie.labels.end() ? ParityLabel::Even : it->second;
    }
  }
  return out;
}

// Applies one event. Birth appends a trivial circle; a death removes one;
// a saddle with one target component splits it at two gaps, with two target
// components merges them (flip reverses the second circle). Reidemeister
// events delegate to the moves module and thread lifetimes by chord name;
// a third move with exactly two odd participants flips their types.
inline Level apply_event(const Level& level, const MovieEvent& ev,
                         const std::map<std::string, ParityLabel>& birth_labels) {
  auto info = detail::chord_info(level);
  const FreeLink& link = level.link;
  switch (ev.kind) {
    case EventKind::Birth: {
      auto comps = link.name_components();
      comps.emplace_back();
      return detail::level_with(FreeLink::from_components(comps), info);
    }
    case EventKind::Death: {
      if (ev.component < 0 || ev.component >= link.component_count())
        fail(ErrorKind::SiteInvalid, "death component index out of range");
      if (link.slots_in(ev.component) != 0)
        fail(ErrorKind::DeathOnNonTrivialCircle,
             "death on a circle with " + std::to_string(link.slots_in(ev.component)) + " slots");
      auto comps = link.name_components();
      comps.erase(comps.begin() + ev.component);
      return detail::level_with(FreeLink::from_components(comps), info);
    }
    case EventKind::Saddle: {
      if (ev.comp_a < 0 || ev.comp_a >= link.component_count() || ev.comp_b < 0 ||
          ev.comp_b >= link.component_count())
        fail(ErrorKind::SiteInvalid, "saddle component index out of range");
      auto comps = link.name_components();
      if (ev.comp_a == ev.comp_b) {
        auto& comp = comps[ev.comp_a];
        int len = static_cast<int>(comp.size());
        if (ev.gap_a < 0 || ev.gap_a > len || ev.gap_b < 0 || ev.gap_b > len)
          fail(ErrorKind::SiteInvalid, "saddle gap index out of range");
        int lo = std::min(ev.gap_a, ev.gap_b), hi = std::max(ev.gap_a, ev.gap_b);
        std::vector<std::string> part1(comp.begin() + lo, comp.begin() + hi);
        std::vector<std::string> part2(comp.begin() + hi, comp.end());
        part2.insert(part2.end(), comp.begin(), comp.begin() + lo);
        comps[ev.comp_a] = std::move(part1);
        comps.insert(comps.begin() + ev.comp_a + 1, std::move(part2));
      } else {
        const auto& a = comps[ev.comp_a];
        const auto& b = comps[ev.comp_b];
        if (ev.gap_a < 0 || ev.gap_a > static_cast<int>(a.size()) || ev.gap_b < 0 ||
            ev.gap_b > static_cast<int>(b.size()))
          fail(ErrorKind::SiteInvalid, "saddle gap index out of range");
        auto merged = detail::rotate_left(a, ev.gap_a);
        auto tail = detail::rotate_left(b, ev.gap_b);
        if (ev.flip) std::reverse(tail.begin(), tail.end());
        merged.insert(merged.end(), tail.begin(), tail.end());
        int keep = std::min(ev.comp_a, ev.comp_b), drop = std::max(ev.comp_a, ev.comp_b);
        comps[keep] = std::move(merged);
        comps.erase(comps.begin() + drop);
      }
      return detail::level_with(FreeLink::from_components(comps), info);
    }
    case EventKind::R1Add: {
      MoveDescriptor d;
      d.kind = MoveKind::R1Add;
      d.chords = ev.chords;
      d.comp_a = ev.comp_a;
      d.gap_a = ev.gap_a;
      FreeLink next = apply_move(link, d);
      const std::string& name = ev.chords.at(0);
      auto it = birth_labels.find(name);
      info[name] = {name, it == birth_labels.end() ? ParityLabel::Even : it->second};
      return detail::level_with(next, info);
    }
    case EventKind::R1Remove: {
      MoveDescriptor d;
      d.kind = MoveKind::R1Remove;
      d.chords = ev.chords;
      return detail::level_with(apply_move(link, d), info);
    }
    case EventKind::R2Add: {
      MoveDescriptor d;
      d.kind = MoveKind::R2Add;
      d.chords = ev.chords;
      d.comp_a = ev.comp_a;
      d.gap_a = ev.gap_a;
      d.comp_b = ev.comp_b;
      d.gap_b = ev.gap_b;
      d.variant = ev.variant;
      FreeLink next = apply_move(link, d);
      std::string line = ev.lifetime.empty() ? ev.chords.at(0) : ev.lifetime;
      auto it = birth_labels.find(line);
      ParityLabel label = it == birth_labels.end() ? ParityLabel::Even : it->second;
      for (const auto& name : ev.chords) info[name] = {line, label};
      return detail::level_with(next, info);
    }
    case EventKind::R2Remove: {
      MoveDescriptor d;
      d.kind = MoveKind::R2Remove;
      d.chords = ev.chords;
      return detail::level_with(apply_move(link, d), info);
    }
    case EventKind::R3: {
      MoveDescriptor d;
      d.kind = MoveKind::R3;
      d.arcs = ev.arcs;
      for (const auto& a : ev.arcs) {
        if (a.component < 0 || a.component >= link.component_count() || a.arc < 0 ||
            a.arc >= std::max(link.slots_in(a.component), 1))
          fail(ErrorKind::SiteInvalid, "triangle arc out of range");
        const auto& comp = link.component(a.component);
        int len = static_cast<int>(comp.size());
        for (int chord : {comp[a.arc], comp[(a.arc + 1) % len]}) {
          const std::string& name = link.chord_name(chord);
          if (std::find(d.chords.begin(), d.chords.end(), name) == d.chords.end())
            d.chords.push_back(name);
        }
      }
      FreeLink next = apply_move(link, d);
      int odd = 0;
      for (const auto& name : d.chords)
        if (is_odd(info.at(name).label)) ++odd;
      if (odd == 2) {
        for (const auto& name : d.chords) {
          auto& ci = info.at(name);
          if (ci.label == ParityLabel::OddB)
            ci.label = ParityLabel::OddBPrime;
          else if (ci.label == ParityLabel::OddBPrime)
            ci.label = ParityLabel::OddB;
        }
      }
      return detail::level_with(next, info);
    }
  }
  fail(ErrorKind::SiteInvalid, "unhandled event kind");
}

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
    if (g == 0) g = 1;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational{n / g, d / g};
  }
  bool integral() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Surface genus from the Morse event counts, with one boundary circle:
// chi = births + deaths - saddles and chi = 1 - 2g.
inline Rational movie_genus(const Movie& movie) {
  if (!movie.initial.one_component())
    fail(ErrorKind::InitialNotKnot, "the initial level must have exactly one component");
  Level cur = initial_level(movie);
  long long births = 0, deaths = 0, saddles = 0;
  for (const auto& ev : movie.events) {
    if (ev.kind == EventKind::Birth) ++births;
    if (ev.kind == EventKind::Death) ++deaths;
    if (ev.kind == EventKind::Saddle) ++saddles;
    cur = apply_event(cur, ev, movie.labels);
  }
  if (!cur.link.empty()) fail(ErrorKind::FinalLevelNonEmpty, "the movie does not end empty");
  long long twice = saddles + 1 - births - deaths;
  if (twice % 2 != 0)
    fail(ErrorKind::NonIntegralGenus, "genus " + std::to_string(twice) + "/2 is not integral");
  if (twice < 0) fail(ErrorKind::NegativeGenus, "genus " + std::to_string(twice / 2) + " < 0");
  return Rational::of(twice, 2);
}

struct ComponentWord {
  CayleyPoint point;
  long long L = 0;
};

namespace detail {

struct WordCheck {
  std::vector<ComponentWord> words;
  std::vector<int> bad_components;  // odd count of even or of odd letters
};

inline WordCheck component_words_checked(const Level& level) {
  WordCheck out;
  for (int c = 0; c < level.link.component_count(); ++c) {
    std::vector<Letter> word;
    for (int id : level.link.component(c)) word.push_back(label_letter(level.labels[id]));
    CayleyPoint p = eval_word(word);
    out.words.push_back({p, p.y < 0 ? -p.y : p.y});
    if (p.x != 0 || ((p.y % 2) + 2) % 2 != 0) out.bad_components.push_back(c);
  }
  return out;
}

}  // namespace detail

// Per-component walk of the lifetime letters. For a level of a valid movie
// every component has an even number of even endpoints and an even number of
// odd endpoints, so its point lies on the axis with an even second
// coordinate; any other outcome signals inconsistent labels.
inline std::vector<ComponentWord> component_words(const Level& level) {
  auto check = detail::component_words_checked(level);
  if (!check.bad_components.empty())
    fail(ErrorKind::NonZeroFirstCoordinate,
         "component " + std::to_string(check.bad_components.front()) +
             " violates the even-intersection constraints");
  return check.words;
}

struct Violation {
  enum class Kind {
    LevelZeroLabelMismatch,
    MissingLabel,
    R1Odd,
    R2Mismatch,
    R3ParityMismatch,
    R3OddCount,
    R3TypeNotFlipped,
    UntouchedChanged,
    MissingChord,
    NonZeroFirstCoordinate,
    FinalLevelNonEmpty,
    InitialNotKnot,
    NonIntegralGenus,
    NegativeGenus,
    SaddleLabelRule,
    MultisetChanged,
    EventFailed,
    StrictParityMismatch,
  };
  Kind kind{};
  int level = -1;  // level index, or the level before the offending event
  int event = -1;  // event index, when applicable
  std::string detail;
};

inline const char* violation_kind_name(Violation::Kind k) {
  using K = Violation::Kind;
  switch (k) {
    case K::LevelZeroLabelMismatch: return "LevelZeroLabelMismatch";
    case K::MissingLabel: return "MissingLabel";
    case K::R1Odd: return "R1Odd";
    case K::R2Mismatch: return "R2Mismatch";
    case K::R3ParityMismatch: return "R3ParityMismatch";
    case K::R3OddCount: return "R3OddCount";
    case K::R3TypeNotFlipped: return "R3TypeNotFlipped";
    case K::UntouchedChanged: return "UntouchedChanged";
    case K::MissingChord: return "MissingChord";
    case K::NonZeroFirstCoordinate: return "NonZeroFirstCoordinate";
    case K::FinalLevelNonEmpty: return "FinalLevelNonEmpty";
    case K::InitialNotKnot: return "InitialNotKnot";
    case K::NonIntegralGenus: return "NonIntegralGenus";
    case K::NegativeGenus: return "NegativeGenus";
    case K::SaddleLabelRule: return "SaddleLabelRule";
    case K::MultisetChanged: return "MultisetChanged";
    case K::EventFailed: return "EventFailed";
    case K::StrictParityMismatch: return "StrictParityMismatch";
  }
  return "?";
}

struct LevelReport {
  int components = 0;
  std::vector<ComponentWord> words;
  std::vector<long long> label_multiset;  // per-component L values, sorted
};

struct VerifierReport {
  bool ok = false;
  Rational genus;
  bool genus_defined = false;
  std::vector<Violation> violations;
  std::vector<LevelReport> levels;
  bool reeb_is_tree = false;
};

namespace detail {

inline Violation::Kind from_axiom_kind(AxiomViolation::Kind k) {
  using A = AxiomViolation::Kind;
  using V = Violation::Kind;
  switch (k) {
    case A::R1Odd: return V::R1Odd;
    case A::R2Mismatch: return V::R2Mismatch;
    case A::R3ParityMismatch: return V::R3ParityMismatch;
    case A::R3OddCount: return V::R3OddCount;
    case A::R3TypeNotFlipped: return V::R3TypeNotFlipped;
    case A::UntouchedChanged: return V::UntouchedChanged;
    case A::MissingChord: return V::MissingChord;
  }
  return V::MissingChord;
}

inline std::optional<MoveDescriptor> descriptor_for(const Level& level, const MovieEvent& ev) {
  MoveDescriptor d;
  switch (ev.kind) {
    case EventKind::R1Add: d.kind = MoveKind::R1Add; break;
    case EventKind::R1Remove: d.kind = MoveKind::R1Remove; break;
    case EventKind::R2Add: d.kind = MoveKind::R2Add; break;
    case EventKind::R2Remove: d.kind = MoveKind::R2Remove; break;
    case EventKind::R3: d.kind = MoveKind::R3; break;
    default: return std::nullopt;
  }
  d.chords = ev.chords;
  d.comp_a = ev.comp_a;
  d.gap_a = ev.gap_a;
  d.comp_b = ev.comp_b;
  d.gap_b = ev.gap_b;
  d.variant = ev.variant;
  d.arcs = ev.arcs;
  if (ev.kind == EventKind::R3) {
    d.chords.clear();
    for (const auto& a : ev.arcs) {
      if (a.component < 0 || a.component >= level.link.component_count()) return std::nullopt;
      const auto& comp = level.link.component(a.component);
      int len = static_cast<int>(comp.size());
      if (len == 0 || a.arc < 0 || a.arc >= len) return std::nullopt;
      for (int chord : {comp[a.arc], comp[(a.arc + 1) % len]}) {
        const std::string& name = level.link.chord_name(chord);
        if (std::find(d.chords.begin(), d.chords.end(), name) == d.chords.end())
          d.chords.push_back(name);
      }
    }
  }
  return d;
}

inline std::vector<long long> multiset_of(const WordCheck& wc) {
  std::vector<long long> m;
  for (const auto& w : wc.words) m.push_back(w.L);
  std::sort(m.begin(), m.end());
  return m;
}

inline bool same_but_for(const std::vector<long long>& before, const std::vector<long long>& after,
                         std::vector<long long> removed, std::vector<long long> added) {
  std::vector<long long> b = before, a = after;
  for (long long r : removed) {
    auto it = std::find(b.begin(), b.end(), r);
    if (it == b.end()) return false;
    b.erase(it);
  }
  for (long long x : added) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) return false;
    a.erase(it);
  }
  return b == a;
}

// Tracks the component-over-time graph: one node per (component, interval),
// edges attaching the three tracks at a saddle. A genus-0 movie of a knot
// yields a tree.
struct ReebBuilder {
  std::vector<int> track_of;
  int next_track = 0;
  std::vector<std::pair<int, int>> edges;

  void start(int components) {
    for (int i = 0; i < components; ++i) track_of.push_back(next_track++);
  }
  void on_event(const MovieEvent& ev) {
    switch (ev.kind) {
      case EventKind::Birth: track_of.push_back(next_track++); break;
      case EventKind::Death: track_of.erase(track_of.begin() + ev.component); break;
      case EventKind::Saddle:
        if (ev.comp_a == ev.comp_b) {
          int t = track_of[ev.comp_a];
          int t1 = next_track++, t2 = next_track++;
          edges.push_back({t, t1});
          edges.push_back({t, t2});
          track_of[ev.comp_a] = t1;
          track_of.insert(track_of.begin() + ev.comp_a + 1, t2);
        } else {
          int t = next_track++;
          edges.push_back({track_of[ev.comp_a], t});
          edges.push_back({track_of[ev.comp_b], t});
          int keep = std::min(ev.comp_a, ev.comp_b), drop = std::max(ev.comp_a, ev.comp_b);
          track_of[keep] = t;
          track_of.erase(track_of.begin() + drop);
        }
        break;
      default: break;
    }
  }
  bool is_tree() const {
    if (next_track == 0) return true;
    std::vector<int> parent(next_track);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    int roots = 0;
    for (int i = 0; i < next_track; ++i)
      if (find(i) == i) ++roots;
    return roots == 1 && edges.size() + 1 == static_cast<std::size_t>(next_track);
  }
};

}  // namespace detail

inline VerifierReport verify_movie(const Movie& movie, bool strict = false) {
  using VK = Violation::Kind;
  VerifierReport rep;
  auto flag = [&rep](VK kind, int level, int event, std::string detail) {
    rep.violations.push_back({kind, level, event, std::move(detail)});
  };

  Level cur = initial_level(movie);
  if (!movie.initial.one_component())
    flag(VK::InitialNotKnot, 0, -1,
         "initial level has " + std::to_string(movie.initial.component_count()) + " components");

  // level-0 labels are forced by the Gaussian justified parity of the knot
  if (movie.initial.one_component()) {
    for (int id = 0; id < cur.link.chord_count(); ++id) {
      auto it = movie.labels.find(cur.link.chord_name(id));
      if (it != movie.labels.end() && it->second != cur.labels[id])
        flag(VK::LevelZeroLabelMismatch, 0, -1,
             "chord \"" + cur.link.chord_name(id) + "\" declared " + label_name(it->second) +
                 " but its Gaussian label is " + label_name(cur.labels[id]));
    }
  }

  detail::ReebBuilder reeb;
  reeb.start(cur.link.component_count());

  long long births = 0, deaths = 0, saddles = 0;
  bool aborted = false;

  auto record_level = [&rep](const Level& level) {
    auto wc = detail::component_words_checked(level);
    LevelReport lr;
    lr.components = level.link.component_count();
    lr.words = wc.words;
    lr.label_multiset = detail::multiset_of(wc);
    rep.levels.push_back(lr);
    return wc;
  };

  auto check_strict = [&](const Level& level, int level_idx) {
    if (!strict || !level.link.one_component()) return;
    ParityTable expect = gaussian_justified(level.link);
    for (int id = 0; id < level.link.chord_count(); ++id) {
      const std::string& name = level.link.chord_name(id);
      if (level.labels[id] != expect.at(name))
        flag(VK::StrictParityMismatch, level_idx, -1,
             "chord \"" + name + "\" carries " + label_name(level.labels[id]) +
                 " but the level's Gaussian label is " + label_name(expect.at(name)));
    }
  };

  auto wc = record_level(cur);
  for (int c : wc.bad_components)
    flag(VK::NonZeroFirstCoordinate, 0, -1, "component " + std::to_string(c));
  check_strict(cur, 0);

  for (std::size_t i = 0; i < movie.events.size() && !aborted; ++i) {
    const MovieEvent& ev = movie.events[i];
    int level_idx = static_cast<int>(i);

    if (ev.kind == EventKind::R2Add) {
      std::string line = ev.lifetime.empty() ? (ev.chords.empty() ? "" : ev.chords[0]) : ev.lifetime;
      if (!movie.labels.count(line))
        flag(VK::MissingLabel, level_idx, static_cast<int>(i),
             "no birth label for line \"" + line + "\"");
    }

    Level next;
    try {
      next = apply_event(cur, ev, movie.labels);
    } catch (const Error& e) {
      flag(VK::EventFailed, level_idx, static_cast<int>(i),
           std::string(event_kind_name(ev.kind)) + ": " + e.what());
      aborted = true;
      break;
    }

    if (auto d = detail::descriptor_for(cur, ev)) {
      for (const auto& v :
           check_parity_axioms(cur.link, next.link, *d, cur.label_table(), next.label_table()))
        flag(detail::from_axiom_kind(v.kind), level_idx, static_cast<int>(i), v.detail);
    }

    auto wc_next = record_level(next);
    for (int c : wc_next.bad_components)
      flag(VK::NonZeroFirstCoordinate, level_idx + 1, static_cast<int>(i),
           "component " + std::to_string(c));

    // label multiset transitions
    const auto& before = rep.levels[rep.levels.size() - 2].label_multiset;
    const auto& after = rep.levels.back().label_multiset;
    switch (ev.kind) {
      case EventKind::Birth:
        if (!detail::same_but_for(before, after, {}, {0}))
          flag(VK::SaddleLabelRule, level_idx, static_cast<int>(i), "birth must add one 0");
        break;
      case EventKind::Death:
        ++deaths;
        if (!detail::same_but_for(before, after, {0}, {}))
          flag(VK::SaddleLabelRule, level_idx, static_cast<int>(i), "death must remove one 0");
        break;
      case EventKind::Saddle: {
        ++saddles;
        bool okx = false;
        if (ev.comp_a == ev.comp_b) {
          long long k = wc.words[ev.comp_a].L;
          long long m = wc_next.words[ev.comp_a].L;
          long long n = wc_next.words[ev.comp_a + 1].L;
          okx = (k == std::abs(m + n) || k == std::abs(m - n)) &&
                detail::same_but_for(before, after, {k}, {m, n});
          if (!okx)
            flag(VK::SaddleLabelRule, level_idx, static_cast<int>(i),
                 "fission " + std::to_string(k) + " -> {" + std::to_string(m) + "," +
                     std::to_string(n) + "}");
        } else {
          long long m = wc.words[ev.comp_a].L;
          long long n = wc.words[ev.comp_b].L;
          long long k = wc_next.words[std::min(ev.comp_a, ev.comp_b)].L;
          okx = (k == std::abs(m + n) || k == std::abs(m - n)) &&
                detail::same_but_for(before, after, {m, n}, {k});
          if (!okx)
            flag(VK::SaddleLabelRule, level_idx, static_cast<int>(i),
                 "fusion {" + std::to_string(m) + "," + std::to_string(n) + "} -> " +
                     std::to_string(k));
        }
        break;
      }
      default:
        if (before != after)
          flag(VK::MultisetChanged, level_idx, static_cast<int>(i),
               "a Reidemeister event changed the label multiset");
        break;
    }
    if (ev.kind == EventKind::Birth) ++births;

    reeb.on_event(ev);
    check_strict(next, level_idx + 1);
    cur = std::move(next);
    wc = wc_next;
  }

  if (!aborted && !cur.link.empty())
    flag(VK::FinalLevelNonEmpty, static_cast<int>(movie.events.size()), -1,
         "final level is " + cur.link.gauss_code());

  long long twice = saddles + 1 - births - deaths;
  rep.genus = Rational::of(twice, 2);
  rep.genus_defined = !aborted;
  if (!aborted) {
    if (twice % 2 != 0)
      flag(VK::NonIntegralGenus, -1, -1, "genus " + std::to_string(twice) + "/2");
    else if (twice < 0)
      flag(VK::NegativeGenus, -1, -1, "genus " + std::to_string(twice / 2));
  }

  rep.reeb_is_tree = reeb.is_tree();
  rep.ok = rep.violations.empty();
  return rep;
}

enum class TheoremVerdict { Consistent, CounterexampleFlag };

// On a verified genus-0 movie of a knot, the knot's invariant must vanish.
// A counterexample flag here means an implementation bug, not a discovery.
inline TheoremVerdict slice_obstruction_consistency(const Movie& movie) {
  VerifierReport rep = verify_movie(movie, false);
  if (!rep.ok || !rep.genus_defined || !(rep.genus == Rational::of(0, 1)))
    fail(ErrorKind::PreconditionNotMet, "movie must verify with genus 0");
  return invariant_l(movie.initial).L == 0 ? TheoremVerdict::Consistent
                                           : TheoremVerdict::CounterexampleFlag;
}

// Deletes every odd double line from a verified movie: the initial level
// keeps its even chords, Reidemeister events on odd lines disappear (a
// triangle with two odd lines becomes a no-op), Morse events survive with
// their gaps renumbered to the surviving slots. Verification and genus are
// preserved.
inline Movie f_project_movie(const Movie& movie) {
  VerifierReport rep = verify_movie(movie, false);
  if (!rep.ok) fail(ErrorKind::PreconditionNotMet, "movie must verify before projection");

  std::vector<Level> levels;
  levels.push_back(initial_level(movie));
  for (const auto& ev : movie.events)
    levels.push_back(apply_event(levels.back(), ev, movie.labels));

  auto chord_even = [](const Level& level, const std::string& name) {
    auto id = level.link.find_chord(name);
    return id && !is_odd(level.labels[*id]);
  };
  auto surviving_gap = [&](const Level& level, int comp, int gap) {
    const auto& seq = level.link.component(comp);
    int g = 0;
    for (int s = 0; s < gap; ++s)
      if (!is_odd(level.labels[seq[s]])) ++g;
    return g;
  };
  auto surviving_arc = [&](const Level& level, ArcRef a) {
    const auto& seq = level.link.component(a.component);
    int idx = -1;
    for (int s = 0; s <= a.arc; ++s)
      if (!is_odd(level.labels[seq[s]])) ++idx;
    return ArcRef{a.component, idx};
  };

  Movie out;
  {
    auto comps = movie.initial.name_components();
    const Level& l0 = levels[0];
    for (auto& comp : comps)
      std::erase_if(comp, [&](const std::string& n) { return !chord_even(l0, n); });
    out.initial = FreeLink::from_components(comps);
  }

  for (std::size_t i = 0; i < movie.events.size(); ++i) {
    const MovieEvent& ev = movie.events[i];
    const Level& level = levels[i];
    MovieEvent pe = ev;
    switch (ev.kind) {
      case EventKind::Birth:
      case EventKind::Death:
        out.events.push_back(pe);
        break;
      case EventKind::Saddle:
        pe.gap_a = surviving_gap(level, ev.comp_a, ev.gap_a);
        pe.gap_b = surviving_gap(level, ev.comp_b, ev.gap_b);
        out.events.push_back(pe);
        break;
      case EventKind::R1Add: {
        auto it = movie.labels.find(ev.chords.at(0));
        if (it != movie.labels.end() && is_odd(it->second)) break;
        pe.gap_a = surviving_gap(level, ev.comp_a, ev.gap_a);
        out.events.push_back(pe);
        out.labels[ev.chords.at(0)] = ParityLabel::Even;
        break;
      }
      case EventKind::R1Remove:
        if (!chord_even(level, ev.chords.at(0))) break;
        out.events.push_back(pe);
        break;
      case EventKind::R2Add: {
        std::string line = ev.lifetime.empty() ? ev.chords.at(0) : ev.lifetime;
        auto it = movie.labels.find(line);
        if (it != movie.labels.end() && is_odd(it->second)) break;
        pe.gap_a = surviving_gap(level, ev.comp_a, ev.gap_a);
        pe.gap_b = surviving_gap(level, ev.comp_b, ev.gap_b);
        out.events.push_back(pe);
        out.labels[line] = ParityLabel::Even;
        break;
      }
      case EventKind::R2Remove:
        if (!chord_even(level, ev.chords.at(0))) break;
        out.events.push_back(pe);
        break;
      case EventKind::R3: {
        int odd = 0;
        std::set<std::string> names;
        for (const auto& a : ev.arcs) {
          const auto& comp = level.link.component(a.component);
          int len = static_cast<int>(comp.size());
          names.insert(level.link.chord_name(comp[a.arc]));
          names.insert(level.link.chord_name(comp[(a.arc + 1) % len]));
        }
        for (const auto& n : names)
          if (!chord_even(level, n)) ++odd;
        if (odd != 0) break;  // two odd lines: the even sheet is unaffected
        for (int k = 0; k < 3; ++k) pe.arcs[k] = surviving_arc(level, ev.arcs[k]);
        out.events.push_back(pe);
        break;
      }
    }
  }
  return out;
}

struct SliceSearchResult {
  bool found = false;
  Movie movie;
};

// Bounded breadth-first search for a genus-0 movie ending at the empty link.
// Explores label-consistent decreasing moves, triangles, deaths and fissions;
// a failure to find one within the bounds certifies nothing.
inline SliceSearchResult search_slice_movie(const FreeLink& knot, int max_events, int max_chords) {
  if (!knot.one_component())
    fail(ErrorKind::InitialNotKnot, "slice search starts from a one-component link");

  struct Node {
    Level level;
    int parent = -1;
    MovieEvent via;
    int depth = 0;
  };

  Movie seed;
  seed.initial = knot;
  std::vector<Node> nodes;
  nodes.push_back({initial_level(seed), -1, {}, 0});

  auto key_of = [](const Level& level) {
    std::vector<std::string> annot(level.link.chord_count());
    for (int id = 0; id < level.link.chord_count(); ++id)
      annot[id] = label_name(level.labels[id]);
    return canonical_key(level.link, annot);
  };

  std::set<std::string> seen{key_of(nodes[0].level)};
  std::deque<int> queue{0};

  auto emit = [&](int goal) {
    SliceSearchResult res;
    res.found = true;
    res.movie.initial = knot;
    std::vector<MovieEvent> events;
    for (int at = goal; nodes[at].parent >= 0; at = nodes[at].parent)
      events.push_back(nodes[at].via);
    std::reverse(events.begin(), events.end());
    res.movie.events = std::move(events);
    return res;
  };

  if (nodes[0].level.link.empty()) return emit(0);

  // one count per endpoint slot, so a chord straddling the cut adds to both
  // halves once
  auto letter_counts_even = [](const Level& level, const std::vector<std::string>& part) {
    int evens = 0, odds = 0;
    for (const auto& name : part) {
      int id = *level.link.find_chord(name);
      (is_odd(level.labels[id]) ? odds : evens) += 1;
    }
    return evens % 2 == 0 && odds % 2 == 0;
  };

  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    if (nodes[at].depth >= max_events) continue;
    const Level& cur = nodes[at].level;
    std::vector<MovieEvent> candidates;

    for (const auto& d : find_r1_sites(cur.link)) {
      int id = *cur.link.find_chord(d.chords[0]);
      if (is_odd(cur.labels[id])) continue;
      MovieEvent ev;
      ev.kind = EventKind::R1Remove;
      ev.chords = d.chords;
      candidates.push_back(ev);
    }
    for (const auto& d : find_r2_sites(cur.link)) {
      int p = *cur.link.find_chord(d.chords[0]);
      int q = *cur.link.find_chord(d.chords[1]);
      if (cur.labels[p] != cur.labels[q]) continue;
      MovieEvent ev;
      ev.kind = EventKind::R2Remove;
      ev.chords = d.chords;
      candidates.push_back(ev);
    }
    for (const auto& d : find_r3_sites(cur.link)) {
      int odd = 0;
      for (const auto& n : d.chords)
        if (is_odd(cur.labels[*cur.link.find_chord(n)])) ++odd;
      if (odd != 0 && odd != 2) continue;
      MovieEvent ev;
      ev.kind = EventKind::R3;
      ev.arcs = d.arcs;
      candidates.push_back(ev);
    }
    for (int c = 0; c < cur.link.component_count(); ++c) {
      if (cur.link.slots_in(c) != 0) continue;
      MovieEvent ev;
      ev.kind = EventKind::Death;
      ev.component = c;
      candidates.push_back(ev);
    }
    if (cur.link.chord_count() <= max_chords) {
      for (int c = 0; c < cur.link.component_count(); ++c) {
        const auto& seq = cur.link.component(c);
        int len = static_cast<int>(seq.size());
        for (int g1 = 0; g1 <= len; ++g1) {
          for (int g2 = g1; g2 <= len; ++g2) {
            std::vector<std::string> part;  // one entry per slot in [g1, g2)
            for (int s = g1; s < g2; ++s) part.push_back(cur.link.chord_name(seq[s]));
            if (!letter_counts_even(cur, part)) continue;
            MovieEvent ev;
            ev.kind = EventKind::Saddle;
            ev.comp_a = c;
            ev.gap_a = g1;
            ev.comp_b = c;
            ev.gap_b = g2;
            candidates.push_back(ev);
          }
        }
      }
    }

    for (const auto& ev : candidates) {
      Level next;
      try {
        next = apply_event(cur, ev, {});
      } catch (const Error&) {
        continue;
      }
      auto wc = detail::component_words_checked(next);
      if (!wc.bad_components.empty()) continue;
      std::string key = key_of(next);
      if (!seen.insert(key).second) continue;
      nodes.push_back({next, at, ev, nodes[at].depth + 1});
      if (next.link.empty()) return emit(static_cast<int>(nodes.size()) - 1);
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return {};
}

}  // namespace freeknots
