#pragma once

// Free links as multi-component chord diagrams. A component is a cyclic
// sequence of endpoint slots, each slot holding a chord id; every chord id
// occupies exactly two slots across all components. A component with zero
// slots is a trivial circle, written "()" in the text format.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freeknots {

enum class ErrorKind {
  EmptyInput,
  TokenCount,
  BadToken,
  MultiComponent,
  SameChord,
  UnknownChord,
  NotACycle,
  BadBasepoint,
  UnknownLetter,
  NonZeroFirstCoordinate,
  SiteInvalid,
  DeathOnNonTrivialCircle,
  FinalLevelNonEmpty,
  InitialNotKnot,
  NonIntegralGenus,
  NegativeGenus,
  PreconditionNotMet,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

struct SlotRef {
  int component = 0;
  int slot = 0;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

class FreeLink {
 public:
  FreeLink() = default;

  // Builds a link from per-component name sequences. Fails unless every name
  // occurs exactly twice.
  static FreeLink from_components(const std::vector<std::vector<std::string>>& comps) {
    FreeLink link;
    std::map<std::string, int> ids;
    for (const auto& comp : comps) {
      std::vector<int> seq;
      seq.reserve(comp.size());
      for (const auto& name : comp) {
        auto it = ids.find(name);
        int id;
        if (it == ids.end()) {
          id = static_cast<int>(link.names_.size());
          ids.emplace(name, id);
          link.names_.push_back(name);
        } else {
          id = it->second;
        }
        seq.push_back(id);
      }
      link.components_.push_back(std::move(seq));
    }
    std::vector<int> count(link.names_.size(), 0);
    for (const auto& comp : link.components_)
      for (int id : comp) ++count[id];
    for (std::size_t i = 0; i < count.size(); ++i)
      if (count[i] != 2)
        fail(ErrorKind::TokenCount, "chord \"" + link.names_[i] + "\" occurs " +
                                        std::to_string(count[i]) + " times, expected 2");
    return link;
  }

  // Text format: whitespace-separated tokens, ";" between components, "()"
  // for a trivial circle.
  static FreeLink parse(std::string_view text) {
    std::vector<std::vector<std::string>> groups;
    groups.emplace_back();
    std::istringstream in{std::string(text)};
    std::string tok;
    bool any_token = false;
    while (in >> tok) {
      any_token = true;
      if (tok == ";") {
        groups.emplace_back();
      } else {
        groups.back().push_back(tok);
      }
    }
    if (!any_token) fail(ErrorKind::EmptyInput, "no components in input");
    std::vector<std::vector<std::string>> comps;
    for (const auto& g : groups) {
      if (g.empty()) fail(ErrorKind::BadToken, "empty component group");
      if (g.size() == 1 && g[0] == "()") {
        comps.emplace_back();
        continue;
      }
      for (const auto& t : g)
        if (t == "()")
          fail(ErrorKind::BadToken, "\"()\" must stand alone as a component");
      comps.push_back(g);
    }
    return from_components(comps);
  }

  int component_count() const { return static_cast<int>(components_.size()); }
  int chord_count() const { return static_cast<int>(names_.size()); }
  bool one_component() const { return components_.size() == 1; }
  bool empty() const { return components_.empty(); }

  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<int>& component(int c) const { return components_.at(c); }
  int slots_in(int c) const { return static_cast<int>(components_.at(c).size()); }

  const std::vector<std::string>& chord_names() const { return names_; }
  const std::string& chord_name(int id) const { return names_.at(id); }

  std::optional<int> find_chord(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  int require_chord(std::string_view name) const {
    if (auto id = find_chord(name)) return *id;
    fail(ErrorKind::UnknownChord, "unknown chord \"" + std::string(name) + "\"");
  }

  std::pair<SlotRef, SlotRef> chord_slots(int id) const {
    std::array<SlotRef, 2> found{};
    int n = 0;
    for (int c = 0; c < component_count(); ++c) {
      const auto& comp = components_[c];
      for (int s = 0; s < static_cast<int>(comp.size()); ++s) {
        if (comp[s] == id) {
          if (n < 2) found[n] = SlotRef{c, s};
          ++n;
        }
      }
    }
    if (n != 2) fail(ErrorKind::UnknownChord, "chord id out of range");
    return {found[0], found[1]};
  }

  // Per-component name sequences, convenient for rebuilding edited links.
  std::vector<std::vector<std::string>> name_components() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(components_.size());
    for (const auto& comp : components_) {
      std::vector<std::string> seq;
      seq.reserve(comp.size());
      for (int id : comp) seq.push_back(names_[id]);
      out.push_back(std::move(seq));
    }
    return out;
  }

  std::string gauss_code() const {
    std::string out;
    for (int c = 0; c < component_count(); ++c) {
      if (c > 0) out += " ; ";
      if (components_[c].empty()) {
        out += "()";
        continue;
      }
      for (int s = 0; s < slots_in(c); ++s) {
        if (s > 0) out += ' ';
        out += names_[components_[c][s]];
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> components_;
  std::vector<std::string> names_;
};

// 1 iff the endpoints of b lie in different arcs of the circle cut at a's
// endpoints. Symmetric in a and b.
inline int linking_mod2(const FreeLink& link, int a, int b) {
  if (!link.one_component())
    fail(ErrorKind::MultiComponent, "linking is defined on one-component links");
  if (a == b) fail(ErrorKind::SameChord, "linking needs two distinct chords");
  const auto& comp = link.component(0);
  int a_first = -1, a_second = -1;
  for (int s = 0; s < static_cast<int>(comp.size()); ++s) {
    if (comp[s] == a) (a_first < 0 ? a_first : a_second) = s;
  }
  if (a_first < 0 || a_second < 0) fail(ErrorKind::UnknownChord, "chord id out of range");
  int between = 0;
  for (int s = a_first + 1; s < a_second; ++s)
    if (comp[s] == b) ++between;
  return between & 1;
}

inline int linking_mod2(const FreeLink& link, std::string_view a, std::string_view b) {
  return linking_mod2(link, link.require_chord(a), link.require_chord(b));
}

namespace detail {

// Serializes one candidate presentation: components in `order`, each read
// from `rot[i]` in direction `dir[i]`, chords relabeled 1..n by first
// occurrence. When `annot` is nonempty its entry for each chord is appended
// after the code so the minimization keys on both.
inline std::string serialize_candidate(const FreeLink& link, const std::vector<int>& order,
                                       const std::vector<int>& rot, const std::vector<int>& dir,
                                       const std::vector<std::string>* annot) {
  std::vector<int> relabel(link.chord_count(), -1);
  int next = 1;
  std::string out;
  std::string tail;
  std::vector<int> visit_order;
  bool first_comp = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    const auto& comp = link.component(c);
    if (!first_comp) out += " ; ";
    first_comp = false;
    int len = static_cast<int>(comp.size());
    if (len == 0) {
      out += "()";
      continue;
    }
    for (int i = 0; i < len; ++i) {
      int pos = dir[k] == 0 ? (rot[k] + i) % len : (rot[k] - i % len + 2 * len) % len;
      int id = comp[pos];
      if (relabel[id] < 0) {
        relabel[id] = next++;
        visit_order.push_back(id);
      }
      if (i > 0) out += ' ';
      out += std::to_string(relabel[id]);
    }
  }
  if (annot && !annot->empty()) {
    tail += '|';
    for (int id : visit_order) {
      tail += (*annot)[id];
      tail += ',';
    }
  }
  return out + tail;
}

inline std::string minimal_code(const FreeLink& link, const std::vector<std::string>* annot) {
  int nc = link.component_count();
  if (nc == 0) return annot && !annot->empty() ? "|" : "";
  std::vector<int> order(nc);
  for (int i = 0; i < nc; ++i) order[i] = i;
  std::sort(order.begin(), order.end());
  std::string best;
  bool have = false;
  do {
    // odometer over (rotation, direction) choices per component
    std::vector<int> rot(nc, 0), dir(nc, 0);
    while (true) {
      std::string cand = serialize_candidate(link, order, rot, dir, annot);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
      int k = 0;
      for (; k < nc; ++k) {
        int len = std::max(1, link.slots_in(order[k]));
        if (++rot[k] < len) break;
        rot[k] = 0;
        if (link.slots_in(order[k]) > 0 && ++dir[k] < 2) break;
        dir[k] = 0;
      }
      if (k == nc) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace detail

// Minimal code over rotations, reflections, component permutations and
// first-occurrence relabeling. Equal strings iff the links are isomorphic
// framed 4-graphs.
inline std::string canonical_form(const FreeLink& link) {
  return detail::minimal_code(link, nullptr);
}

// Canonical key for a link together with a per-chord annotation (one string
// per chord id). Two annotated links get the same key iff some isomorphism
// matches both the diagram and the annotations.
inline std::string canonical_key(const FreeLink& link, const std::vector<std::string>& annot) {
  return detail::minimal_code(link, &annot);
}

// Arcs of the underlying framed 4-graph, numbered component-major: the
// component with k >= 1 slots contributes k arcs, arc i running from slot i
// to slot i+1 mod k. Trivial circles contribute no arcs.
inline int arc_count(const FreeLink& link) {
  int n = 0;
  for (int c = 0; c < link.component_count(); ++c) n += link.slots_in(c);
  return n;
}

struct ArcEnds {
  SlotRef from;  // slot before the arc
  SlotRef to;    // slot after the arc
};

inline ArcEnds arc_ends(const FreeLink& link, int arc) {
  for (int c = 0; c < link.component_count(); ++c) {
    int len = link.slots_in(c);
    if (arc < len) return ArcEnds{SlotRef{c, arc}, SlotRef{c, (arc + 1) % len}};
    arc -= len;
  }
  fail(ErrorKind::BadInput, "arc index out of range");
}

struct EdgeCycle {
  std::vector<int> arcs;   // global arc indices
  std::vector<int> slots;  // endpoint slots strictly inside (one-component links)
};

// Splits the core circle at v's two endpoints and closes each arc through v.
// The two cycles partition the slots other than v's.
inline std::pair<EdgeCycle, EdgeCycle> smooth_halves(const FreeLink& link, int v) {
  if (!link.one_component())
    fail(ErrorKind::MultiComponent, "smoothing halves needs a one-component link");
  auto [p, q] = link.chord_slots(v);
  int i = p.slot, j = q.slot;
  int len = link.slots_in(0);
  EdgeCycle first, second;
  for (int s = i; s != j; s = (s + 1) % len) first.arcs.push_back(s);
  for (int s = (i + 1) % len; s != j; s = (s + 1) % len) first.slots.push_back(s);
  for (int s = j; s != i; s = (s + 1) % len) second.arcs.push_back(s);
  for (int s = (j + 1) % len; s != i; s = (s + 1) % len) second.slots.push_back(s);
  return {first, second};
}

inline std::pair<EdgeCycle, EdgeCycle> smooth_halves(const FreeLink& link, std::string_view v) {
  return smooth_halves(link, link.require_chord(v));
}

}  // namespace freeknots
