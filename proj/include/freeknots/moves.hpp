#pragma once

// Reidemeister moves on free links in the Gauss-diagram formulation:
//   first move: add or remove a loop (a chord with cyclically adjacent ends),
//   second move: add or remove a bigon (two chords adjacent in two places,
//     in the nested "p q .. q p" or crossed "p q .. p q" pattern),
//   third move: swap the slots within each of the three adjacent pairs of a
//     small triangle.
// Chord names are preserved through moves, so the before/after correspondence
// on untouched chords is name identity.

#include <cstddef>
#include <deque>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "freeknots/diagram.hpp"

namespace freeknots {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

enum class BigonVariant { Parallel, Crossed };

struct ArcRef {
  int component = 0;
  int arc = 0;
  friend bool operator==(const ArcRef&, const ArcRef&) = default;
  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

struct MoveDescriptor {
  MoveKind kind{};
  std::vector<std::string> chords;  // participating chord names
  int comp_a = 0, gap_a = 0;        // insertion site (R1Add, R2Add)
  int comp_b = 0, gap_b = 0;        // second insertion site (R2Add)
  BigonVariant variant = BigonVariant::Parallel;
  std::array<ArcRef, 3> arcs{};     // triangle arcs (R3)
};

namespace detail {

struct FlankedArc {
  ArcRef ref;
  int left_chord = 0;   // chord at the slot before the arc
  int right_chord = 0;  // chord at the slot after it
  SlotRef left, right;
};

inline std::vector<FlankedArc> flanked_arcs(const FreeLink& link) {
  std::vector<FlankedArc> out;
  for (int c = 0; c < link.component_count(); ++c) {
    const auto& comp = link.component(c);
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      FlankedArc fa;
      fa.ref = ArcRef{c, i};
      fa.left = SlotRef{c, i};
      fa.right = SlotRef{c, (i + 1) % len};
      fa.left_chord = comp[i];
      fa.right_chord = comp[(i + 1) % len];
      out.push_back(fa);
    }
  }
  return out;
}

inline std::string fresh_name(const FreeLink& link, int& counter) {
  while (true) {
    std::string name = "c" + std::to_string(++counter);
    if (!link.find_chord(name)) return name;
  }
}

}  // namespace detail

// One descriptor per chord whose two endpoints are cyclically adjacent on one
// component.
inline std::vector<MoveDescriptor> find_r1_sites(const FreeLink& link) {
  std::vector<MoveDescriptor> out;
  for (int id = 0; id < link.chord_count(); ++id) {
    auto [p, q] = link.chord_slots(id);
    if (p.component != q.component) continue;
    int len = link.slots_in(p.component);
    int i = std::min(p.slot, q.slot), j = std::max(p.slot, q.slot);
    bool adjacent = (j == i + 1) || (i == 0 && j == len - 1);
    if (!adjacent) continue;
    MoveDescriptor d;
    d.kind = MoveKind::R1Remove;
    d.chords = {link.chord_name(id)};
    out.push_back(std::move(d));
  }
  return out;
}

// One descriptor per unordered chord pair {p,q} possessing two arcs, each
// flanked by one endpoint of p and one of q, whose four flanking slots are
// exactly the four endpoints. A loop arc is flanked by one chord twice and
// never qualifies.
inline std::vector<MoveDescriptor> find_r2_sites(const FreeLink& link) {
  auto arcs = detail::flanked_arcs(link);
  std::set<std::pair<int, int>> seen;
  std::vector<MoveDescriptor> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.left_chord == a.right_chord) continue;
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const auto& b = arcs[j];
      if (b.left_chord == b.right_chord) continue;
      int p = std::min(a.left_chord, a.right_chord);
      int q = std::max(a.left_chord, a.right_chord);
      if (std::min(b.left_chord, b.right_chord) != p || std::max(b.left_chord, b.right_chord) != q)
        continue;
      std::set<SlotRef> slots{a.left, a.right, b.left, b.right};
      if (slots.size() != 4) continue;
      if (!seen.emplace(p, q).second) continue;
      MoveDescriptor d;
      d.kind = MoveKind::R2Remove;
      d.chords = {link.chord_name(p), link.chord_name(q)};
      d.variant = (a.left_chord == b.right_chord && a.right_chord == b.left_chord)
                      ? BigonVariant::Parallel
                      : BigonVariant::Crossed;
      out.push_back(std::move(d));
    }
  }
  return out;
}

// Triangles: three arcs with six distinct flanking slots whose flank pairs
// read {p,q}, {q,r}, {r,p} for distinct chords p, q, r.
inline std::vector<MoveDescriptor> find_r3_sites(const FreeLink& link) {
  auto arcs = detail::flanked_arcs(link);
  std::vector<MoveDescriptor> out;
  auto pair_of = [](const detail::FlankedArc& f) {
    return std::pair<int, int>{std::min(f.left_chord, f.right_chord),
                               std::max(f.left_chord, f.right_chord)};
  };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].left_chord == arcs[i].right_chord) continue;
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[j].left_chord == arcs[j].right_chord) continue;
      for (std::size_t k = j + 1; k < arcs.size(); ++k) {
        if (arcs[k].left_chord == arcs[k].right_chord) continue;
        std::set<SlotRef> slots{arcs[i].left, arcs[i].right, arcs[j].left,
                                arcs[j].right, arcs[k].left, arcs[k].right};
        if (slots.size() != 6) continue;
        auto pi = pair_of(arcs[i]), pj = pair_of(arcs[j]), pk = pair_of(arcs[k]);
        if (pi == pj || pj == pk || pi == pk) continue;
        std::set<int> chords{pi.first, pi.second, pj.first, pj.second, pk.first, pk.second};
        if (chords.size() != 3) continue;
        MoveDescriptor d;
        d.kind = MoveKind::R3;
        for (int id : chords) d.chords.push_back(link.chord_name(id));
        d.arcs = {arcs[i].ref, arcs[j].ref, arcs[k].ref};
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

namespace detail {

inline FreeLink remove_chords(const FreeLink& link, const std::vector<std::string>& names) {
  auto comps = link.name_components();
  for (auto& comp : comps) {
    std::erase_if(comp, [&](const std::string& n) {
      return std::find(names.begin(), names.end(), n) != names.end();
    });
  }
  return FreeLink::from_components(comps);
}

inline bool triangle_at(const FreeLink& link, const std::array<ArcRef, 3>& arcs) {
  auto sites = find_r3_sites(link);
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& d : sites) {
    auto s = d.arcs;
    std::sort(s.begin(), s.end());
    if (s == sorted) return true;
  }
  return false;
}

}  // namespace detail

inline FreeLink apply_move(const FreeLink& link, const MoveDescriptor& move) {
  switch (move.kind) {
    case MoveKind::R1Remove: {
      if (move.chords.size() != 1) fail(ErrorKind::SiteInvalid, "first move removes one chord");
      for (const auto& d : find_r1_sites(link))
        if (d.chords == move.chords) return detail::remove_chords(link, move.chords);
      fail(ErrorKind::SiteInvalid, "chord \"" + move.chords[0] + "\" is not a removable loop");
    }
    case MoveKind::R2Remove: {
      if (move.chords.size() != 2) fail(ErrorKind::SiteInvalid, "second move removes a chord pair");
      std::vector<std::string> want = move.chords;
      std::sort(want.begin(), want.end());
      for (const auto& d : find_r2_sites(link)) {
        std::vector<std::string> have = d.chords;
        std::sort(have.begin(), have.end());
        if (have == want) return detail::remove_chords(link, move.chords);
      }
      fail(ErrorKind::SiteInvalid,
           "chords {" + move.chords[0] + "," + move.chords[1] + "} do not bound a bigon");
    }
    case MoveKind::R1Add: {
      if (move.chords.size() != 1) fail(ErrorKind::SiteInvalid, "first move adds one chord");
      if (link.find_chord(move.chords[0]))
        fail(ErrorKind::SiteInvalid, "chord name \"" + move.chords[0] + "\" already in use");
      if (move.comp_a < 0 || move.comp_a >= link.component_count())
        fail(ErrorKind::SiteInvalid, "component index out of range");
      auto comps = link.name_components();
      auto& comp = comps[move.comp_a];
      if (move.gap_a < 0 || move.gap_a > static_cast<int>(comp.size()))
        fail(ErrorKind::SiteInvalid, "gap index out of range");
      comp.insert(comp.begin() + move.gap_a, {move.chords[0], move.chords[0]});
      return FreeLink::from_components(comps);
    }
    case MoveKind::R2Add: {
      if (move.chords.size() != 2 || move.chords[0] == move.chords[1])
        fail(ErrorKind::SiteInvalid, "second move adds two distinct chords");
      for (const auto& n : move.chords)
        if (link.find_chord(n)) fail(ErrorKind::SiteInvalid, "chord name \"" + n + "\" already in use");
      if (move.comp_a < 0 || move.comp_a >= link.component_count() || move.comp_b < 0 ||
          move.comp_b >= link.component_count())
        fail(ErrorKind::SiteInvalid, "component index out of range");
      auto comps = link.name_components();
      const auto& p = move.chords[0];
      const auto& q = move.chords[1];
      std::vector<std::string> pair_a{p, q};
      std::vector<std::string> pair_b =
          move.variant == BigonVariant::Parallel ? std::vector<std::string>{q, p}
                                                 : std::vector<std::string>{p, q};
      auto check_gap = [&](int comp_idx, int gap) {
        if (gap < 0 || gap > static_cast<int>(comps[comp_idx].size()))
          fail(ErrorKind::SiteInvalid, "gap index out of range");
      };
      check_gap(move.comp_a, move.gap_a);
      check_gap(move.comp_b, move.gap_b);
      if (move.comp_a == move.comp_b) {
        auto& comp = comps[move.comp_a];
        // insert the later gap first so the earlier index stays valid;
        // at equal gaps the first pair precedes the second
        if (move.gap_a <= move.gap_b) {
          comp.insert(comp.begin() + move.gap_b, pair_b.begin(), pair_b.end());
          comp.insert(comp.begin() + move.gap_a, pair_a.begin(), pair_a.end());
        } else {
          comp.insert(comp.begin() + move.gap_a, pair_a.begin(), pair_a.end());
          comp.insert(comp.begin() + move.gap_b, pair_b.begin(), pair_b.end());
        }
      } else {
        auto& ca = comps[move.comp_a];
        auto& cb = comps[move.comp_b];
        ca.insert(ca.begin() + move.gap_a, pair_a.begin(), pair_a.end());
        cb.insert(cb.begin() + move.gap_b, pair_b.begin(), pair_b.end());
      }
      return FreeLink::from_components(comps);
    }
    case MoveKind::R3: {
      if (!detail::triangle_at(link, move.arcs))
        fail(ErrorKind::SiteInvalid, "arcs do not bound a small triangle");
      auto comps = link.name_components();
      for (const auto& a : move.arcs) {
        auto& comp = comps[a.component];
        int len = static_cast<int>(comp.size());
        std::swap(comp[a.arc], comp[(a.arc + 1) % len]);
      }
      return FreeLink::from_components(comps);
    }
  }
  fail(ErrorKind::SiteInvalid, "unhandled move kind");
}

// Applies decreasing first/second moves until none remains. Deterministic:
// always the first site in enumeration order.
inline FreeLink simplify(const FreeLink& link) {
  FreeLink cur = link;
  while (true) {
    auto r1 = find_r1_sites(cur);
    if (!r1.empty()) {
      cur = apply_move(cur, r1.front());
      continue;
    }
    auto r2 = find_r2_sites(cur);
    if (!r2.empty()) {
      cur = apply_move(cur, r2.front());
      continue;
    }
    return cur;
  }
}

struct OrbitResult {
  std::set<std::string> canon;  // canonical codes reached
  bool complete = false;        // true iff closed under all moves within bounds
};

namespace detail {

inline std::vector<FreeLink> neighbor_links(const FreeLink& link, int max_chords) {
  std::vector<FreeLink> out;
  for (const auto& d : find_r1_sites(link)) out.push_back(apply_move(link, d));
  for (const auto& d : find_r2_sites(link)) out.push_back(apply_move(link, d));
  for (const auto& d : find_r3_sites(link)) out.push_back(apply_move(link, d));
  int counter = 0;
  if (link.chord_count() + 1 <= max_chords) {
    std::string name = fresh_name(link, counter);
    for (int c = 0; c < link.component_count(); ++c) {
      for (int g = 0; g <= link.slots_in(c); ++g) {
        MoveDescriptor d;
        d.kind = MoveKind::R1Add;
        d.chords = {name};
        d.comp_a = c;
        d.gap_a = g;
        out.push_back(apply_move(link, d));
      }
    }
  }
  if (link.chord_count() + 2 <= max_chords) {
    int c2 = 0;
    std::string p = fresh_name(link, c2);
    std::string q = fresh_name(link, c2);
    for (int ca = 0; ca < link.component_count(); ++ca) {
      for (int ga = 0; ga <= link.slots_in(ca); ++ga) {
        for (int cb = ca; cb < link.component_count(); ++cb) {
          for (int gb = (cb == ca ? ga : 0); gb <= link.slots_in(cb); ++gb) {
            for (auto variant : {BigonVariant::Parallel, BigonVariant::Crossed}) {
              MoveDescriptor d;
              d.kind = MoveKind::R2Add;
              d.chords = {p, q};
              d.comp_a = ca;
              d.gap_a = ga;
              d.comp_b = cb;
              d.gap_b = gb;
              d.variant = variant;
              out.push_back(apply_move(link, d));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

// Breadth-first closure under all moves, bounded by chord count and by the
// number of distinct canonical forms visited. Deterministic: the frontier is
// processed in canonical-string order.
inline OrbitResult orbit(const FreeLink& link, int max_chords, std::size_t max_nodes) {
  OrbitResult res;
  std::set<std::string> frontier{canonical_form(link)};
  res.canon = frontier;
  res.complete = true;
  while (!frontier.empty()) {
    std::set<std::string> next;
    for (const auto& code : frontier) {
      FreeLink cur = FreeLink::parse(code);
      for (const auto& nb : detail::neighbor_links(cur, max_chords)) {
        std::string c = canonical_form(nb);
        if (res.canon.count(c) || next.count(c)) continue;
        if (res.canon.size() + next.size() >= max_nodes) {
          res.complete = false;
          continue;
        }
        next.insert(c);
      }
    }
    for (const auto& c : next) res.canon.insert(c);
    frontier = std::move(next);
  }
  return res;
}

}  // namespace freeknots
