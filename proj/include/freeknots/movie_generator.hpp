#pragma once

// Seeded generator of valid movies. The movie is grown backward from the
// empty link: each step prepends one forward event together with the exact
// earlier level it acts on, so the forward replay reproduces every level
// verbatim and the result verifies by construction.
//
// The walk keeps one distinguished component (the eventual initial knot) and
// a registry of trivial-circle satellites. Chords live only on the main
// component, and whenever a chord is created its label is the Gaussian
// justified label it has there, so the level-0 labels come out forced.
// Satellites opened by a death close by a fission pinch; satellites opened by
// a fusion close by a birth. Both pairings leave the genus at zero; a handle
// excursion (an adjacent fission/fusion pair on the main component) raises it
// by one and is used only when genus is not forced.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "freeknots/cobordism.hpp"

namespace freeknots {

struct GeneratorBounds {
  int events = 16;      // backward walk steps before closing up
  int max_chords = 8;   // cap on main-component chords
  bool force_genus_zero = true;
  int handle_budget = 2;  // used only when genus is not forced
};

namespace detail {

class MovieBuilder {
 public:
  MovieBuilder(std::uint64_t seed, const GeneratorBounds& bounds)
      : rng_(seed), bounds_(bounds) {}

  Movie build() {
    // last forward event: the main circle dies
    comps_.push_back({});
    main_ = 0;
    MovieEvent death;
    death.kind = EventKind::Death;
    death.component = 0;
    reversed_.push_back(death);

    for (int step = 0; step < bounds_.events; ++step) {
      for (int attempt = 0; attempt < 8; ++attempt)
        if (random_step()) break;
    }
    while (!d_sats_.empty()) close_sat_d(0);
    while (!m_sats_.empty()) close_sat_m();

    Movie movie;
    movie.initial = FreeLink::from_components(comps_);
    movie.events.assign(reversed_.rbegin(), reversed_.rend());
    movie.labels = born_labels_;
    return movie;
  }

 private:
  std::mt19937_64 rng_;
  GeneratorBounds bounds_;
  std::vector<std::vector<std::string>> comps_;
  std::map<std::string, ParityLabel> labels_;     // current labels at the cursor
  std::map<std::string, std::string> lifetime_;   // chord -> line
  std::map<std::string, ParityLabel> born_labels_;  // movie output labels
  std::vector<MovieEvent> reversed_;              // last forward event first
  std::vector<int> d_sats_;                       // indices left of main_
  std::vector<int> m_sats_;                       // indices right of main_, stack
  int main_ = 0;
  int fresh_ = 0;
  int handles_ = 0;

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::string fresh_name() { return "t" + std::to_string(++fresh_); }

  FreeLink main_link() const { return FreeLink::from_components({comps_[main_]}); }

  int main_chords() const { return static_cast<int>(comps_[main_].size()) / 2; }

  void shift_from(int idx, int delta) {
    for (auto& s : d_sats_)
      if (s >= idx) s += delta;
    for (auto& s : m_sats_)
      if (s >= idx) s += delta;
    if (main_ >= idx) main_ += delta;
  }

  bool random_step() {
    enum Step {
      AddLoop,
      AddBigon,
      Triangle,
      OpenSatD,
      CloseSatD,
      OpenSatM,
      CloseSatM,
      LoopBirth,
      BigonBirth,
      Handle,
      kSteps
    };
    switch (static_cast<Step>(pick(kSteps))) {
      case AddLoop: return add_loop();
      case AddBigon: return add_bigon();
      case Triangle: return triangle();
      case OpenSatD: return open_sat_d();
      case CloseSatD: return d_sats_.empty() ? false : close_sat_d(pick(d_sats_.size()));
      case OpenSatM: return open_sat_m();
      case CloseSatM: return close_sat_m();
      case LoopBirth: return loop_birth();
      case BigonBirth: return bigon_birth();
      case Handle: return handle();
      default: return false;
    }
  }

  // forward R1Remove: the cursor gains an even loop
  bool add_loop() {
    if (main_chords() + 1 > bounds_.max_chords) return false;
    auto& comp = comps_[main_];
    int gap = static_cast<int>(pick(comp.size() + 1));
    std::string name = fresh_name();
    comp.insert(comp.begin() + gap, {name, name});
    labels_[name] = ParityLabel::Even;
    lifetime_[name] = name;
    MovieEvent ev;
    ev.kind = EventKind::R1Remove;
    ev.chords = {name};
    reversed_.push_back(ev);
    return true;
  }

  // forward R2Remove: the cursor gains a bigon whose label is the Gaussian
  // label the pair has on the main component
  bool add_bigon() {
    if (main_chords() + 2 > bounds_.max_chords) return false;
    auto& comp = comps_[main_];
    int len = static_cast<int>(comp.size());
    int ga = static_cast<int>(pick(len + 1));
    int gb = static_cast<int>(pick(len + 1));
    BigonVariant variant = pick(2) == 0 ? BigonVariant::Parallel : BigonVariant::Crossed;
    std::string p = fresh_name(), q = fresh_name();
    MoveDescriptor d;
    d.kind = MoveKind::R2Add;
    d.chords = {p, q};
    d.comp_a = 0;
    d.gap_a = ga;
    d.comp_b = 0;
    d.gap_b = gb;
    d.variant = variant;
    FreeLink next_main = apply_move(main_link(), d);
    ParityLabel label = gaussian_justified(next_main).at(p);
    comps_[main_] = next_main.name_components()[0];
    std::string line = fresh_name();
    labels_[p] = labels_[q] = label;
    lifetime_[p] = lifetime_[q] = line;
    MovieEvent ev;
    ev.kind = EventKind::R2Remove;
    ev.chords = {p, q};
    reversed_.push_back(ev);
    return true;
  }

  // forward R3 at a triangle of the earlier level; the swap is involutive so
  // the earlier level is the swapped cursor
  bool triangle() {
    FreeLink ml = main_link();
    auto sites = find_r3_sites(ml);
    if (sites.empty()) return false;
    const auto& d = sites[pick(sites.size())];
    int odd = 0;
    for (const auto& n : d.chords)
      if (is_odd(labels_.at(n))) ++odd;
    if (odd != 0 && odd != 2) return false;
    MoveDescriptor md = d;
    FreeLink prev = apply_move(ml, md);
    comps_[main_] = prev.name_components()[0];
    if (odd == 2) {
      for (const auto& n : d.chords) {
        auto& l = labels_.at(n);
        if (l == ParityLabel::OddB)
          l = ParityLabel::OddBPrime;
        else if (l == ParityLabel::OddBPrime)
          l = ParityLabel::OddB;
      }
    }
    MovieEvent ev;
    ev.kind = EventKind::R3;
    for (int k = 0; k < 3; ++k) ev.arcs[k] = ArcRef{main_, d.arcs[k].arc};
    reversed_.push_back(ev);
    return true;
  }

  // forward Death of a trivial circle, to be pinched off earlier
  bool open_sat_d() {
    int idx = static_cast<int>(pick(d_sats_.size() + 1));
    shift_from(idx, 1);
    comps_.insert(comps_.begin() + idx, {});
    d_sats_.push_back(idx);
    MovieEvent ev;
    ev.kind = EventKind::Death;
    ev.component = idx;
    reversed_.push_back(ev);
    return true;
  }

  // forward fission pinching the satellite off its right neighbor
  bool close_sat_d(std::size_t which) {
    int x = d_sats_[which];
    auto& neighbor = comps_[x + 1];
    int len = static_cast<int>(neighbor.size());
    int g = len == 0 ? 0 : static_cast<int>(pick(len + 1));
    neighbor = rotate_left(neighbor, len == 0 ? 0 : ((len - g % len) % len));
    comps_.erase(comps_.begin() + x);
    d_sats_.erase(d_sats_.begin() + which);
    shift_from(x + 1, -1);
    MovieEvent ev;
    ev.kind = EventKind::Saddle;
    ev.comp_a = x;
    ev.gap_a = g;
    ev.comp_b = x;
    ev.gap_b = g;
    reversed_.push_back(ev);
    return true;
  }

  // forward fusion of a trivial circle into the main component; the circle is
  // born earlier
  bool open_sat_m() {
    int idx = static_cast<int>(comps_.size());
    comps_.push_back({});
    m_sats_.push_back(idx);
    MovieEvent ev;
    ev.kind = EventKind::Saddle;
    ev.comp_a = main_;
    ev.gap_a = 0;
    ev.comp_b = idx;
    ev.gap_b = 0;
    ev.flip = false;
    reversed_.push_back(ev);
    return true;
  }

  // forward Birth of the most recent fusion satellite
  bool close_sat_m() {
    if (m_sats_.empty()) return false;
    int idx = m_sats_.back();
    if (idx != static_cast<int>(comps_.size()) - 1) return false;
    comps_.pop_back();
    m_sats_.pop_back();
    MovieEvent ev;
    ev.kind = EventKind::Birth;
    reversed_.push_back(ev);
    return true;
  }

  // forward R1Add: a loop whose line is its own is removed from the cursor
  // and born at this event
  bool loop_birth() {
    auto& comp = comps_[main_];
    int len = static_cast<int>(comp.size());
    std::vector<int> starts;
    for (int i = 0; i + 1 < len; ++i)
      if (comp[i] == comp[i + 1] && lifetime_.at(comp[i]) == comp[i] &&
          !is_odd(labels_.at(comp[i])))
        starts.push_back(i);
    if (starts.empty()) return false;
    int i = starts[pick(starts.size())];
    std::string name = comp[i];
    comp.erase(comp.begin() + i, comp.begin() + i + 2);
    labels_.erase(name);
    lifetime_.erase(name);
    born_labels_[name] = ParityLabel::Even;
    MovieEvent ev;
    ev.kind = EventKind::R1Add;
    ev.comp_a = main_;
    ev.gap_a = i;
    ev.chords = {name};
    reversed_.push_back(ev);
    return true;
  }

  // forward R2Add: a bigon pair sharing a fresh line is removed from the
  // cursor and born at this event
  bool bigon_birth() {
    auto& comp = comps_[main_];
    int len = static_cast<int>(comp.size());
    struct Site {
      int i, j;
    };
    std::vector<Site> sites;
    for (int i = 0; i + 1 < len; ++i) {
      for (int j = i + 2; j + 1 < len; ++j) {
        const std::string& p = comp[i];
        const std::string& q = comp[i + 1];
        if (p == q) continue;
        bool match = (comp[j] == q && comp[j + 1] == p) || (comp[j] == p && comp[j + 1] == q);
        if (!match) continue;
        if (lifetime_.at(p) != lifetime_.at(q)) continue;
        int carriers = 0;
        for (const auto& [name, line] : lifetime_)
          if (line == lifetime_.at(p)) ++carriers;
        if (carriers != 2) continue;
        sites.push_back({i, j});
      }
    }
    if (sites.empty()) return false;
    auto [i, j] = sites[pick(sites.size())];
    std::string p = comp[i], q = comp[i + 1];
    BigonVariant variant =
        (comp[j] == q && comp[j + 1] == p) ? BigonVariant::Parallel : BigonVariant::Crossed;
    std::string line = lifetime_.at(p);
    born_labels_[line] = labels_.at(p);
    MovieEvent ev;
    ev.kind = EventKind::R2Add;
    ev.comp_a = main_;
    ev.gap_a = i;
    ev.comp_b = main_;
    ev.gap_b = j - 2;
    ev.variant = variant;
    ev.chords = {p, q};
    ev.lifetime = line;
    reversed_.push_back(ev);
    comp.erase(comp.begin() + j, comp.begin() + j + 2);
    comp.erase(comp.begin() + i, comp.begin() + i + 2);
    labels_.erase(p);
    labels_.erase(q);
    lifetime_.erase(p);
    lifetime_.erase(q);
    return true;
  }

  // an adjacent fission/fusion pair on the main component; both halves of the
  // cut have even letter counts so the middle level stays consistent
  bool handle() {
    if (bounds_.force_genus_zero || handles_ >= bounds_.handle_budget) return false;
    auto& comp = comps_[main_];
    int len = static_cast<int>(comp.size());
    std::vector<int> cuts;
    for (int k = 0; k <= len; ++k) {
      int evens = 0, odds = 0;
      for (int s = 0; s < k; ++s) (is_odd(labels_.at(comp[s])) ? odds : evens) += 1;
      if (evens % 2 == 0 && odds % 2 == 0) cuts.push_back(k);
    }
    int k = cuts[pick(cuts.size())];
    MovieEvent fuse;
    fuse.kind = EventKind::Saddle;
    fuse.comp_a = main_;
    fuse.gap_a = 0;
    fuse.comp_b = main_ + 1;
    fuse.gap_b = 0;
    fuse.flip = false;
    reversed_.push_back(fuse);
    MovieEvent split;
    split.kind = EventKind::Saddle;
    split.comp_a = main_;
    split.gap_a = 0;
    split.comp_b = main_;
    split.gap_b = k;
    reversed_.push_back(split);
    ++handles_;
    return true;
  }
};

}  // namespace detail

// Deterministic per seed. The result has a one-component initial level and
// verifies in lax mode; with force_genus_zero the genus is 0 and the Reeb
// graph is a tree.
inline Movie random_valid_movie(std::uint64_t seed, const GeneratorBounds& bounds = {}) {
  return detail::MovieBuilder(seed, bounds).build();
}

}  // namespace freeknots
