#pragma once

// JSON forms of the wire types. A parity table is {"chord": "Even"|"OddB"|
// "OddBPrime"}; a movie is {"initial": "<gauss code>", "labels": {"line":
// {"parity": "Even"|"Odd", "type": "B"|"BPrime"}}, "events": [...]}.

#include <string>

#include <json.hpp>

#include "freeknots/cobordism.hpp"
#include "freeknots/dihedral.hpp"
#include "freeknots/invariant.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

using nlohmann::json;

inline json parity_table_to_json(const ParityTable& table) {
  json j = json::object();
  for (const auto& [name, label] : table) j[name] = label_name(label);
  return j;
}

inline ParityLabel label_from_name(const std::string& s) {
  if (s == "Even") return ParityLabel::Even;
  if (s == "OddB") return ParityLabel::OddB;
  if (s == "OddBPrime") return ParityLabel::OddBPrime;
  fail(ErrorKind::BadInput, "unknown parity label \"" + s + "\"");
}

inline ParityTable parity_table_from_json(const json& j) {
  ParityTable t;
  for (auto it = j.begin(); it != j.end(); ++it)
    t[it.key()] = label_from_name(it.value().get<std::string>());
  return t;
}

inline json invariant_result_to_json(const InvariantResult& res) {
  json word = json::array();
  for (Letter l : res.word) word.push_back(letter_token(l));
  return json{{"word", word},
              {"x", res.point.x},
              {"y", res.point.y},
              {"L", res.L},
              {"parity", parity_table_to_json(res.parity)}};
}

inline json lifetime_label_to_json(ParityLabel label) {
  if (!is_odd(label)) return json{{"parity", "Even"}};
  return json{{"parity", "Odd"}, {"type", label == ParityLabel::OddB ? "B" : "BPrime"}};
}

inline ParityLabel lifetime_label_from_json(const json& j) {
  std::string parity = j.at("parity").get<std::string>();
  if (parity == "Even") return ParityLabel::Even;
  if (parity != "Odd") fail(ErrorKind::BadInput, "lifetime parity must be Even or Odd");
  std::string type = j.value("type", "B");
  if (type == "B") return ParityLabel::OddB;
  if (type == "BPrime") return ParityLabel::OddBPrime;
  fail(ErrorKind::BadInput, "lifetime type must be B or BPrime");
}

inline json event_to_json(const MovieEvent& ev) {
  json j{{"kind", event_kind_name(ev.kind)}};
  switch (ev.kind) {
    case EventKind::Birth: break;
    case EventKind::Death: j["component"] = ev.component; break;
    case EventKind::Saddle:
      j["compA"] = ev.comp_a;
      j["gapA"] = ev.gap_a;
      j["compB"] = ev.comp_b;
      j["gapB"] = ev.gap_b;
      j["flip"] = ev.flip;
      break;
    case EventKind::R1Add:
      j["component"] = ev.comp_a;
      j["gap"] = ev.gap_a;
      j["chord"] = ev.chords.at(0);
      break;
    case EventKind::R1Remove: j["chord"] = ev.chords.at(0); break;
    case EventKind::R2Add:
      j["compA"] = ev.comp_a;
      j["gapA"] = ev.gap_a;
      j["compB"] = ev.comp_b;
      j["gapB"] = ev.gap_b;
      j["variant"] = ev.variant == BigonVariant::Parallel ? "parallel" : "crossed";
      j["chords"] = json::array({ev.chords.at(0), ev.chords.at(1)});
      j["lifetime"] = ev.lifetime;
      break;
    case EventKind::R2Remove: j["chords"] = json::array({ev.chords.at(0), ev.chords.at(1)}); break;
    case EventKind::R3: {
      json arcs = json::array();
      for (const auto& a : ev.arcs) arcs.push_back(json::array({a.component, a.arc}));
      j["arcs"] = arcs;
      break;
    }
  }
  return j;
}

inline MovieEvent event_from_json(const json& j) {
  MovieEvent ev;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Birth") {
    ev.kind = EventKind::Birth;
  } else if (kind == "Death") {
    ev.kind = EventKind::Death;
    ev.component = j.at("component").get<int>();
  } else if (kind == "Saddle") {
    ev.kind = EventKind::Saddle;
    ev.comp_a = j.at("compA").get<int>();
    ev.gap_a = j.at("gapA").get<int>();
    ev.comp_b = j.at("compB").get<int>();
    ev.gap_b = j.at("gapB").get<int>();
    ev.flip = j.value("flip", false);
  } else if (kind == "R1Add") {
    ev.kind = EventKind::R1Add;
    ev.comp_a = j.at("component").get<int>();
    ev.gap_a = j.at("gap").get<int>();
    ev.chords = {j.at("chord").get<std::string>()};
  } else if (kind == "R1Remove") {
    ev.kind = EventKind::R1Remove;
    ev.chords = {j.at("chord").get<std::string>()};
  } else if (kind == "R2Add") {
    ev.kind = EventKind::R2Add;
    ev.comp_a = j.at("compA").get<int>();
    ev.gap_a = j.at("gapA").get<int>();
    ev.comp_b = j.at("compB").get<int>();
    ev.gap_b = j.at("gapB").get<int>();
    std::string variant = j.value("variant", "parallel");
    if (variant != "parallel" && variant != "crossed")
      fail(ErrorKind::BadInput, "variant must be parallel or crossed");
    ev.variant = variant == "parallel" ? BigonVariant::Parallel : BigonVariant::Crossed;
    for (const auto& c : j.at("chords")) ev.chords.push_back(c.get<std::string>());
    ev.lifetime = j.value("lifetime", "");
  } else if (kind == "R2Remove") {
    ev.kind = EventKind::R2Remove;
    for (const auto& c : j.at("chords")) ev.chords.push_back(c.get<std::string>());
  } else if (kind == "R3") {
    ev.kind = EventKind::R3;
    const auto& arcs = j.at("arcs");
    if (arcs.size() != 3) fail(ErrorKind::BadInput, "a triangle event needs three arcs");
    for (int k = 0; k < 3; ++k)
      ev.arcs[k] = ArcRef{arcs[k].at(0).get<int>(), arcs[k].at(1).get<int>()};
  } else {
    fail(ErrorKind::BadInput, "unknown event kind \"" + kind + "\"");
  }
  return ev;
}

inline json movie_to_json(const Movie& movie) {
  json labels = json::object();
  for (const auto& [line, label] : movie.labels) labels[line] = lifetime_label_to_json(label);
  json events = json::array();
  for (const auto& ev : movie.events) events.push_back(event_to_json(ev));
  return json{{"initial", movie.initial.gauss_code()}, {"labels", labels}, {"events", events}};
}

inline Movie movie_from_json(const json& j) {
  Movie movie;
  movie.initial = FreeLink::parse(j.at("initial").get<std::string>());
  if (j.contains("labels"))
    for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
      movie.labels[it.key()] = lifetime_label_from_json(it.value());
  if (j.contains("events"))
    for (const auto& e : j.at("events")) movie.events.push_back(event_from_json(e));
  return movie;
}

inline json rational_to_json(const Rational& r) {
  return json{{"num", r.num}, {"den", r.den}};
}

inline json verifier_report_to_json(const VerifierReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back(json{{"kind", violation_kind_name(v.kind)},
                              {"level", v.level},
                              {"event", v.event},
                              {"detail", v.detail}});
  json levels = json::array();
  for (const auto& l : rep.levels) {
    json words = json::array();
    for (const auto& w : l.words)
      words.push_back(json{{"x", w.point.x}, {"y", w.point.y}, {"L", w.L}});
    levels.push_back(
        json{{"components", l.components}, {"words", words}, {"labels", l.label_multiset}});
  }
  return json{{"ok", rep.ok},
              {"genus", rep.genus_defined ? rational_to_json(rep.genus) : json(nullptr)},
              {"violations", violations},
              {"levels", levels},
              {"reebIsTree", rep.reeb_is_tree}};
}

}  // namespace freeknots
