#include <catch2/catch_amalgamated.hpp>

#include "freeknots/parity.hpp"

#include <numeric>

#include "census.hpp"

using namespace freeknots;

TEST_CASE("gaussian parity") {
  ParityTable t1 = gaussian_parity(FreeLink::parse("1 1"));
  CHECK(t1.at("1") == ParityLabel::Even);

  ParityTable t2 = gaussian_parity(FreeLink::parse("1 2 1 2"));
  CHECK(is_odd(t2.at("1")));
  CHECK(is_odd(t2.at("2")));

  ParityTable t3 = gaussian_parity(FreeLink::parse("1 2 3 1 2 3"));
  for (const auto& [name, label] : t3) CHECK(label == ParityLabel::Even);

  CHECK_THROWS_MATCHES(gaussian_parity(FreeLink::parse("1 1 ; ()")), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::MultiComponent;
                       }));
}

TEST_CASE("justified types") {
  FreeLink cross = FreeLink::parse("1 2 1 2");
  ParityTable t = gaussian_justified(cross);
  CHECK(t.at("1") == ParityLabel::OddB);
  CHECK(t.at("2") == ParityLabel::OddB);

  FreeLink k = FreeLink::parse("1 2 1 3 2 3");
  ParityTable t2 = gaussian_justified(k);
  CHECK(t2.at("1") == ParityLabel::OddBPrime);
  CHECK(t2.at("2") == ParityLabel::Even);
  CHECK(t2.at("3") == ParityLabel::OddBPrime);

  ParityTable t3 = gaussian_justified(FreeLink::parse("1 2 3 1 2 3"));
  for (const auto& [name, label] : t3) CHECK(!is_odd(label));
}

TEST_CASE("odd chord count is even") {
  for (const FreeLink& link : testing::knot_census(0, 7)) {
    ParityTable t = gaussian_parity(link);
    int odd = 0;
    for (const auto& [name, label] : t) odd += is_odd(label);
    CHECK(odd % 2 == 0);
  }
}

TEST_CASE("axiom checker on explicit moves") {
  // removing the even loop of "1 1"
  FreeLink before = FreeLink::parse("1 1");
  FreeLink after = FreeLink::parse("()");
  MoveDescriptor r1;
  r1.kind = MoveKind::R1Remove;
  r1.chords = {"1"};
  CHECK(check_parity_axioms(before, after, r1, gaussian_justified(before),
                            gaussian_justified(after))
            .empty());

  // the same removal with a forged odd label
  ParityTable forged{{"1", ParityLabel::OddB}};
  auto violations = check_parity_axioms(before, after, r1, forged, {});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == AxiomViolation::Kind::R1Odd);

  // triangle on all-even diagrams
  FreeLink b3 = FreeLink::parse("1 2 2 3 3 1");
  FreeLink a3 = FreeLink::parse("2 1 3 2 1 3");
  MoveDescriptor r3;
  r3.kind = MoveKind::R3;
  r3.chords = {"1", "2", "3"};
  CHECK(check_parity_axioms(b3, a3, r3, gaussian_justified(b3), gaussian_justified(a3)).empty());

  // a two-odd triangle must flip both types
  ParityTable two_odd_before{{"1", ParityLabel::OddB},
                             {"2", ParityLabel::OddBPrime},
                             {"3", ParityLabel::Even}};
  ParityTable flipped{{"1", ParityLabel::OddBPrime},
                      {"2", ParityLabel::OddB},
                      {"3", ParityLabel::Even}};
  ParityTable unflipped = two_odd_before;
  CHECK(check_parity_axioms(b3, a3, r3, two_odd_before, flipped).empty());
  auto kept = check_parity_axioms(b3, a3, r3, two_odd_before, unflipped);
  CHECK(kept.size() == 2);
  for (const auto& v : kept) CHECK(v.kind == AxiomViolation::Kind::R3TypeNotFlipped);

  // a one-odd triangle is inconsistent
  ParityTable one_odd{{"1", ParityLabel::OddB},
                      {"2", ParityLabel::Even},
                      {"3", ParityLabel::Even}};
  auto bad = check_parity_axioms(b3, a3, r3, one_odd, one_odd);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == AxiomViolation::Kind::R3OddCount);

  // bigon pairs must match exactly
  FreeLink b2 = FreeLink::parse("1 2 2 1");
  FreeLink a2 = FreeLink::parse("()");
  MoveDescriptor r2;
  r2.kind = MoveKind::R2Remove;
  r2.chords = {"1", "2"};
  ParityTable mixed{{"1", ParityLabel::OddB}, {"2", ParityLabel::OddBPrime}};
  auto mism = check_parity_axioms(b2, a2, r2, mixed, {});
  REQUIRE(mism.size() == 1);
  CHECK(mism[0].kind == AxiomViolation::Kind::R2Mismatch);

  // untouched chords keep their labels
  FreeLink b1 = FreeLink::parse("1 1 2 3 2 3");
  FreeLink a1 = FreeLink::parse("2 3 2 3");
  MoveDescriptor r1b;
  r1b.kind = MoveKind::R1Remove;
  r1b.chords = {"1"};
  ParityTable pb = gaussian_justified(b1);
  ParityTable pa = gaussian_justified(a1);
  REQUIRE(pa.at("2") == ParityLabel::OddB);
  pa["2"] = ParityLabel::OddBPrime;
  auto touched = check_parity_axioms(b1, a1, r1b, pb, pa);
  REQUIRE(touched.size() == 1);
  CHECK(touched[0].kind == AxiomViolation::Kind::UntouchedChanged);
}

TEST_CASE("cocycle on whole graphs and halves") {
  // whole graph: no turning vertices, value 0
  for (const char* code : {"1 1", "1 2 1 2", "1 2 3 1 2 3", "1 2 1 3 2 3"}) {
    FreeLink link = FreeLink::parse(code);
    ParityTable t = gaussian_justified(link);
    std::vector<int> all(arc_count(link));
    std::iota(all.begin(), all.end(), 0);
    CHECK(cocycle_value(link, t, all) == 0);
  }

  FreeLink cross = FreeLink::parse("1 2 1 2");
  ParityTable t = gaussian_justified(cross);
  auto [h1, h2] = smooth_halves(cross, "1");
  CHECK(cocycle_value(cross, t, h1.arcs) == 1);
  CHECK(cocycle_value(cross, t, h2.arcs) == 1);

  FreeLink loop = FreeLink::parse("1 1");
  auto [l1, l2] = smooth_halves(loop, "1");
  CHECK(cocycle_value(loop, gaussian_justified(loop), l1.arcs) == 0);

  // a single arc of the square is not a cycle
  CHECK_THROWS_MATCHES(cocycle_value(cross, t, std::vector<int>{0}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::NotACycle;
                       }));
}

TEST_CASE("halves evaluate to the parity bit") {
  for (const FreeLink& link : testing::knot_census(1, 6)) {
    ParityTable t = gaussian_justified(link);
    for (int v = 0; v < link.chord_count(); ++v) {
      auto [h1, h2] = smooth_halves(link, v);
      int bit = is_odd(t.at(link.chord_name(v))) ? 1 : 0;
      CHECK(cocycle_value(link, t, h1.arcs) == bit);
      CHECK(cocycle_value(link, t, h2.arcs) == bit);
    }
  }
}
