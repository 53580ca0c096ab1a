#include <catch2/catch_amalgamated.hpp>

#include "freeknots/diagram.hpp"

#include <set>

#include "census.hpp"

using namespace freeknots;

TEST_CASE("gauss code parsing") {
  FreeLink k = FreeLink::parse("1 2 1 2");
  CHECK(k.component_count() == 1);
  CHECK(k.slots_in(0) == 4);
  CHECK(k.chord_count() == 2);

  FreeLink two = FreeLink::parse("1 2 2 1 ; ()");
  CHECK(two.component_count() == 2);
  CHECK(two.slots_in(1) == 0);

  CHECK_THROWS_MATCHES(FreeLink::parse("1 2 1"), Error, Catch::Matchers::Predicate<Error>([](
                           const Error& e) { return e.kind() == ErrorKind::TokenCount; }));
  CHECK_THROWS_MATCHES(FreeLink::parse("   "), Error, Catch::Matchers::Predicate<Error>([](
                           const Error& e) { return e.kind() == ErrorKind::EmptyInput; }));
  CHECK_THROWS_AS(FreeLink::parse("1 () 1"), Error);
  CHECK_THROWS_AS(FreeLink::parse("1 1 ;"), Error);
}

TEST_CASE("chord names survive round trips") {
  FreeLink k = FreeLink::parse("x y x ; y");
  CHECK(k.component_count() == 2);
  CHECK(k.gauss_code() == "x y x ; y");
  CHECK(FreeLink::parse(k.gauss_code()).gauss_code() == k.gauss_code());
}

TEST_CASE("linking") {
  FreeLink a = FreeLink::parse("1 2 1 2");
  CHECK(linking_mod2(a, "1", "2") == 1);
  FreeLink b = FreeLink::parse("1 2 2 1");
  CHECK(linking_mod2(b, "1", "2") == 0);
  FreeLink c = FreeLink::parse("1 2 3 1 2 3");
  CHECK(linking_mod2(c, "1", "3") == 1);

  CHECK_THROWS_MATCHES(linking_mod2(a, "1", "1"), Error, Catch::Matchers::Predicate<Error>([](
                           const Error& e) { return e.kind() == ErrorKind::SameChord; }));
  FreeLink multi = FreeLink::parse("1 1 ; 2 2");
  CHECK_THROWS_MATCHES(linking_mod2(multi, "1", "2"), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::MultiComponent;
                       }));
}

TEST_CASE("linking is symmetric") {
  for (const FreeLink& link : testing::knot_census(1, 5)) {
    for (int a = 0; a < link.chord_count(); ++a)
      for (int b = a + 1; b < link.chord_count(); ++b)
        CHECK(linking_mod2(link, a, b) == linking_mod2(link, b, a));
  }
}

TEST_CASE("interlacement handshake") {
  // summed over all chords, the number of linked partners is even
  for (const FreeLink& link : testing::knot_census(1, 6)) {
    int total = 0;
    for (int a = 0; a < link.chord_count(); ++a)
      for (int b = 0; b < link.chord_count(); ++b)
        if (a != b) total += linking_mod2(link, a, b);
    CHECK(total % 2 == 0);
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(FreeLink::parse("2 1 2 1")) == "1 2 1 2");
  CHECK(canonical_form(FreeLink::parse("()")) == "()");

  FreeLink k = FreeLink::parse("1 2 1 3 2 3");
  std::vector<std::string> reversed{"3", "2", "3", "1", "2", "1"};
  CHECK(canonical_form(FreeLink::from_components({reversed})) == canonical_form(k));

  // idempotent
  std::string canon = canonical_form(k);
  CHECK(canonical_form(FreeLink::parse(canon)) == canon);
}

TEST_CASE("canonical form quotients rotations and reflections") {
  for (const FreeLink& link : testing::knot_census(1, 4)) {
    std::string canon = canonical_form(link);
    auto comp = link.name_components()[0];
    int len = static_cast<int>(comp.size());
    for (int r = 0; r < len; ++r) {
      auto rot = comp;
      std::rotate(rot.begin(), rot.begin() + r, rot.end());
      CHECK(canonical_form(FreeLink::from_components({rot})) == canon);
      std::reverse(rot.begin(), rot.end());
      CHECK(canonical_form(FreeLink::from_components({rot})) == canon);
    }
  }
}

TEST_CASE("canonical form sorts components") {
  std::string a = canonical_form(FreeLink::parse("1 1 ; 2 3 2 3"));
  std::string b = canonical_form(FreeLink::parse("1 2 1 2 ; 3 3"));
  CHECK(a == b);
  std::string c = canonical_form(FreeLink::parse("() ; 1 1"));
  std::string d = canonical_form(FreeLink::parse("1 1 ; ()"));
  CHECK(c == d);
}

TEST_CASE("smoothing halves") {
  FreeLink loop = FreeLink::parse("1 1");
  auto [l1, l2] = smooth_halves(loop, "1");
  CHECK(l1.slots.empty());
  CHECK(l2.slots.empty());

  FreeLink cross = FreeLink::parse("1 2 1 2");
  auto [h1, h2] = smooth_halves(cross, "1");
  CHECK(h1.slots == std::vector<int>{1});
  CHECK(h2.slots == std::vector<int>{3});

  FreeLink hex = FreeLink::parse("1 2 3 1 2 3");
  auto [g1, g2] = smooth_halves(hex, "2");
  CHECK(g1.slots == std::vector<int>{2, 3});
  CHECK(g2.slots == std::vector<int>{5, 0});

  CHECK_THROWS_AS(smooth_halves(hex, "9"), Error);
}

TEST_CASE("halves partition the other slots") {
  for (const FreeLink& link : testing::knot_census(1, 5)) {
    for (int v = 0; v < link.chord_count(); ++v) {
      auto [h1, h2] = smooth_halves(link, v);
      std::set<int> seen(h1.slots.begin(), h1.slots.end());
      for (int s : h2.slots) CHECK(seen.insert(s).second);
      auto [p, q] = link.chord_slots(v);
      CHECK(static_cast<int>(seen.size()) + 2 == link.slots_in(0));
      CHECK(!seen.count(p.slot));
      CHECK(!seen.count(q.slot));
    }
  }
}
