#include <catch2/catch_amalgamated.hpp>

#include "freeknots/invariant.hpp"

#include "census.hpp"
#include "freeknots/catalog.hpp"
#include "freeknots/moves.hpp"

using namespace freeknots;

namespace {

const char* k1_code() {
  for (const auto& e : catalog())
    if (e.name == "k1") return e.code.c_str();
  return "";
}

}  // namespace

TEST_CASE("gamma words") {
  CHECK(format_letters(gamma_word(FreeLink::parse("1 1"), {})) == "a a");
  CHECK(format_letters(gamma_word(FreeLink::parse("1 2 1 2"), {})) == "b b b b");
  CHECK(format_letters(gamma_word(FreeLink::parse("1 2 1 3 2 3"), {})) == "b' a b' b' a b'");
  CHECK_THROWS_MATCHES(gamma_word(FreeLink::parse("1 1 ; ()"), {}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::MultiComponent;
                       }));
}

TEST_CASE("invariant values") {
  CHECK(invariant_l(FreeLink::parse("()")).L == 0);
  CHECK(invariant_l(FreeLink::parse("1 2 1 2")).L == 0);

  InvariantResult k1 = invariant_l(FreeLink::parse(k1_code()));
  CHECK(k1.L == 16);
  CHECK(k1.point == CayleyPoint{0, -16});
  CHECK(k1.word == parse_letter_expr("(b' a)^7 b' b (a b)^7"));
  CHECK(static_cast<int>(k1.word.size()) == 2 * 15);
}

TEST_CASE("long invariant") {
  CHECK(long_invariant(FreeLink::parse("()"), {}) == 0);
  CHECK(long_invariant(FreeLink::parse("1 2 1 2"), {0, 2, false}) == 0);
  FreeLink k1 = FreeLink::parse(k1_code());
  CHECK(long_invariant(k1, {0, 0, false}) == -16);
  CHECK(long_invariant(k1, {0, 0, true}) == 16);
}

TEST_CASE("odd chord deletion") {
  CHECK(f_map(FreeLink::parse("1 2 1 2")).gauss_code() == "()");
  CHECK(f_map(FreeLink::parse("1 2 3 1 2 3")).gauss_code() == "1 2 3 1 2 3");
  CHECK(f_map(FreeLink::parse("1 2 1 3 2 3")).gauss_code() == "1 1");

  CHECK(f_star(FreeLink::parse("1 2 1 2")).gauss_code() == "()");
  CHECK(f_star(FreeLink::parse("1 2 1 3 2 3")).gauss_code() == "1 1");
  CHECK(f_star(FreeLink::parse("()")).gauss_code() == "()");
}

TEST_CASE("deletion is the identity exactly on all-even diagrams") {
  for (const FreeLink& link : testing::knot_census(0, 5)) {
    ParityTable t = link.chord_count() ? gaussian_parity(link) : ParityTable{};
    bool all_even = true;
    for (const auto& [name, label] : t) all_even = all_even && !is_odd(label);
    FreeLink out = f_map(link);
    if (all_even) {
      CHECK(canonical_form(out) == canonical_form(link));
    } else {
      CHECK(out.chord_count() < link.chord_count());
    }
    FreeLink fixed = f_star(link);
    for (const auto& [name, label] : gaussian_parity(fixed)) CHECK(!is_odd(label));
  }
}

TEST_CASE("basepoint and direction independence") {
  for (const FreeLink& link : testing::knot_census(0, 4)) {
    long long expect = invariant_l(link).L;
    int len = link.slots_in(0);
    for (int gap = 0; gap < std::max(len, 1); ++gap) {
      for (bool rev : {false, true}) {
        auto word = gamma_word(link, {0, gap, rev});
        CHECK(conj_class_l(eval_word(word)) == expect);
      }
    }
  }
}

TEST_CASE("deletion descends to move classes") {
  // f commutes with moves up to equivalence: after one move, the deleted
  // diagrams stay connected by a short move sequence
  for (const FreeLink& link : testing::knot_census(1, 4)) {
    std::vector<MoveDescriptor> moves = find_r1_sites(link);
    auto r2 = find_r2_sites(link);
    moves.insert(moves.end(), r2.begin(), r2.end());
    auto r3 = find_r3_sites(link);
    moves.insert(moves.end(), r3.begin(), r3.end());
    for (const auto& d : moves) {
      FreeLink after = apply_move(link, d);
      FreeLink fa = f_star(link);
      FreeLink fb = f_star(after);
      int bound = std::max(fa.chord_count(), fb.chord_count()) + 2;
      EquivResult res = are_equivalent_bounded(fa, fb, bound, 4000);
      CHECK(res.verdict == EquivVerdict::Equivalent);
    }
  }
}
