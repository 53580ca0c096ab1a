#include <catch2/catch_amalgamated.hpp>

#include "freeknots/dihedral.hpp"

#include <algorithm>
#include <random>

using namespace freeknots;

namespace {

std::vector<Letter> random_word(std::mt19937_64& rng, int max_len) {
  int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<Letter> w(len);
  for (auto& l : w) l = static_cast<Letter>(rng() % 3);
  return w;
}

}  // namespace

TEST_CASE("single steps") {
  CHECK(step_right({0, 0}, Letter::A) == CayleyPoint{1, 0});
  CHECK(step_right({0, 0}, Letter::B) == CayleyPoint{0, 1});
  CHECK(step_right({0, 0}, Letter::BPrime) == CayleyPoint{0, -1});
  // x + y = 0 is even, so b moves up
  CHECK(step_right({1, -1}, Letter::B) == CayleyPoint{1, 0});
}

TEST_CASE("letters are involutions on the strip") {
  for (int x : {0, 1})
    for (long long y = -5; y <= 5; ++y)
      for (Letter g : {Letter::A, Letter::B, Letter::BPrime}) {
        CayleyPoint p{x, y};
        CHECK(step_right(step_right(p, g), g) == p);
      }
}

TEST_CASE("defining relation") {
  CHECK(eval_word(parse_letter_expr("a b")) == CayleyPoint{1, -1});
  CHECK(eval_word(parse_letter_expr("b' a")) == CayleyPoint{1, -1});
  CHECK(eval_word(parse_letter_expr("a a")) == CayleyPoint{0, 0});
  CHECK(eval_word(parse_letter_expr("(b b')^2")) == CayleyPoint{0, 4});
}

TEST_CASE("the catalog word") {
  auto letters = parse_letter_expr("(b' a)^7 b' b (a b)^7");
  REQUIRE(letters.size() == 30);
  CayleyPoint p = eval_word(letters);
  CHECK(p == CayleyPoint{0, -16});
  CHECK(conj_class_l(p) == 16);
}

TEST_CASE("conjugacy class value") {
  CHECK(conj_class_l({0, -16}) == 16);
  CHECK(conj_class_l({0, 0}) == 0);
  CHECK_THROWS_MATCHES(conj_class_l({1, 3}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::NonZeroFirstCoordinate;
                       }));
}

TEST_CASE("letter expression parsing") {
  CHECK(parse_letter_expr("").empty());
  CHECK(parse_letter_expr("(a b)^0").empty());
  CHECK(parse_letter_expr("((a)^2)^3").size() == 6);
  CHECK_THROWS_AS(parse_letter_expr("a ^2"), Error);
  CHECK_THROWS_AS(parse_letter_expr("(a"), Error);
  CHECK_THROWS_AS(parse_letter_expr("c"), Error);
}

TEST_CASE("group elements reduce to alternating words") {
  GroupElement e = GroupElement::identity();
  CHECK(e.times(e) == e);
  GroupElement b = GroupElement::from_letters(parse_letter_expr("b"));
  CHECK(b.times(b).is_identity());
  GroupElement bp = GroupElement::from_letters(parse_letter_expr("b'"));
  CHECK(bp.word() == "aba");
  CHECK(bp.times(bp).is_identity());

  // ab = b'a as elements
  GroupElement ab = GroupElement::from_letters(parse_letter_expr("a b"));
  GroupElement bpa = GroupElement::from_letters(parse_letter_expr("b' a"));
  CHECK(ab == bpa);
}

TEST_CASE("coordinates agree with the walk") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto w = random_word(rng, 20);
    CHECK(GroupElement::from_letters(w).coordinates() == eval_word(w));

    std::size_t split = w.empty() ? 0 : rng() % (w.size() + 1);
    std::vector<Letter> left(w.begin(), w.begin() + split);
    std::vector<Letter> right(w.begin() + split, w.end());
    CHECK(GroupElement::from_letters(left).times(GroupElement::from_letters(right)) ==
          GroupElement::from_letters(w));
  }
}

TEST_CASE("single relation rewrites fix the element") {
  std::mt19937_64 rng(11);
  auto insert_pair = [&](std::vector<Letter> w, std::initializer_list<Letter> pair) {
    std::size_t at = w.empty() ? 0 : rng() % (w.size() + 1);
    w.insert(w.begin() + at, pair);
    return w;
  };
  for (int trial = 0; trial < 3000; ++trial) {
    auto w = random_word(rng, 20);
    CayleyPoint p = eval_word(w);

    CHECK(eval_word(insert_pair(w, {Letter::A, Letter::A})) == p);
    CHECK(eval_word(insert_pair(w, {Letter::B, Letter::B})) == p);
    CHECK(eval_word(insert_pair(w, {Letter::BPrime, Letter::BPrime})) == p);

    // ab -> b'a and ab' -> ba at the first occurrence
    auto w2 = w;
    for (std::size_t i = 0; i + 1 < w2.size(); ++i) {
      if (w2[i] == Letter::A && w2[i + 1] == Letter::B) {
        w2[i] = Letter::BPrime;
        w2[i + 1] = Letter::A;
        break;
      }
      if (w2[i] == Letter::A && w2[i + 1] == Letter::BPrime) {
        w2[i] = Letter::B;
        w2[i + 1] = Letter::A;
        break;
      }
    }
    CHECK(eval_word(w2) == p);

    // b' -> a b a
    auto w3 = w;
    for (std::size_t i = 0; i < w3.size(); ++i) {
      if (w3[i] == Letter::BPrime) {
        w3[i] = Letter::A;
        w3.insert(w3.begin() + i + 1, {Letter::B, Letter::A});
        break;
      }
    }
    CHECK(eval_word(w3) == p);
  }
}

TEST_CASE("reversal and conjugation on axis points") {
  std::mt19937_64 rng(13);
  int on_axis = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    auto w = random_word(rng, 20);
    CayleyPoint p = eval_word(w);
    auto rev = w;
    std::reverse(rev.begin(), rev.end());
    CayleyPoint q = eval_word(rev);

    if (p.x == 0 && p.y % 2 == 0) {
      ++on_axis;
      CHECK(q == CayleyPoint{0, -p.y});
      CHECK(conj_class_l(q) == conj_class_l(p));
      for (Letter g : {Letter::A, Letter::B, Letter::BPrime}) {
        std::vector<Letter> conj;
        conj.push_back(g);
        conj.insert(conj.end(), w.begin(), w.end());
        conj.push_back(g);
        CayleyPoint c = eval_word(conj);
        CHECK(c.x == 0);
        CHECK((c.y == p.y || c.y == -p.y));
        CHECK(conj_class_l(c) == conj_class_l(p));
      }
    } else {
      // a reversed word is the inverse element: odd-length elements are
      // involutions, even-length elements negate y
      if ((p.x + ((p.y % 2 + 2) % 2)) % 2 != 0)
        CHECK(q == p);
      else
        CHECK(q == CayleyPoint{p.x, -p.y});
    }
  }
  CHECK(on_axis > 500);
}
