#pragma once

// The group G = <a, b, b' | a^2 = b^2 = b'^2 = e, ab = b'a>, realized two
// ways: as reduced alternating words over {a, b} (with b' = a b a), and as a
// walk on the vertical strip {0,1} x Z that is its Cayley graph. The class
// invariant of a point (0, l) is |l|.

#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeknots/diagram.hpp"

namespace freeknots {

enum class Letter : std::uint8_t { A, B, BPrime };

inline const char* letter_token(Letter l) {
  switch (l) {
    case Letter::A: return "a";
    case Letter::B: return "b";
    case Letter::BPrime: return "b'";
  }
  return "?";
}

struct CayleyPoint {
  int x = 0;
  long long y = 0;
  friend bool operator==(const CayleyPoint&, const CayleyPoint&) = default;
};

// One right-multiplication step on the strip. a flips x; b moves up when
// x + y is even and down otherwise; b' does the opposite.
inline CayleyPoint step_right(CayleyPoint p, Letter g) {
  bool even = ((p.x + p.y) % 2 + 2) % 2 == 0;
  switch (g) {
    case Letter::A: return {1 - p.x, p.y};
    case Letter::B: return {p.x, even ? p.y + 1 : p.y - 1};
    case Letter::BPrime: return {p.x, even ? p.y - 1 : p.y + 1};
  }
  fail(ErrorKind::UnknownLetter, "unknown letter");
}

inline CayleyPoint eval_word(std::span<const Letter> word) {
  CayleyPoint p;
  for (Letter g : word) p = step_right(p, g);
  return p;
}

inline CayleyPoint eval_word(const std::vector<Letter>& word) {
  return eval_word(std::span<const Letter>(word));
}

// |y| of a point on the axis x = 0; the conjugacy class of (0,l) is
// {(0,l), (0,-l)}.
inline long long conj_class_l(CayleyPoint p) {
  if (p.x != 0)
    fail(ErrorKind::NonZeroFirstCoordinate,
         "point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is off the axis");
  return p.y < 0 ? -p.y : p.y;
}

// Element of G in normal form: an alternating word over {a, b}, the empty
// word being the identity.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity() { return {}; }

  static GroupElement from_letters(std::span<const Letter> letters) {
    GroupElement e;
    for (Letter g : letters) {
      switch (g) {
        case Letter::A: e.push('a'); break;
        case Letter::B: e.push('b'); break;
        case Letter::BPrime:
          e.push('a');
          e.push('b');
          e.push('a');
          break;
      }
    }
    return e;
  }

  static GroupElement from_letters(const std::vector<Letter>& letters) {
    return from_letters(std::span<const Letter>(letters));
  }

  GroupElement times(const GroupElement& rhs) const {
    GroupElement e = *this;
    for (char c : rhs.word_) e.push(c);
    return e;
  }

  bool is_identity() const { return word_.empty(); }
  const std::string& word() const { return word_; }

  CayleyPoint coordinates() const {
    CayleyPoint p;
    for (char c : word_) p = step_right(p, c == 'a' ? Letter::A : Letter::B);
    return p;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  void push(char c) {
    if (!word_.empty() && word_.back() == c)
      word_.pop_back();
    else
      word_.push_back(c);
  }

  std::string word_;  // alternating over {a, b}
};

// Parses a letter expression: letters a, b, b', optionally grouped in
// parentheses with a repetition count, e.g. "(b' a)^7 b' b (a b)^7".
inline std::vector<Letter> parse_letter_expr(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  struct Frame {
    std::size_t start;  // index in out where the group begins
  };
  std::vector<Frame> stack;

  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      stack.push_back({out.size()});
      ++i;
    } else if (c == ')') {
      if (stack.empty()) fail(ErrorKind::BadInput, "unmatched ')' in letter expression");
      Frame f = stack.back();
      stack.pop_back();
      ++i;
      long long reps = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail(ErrorKind::BadInput, "'^' must be followed by a count");
        reps = std::stoll(std::string(text.substr(i, j - i)));
        i = j;
      }
      std::vector<Letter> group(out.begin() + static_cast<std::ptrdiff_t>(f.start), out.end());
      for (long long r = 1; r < reps; ++r) out.insert(out.end(), group.begin(), group.end());
      if (reps == 0) out.resize(f.start);
    } else if (c == 'a') {
      out.push_back(Letter::A);
      ++i;
    } else if (c == 'b') {
      ++i;
      if (i < text.size() && text[i] == '\'') {
        out.push_back(Letter::BPrime);
        ++i;
      } else {
        out.push_back(Letter::B);
      }
    } else {
      fail(ErrorKind::UnknownLetter, std::string("unexpected character '") + c + "'");
    }
    skip_ws();
  }
  if (!stack.empty()) fail(ErrorKind::BadInput, "unmatched '(' in letter expression");
  return out;
}

inline std::string format_letters(const std::vector<Letter>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += letter_token(word[i]);
  }
  return out;
}

}  // namespace freeknots
