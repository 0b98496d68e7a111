#pragma once

#include <tvf/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tvf {

// Index conventions
// -----------------
// An Euler sum zeta(s_1,...,s_d; z_1,...,z_d) has exponents s_j >= 1 and
// signs z_j in {+1,-1}.  The text form writes each part as its exponent
// with a 'b' suffix when the sign is -1, e.g. "2b,3,1b,4".  The outer sum
// converges iff (s_1, z_1) != (1, +1); such indices are admissible.
//
// The iterated-integral encoding uses the three forms
//   W0 = dt/t,   Wp = dt/(1-t),   Wm = dt/(-1-t),
// with the outermost integration variable written first.  Block j of the
// word is W0^(s_j - 1) followed by Wp when a_j = +1 and Wm when a_j = -1,
// where a_j = z_1 * ... * z_j.  A valid word never ends in W0; a word is
// admissible iff it does not start with Wp.
//
// A multiple T-value index "T:s_1,...,s_d" has no signs; it is admissible
// iff s_1 > 1.

struct Part {
  int exponent = 1;
  bool bar = false;  // bar <=> sign -1

  int sign() const { return bar ? -1 : +1; }
  friend bool operator==(const Part&, const Part&) = default;
};

class SignedComposition {
 public:
  explicit SignedComposition(std::vector<Part> parts);
  static SignedComposition single(int exponent, bool bar = false);

  const std::vector<Part>& parts() const { return parts_; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  bool admissible() const {
    return !(parts_.front().exponent == 1 && !parts_.front().bar);
  }

  // a_k = z_1 * ... * z_k for 1 <= k <= depth.
  int partial_sign(int k) const;

  SignedComposition tail() const;                              // drop part 1
  SignedComposition concat(const SignedComposition& c) const;  // this . c

  std::string text() const;

  bool operator==(const SignedComposition&) const = default;
  // Canonical order: weight, then depth, then exponent vector, then bars
  // (unbarred before barred).
  std::strong_ordering operator<=>(const SignedComposition& o) const;

 private:
  std::vector<Part> parts_;
};

enum class Letter : std::uint8_t { W0, Wp, Wm };

class IntegralWord {
 public:
  explicit IntegralWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool admissible() const { return letters_.front() != Letter::Wp; }
  std::string text() const;  // one char per letter: '0', '+', '-'

  friend bool operator==(const IntegralWord&, const IntegralWord&) = default;

 private:
  std::vector<Letter> letters_;
};

class MtvIndex {
 public:
  explicit MtvIndex(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  bool admissible() const { return parts_.front() > 1; }
  std::string text() const;  // "T:2,1,1"

  friend bool operator==(const MtvIndex&, const MtvIndex&) = default;

 private:
  std::vector<int> parts_;
};

struct Classification {
  int weight = 0;
  int depth = 0;
  bool admissible = false;
};
Classification classify(const SignedComposition& c);

IntegralWord to_integral_word(const SignedComposition& c);
SignedComposition from_integral_word(const IntegralWord& w);

using ParsedIndex = std::variant<SignedComposition, MtvIndex>;

// Grammar:  INDEX := PART ("," PART)* ;  PART := DIGITS "b"? ;
//           MTV   := "T:" DIGITS ("," DIGITS)*
// Whitespace around commas is ignored; canonical output has none.
ParsedIndex parse_index(std::string_view text);

}  // namespace tvf
