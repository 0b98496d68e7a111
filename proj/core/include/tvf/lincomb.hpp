#pragma once

#include <tvf/index.hpp>

#include <map>
#include <optional>

namespace tvf {

// Finite Q-linear combination of signed compositions plus a rational slot
// for the image of the empty product.  No zero coefficients are stored;
// the term map is ordered canonically, so iteration and serialization are
// deterministic.
class LinComb {
 public:
  LinComb() = default;  // zero
  static LinComb unit() { return constant(1); }
  static LinComb constant(Rat r);
  static LinComb of(const SignedComposition& c, const Rat& coeff = 1);

  const std::map<SignedComposition, Rat>& terms() const { return terms_; }
  const Rat& constant_part() const { return constant_; }
  Rat coefficient(const SignedComposition& c) const;

  bool zero() const { return terms_.empty() && constant_ == 0; }
  std::size_t term_count() const {
    return terms_.size() + (constant_ != 0 ? 1 : 0);
  }

  void add_term(const SignedComposition& c, const Rat& coeff);
  void add_constant(const Rat& r) { constant_ += r; }

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(const Rat& r);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rat& r) { return a *= r; }
  friend LinComb operator*(const Rat& r, LinComb a) { return a *= r; }
  friend LinComb operator-(LinComb a) { return a *= Rat(-1); }

  friend bool operator==(const LinComb&, const LinComb&) = default;

  bool all_admissible() const;
  // Weight of every term (constant slot counts as weight 0); nullopt when
  // mixed.  The zero combination is homogeneous of every weight.
  std::optional<int> homogeneous_weight() const;

  std::string text() const;  // diagnostic form, e.g. "2*z(2,1) - 1/2*z(3)"

 private:
  std::map<SignedComposition, Rat> terms_;
  Rat constant_ = 0;
};

// Expansion of an MTV index into its 2^depth signed Euler-sum terms with
// coefficients +-1.
LinComb mtv_decompose(const MtvIndex& t);

}  // namespace tvf
