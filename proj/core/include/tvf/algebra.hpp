#pragma once

#include <tvf/lincomb.hpp>

#include <optional>
#include <string>

namespace tvf {

// Quasi-shuffle product on signed compositions: leading parts interleave
// or merge, a merged part adds exponents and multiplies signs.  Bilinear,
// commutative and associative.
LinComb stuffle(const SignedComposition& u, const SignedComposition& v);
LinComb stuffle(const LinComb& u, const LinComb& v);

// Riffle-shuffle product on integral words; every shuffled word is
// converted back to a signed composition.  Total coefficient mass is
// binomial(|u|+|v|, |u|).
LinComb shuffle(const IntegralWord& u, const IntegralWord& v);
LinComb shuffle(const SignedComposition& u, const SignedComposition& v);

// Polynomial in the regularization variable T whose coefficients are
// Q-linear combinations of admissible compositions (plus a rational
// slot).  Products close under the stuffle product on coefficients.
class RegPoly {
 public:
  RegPoly() = default;  // zero
  static RegPoly constant(const LinComb& c) { return t_power(0, c); }
  static RegPoly t_power(int degree, const LinComb& coeff);

  const std::map<int, LinComb>& coefficients() const { return coeff_; }
  LinComb coeff(int degree) const;
  int degree() const;  // -1 for the zero polynomial
  bool zero() const { return coeff_.empty(); }

  void add(int degree, const LinComb& c);
  RegPoly shifted(int degrees) const;  // multiply by T^degrees

  RegPoly& operator+=(const RegPoly& o);
  RegPoly& operator-=(const RegPoly& o);
  RegPoly& operator*=(const Rat& r);
  friend RegPoly operator+(RegPoly a, const RegPoly& b) { return a += b; }
  friend RegPoly operator-(RegPoly a, const RegPoly& b) { return a -= b; }
  friend RegPoly operator*(RegPoly a, const Rat& r) { return a *= r; }
  friend RegPoly operator*(const Rat& r, RegPoly a) { return a *= r; }
  friend RegPoly operator-(RegPoly a) { return a *= Rat(-1); }
  friend bool operator==(const RegPoly&, const RegPoly&) = default;

  // Stuffle-closed product: T-degrees add, coefficients multiply by
  // stuffle.
  friend RegPoly mul(const RegPoly& a, const RegPoly& b);

  bool all_admissible() const;
  // Weight with T counted as 1 per power; nullopt when inhomogeneous.
  std::optional<int> homogeneous_weight() const;
  int max_total_weight() const;

  std::string text() const;

 private:
  std::map<int, LinComb> coeff_;
};

// Stuffle regularization: the unique algebra map with zst(1) = T that is
// the identity on admissible compositions.  Computed by peeling leading
// (1,+) parts against the stuffle product.  Results are memoized.
RegPoly reg_stuffle(const SignedComposition& c);
RegPoly reg_stuffle(const LinComb& l);

// Shuffle regularization: same contract under the shuffle product,
// peeling leading Wp letters.
RegPoly reg_shuffle(const SignedComposition& c);
RegPoly reg_shuffle(const LinComb& l);

// The comparison map between the two regularizations: R-linear, fixes
// degree <= 1, rho(T^2) = T^2 + z(2).  Higher degrees come from the
// exponential series A(u) = exp(sum_{n>=2} (-1)^n z(n) u^n / n) acting on
// e^{Tu}; coefficient products are realized by stuffle.
class RhoMap {
 public:
  explicit RhoMap(int weight_cap);

  int weight_cap() const { return weight_cap_; }
  const LinComb& series_coefficient(int i) const;  // A_i, 0 <= i <= cap
  RegPoly operator()(const RegPoly& p) const;      // throws CapacityError

 private:
  int weight_cap_;
  std::vector<LinComb> a_;  // A_0 .. A_cap
};

const RhoMap& default_rho();  // shared instance with a generous cap

// A named pair of regularized polynomials; the unit of verification.
struct Identity {
  enum class Derivation { transcribed, derived };

  std::string name;
  int weight = 0;
  RegPoly lhs;
  RegPoly rhs;
  std::string provenance;
  Derivation derivation = Derivation::transcribed;

  RegPoly difference() const { return lhs - rhs; }
};

// Regularized double-shuffle identity of a pair: both product expansions
// (with rho applied to the stuffle route) plus the regularization
// comparison of the two concatenation words.  Degree by degree the
// difference is a Q-linear relation among admissible Euler sums.
Identity dsh_identity(const SignedComposition& u, const SignedComposition& v);

}  // namespace tvf
