#pragma once

#include <tvf/algebra.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <shared_mutex>
#include <utility>

namespace tvf {

using Real = boost::multiprecision::mpfr_float;

// Raise the global working precision (decimal digits).  Precision is only
// ever increased, so concurrent evaluations at different targets stay
// correct; callers set it once per run for deterministic output.
void ensure_precision(int digits10);

struct PrecisionCtx {
  int digits = 40;
  int guard = 15;

  int working_digits() const { return digits + guard; }
  void validate() const {
    if (digits < 10) throw RangeError("precision must request >= 10 digits");
    if (guard < 0) throw RangeError("guard digits must be >= 0");
  }
};

struct EvalResult {
  Real value;
  Real error_bound;  // certified absolute bound, <= 10^-digits on success
};

// Arbitrary-precision evaluation of admissible Euler sums via the Hoelder
// convolution at 1/2: the iterated integral over [0,1] splits into
// products of integrals over [0,1/2], the upper halves mapped through
// t -> 1-t (which swaps dt/t and dt/(1-t) and sends dt/(-1-t) to
// dt/(2-t)).  Every piece is a nested power series with term ratio <= 1/2
// and coefficients bounded by 1, so the geometric tail bound is rigorous.
// Results are memoized per (canonical index, digits).
class Evaluator {
 public:
  EvalResult eval_euler(const SignedComposition& c,
                        const PrecisionCtx& ctx = {}) const;
  EvalResult eval_mtv(const MtvIndex& t, const PrecisionCtx& ctx = {}) const;
  EvalResult eval_lincomb(const LinComb& l, const PrecisionCtx& ctx = {}) const;
  EvalResult eval_regpoly(const RegPoly& p, const Real& t_value,
                          const PrecisionCtx& ctx = {}) const;

  void set_term_cap(long cap) { term_cap_ = cap; }
  void clear_cache();

 private:
  EvalResult eval_euler_uncached(const SignedComposition& c,
                                 const PrecisionCtx& ctx) const;

  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<std::string, int>, EvalResult> memo_;
  long term_cap_ = 2000000;
};

Evaluator& shared_evaluator();

// Exact rational truncation zeta^(M): the nested sum over
// M >= n_1 > ... > n_d > 0.
Rat oracle_partial_sum(const SignedComposition& c, int M);

// Independent depth-1 oracle: Euler-Maclaurin tail summation.  Alternating
// series are split by parity so divergent halves cancel inside the
// integral term.
Real oracle_zeta_em(int s, bool alternating, int digits);
Real oracle_t_em(int s, int digits);  // T(s) = sum over odd m of 2/m^s

// Independent low-precision oracle for any depth: direct nested summation
// at geometric cutoffs M, extrapolated against {1} u {log^j M / M^i}.
// Good for 10-12 digits; used for cross-checks only.
Real oracle_direct_euler(const SignedComposition& c, int digits = 12);
Real oracle_direct_mtv(const MtvIndex& t, int digits = 12);

}  // namespace tvf
