#include <tvf/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace tvf {

namespace {

std::mutex precision_mutex;
int current_precision = 0;

}  // namespace

void ensure_precision(int digits10) {
  std::lock_guard<std::mutex> lock(precision_mutex);
  if (digits10 > current_precision) {
    current_precision = digits10;
    Real::default_precision(static_cast<unsigned>(digits10));
  }
}

namespace {

// Integrand forms on [0, 1/2].  H2 = -dt/(2-t) is the image of Wm under
// t -> 1-t (the reflection sends 1/(-1-t) to -1/(2-t)).
enum class HalfLetter : std::uint8_t { H0, Hp, Hm, H2 };

HalfLetter direct_letter(Letter l) {
  switch (l) {
    case Letter::W0: return HalfLetter::H0;
    case Letter::Wp: return HalfLetter::Hp;
    default: return HalfLetter::Hm;
  }
}

HalfLetter mirrored_letter(Letter l) {
  switch (l) {
    case Letter::W0: return HalfLetter::Hp;
    case Letter::Wp: return HalfLetter::H0;
    default: return HalfLetter::H2;
  }
}

// Power-series state c[0..N] of an iterated integral from 0 to x, with the
// outermost letter prepended last.  All coefficients stay in [-1, 1].
class SeriesState {
 public:
  explicit SeriesState(int n) : c_(static_cast<std::size_t>(n) + 1, Real(0)) {
    c_[0] = 1;
  }

  void prepend(HalfLetter l) {
    const std::size_t n = c_.size() - 1;
    switch (l) {
      case HalfLetter::H0: {
        // c0 must vanish: dt/t is never the innermost form here.
        for (std::size_t m = 1; m <= n; ++m) c_[m] /= static_cast<unsigned>(m);
        c_[0] = 0;
        return;
      }
      case HalfLetter::Hp: {
        std::vector<Real> out(c_.size(), Real(0));
        Real acc(0);
        for (std::size_t m = 1; m <= n; ++m) {
          acc += c_[m - 1];
          out[m] = acc / static_cast<unsigned>(m);
        }
        c_.swap(out);
        return;
      }
      case HalfLetter::Hm: {
        // dt/(-1-t) = sum_j -(-1)^j t^j dt, so
        // out[m] = ((-1)^m / m) * sum_{i<m} (-1)^i c_i.
        std::vector<Real> out(c_.size(), Real(0));
        Real acc(0);
        for (std::size_t m = 1; m <= n; ++m) {
          acc += (m % 2 == 1) ? c_[m - 1] : -c_[m - 1];  // (-1)^{m-1} c_{m-1}
          out[m] = ((m % 2 == 0) ? acc : -acc) / static_cast<unsigned>(m);
        }
        c_.swap(out);
        return;
      }
      case HalfLetter::H2: {
        // -dt/(2-t) = sum_j -t^j / 2^{j+1} dt
        std::vector<Real> out(c_.size(), Real(0));
        Real acc(0);   // sum_{i<m} 2^i c_i
        Real p(1);     // 2^{m-1}
        Real q(1);     // 2^m
        for (std::size_t m = 1; m <= n; ++m) {
          acc += p * c_[m - 1];
          p *= 2;
          q *= 2;
          out[m] = -acc / (q * static_cast<unsigned>(m));
        }
        c_.swap(out);
        return;
      }
    }
  }

  // Value at x = 1/2; the tail beyond N is bounded by 2^-N.
  Real value_at_half() const {
    Real v(0);
    const Real half = Real(1) / 2;
    for (std::size_t m = c_.size(); m-- > 0;) v = v * half + c_[m];
    return v;
  }

 private:
  std::vector<Real> c_;
};

Real pow10(int e) {
  Real r = pow(Real(10), e);
  return r;
}

}  // namespace

void Evaluator::clear_cache() {
  std::unique_lock lock(mu_);
  memo_.clear();
}

EvalResult Evaluator::eval_euler(const SignedComposition& c,
                                 const PrecisionCtx& ctx) const {
  ctx.validate();
  if (!c.admissible())
    throw DomainError("non-admissible index: " + c.text());
  const auto key = std::make_pair(c.text(), ctx.digits);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  EvalResult r = eval_euler_uncached(c, ctx);
  std::unique_lock lock(mu_);
  return memo_.emplace(key, std::move(r)).first->second;
}

EvalResult Evaluator::eval_euler_uncached(const SignedComposition& c,
                                          const PrecisionCtx& ctx) const {
  ensure_precision(ctx.working_digits() + 10);
  const IntegralWord word = to_integral_word(c);
  const int n = word.length();

  // Tail target 10^-(digits + guard/2); 5(n+1) absorbs the convolution.
  const double bits_per_digit = 3.3219280948873623;
  const int target_digits = ctx.digits + ctx.guard / 2;
  const int terms =
      static_cast<int>(target_digits * bits_per_digit) +
      static_cast<int>(std::ceil(std::log2(5.0 * (n + 1)))) + 8;
  if (terms > term_cap_)
    throw CapacityError("series length " + std::to_string(terms) +
                        " exceeds the configured term cap");

  const auto& letters = word.letters();
  // Suffix integrals over [0,1/2], innermost letters first.
  std::vector<Real> suffix(static_cast<std::size_t>(n) + 1, Real(0));
  {
    SeriesState state(terms);
    suffix[static_cast<std::size_t>(n)] = 1;
    for (int k = n - 1; k >= 0; --k) {
      state.prepend(direct_letter(letters[static_cast<std::size_t>(k)]));
      suffix[static_cast<std::size_t>(k)] = state.value_at_half();
    }
  }
  // Prefix integrals over [1/2,1]: reversed words under t -> 1-t.
  Real total(0);
  {
    SeriesState state(terms);
    Real prefix(1);
    total = prefix * suffix[0];
    for (int k = 1; k <= n; ++k) {
      state.prepend(mirrored_letter(letters[static_cast<std::size_t>(k - 1)]));
      prefix = state.value_at_half();
      total += prefix * suffix[static_cast<std::size_t>(k)];
    }
  }

  EvalResult out;
  out.value = total;
  // Each series value is bounded by 2 with tail error <= 2^-terms; the
  // rounding allowance is generous at the working precision.
  Real tail = Real(5 * (n + 1)) * pow(Real(2), -terms);
  Real rounding = Real(100 * (n + 1) * (n + 1)) *
                  pow10(-(ctx.working_digits() + 6));
  out.error_bound = tail + rounding;
  if (out.error_bound > pow10(-ctx.digits))
    throw CapacityError("requested precision unreachable; achieved bound " +
                        out.error_bound.str(3));
  return out;
}

EvalResult Evaluator::eval_lincomb(const LinComb& l,
                                   const PrecisionCtx& ctx) const {
  ctx.validate();
  ensure_precision(ctx.working_digits() + 10);
  EvalResult out;
  out.value = Real(l.constant_part().convert_to<Real>());
  out.error_bound = 0;
  for (const auto& [c, q] : l.terms()) {
    EvalResult term = eval_euler(c, ctx);
    const Real qr = q.convert_to<Real>();
    out.value += qr * term.value;
    out.error_bound += abs(qr) * term.error_bound;
  }
  return out;
}

EvalResult Evaluator::eval_mtv(const MtvIndex& t,
                               const PrecisionCtx& ctx) const {
  if (!t.admissible())
    throw DomainError("non-admissible T-index: " + t.text());
  return eval_lincomb(mtv_decompose(t), ctx);
}

EvalResult Evaluator::eval_regpoly(const RegPoly& p, const Real& t_value,
                                   const PrecisionCtx& ctx) const {
  ctx.validate();
  ensure_precision(ctx.working_digits() + 10);
  if (!p.all_admissible())
    throw DomainError("RegPoly carries a non-admissible composition");
  EvalResult out;
  out.value = 0;
  out.error_bound = 0;
  const int deg = p.degree();
  for (int k = deg; k >= 0; --k) {
    out.value *= t_value;
    out.error_bound *= abs(t_value);
    EvalResult ck = eval_lincomb(p.coeff(k), ctx);
    out.value += ck.value;
    out.error_bound += ck.error_bound;
  }
  return out;
}

Evaluator& shared_evaluator() {
  static Evaluator ev;
  return ev;
}

Rat oracle_partial_sum(const SignedComposition& c, int M) {
  if (M < 0) throw RangeError("partial sum needs M >= 0");
  const int d = c.depth();
  // L_j[n] = truncation at n of the sum over the suffix starting at part j.
  std::vector<Rat> next(static_cast<std::size_t>(M) + 1, Rat(1));
  std::vector<Rat> cur(static_cast<std::size_t>(M) + 1, Rat(0));
  for (int j = d - 1; j >= 0; --j) {
    const Part& p = c.parts()[static_cast<std::size_t>(j)];
    cur.assign(static_cast<std::size_t>(M) + 1, Rat(0));
    for (int m = 1; m <= M; ++m) {
      Rat term = Rat(p.sign() == -1 && (m % 2 == 1) ? -1 : 1) /
                 rat_pow(Rat(m), p.exponent);
      cur[static_cast<std::size_t>(m)] =
          cur[static_cast<std::size_t>(m - 1)] +
          term * next[static_cast<std::size_t>(m - 1)];
    }
    next = cur;
  }
  return next[static_cast<std::size_t>(M)];
}

namespace {

// Atoms c * (alpha k + beta)^-s summed over k >= 1.
struct EmAtom {
  Rat coeff;
  int alpha;
  int beta;
  int s;
};

const std::vector<Rat>& bernoulli_table() {
  static const std::vector<Rat> table = [] {
    const int count = 129;
    std::vector<Rat> b(static_cast<std::size_t>(count));
    b[0] = 1;
    for (int m = 1; m < count; ++m) {
      Rat acc = 0;
      for (int j = 0; j < m; ++j)
        acc += Rat(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
  }();
  return table;
}

Real em_atom_derivative(const std::vector<EmAtom>& atoms, int m, int K) {
  // f^(m)(K) = sum_i c_i (-alpha_i)^m (s_i)_m (alpha_i K + beta_i)^(-s_i-m)
  Real out(0);
  for (const EmAtom& a : atoms) {
    Rat rising = 1;
    for (int i = 0; i < m; ++i) rising *= (a.s + i);
    const Rat factor = a.coeff * rising * rat_pow(Rat(-a.alpha), m);
    const long base = static_cast<long>(a.alpha) * K + a.beta;
    out += factor.convert_to<Real>() / pow(Real(base), a.s + m);
  }
  return out;
}

Real em_sum(const std::vector<EmAtom>& atoms, int digits) {
  ensure_precision(digits + 25);
  const Real target = pow(Real(10), -(digits + 8));
  int K = std::max(40, 2 * digits);
  for (int attempt = 0; attempt < 6; ++attempt, K *= 2) {
    // Head.
    Real head(0);
    for (int k = 1; k < K; ++k)
      for (const EmAtom& a : atoms) {
        const long base = static_cast<long>(a.alpha) * k + a.beta;
        head += a.coeff.convert_to<Real>() / pow(Real(base), a.s);
      }
    // Integral from K plus half-weight at K.
    Real tail(0);
    Rat log_mass = 0;  // sum of c/alpha over s=1 atoms; must vanish
    for (const EmAtom& a : atoms) {
      const long base = static_cast<long>(a.alpha) * K + a.beta;
      if (a.s == 1) {
        log_mass += a.coeff / a.alpha;
        tail -= (a.coeff / a.alpha).convert_to<Real>() * log(Real(base));
      } else {
        tail += (a.coeff / (Rat(a.alpha) * (a.s - 1))).convert_to<Real>() /
                pow(Real(base), a.s - 1);
      }
      tail += (a.coeff.convert_to<Real>() / pow(Real(base), a.s)) / 2;
    }
    if (log_mass != 0)
      throw DomainError("divergent Euler-Maclaurin atom family");
    // Bernoulli corrections.
    const auto& bern = bernoulli_table();
    Real prev_mag(0);
    bool converged = false;
    for (int j = 1; 2 * j + 1 < static_cast<int>(bern.size()); ++j) {
      Rat b2j = bern[static_cast<std::size_t>(2 * j)];
      Rat fact = 1;
      for (int i = 2; i <= 2 * j; ++i) fact *= i;
      Real term = -(b2j / fact).convert_to<Real>() *
                  em_atom_derivative(atoms, 2 * j - 1, K);
      Real mag = abs(term);
      if (j > 1 && mag > prev_mag && mag > target) break;  // diverging: retry
      tail += term;
      prev_mag = mag;
      if (mag < target) {
        converged = true;
        break;
      }
    }
    if (converged) return head + tail;
  }
  throw CapacityError("Euler-Maclaurin oracle failed to converge");
}

}  // namespace

Real oracle_zeta_em(int s, bool alternating, int digits) {
  if (s < 1 || (s == 1 && !alternating))
    throw DomainError("depth-1 oracle needs s >= 2 or an alternating sign");
  std::vector<EmAtom> atoms;
  if (alternating) {
    atoms.push_back(EmAtom{Rat(1), 2, 0, s});
    atoms.push_back(EmAtom{Rat(-1), 2, -1, s});
  } else {
    atoms.push_back(EmAtom{Rat(1), 1, 0, s});
  }
  return em_sum(atoms, digits);
}

Real oracle_t_em(int s, int digits) {
  if (s < 2) throw DomainError("T(s) needs s >= 2");
  return em_sum({EmAtom{Rat(2), 2, -1, s}}, digits);
}

namespace {

// Shared direct-summation core: nested truncations S(M) recorded at
// geometric cutoffs, extrapolated against {1} u {log^j M / M^i}.
struct DirectSpec {
  std::vector<int> exponents;
  std::vector<int> signs;      // +1 / -1 per slot (Euler sums)
  std::vector<int> parity;     // -1 = none, else required m % 2 (MTVs)
  Rat scale = 1;
};

Real direct_extrapolated(const DirectSpec& spec, int digits) {
  const int work = std::max(120, digits * 6);
  ensure_precision(work + 10);
  const int d = static_cast<int>(spec.exponents.size());
  const int max_i = 4, max_j = 3;
  const int unknowns = 1 + max_i * (max_j + 1);
  const int nodes = unknowns;
  const long m0 = 50;
  std::vector<long> cutoffs(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) cutoffs[static_cast<std::size_t>(i)] = m0 << i;

  std::vector<Real> level(static_cast<std::size_t>(d) + 1, Real(0));
  level[static_cast<std::size_t>(d)] = 1;
  std::vector<Real> samples;
  samples.reserve(static_cast<std::size_t>(nodes));
  std::size_t next_node = 0;
  Real inv_m(0), term(0);
  for (long m = 1; m <= cutoffs.back(); ++m) {
    inv_m = Real(1) / m;
    // Ascending j reads level[j+1] before it is overwritten, i.e. the
    // truncation at m-1, which is what the nested sum needs.
    for (int j = 0; j < d; ++j) {
      if (spec.parity[static_cast<std::size_t>(j)] >= 0 &&
          m % 2 != spec.parity[static_cast<std::size_t>(j)])
        continue;
      term = inv_m;
      for (int e = 1; e < spec.exponents[static_cast<std::size_t>(j)]; ++e)
        term *= inv_m;
      if (spec.signs[static_cast<std::size_t>(j)] == -1 && (m % 2 == 1))
        term = -term;
      level[static_cast<std::size_t>(j)] +=
          term * level[static_cast<std::size_t>(j) + 1];
    }
    if (next_node < cutoffs.size() &&
        m == cutoffs[static_cast<std::size_t>(next_node)]) {
      samples.push_back(level[0]);
      ++next_node;
    }
  }

  // Solve V x = samples for [limit, c_ij].
  std::vector<std::vector<Real>> a(static_cast<std::size_t>(nodes));
  for (int r = 0; r < nodes; ++r) {
    auto& row = a[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(unknowns) + 1, Real(0));
    const Real big_m(cutoffs[static_cast<std::size_t>(r)]);
    const Real lg = log(big_m);
    row[0] = 1;
    int col = 1;
    for (int i = 1; i <= max_i; ++i)
      for (int j = 0; j <= max_j; ++j)
        row[static_cast<std::size_t>(col++)] = pow(lg, j) / pow(big_m, i);
    row[static_cast<std::size_t>(unknowns)] =
        samples[static_cast<std::size_t>(r)];
  }
  for (int col = 0; col < unknowns; ++col) {
    int pivot = -1;
    Real best(0);
    for (int r = col; r < nodes; ++r) {
      Real mag = abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
      if (pivot < 0 || mag > best) {
        pivot = r;
        best = mag;
      }
    }
    if (best == 0) throw CapacityError("singular extrapolation system");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < nodes; ++r) {
      if (r == col) continue;
      Real f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
               a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int cc = col; cc <= unknowns; ++cc)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
    }
  }
  Real limit = a[0][static_cast<std::size_t>(unknowns)] / a[0][0];
  return spec.scale.convert_to<Real>() * limit;
}

}  // namespace

Real oracle_direct_euler(const SignedComposition& c, int digits) {
  if (!c.admissible())
    throw DomainError("non-admissible index: " + c.text());
  DirectSpec spec;
  for (const Part& p : c.parts()) {
    spec.exponents.push_back(p.exponent);
    spec.signs.push_back(p.sign());
    spec.parity.push_back(-1);
  }
  return direct_extrapolated(spec, digits);
}

Real oracle_direct_mtv(const MtvIndex& t, int digits) {
  if (!t.admissible())
    throw DomainError("non-admissible T-index: " + t.text());
  DirectSpec spec;
  const int d = t.depth();
  for (int j = 0; j < d; ++j) {
    spec.exponents.push_back(t.parts()[static_cast<std::size_t>(j)]);
    spec.signs.push_back(1);
    spec.parity.push_back((d - j) % 2);  // m_j = d - j + 1 - 1 ... mod 2
  }
  spec.scale = rat_pow(Rat(2), d);
  return direct_extrapolated(spec, digits);
}

}  // namespace tvf
