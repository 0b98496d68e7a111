#include <tvf/algebra.hpp>

#include <mutex>
#include <span>

namespace tvf {

namespace {

using PartSpan = std::span<const Part>;
using LetterSpan = std::span<const Letter>;

LinComb prepend(const Part& p, const LinComb& tail) {
  LinComb out;
  if (tail.constant_part() != 0)
    out.add_term(SignedComposition({p}), tail.constant_part());
  for (const auto& [c, q] : tail.terms()) {
    std::vector<Part> parts;
    parts.reserve(c.parts().size() + 1);
    parts.push_back(p);
    parts.insert(parts.end(), c.parts().begin(), c.parts().end());
    out.add_term(SignedComposition(std::move(parts)), q);
  }
  return out;
}

LinComb stuffle_span(PartSpan u, PartSpan v) {
  if (u.empty() && v.empty()) return LinComb::unit();
  if (u.empty()) {
    return LinComb::of(
        SignedComposition(std::vector<Part>(v.begin(), v.end())));
  }
  if (v.empty()) {
    return LinComb::of(
        SignedComposition(std::vector<Part>(u.begin(), u.end())));
  }
  const Part a = u.front();
  const Part b = v.front();
  LinComb out = prepend(a, stuffle_span(u.subspan(1), v));
  out += prepend(b, stuffle_span(u, v.subspan(1)));
  const Part merged{a.exponent + b.exponent, a.bar != b.bar};
  out += prepend(merged, stuffle_span(u.subspan(1), v.subspan(1)));
  return out;
}

// Shuffles over words, keyed by letter sequences until the final
// conversion back to compositions.
void shuffle_rec(LetterSpan u, LetterSpan v, std::vector<Letter>& acc,
                 std::map<std::vector<Letter>, Rat>& out) {
  if (u.empty() && v.empty()) {
    out[acc] += 1;
    return;
  }
  if (!u.empty()) {
    acc.push_back(u.front());
    shuffle_rec(u.subspan(1), v, acc, out);
    acc.pop_back();
  }
  if (!v.empty()) {
    acc.push_back(v.front());
    shuffle_rec(u, v.subspan(1), acc, out);
    acc.pop_back();
  }
}

}  // namespace

LinComb stuffle(const SignedComposition& u, const SignedComposition& v) {
  return stuffle_span(PartSpan(u.parts()), PartSpan(v.parts()));
}

LinComb stuffle(const LinComb& u, const LinComb& v) {
  LinComb out;
  out.add_constant(u.constant_part() * v.constant_part());
  if (v.constant_part() != 0)
    for (const auto& [c, q] : u.terms()) out.add_term(c, q * v.constant_part());
  if (u.constant_part() != 0)
    for (const auto& [c, q] : v.terms()) out.add_term(c, q * u.constant_part());
  for (const auto& [cu, qu] : u.terms())
    for (const auto& [cv, qv] : v.terms()) out += (qu * qv) * stuffle(cu, cv);
  return out;
}

LinComb shuffle(const IntegralWord& u, const IntegralWord& v) {
  std::map<std::vector<Letter>, Rat> words;
  std::vector<Letter> acc;
  acc.reserve(u.letters().size() + v.letters().size());
  shuffle_rec(LetterSpan(u.letters()), LetterSpan(v.letters()), acc, words);
  LinComb out;
  for (const auto& [w, q] : words)
    out.add_term(from_integral_word(IntegralWord(w)), q);
  return out;
}

LinComb shuffle(const SignedComposition& u, const SignedComposition& v) {
  return shuffle(to_integral_word(u), to_integral_word(v));
}

RegPoly RegPoly::t_power(int degree, const LinComb& coeff) {
  RegPoly out;
  out.add(degree, coeff);
  return out;
}

LinComb RegPoly::coeff(int degree) const {
  auto it = coeff_.find(degree);
  return it == coeff_.end() ? LinComb() : it->second;
}

int RegPoly::degree() const {
  return coeff_.empty() ? -1 : coeff_.rbegin()->first;
}

void RegPoly::add(int degree, const LinComb& c) {
  if (degree < 0) throw DomainError("negative T-degree");
  if (c.zero()) return;
  auto [it, inserted] = coeff_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.zero()) coeff_.erase(it);
  }
}

RegPoly RegPoly::shifted(int degrees) const {
  RegPoly out;
  for (const auto& [k, c] : coeff_) out.add(k + degrees, c);
  return out;
}

RegPoly& RegPoly::operator+=(const RegPoly& o) {
  for (const auto& [k, c] : o.coeff_) add(k, c);
  return *this;
}

RegPoly& RegPoly::operator-=(const RegPoly& o) {
  for (const auto& [k, c] : o.coeff_) add(k, -c);
  return *this;
}

RegPoly& RegPoly::operator*=(const Rat& r) {
  if (r == 0) {
    coeff_.clear();
    return *this;
  }
  for (auto& [k, c] : coeff_) c *= r;
  return *this;
}

RegPoly mul(const RegPoly& a, const RegPoly& b) {
  RegPoly out;
  for (const auto& [ka, ca] : a.coeff_)
    for (const auto& [kb, cb] : b.coeff_) out.add(ka + kb, stuffle(ca, cb));
  return out;
}

bool RegPoly::all_admissible() const {
  for (const auto& [k, c] : coeff_)
    if (!c.all_admissible()) return false;
  return true;
}

std::optional<int> RegPoly::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [k, c] : coeff_) {
    auto cw = c.homogeneous_weight();
    if (!cw) return std::nullopt;
    if (w && *w != *cw + k) return std::nullopt;
    w = *cw + k;
  }
  return w;
}

int RegPoly::max_total_weight() const {
  int w = 0;
  for (const auto& [k, c] : coeff_) {
    int cw = 0;
    for (const auto& [comp, q] : c.terms()) cw = std::max(cw, comp.weight());
    w = std::max(w, k + cw);
  }
  return w;
}

std::string RegPoly::text() const {
  if (zero()) return "0";
  std::string out;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->first == 0) {
      out += "(" + it->second.text() + ")";
    } else {
      out += "(" + it->second.text() + ")*T";
      if (it->first > 1) out += "^" + std::to_string(it->first);
    }
  }
  return out;
}

namespace {

std::mutex reg_mutex;
std::map<SignedComposition, RegPoly> reg_stuffle_cache;
std::map<SignedComposition, RegPoly> reg_shuffle_cache;

RegPoly reg_stuffle_uncached(const SignedComposition& c) {
  // c starts with (1,+).  Peel it: stuffle((1), tail) = m*c + R with every
  // composition in R carrying a strictly shorter leading (1,+) run, so
  //   zst(c) = (T * zst(tail) - zst(R)) / m.
  const SignedComposition one = SignedComposition::single(1);
  if (c.depth() == 1) return RegPoly::t_power(1, LinComb::unit());
  const SignedComposition tail = c.tail();
  LinComb s = stuffle(one, tail);
  const Rat m = s.coefficient(c);
  s.add_term(c, -m);
  RegPoly out = reg_stuffle(tail).shifted(1);
  out -= reg_stuffle(s);
  out *= Rat(1) / m;
  return out;
}

RegPoly reg_shuffle_uncached(const SignedComposition& c) {
  // The word of c starts with Wp.  Peel it against the shuffle product;
  // the remaining word is the word of tail(c).
  if (c.depth() == 1) return RegPoly::t_power(1, LinComb::unit());
  const SignedComposition tail = c.tail();
  LinComb s = shuffle(IntegralWord({Letter::Wp}), to_integral_word(tail));
  const Rat m = s.coefficient(c);
  s.add_term(c, -m);
  RegPoly out = reg_shuffle(tail).shifted(1);
  out -= reg_shuffle(s);
  out *= Rat(1) / m;
  return out;
}

}  // namespace

RegPoly reg_stuffle(const SignedComposition& c) {
  if (c.admissible()) return RegPoly::constant(LinComb::of(c));
  {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = reg_stuffle_cache.find(c);
    if (it != reg_stuffle_cache.end()) return it->second;
  }
  RegPoly out = reg_stuffle_uncached(c);
  std::lock_guard<std::mutex> lock(reg_mutex);
  return reg_stuffle_cache.emplace(c, std::move(out)).first->second;
}

RegPoly reg_stuffle(const LinComb& l) {
  RegPoly out;
  if (l.constant_part() != 0)
    out.add(0, LinComb::constant(l.constant_part()));
  for (const auto& [c, q] : l.terms()) out += q * reg_stuffle(c);
  return out;
}

RegPoly reg_shuffle(const SignedComposition& c) {
  if (c.admissible()) return RegPoly::constant(LinComb::of(c));
  {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = reg_shuffle_cache.find(c);
    if (it != reg_shuffle_cache.end()) return it->second;
  }
  RegPoly out = reg_shuffle_uncached(c);
  std::lock_guard<std::mutex> lock(reg_mutex);
  return reg_shuffle_cache.emplace(c, std::move(out)).first->second;
}

RegPoly reg_shuffle(const LinComb& l) {
  RegPoly out;
  if (l.constant_part() != 0)
    out.add(0, LinComb::constant(l.constant_part()));
  for (const auto& [c, q] : l.terms()) out += q * reg_shuffle(c);
  return out;
}

RhoMap::RhoMap(int weight_cap) : weight_cap_(weight_cap) {
  if (weight_cap_ < 2) throw RangeError("rho weight cap must be >= 2");
  // log A = sum_{n>=2} (-1)^n z(n) u^n / n, exponentiated via
  // n A_n = sum_k k L_k A_{n-k}.
  std::vector<LinComb> log_a(static_cast<std::size_t>(weight_cap_) + 1);
  for (int n = 2; n <= weight_cap_; ++n) {
    const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
    log_a[static_cast<std::size_t>(n)] =
        LinComb::of(SignedComposition::single(n), sign / n);
  }
  a_.assign(static_cast<std::size_t>(weight_cap_) + 1, LinComb());
  a_[0] = LinComb::unit();
  for (int n = 1; n <= weight_cap_; ++n) {
    LinComb acc;
    for (int k = 2; k <= n; ++k)
      acc += Rat(k) * stuffle(log_a[static_cast<std::size_t>(k)],
                              a_[static_cast<std::size_t>(n - k)]);
    acc *= Rat(1) / n;
    a_[static_cast<std::size_t>(n)] = acc;
  }
}

const LinComb& RhoMap::series_coefficient(int i) const {
  if (i < 0 || i > weight_cap_)
    throw CapacityError("rho series coefficient beyond weight cap");
  return a_[static_cast<std::size_t>(i)];
}

RegPoly RhoMap::operator()(const RegPoly& p) const {
  if (p.max_total_weight() > weight_cap_)
    throw CapacityError("RegPoly weight exceeds rho weight cap");
  RegPoly out;
  for (const auto& [k, c] : p.coefficients()) {
    // rho(T^k) = sum_i C(k,i) i! A_i T^{k-i}
    Rat falling = 1;  // k! / (k-i)!
    for (int i = 0; i <= k; ++i) {
      if (i > 0) falling *= (k - i + 1);
      const LinComb& ai = a_[static_cast<std::size_t>(i)];
      if (ai.zero()) continue;
      out.add(k - i, stuffle(ai * falling, c));
    }
  }
  return out;
}

const RhoMap& default_rho() {
  static const RhoMap rho(16);
  return rho;
}

Identity dsh_identity(const SignedComposition& u, const SignedComposition& v) {
  Identity id;
  id.name = "dsh(" + u.text() + " | " + v.text() + ")";
  id.provenance = "double shuffle of (" + u.text() + ") and (" + v.text() + ")";
  id.derivation = Identity::Derivation::derived;
  id.weight = u.weight() + v.weight();

  const RhoMap& rho = default_rho();
  // The product comparison is valid whenever at least one factor is
  // admissible; a pair of divergent factors contributes only through the
  // word comparisons below.
  if (u.admissible() || v.admissible()) {
    id.lhs += reg_shuffle(shuffle(u, v));
    id.rhs += rho(reg_stuffle(stuffle(u, v)));
  }
  const SignedComposition uv = u.concat(v);
  id.lhs += reg_shuffle(uv);
  id.rhs += rho(reg_stuffle(uv));
  if (const SignedComposition vu = v.concat(u); !(vu == uv)) {
    id.lhs += reg_shuffle(vu);
    id.rhs += rho(reg_stuffle(vu));
  }
  return id;
}

}  // namespace tvf
