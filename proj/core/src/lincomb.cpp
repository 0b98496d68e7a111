#include <tvf/lincomb.hpp>

namespace tvf {

LinComb LinComb::constant(Rat r) {
  LinComb out;
  out.constant_ = std::move(r);
  return out;
}

LinComb LinComb::of(const SignedComposition& c, const Rat& coeff) {
  LinComb out;
  out.add_term(c, coeff);
  return out;
}

Rat LinComb::coefficient(const SignedComposition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LinComb::add_term(const SignedComposition& c, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  constant_ += o.constant_;
  for (const auto& [c, q] : o.terms_) add_term(c, q);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  constant_ -= o.constant_;
  for (const auto& [c, q] : o.terms_) add_term(c, -q);
  return *this;
}

LinComb& LinComb::operator*=(const Rat& r) {
  if (r == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= r;
  for (auto& [c, q] : terms_) q *= r;
  return *this;
}

bool LinComb::all_admissible() const {
  for (const auto& [c, q] : terms_)
    if (!c.admissible()) return false;
  return true;
}

std::optional<int> LinComb::homogeneous_weight() const {
  std::optional<int> w;
  if (constant_ != 0) w = 0;
  for (const auto& [c, q] : terms_) {
    if (w && *w != c.weight()) return std::nullopt;
    w = c.weight();
  }
  return w ? w : std::optional<int>(0);
}

std::string LinComb::text() const {
  if (zero()) return "0";
  std::string out;
  auto push = [&](const Rat& q, const std::string& sym) {
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += (q < 0) ? " - " : " + ";
    }
    Rat a = abs(q);
    if (a != 1 || sym.empty()) {
      out += rat_text(a);
      if (!sym.empty()) out += "*";
    }
    out += sym;
  };
  if (constant_ != 0) push(constant_, "");
  for (const auto& [c, q] : terms_) push(q, "z(" + c.text() + ")");
  return out;
}

LinComb mtv_decompose(const MtvIndex& t) {
  const int d = t.depth();
  LinComb out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Part> parts;
    parts.reserve(static_cast<std::size_t>(d));
    int exp = 0;  // parity of sum of (d-j+1)*eps_j
    for (int j = 0; j < d; ++j) {
      const bool bar = (mask >> j) & 1u;
      parts.push_back(Part{t.parts()[static_cast<std::size_t>(j)], bar});
      if (bar) exp += d - j;  // d - (j+1) + 1
    }
    out.add_term(SignedComposition(std::move(parts)),
                 (exp % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return out;
}

}  // namespace tvf
