#include <tvf/genfunc.hpp>

#include <algorithm>

namespace tvf {

namespace {

SignedComposition cp1(int a, int sa) {
  return SignedComposition({Part{a, sa < 0}});
}
SignedComposition cp2(int a, int sa, int b, int sb) {
  return SignedComposition({Part{a, sa < 0}, Part{b, sb < 0}});
}
SignedComposition cp3(int a, int sa, int b, int sb, int c, int sc) {
  return SignedComposition({Part{a, sa < 0}, Part{b, sb < 0}, Part{c, sc < 0}});
}

RegPoly Zst(const SignedComposition& c) { return reg_stuffle(c); }
RegPoly Zsh(const SignedComposition& c) { return reg_shuffle(c); }

RegPoly Z1(int a, int sa = 1) { return Zst(cp1(a, sa)); }
RegPoly Z2(int a, int sa, int b, int sb) { return Zst(cp2(a, sa, b, sb)); }
RegPoly Z3(int a, int sa, int b, int sb, int c, int sc) {
  return Zst(cp3(a, sa, b, sb, c, sc));
}
RegPoly Zsh3(int a, int sa, int b, int sb, int c, int sc) {
  return Zsh(cp3(a, sa, b, sb, c, sc));
}

RegPoly Tv(const std::vector<int>& parts) {
  return RegPoly::constant(mtv_decompose(MtvIndex(parts)));
}

// sum_{i+j=n-1} x^i z^j, the polynomial form of (x^n - z^n)/(x - z).
Rat diff_quot(const Rat& x, const Rat& z, int n) {
  Rat acc = 0;
  for (int i = 0; i <= n - 1; ++i)
    acc += rat_pow(x, i) * rat_pow(z, n - 1 - i);
  return acc;
}

Identity make(std::string name, int w, RegPoly lhs, RegPoly rhs,
              std::string prov,
              Identity::Derivation kind = Identity::Derivation::transcribed) {
  Identity id;
  id.name = std::move(name);
  id.weight = w;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.provenance = std::move(prov);
  id.derivation = kind;
  return id;
}

void require_weight(int w, int min_w, const char* what) {
  if (w < min_w)
    throw RangeError(std::string(what) + " needs weight >= " +
                     std::to_string(min_w) + ", got " + std::to_string(w));
}

}  // namespace

FSeries::FSeries(std::vector<int> signs, Sharp sharp, int truncation_weight)
    : signs_(std::move(signs)), sharp_(sharp), weight_(truncation_weight) {
  if (signs_.empty()) throw DomainError("FSeries needs at least one slot");
  for (int s : signs_)
    if (s != 1 && s != -1) throw DomainError("FSeries signs must be +-1");
  if (weight_ < depth())
    throw RangeError("FSeries truncation below the minimal weight");
}

const RegPoly& FSeries::coeff(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != depth())
    throw DomainError("FSeries coefficient arity mismatch");
  int total = 0;
  for (int e : exponents) {
    if (e < 1) throw DomainError("FSeries exponents must be >= 1");
    total += e - 1;
  }
  if (total > weight_ - depth())
    throw RangeError("FSeries coefficient beyond the truncation weight");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(exponents);
  if (it != memo_.end()) return it->second;
  std::vector<Part> parts;
  for (int j = 0; j < depth(); ++j)
    parts.push_back(Part{exponents[static_cast<std::size_t>(j)],
                         signs_[static_cast<std::size_t>(j)] < 0});
  SignedComposition c(std::move(parts));
  RegPoly value = (sharp_ == Sharp::star) ? reg_stuffle(c) : reg_shuffle(c);
  return memo_.emplace(exponents, std::move(value)).first->second;
}

Identity depth2_equation(Depth2Case c, int w, const SpecPoint& p) {
  require_weight(w, 3, "depth-2 equation");
  const Rat& x = p.x;
  const Rat& y = p.y;
  RegPoly lhs, rhs;
  for (int a = 1; a <= w - 1; ++a) {
    const int b = w - a;
    const Rat xa = rat_pow(x, a - 1), ya = rat_pow(y, a - 1);
    const Rat xb = rat_pow(x, b - 1), yb = rat_pow(y, b - 1);
    const Rat sa = rat_pow(x + y, a - 1);
    switch (c) {
      case Depth2Case::pp:
        lhs += (sa * (yb + xb)) * Zsh(cp2(a, 1, b, 1));
        rhs += (xa * yb + ya * xb) * Z2(a, 1, b, 1);
        break;
      case Depth2Case::pm:
        lhs += (sa * yb) * Zsh(cp2(a, 1, b, -1));
        lhs += (sa * xb) * Zsh(cp2(a, -1, b, -1));
        rhs += (xa * yb) * Z2(a, 1, b, -1);
        rhs += (ya * xb) * Z2(a, -1, b, 1);
        break;
      case Depth2Case::mm:
        lhs += (sa * (yb + xb)) * Zsh(cp2(a, -1, b, 1));
        rhs += (xa * yb + ya * xb) * Z2(a, -1, b, -1);
        break;
    }
  }
  const int zeta_sign = (c == Depth2Case::pm) ? -1 : 1;
  rhs += diff_quot(x, y, w - 1) * Z1(w, zeta_sign);
  const char* cname = c == Depth2Case::pp ? "++" : c == Depth2Case::pm ? "+-"
                                                                       : "--";
  return make("depth2(" + std::string(cname) + ")@(" + rat_text(x) + "," +
                  rat_text(y) + ")",
              w, std::move(lhs), std::move(rhs),
              "depth-2 product equation, case " + std::string(cname),
              Identity::Derivation::derived);
}

namespace {

// Sparse bivariate polynomials with rational coefficients, used for the
// coefficient-by-coefficient form of the depth-2 equation.
using Poly2 = std::map<std::pair<int, int>, Rat>;

Poly2 mono2(int i, int j, const Rat& q = 1) { return Poly2{{{i, j}, q}}; }

// (x+y)^n shifted by x^dx y^dy.
Poly2 binom2(int n, int dx, int dy, const Rat& q = 1) {
  Poly2 out;
  for (int i = 0; i <= n; ++i)
    out[{i + dx, n - i + dy}] = q * Rat(binomial(n, i));
  return out;
}

void poly2_add(Poly2& a, const Poly2& b) {
  for (const auto& [k, q] : b) {
    a[k] += q;
    if (a[k] == 0) a.erase(k);
  }
}

}  // namespace

std::vector<Identity> depth2_poly_identities(Depth2Case c, int w) {
  require_weight(w, 3, "depth-2 equation");
  // Collect (coefficient polynomial, symbol) pairs for both sides.
  std::vector<std::pair<Poly2, RegPoly>> lhs_terms, rhs_terms;
  for (int a = 1; a <= w - 1; ++a) {
    const int b = w - a;
    switch (c) {
      case Depth2Case::pp: {
        Poly2 coeff = binom2(a - 1, 0, b - 1);
        poly2_add(coeff, binom2(a - 1, b - 1, 0));
        lhs_terms.emplace_back(std::move(coeff), Zsh(cp2(a, 1, b, 1)));
        Poly2 r = mono2(a - 1, b - 1);
        poly2_add(r, mono2(b - 1, a - 1));
        rhs_terms.emplace_back(std::move(r), Z2(a, 1, b, 1));
        break;
      }
      case Depth2Case::pm: {
        lhs_terms.emplace_back(binom2(a - 1, 0, b - 1), Zsh(cp2(a, 1, b, -1)));
        lhs_terms.emplace_back(binom2(a - 1, b - 1, 0), Zsh(cp2(a, -1, b, -1)));
        rhs_terms.emplace_back(mono2(a - 1, b - 1), Z2(a, 1, b, -1));
        rhs_terms.emplace_back(mono2(b - 1, a - 1), Z2(a, -1, b, 1));
        break;
      }
      case Depth2Case::mm: {
        Poly2 coeff = binom2(a - 1, 0, b - 1);
        poly2_add(coeff, binom2(a - 1, b - 1, 0));
        lhs_terms.emplace_back(std::move(coeff), Zsh(cp2(a, -1, b, 1)));
        Poly2 r = mono2(a - 1, b - 1);
        poly2_add(r, mono2(b - 1, a - 1));
        rhs_terms.emplace_back(std::move(r), Z2(a, -1, b, -1));
        break;
      }
    }
  }
  {
    Poly2 f;
    for (int j = 0; j <= w - 2; ++j) poly2_add(f, mono2(j, w - 2 - j));
    rhs_terms.emplace_back(std::move(f),
                           Z1(w, c == Depth2Case::pm ? -1 : 1));
  }
  std::map<std::pair<int, int>, Identity> per_monomial;
  auto scatter = [&](const std::vector<std::pair<Poly2, RegPoly>>& terms,
                     bool into_lhs) {
    for (const auto& [poly, sym] : terms)
      for (const auto& [mono, q] : poly) {
        auto it = per_monomial.find(mono);
        if (it == per_monomial.end()) {
          Identity id;
          id.name = "depth2-coeff@x^" + std::to_string(mono.first) + "y^" +
                    std::to_string(mono.second);
          id.weight = w;
          id.provenance = "depth-2 product equation, monomial coefficient";
          id.derivation = Identity::Derivation::derived;
          it = per_monomial.emplace(mono, std::move(id)).first;
        }
        if (into_lhs)
          it->second.lhs += q * sym;
        else
          it->second.rhs += q * sym;
      }
  };
  scatter(lhs_terms, true);
  scatter(rhs_terms, false);
  std::vector<Identity> out;
  out.reserve(per_monomial.size());
  for (auto& [mono, id] : per_monomial) out.push_back(std::move(id));
  return out;
}

Identity depth3a_equation(const std::array<int, 3>& zs, int w,
                          const SpecPoint& p) {
  require_weight(w, 4, "depth-3 single-product equation");
  const int z1 = zs[0], z2 = zs[1], z3 = zs[2];
  const Rat& x = p.x;
  const Rat& y = p.y;
  const Rat& z = p.z;
  RegPoly lhs, rhs;

  if (z1 == 1 && z2 == 1) {
    RegPoly delta = mul(Z1(2, 1), Z1(w - 2, z3));
    lhs += (rat_pow(z, w - 3) / 2) * delta;
  }
  for (int b = 1; b <= w - 1; ++b) {
    const int cc = w - b;
    lhs += (diff_quot(x, z, b - 1) * rat_pow(y, cc - 1)) *
           Z2(b, z1 * z3, cc, z2);
    lhs += (rat_pow(x, b - 1) * diff_quot(y, z, cc - 1)) *
           Z2(b, z1, cc, z2 * z3);
  }
  for (int a = 1; a <= w - 2; ++a)
    for (int b = 1; b <= w - a - 1; ++b) {
      const int cc = w - a - b;
      const Rat xa = rat_pow(x, a - 1), yb = rat_pow(y, b - 1),
                zc = rat_pow(z, cc - 1);
      const Rat xb = rat_pow(x, b - 1), yc = rat_pow(y, cc - 1),
                za = rat_pow(z, a - 1), zb = rat_pow(z, b - 1);
      lhs += (xa * yb * zc) * Z3(a, z1, b, z2, cc, z3);
      lhs += (xa * zb * yc) * Z3(a, z1, b, z3, cc, z2);
      lhs += (za * xb * yc) * Z3(a, z3, b, z1, cc, z2);

      const Rat xza = rat_pow(x + z, a - 1);
      const Rat yzb = rat_pow(y + z, b - 1);
      rhs += (xza * yzb * yc) * Zsh3(a, z1, b, z3 * z1, cc, z1 * z2 * z3);
      rhs += (xza * yzb * zc) * Zsh3(a, z1, b, z2, cc, z3 * z1 * z2);
      rhs += (xza * xb * yc) * Zsh3(a, z3, b, z1 * z3, cc, z2);
    }
  auto signs_text = [&] {
    std::string s;
    for (int v : zs) s += (v > 0 ? 'p' : 'm');
    return s;
  }();
  return make("depth3a(" + signs_text + ")@(" + rat_text(x) + "," +
                  rat_text(y) + "," + rat_text(z) + ")",
              w, std::move(lhs), std::move(rhs),
              "double-times-single product equation, signs " + signs_text,
              Identity::Derivation::derived);
}

Identity depth3b_equation(const std::array<int, 3>& zs, int w,
                          const SpecPoint& p) {
  require_weight(w, 4, "triple-product equation");
  const int z1 = zs[0], z2 = zs[1], z3 = zs[2];
  const Rat& x = p.x;
  const Rat& y = p.y;
  const Rat& z = p.z;
  RegPoly lhs, rhs;

  for (int a = 1; a <= w - 2; ++a)
    for (int b = 1; b <= w - a - 1; ++b) {
      const int cc = w - a - b;
      const Rat s = rat_pow(x + y + z, a - 1);
      const Rat zyb = rat_pow(z + y, b - 1), zxb = rat_pow(z + x, b - 1),
                xyb = rat_pow(x + y, b - 1);
      const Rat xc = rat_pow(x, cc - 1), yc = rat_pow(y, cc - 1),
                zc = rat_pow(z, cc - 1);
      lhs += (s * zyb * yc) * Zsh3(a, z1, b, z3 * z1, cc, z2 * z3);
      lhs += (s * zyb * zc) * Zsh3(a, z1, b, z2 * z1, cc, z3 * z2);
      lhs += (s * zxb * xc) * Zsh3(a, z2, b, z3 * z2, cc, z1 * z3);
      lhs += (s * zxb * zc) * Zsh3(a, z2, b, z1 * z2, cc, z3 * z1);
      lhs += (s * xyb * yc) * Zsh3(a, z3, b, z1 * z3, cc, z2 * z1);
      lhs += (s * xyb * xc) * Zsh3(a, z3, b, z2 * z3, cc, z1 * z2);

      const Rat xa = rat_pow(x, a - 1), ya = rat_pow(y, a - 1),
                za = rat_pow(z, a - 1);
      const Rat xb = rat_pow(x, b - 1), yb = rat_pow(y, b - 1),
                zb = rat_pow(z, b - 1);
      rhs += (xa * yb * zc) * Z3(a, z1, b, z2, cc, z3);
      rhs += (xa * zb * yc) * Z3(a, z1, b, z3, cc, z2);
      rhs += (ya * xb * zc) * Z3(a, z2, b, z1, cc, z3);
      rhs += (ya * zb * xc) * Z3(a, z2, b, z3, cc, z1);
      rhs += (za * xb * yc) * Z3(a, z3, b, z1, cc, z2);
      rhs += (za * yb * xc) * Z3(a, z3, b, z2, cc, z1);
    }
  for (int k = 2; k <= w - 1; ++k) {
    const int cc = w - k;
    const Rat xc = rat_pow(x, cc - 1), yc = rat_pow(y, cc - 1),
              zc = rat_pow(z, cc - 1);
    RegPoly b1 = Z2(k, z1 * z2, cc, z3) + Z2(cc, z3, k, z1 * z2);
    RegPoly b2 = Z2(k, z3 * z1, cc, z2) + Z2(cc, z2, k, z3 * z1);
    RegPoly b3 = Z2(k, z2 * z3, cc, z1) + Z2(cc, z1, k, z2 * z3);
    rhs += (diff_quot(x, y, k - 1) * zc) * b1;
    rhs += (diff_quot(x, z, k - 1) * yc) * b2;
    rhs += (diff_quot(y, z, k - 1) * xc) * b3;
  }
  {
    Rat total = 0;
    for (int a = 1; a <= w - 2; ++a)
      for (int b = 1; b <= w - a - 1; ++b)
        total += rat_pow(x, a - 1) * rat_pow(y, b - 1) *
                 rat_pow(z, w - a - b - 1);
    rhs += total * Z1(w, z1 * z2 * z3);
  }
  auto signs_text = [&] {
    std::string s;
    for (int v : zs) s += (v > 0 ? 'p' : 'm');
    return s;
  }();
  return make("depth3b(" + signs_text + ")@(" + rat_text(x) + "," +
                  rat_text(y) + "," + rat_text(z) + ")",
              w, std::move(lhs), std::move(rhs),
              "triple-product equation, signs " + signs_text,
              Identity::Derivation::derived);
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](std::string name, int section, int min_w,
                 std::optional<int> fixed, std::string prov,
                 std::function<Identity(int)> fn) {
    CatalogEntry e;
    e.name = std::move(name);
    e.section = section;
    e.min_weight = min_w;
    e.fixed_weight = fixed;
    e.provenance = std::move(prov);
    e.build = std::move(fn);
    cat.push_back(std::move(e));
  };

  // ---- depth-2 family -------------------------------------------------
  add("sum-depth2-pp", 4, 3, std::nullopt, "depth-2 sum formula, signs (+,+)",
      [](int w) {
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a) lhs += Z2(a, 1, w - a, 1);
        return make("sum-depth2-pp", w, std::move(lhs), Z1(w),
                    "depth-2 sum formula, signs (+,+)");
      });
  add("sum-depth2-mm", 4, 3, std::nullopt, "depth-2 sum formula, signs (-,-)",
      [](int w) {
        const int v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a) lhs += Z2(a, -1, w - a, -1);
        RegPoly rhs = Z2(1, -1, v, 1) - Z2(1, -1, v, -1) + Z1(w, -1);
        return make("sum-depth2-mm", w, std::move(lhs), std::move(rhs),
                    "depth-2 sum formula, signs (-,-)");
      });
  add("sum-depth2-mp", 4, 3, std::nullopt, "depth-2 sum formula, signs (-,+)",
      [](int w) {
        const int v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a) lhs += Z2(a, -1, w - a, 1);
        RegPoly rhs = Z2(v, -1, 1, -1) + Z2(1, -1, v, -1) - Z2(v, -1, 1, 1) -
                      Z2(1, -1, v, 1) + Z1(w);
        return make("sum-depth2-mp", w, std::move(lhs), std::move(rhs),
                    "depth-2 sum formula, signs (-,+)");
      });
  add("sum-depth2-pm", 4, 3, std::nullopt, "depth-2 sum formula, signs (+,-)",
      [](int w) {
        const int v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a) lhs += Z2(a, 1, w - a, -1);
        RegPoly rhs = Z2(v, -1, 1, 1) - Z2(v, -1, 1, -1) + Z1(w, -1);
        return make("sum-depth2-pm", w, std::move(lhs), std::move(rhs),
                    "depth-2 sum formula, signs (+,-)");
      });
  add("T-sum-depth2", 4, 3, std::nullopt, "double T-value sum formula",
      [](int w) {
        const int v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a) lhs += Tv({a, w - a});
        RegPoly rhs = Z1(w) - Z1(w, -1) + Z2(v, -1, 1, -1) +
                      Z2(1, -1, v, -1) - Z2(v, -1, 1, 1) - Z2(1, -1, v, 1);
        rhs *= Rat(2);
        return make("T-sum-depth2", w, std::move(lhs), std::move(rhs),
                    "double T-value sum formula");
      });
  add("T-weighted-depth2", 4, 3, std::nullopt,
      "double T-value weighted sum with 2^(a-1)", [](int w) {
        RegPoly lhs;
        for (int a = 2; a <= w - 1; ++a)
          lhs += rat_pow(Rat(2), a - 1) * Tv({a, w - a});
        RegPoly rhs = (Z1(w) - Z1(w, -1)) * Rat(w - 1);
        return make("T-weighted-depth2", w, std::move(lhs), std::move(rhs),
                    "double T-value weighted sum with 2^(a-1)");
      });

  // ---- depth-3 part A: sums over z(a, b, +-1) -------------------------
  struct Ab1Line {
    const char* code;
    int sa, sb, sc;
    std::function<RegPoly(int u, int v, int w)> rhs;
  };
  const std::vector<Ab1Line> ab1 = {
      {"ppp", 1, 1, 1,
       [](int u, int v, int) { return Z2(v, 1, 1, 1) + Z2(u, 1, 2, 1); }},
      {"pmp", 1, -1, 1,
       [](int u, int v, int) {
         return Z2(v, -1, 1, 1) + Z2(u, -1, 2, 1) +
                Rat(2) * Z3(u, -1, 1, 1, 1, 1) - Z3(u, -1, 1, -1, 1, -1) -
                Z3(u, -1, 1, 1, 1, -1);
       }},
      {"mpp", -1, 1, 1,
       [](int u, int v, int) {
         return Z2(v, 1, 1, 1) + Z2(u, -1, 2, -1) + Z3(u, -1, 1, 1, 1, -1) +
                Z3(u, -1, 1, -1, 1, 1) + Z3(1, -1, u, -1, 1, 1) -
                Rat(2) * Z3(u, -1, 1, 1, 1, 1) - Z3(1, -1, u, 1, 1, 1);
       }},
      {"mmp", -1, -1, 1,
       [](int u, int v, int) {
         return Z2(v, -1, 1, 1) + Z2(u, 1, 2, -1) + Z3(u, 1, 1, -1, 1, 1) +
                Z3(1, -1, u, 1, 1, 1) - Z3(u, 1, 1, -1, 1, -1) -
                Z3(1, -1, u, -1, 1, 1);
       }},
      {"mmm", -1, -1, -1,
       // As printed this line fails numerically; the version below is
       // re-derived from the product equation at (1,0,0) and checks to
       // 1e-46 for w = 4..8.
       [](int u, int v, int) {
         return Z2(v, -1, 1, -1) + Z2(u, 1, 2, 1) +
                Rat(2) * Z3(u, 1, 1, -1, 1, -1) + Z3(1, -1, u, 1, 1, -1) -
                Rat(2) * Z3(u, 1, 1, -1, 1, 1) - Z3(1, -1, u, -1, 1, -1);
       }},
      {"ppm", 1, 1, -1,
       [](int u, int v, int) {
         return Z2(v, 1, 1, -1) + Z2(u, 1, 2, -1) + Z3(u, 1, 1, -1, 1, 1) -
                Z3(u, 1, 1, -1, 1, -1);
       }},
      {"pmm", 1, -1, -1,
       [](int u, int v, int) {
         return Z2(v, -1, 1, -1) + Z2(u, -1, 2, -1) + Z3(u, -1, 1, 1, 1, -1) -
                Z3(u, -1, 1, -1, 1, 1);
       }},
      {"mpm", -1, 1, -1,
       [](int u, int v, int) {
         return Z2(v, 1, 1, -1) + Z2(u, -1, 2, 1) + Z3(u, -1, 1, -1, 1, -1) +
                Z3(1, -1, u, -1, 1, -1) - Z3(u, -1, 1, 1, 1, -1) -
                Z3(1, -1, u, 1, 1, -1);
       }},
  };
  for (const auto& line : ab1) {
    const std::string name = std::string("sum-ab1-") + line.code;
    const int sa = line.sa, sb = line.sb, sc = line.sc;
    auto rhs_fn = line.rhs;
    std::string prov =
        "sum formula over z(a,b,1), signs (" + std::string(line.code) + ")";
    if (std::string(line.code) == "mmm") prov += " [corrected transcription]";
    add(name, 5, 4, std::nullopt, std::move(prov),
        [name, sa, sb, sc, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          RegPoly lhs;
          for (int a = 2; a <= v - 1; ++a)
            lhs += Z3(a, sa, v - a, sb, 1, sc);
          return make(name, w, std::move(lhs), rhs_fn(u, v, w),
                      "sum formula over z(a,b,1)");
        });
  }
  add("T-sum-ab1", 5, 4, std::nullopt, "triple T-value sum over T(a,b,1)",
      [](int w) {
        const int u = w - 2, v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= v - 1; ++a) lhs += Tv({a, v - a, 1});
        RegPoly rhs = Rat(2) * Tv({u, 2});
        RegPoly inner = Z3(u, 1, 1, -1, 1, -1) + Z3(u, -1, 1, 1, 1, 1) -
                        Z3(u, -1, 1, 1, 1, -1) - Z3(u, 1, 1, -1, 1, 1);
        rhs += Rat(4) * inner;
        return make("T-sum-ab1", w, std::move(lhs), std::move(rhs),
                    "triple T-value sum over T(a,b,1)");
      });

  // ---- depth-3 part A: sums over z(+-1, b, c) -------------------------
  struct OneBcLine {
    const char* code;
    int s1, sb, sc;
    bool lhs_sha;  // the printed marker on the summed symbols
    std::function<RegPoly(int u, int v, int w)> rhs;
  };
  const std::vector<OneBcLine> onebc = {
      {"ppp", 1, 1, 1, true,
       [](int u, int v, int) {
         return Z2(2, 1, u, 1) + Zst(cp2(1, 1, v, 1)) +
                Zst(cp3(1, 1, 1, 1, u, 1)) -
                mul(Z1(2), Z1(u)) * Rat(1, 2);
       }},
      {"pmp", 1, -1, 1, true,
       [](int u, int v, int) {
         return Z2(2, -1, u, -1) + Zst(cp2(1, 1, v, 1)) +
                Zst(cp3(1, 1, 1, -1, u, -1)) + Zst(cp3(1, 1, u, -1, 1, -1)) +
                Z3(1, -1, 1, 1, u, -1) - Z3(1, -1, 1, -1, u, -1) -
                Zst(cp3(1, 1, u, -1, 1, 1));
       }},
      {"mpp", -1, 1, 1, false,
       [](int u, int v, int) {
         return Z2(2, 1, u, 1) + Z2(1, -1, v, -1) + Z3(1, -1, u, 1, 1, -1) +
                Rat(2) * Z3(1, -1, 1, -1, u, 1) - Z3(1, -1, 1, 1, u, 1) -
                Z3(1, -1, u, 1, 1, 1);
       }},
      {"mmp", -1, -1, 1, false,
       [](int u, int v, int) {
         return Z2(2, -1, u, -1) + Z2(1, -1, v, -1) + Z3(1, -1, 1, 1, u, -1);
       }},
      {"mmm", -1, -1, -1, false,
       [](int u, int v, int) {
         return Z2(2, -1, u, 1) + Z2(1, -1, v, 1) + Z3(1, -1, u, 1, 1, 1) +
                Z3(1, -1, 1, 1, u, 1) - Z3(1, -1, u, 1, 1, -1);
       }},
      {"ppm", 1, 1, -1, true,
       [](int u, int v, int) {
         return Z2(2, 1, u, -1) + Zst(cp2(1, 1, v, -1)) +
                Zst(cp3(1, 1, u, -1, 1, 1)) + Zst(cp3(1, 1, 1, 1, u, -1)) -
                Zsh(cp3(1, 1, u, -1, 1, -1)) -
                mul(Z1(2), Z1(u, -1)) * Rat(1, 2);
       }},
      {"pmm", 1, -1, -1, true,
       [](int u, int v, int) {
         return Z2(2, -1, u, 1) + Zst(cp2(1, 1, v, -1)) +
                Zst(cp3(1, 1, 1, -1, u, 1)) + Z3(1, -1, 1, 1, u, 1) -
                Z3(1, -1, 1, -1, u, 1);
       }},
      {"mpm", -1, 1, -1, false,
       [](int u, int v, int) {
         return Z2(2, 1, u, -1) + Z2(1, -1, v, 1) +
                Rat(2) * Z3(1, -1, 1, -1, u, -1) - Z3(1, -1, 1, 1, u, -1);
       }},
  };
  for (const auto& line : onebc) {
    const std::string name = std::string("sum-1bc-") + line.code;
    const int s1 = line.s1, sb = line.sb, sc = line.sc;
    const bool sha = line.lhs_sha;
    auto rhs_fn = line.rhs;
    add(name, 5, 4, std::nullopt,
        "sum formula over z(1,b,c), signs (" + std::string(line.code) + ")",
        [name, s1, sb, sc, sha, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          RegPoly lhs;
          for (int b = 1; b <= v - 1; ++b) {
            const SignedComposition c = cp3(1, s1, b, sb, v - b, sc);
            lhs += sha ? Zsh(c) : Zst(c);
          }
          return make(name, w, std::move(lhs), rhs_fn(u, v, w),
                      "sum formula over z(1,b,c)");
        });
  }

  // ---- depth-3 part A: full sums over z(a,b,c) ------------------------
  struct AbcLine {
    const char* code;
    int sa, sb, sc;
    std::function<RegPoly(int u, int v, int w)> rhs;
  };
  const std::vector<AbcLine> abc = {
      {"ppp", 1, 1, 1, [](int, int, int w) { return Z1(w); }},
      {"pmp", 1, -1, 1,
       [](int u, int v, int) {
         return Rat(2) * Z3(u, -1, 1, 1, 1, -1) -
                Rat(2) * Z3(u, -1, 1, 1, 1, 1) - Z3(1, -1, 1, 1, u, -1) +
                Z3(1, -1, 1, -1, u, -1) + Z2(v, -1, 1, -1) -
                Z2(v, -1, 1, 1) - Z2(u, -1, 2, 1) - Z2(2, -1, u, -1);
       }},
      {"mpp", -1, 1, 1,
       [](int u, int v, int) {
         return Z3(u, -1, 1, 1, 1, 1) - Z3(u, -1, 1, 1, 1, -1) +
                Z3(1, -1, u, 1, 1, 1) - Z3(1, -1, u, 1, 1, -1) +
                Z3(1, -1, 1, 1, u, -1) + Z3(1, -1, 1, 1, u, 1) -
                Rat(2) * Z3(1, -1, 1, -1, u, 1) - Z2(u, -1, 2, -1) -
                Z2(2, 1, u, 1);
       }},
      {"mmp", -1, -1, 1,
       [](int u, int v, int w) {
         return Z3(1, -1, 1, 1, u, 1) - Z3(1, -1, 1, 1, u, -1) +
                Z2(1, -1, v, 1) - Z2(1, -1, v, -1) + Z2(2, -1, u, 1) -
                Z2(2, -1, u, -1) + Z1(w, -1);
       }},
      {"mpm", -1, 1, -1,
       [](int u, int v, int) {
         return Z3(u, 1, 1, -1, 1, 1) - Z3(u, 1, 1, -1, 1, -1) +
                Z3(1, -1, 1, 1, u, -1) - Rat(2) * Z3(1, -1, 1, -1, u, -1) +
                Z3(1, -1, 1, -1, u, 1) + Z2(1, -1, v, -1) - Z2(1, -1, v, 1) -
                Z2(u, 1, 2, 1) - Z2(2, 1, u, -1) - mul(Z1(u), Z1(2, -1));
       }},
      {"pmm", 1, -1, -1,
       [](int u, int v, int) {
         return Z3(u, 1, 1, -1, 1, -1) - Z3(u, 1, 1, -1, 1, 1) +
                Z3(1, -1, 1, -1, u, 1) - Z3(1, -1, 1, 1, u, 1) -
                Z2(u, 1, 2, -1) - Z2(2, -1, u, 1);
       }},
      {"ppm", 1, 1, -1,
       [](int u, int v, int w) {
         return Z3(u, -1, 1, 1, 1, 1) - Z3(u, -1, 1, 1, 1, -1) +
                Z2(v, -1, 1, 1) - Z2(v, -1, 1, -1) - Z2(u, -1, 2, -1) +
                Z2(u, -1, 2, 1) + Z1(w, -1);
       }},
      {"mmm", -1, -1, -1,
       [](int u, int v, int) {
         return Z3(1, -1, u, 1, 1, -1) - Z3(1, -1, u, 1, 1, 1) +
                Z3(1, -1, 1, -1, u, -1) - Z3(1, -1, 1, 1, u, 1) -
                Z2(u, -1, 2, 1) - Z2(2, -1, u, 1);
       }},
  };
  for (const auto& line : abc) {
    const std::string name = std::string("sum-abc-") + line.code;
    const int sa = line.sa, sb = line.sb, sc = line.sc;
    auto rhs_fn = line.rhs;
    add(name, 5, 4, std::nullopt,
        "sum formula over z(a,b,c), signs (" + std::string(line.code) + ")",
        [name, sa, sb, sc, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          RegPoly lhs;
          for (int a = 2; a <= w - 2; ++a)
            for (int b = 1; b <= w - a - 1; ++b)
              lhs += Z3(a, sa, b, sb, w - a - b, sc);
          return make(name, w, std::move(lhs), rhs_fn(u, v, w),
                      "sum formula over z(a,b,c)");
        });
  }
  add("T-sum-depth3", 5, 4, std::nullopt, "triple T-value sum formula",
      [](int w) {
        const int u = w - 2;
        RegPoly lhs;
        for (int a = 2; a <= w - 2; ++a)
          for (int b = 1; b <= w - a - 1; ++b) lhs += Tv({a, b, w - a - b});
        RegPoly rhs = Rat(2, 3) * mul(Tv({2}), Tv({u}));
        rhs -= Rat(2) * Tv({u, 2});
        RegPoly inner = Z3(u, 1, 1, -1, 1, 1) - Z3(u, -1, 1, 1, 1, 1) +
                        Z3(u, -1, 1, 1, 1, -1) - Z3(u, 1, 1, -1, 1, -1);
        rhs += Rat(4) * inner;
        return make("T-sum-depth3", w, std::move(lhs), std::move(rhs),
                    "triple T-value sum formula");
      });
  add("T-sum-depth3-plus-ab1", 5, 4, std::nullopt,
      "combined triple T-value sum", [](int w) {
        const int u = w - 2, v = w - 1;
        RegPoly lhs;
        for (int a = 2; a <= w - 2; ++a)
          for (int b = 1; b <= w - a - 1; ++b) lhs += Tv({a, b, w - a - b});
        for (int a = 2; a <= v - 1; ++a) lhs += Tv({a, v - a, 1});
        RegPoly rhs = Rat(2, 3) * mul(Tv({2}), Tv({u}));
        return make("T-sum-depth3-plus-ab1", w, std::move(lhs),
                    std::move(rhs), "combined triple T-value sum");
      });

  // ---- depth-3 part A: sums over z(a, +-1, c) -------------------------
  struct A1cLine {
    const char* code;
    int sa, sm, sc;
    std::function<RegPoly(int u, int v, int w)> rhs;
  };
  const std::vector<A1cLine> a1c = {
      {"ppp", 1, 1, 1,
       [](int u, int v, int) {
         return Zst(cp3(1, 1, 1, 1, u, 1)) + Z2(v, 1, 1, 1) + Z2(2, 1, u, 1);
       }},
      {"pmm", 1, -1, -1,
       [](int u, int v, int) {
         return Zst(cp3(1, 1, 1, -1, u, -1)) + Z3(1, -1, u, -1, 1, -1) -
                Z3(1, -1, u, -1, 1, 1) + Z2(v, 1, 1, -1) + Z2(2, -1, u, -1);
       }},
      {"mmp", -1, -1, 1,
       [](int u, int v, int) {
         return Z3(1, -1, 1, -1, u, -1) + Z2(2, 1, u, -1) + Z2(v, -1, 1, -1);
       }},
      {"mpm", -1, 1, -1,
       [](int u, int v, int) {
         return Z3(1, -1, u, 1, 1, 1) + Z3(1, -1, 1, 1, u, 1) -
                Z3(1, -1, u, 1, 1, -1) + Z2(v, -1, 1, 1) + Z2(2, -1, u, 1);
       }},
      {"mpp", -1, 1, 1,
       [](int u, int v, int w) {
         return Z3(1, -1, 1, -1, u, -1) + Rat(2) * Z2(v, -1, 1, 1) +
                Z2(1, -1, v, 1) - Z2(1, -1, v, -1) - Z2(v, -1, 1, -1) -
                Z2(u, -1, 2, 1) - Z1(w);
       }},
      {"ppm", 1, 1, -1,
       [](int u, int v, int w) {
         return Z3(u, -1, 1, -1, 1, -1) - Z3(u, -1, 1, -1, 1, 1) +
                Zst(cp3(1, 1, 1, 1, u, -1)) - Z2(v, -1, 1, -1) +
                Z2(v, 1, 1, -1) + Rat(2) * Z2(v, -1, 1, -1) -
                Z2(v, -1, 1, 1) - Z2(u, -1, 2, -1) +
                mul(Z1(2), Z1(u, -1)) - Z1(w, -1);
       }},
      {"pmp", 1, -1, 1,
       [](int u, int v, int w) {
         return Rat(2) * Z3(u, 1, 1, -1, 1, -1) -
                Rat(2) * Z3(u, 1, 1, -1, 1, 1) + Z3(1, -1, 1, 1, u, 1) +
                Zst(cp3(1, 1, 1, -1, u, 1)) - Z3(1, -1, 1, -1, u, 1) +
                Z2(v, -1, 1, -1) + Z2(v, 1, 1, -1) + Z2(1, -1, v, 1) -
                Z2(v, -1, 1, 1) - Z2(1, -1, v, -1) - Z2(2, 1, u, 1) -
                Rat(2) * Z2(u, 1, 2, -1) - Z1(w, -1) - Z1(w);
       }},
      {"mmm", -1, -1, -1,
       [](int u, int v, int) {
         return Rat(3) * Z3(u, 1, 1, -1, 1, 1) -
                Rat(3) * Z3(u, 1, 1, -1, 1, -1) + Z3(1, -1, 1, -1, u, 1) +
                Rat(2) * Z2(v, -1, 1, 1) - Z2(v, -1, 1, -1) +
                Z2(u, 1, 2, -1) + Z2(2, 1, u, 1) - Z2(u, 1, 2, 1);
       }},
  };
  for (const auto& line : a1c) {
    const std::string name = std::string("sum-a1c-") + line.code;
    const int sa = line.sa, sm = line.sm, sc = line.sc;
    auto rhs_fn = line.rhs;
    add(name, 5, 4, std::nullopt,
        "sum formula over z(a,1,c), signs (" + std::string(line.code) + ")",
        [name, sa, sm, sc, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          RegPoly lhs;
          for (int a = 1; a <= v - 1; ++a)
            lhs += Zst(cp3(a, sa, 1, sm, v - a, sc));
          return make(name, w, std::move(lhs), rhs_fn(u, v, w),
                      "sum formula over z(a,1,c)");
        });
  }

  // ---- depth-3 part A: 2^b weighted sums ------------------------------
  struct W2bLine {
    const char* name;
    std::vector<std::array<int, 3>> sign_sets;  // summed sha symbols
    Rat lhs_factor;                             // applied on top of 2^(b-1)
    std::function<RegPoly(int u, int v, int w)> rhs;
  };
  const std::vector<W2bLine> w2b = {
      {"wsum-2b-ppp",
       {{1, 1, 1}},
       2,
       [](int u, int v, int w) {
         return Rat(2) * Zst(cp3(1, 1, 1, 1, u, 1)) +
                Rat(w) * Zst(cp2(1, 1, v, 1)) - Rat(2) * Z2(u, 1, 2, 1) -
                Z1(w);
       }},
      {"wsum-2b-pmp",
       {{1, -1, 1}},
       2,
       [](int u, int v, int w) {
         return Rat(4) * Z3(u, 1, 1, -1, 1, -1) -
                Rat(4) * Z3(u, 1, 1, -1, 1, 1) -
                Rat(2) * Z3(1, -1, 1, -1, u, 1) +
                Rat(2) * Z3(1, -1, 1, 1, u, 1) +
                Rat(2) * Zst(cp3(1, 1, 1, -1, u, 1)) +
                Rat(2) * Z2(v, -1, 1, -1) - Rat(2) * Z2(v, -1, 1, 1) +
                Rat(u) * Zst(cp2(1, 1, v, 1)) +
                Rat(2) * Zst(cp2(1, 1, v, -1)) + Rat(4) * Z2(2, -1, u, 1) +
                Rat(2) * Z2(u, 1, 2, 1) + Z1(w) + Rat(2) * Z1(w, -1);
       }},
      {"wsum-2b-mpp",
       {{-1, 1, 1}},
       2,
       [](int u, int v, int w) {
         return Rat(2) * Z3(1, -1, 1, -1, u, -1) +
                Rat(w) * Z2(1, -1, v, -1) + Rat(2) * Z2(v, -1, 1, -1) -
                Rat(2) * Z2(v, -1, 1, 1) + Z2(2, -1, u, -1) +
                Z2(2, 1, u, -1) + Rat(2) * Z1(w) - Z1(w, -1) +
                mul(Z1(2), Z1(u, -1));
       }},
      {"wsum-2b-mmp",
       {{-1, -1, 1}},
       2,
       [](int u, int v, int w) {
         return Rat(2) * Z3(1, -1, 1, -1, u, -1) +
                Rat(u) * Z2(1, -1, v, -1) + Rat(2) * Z2(1, -1, v, 1) +
                Z2(2, -1, u, -1) + Z2(2, 1, u, -1) + Z1(w, -1);
       }},
      {"wsum-2b-mxm",
       {{-1, -1, -1}, {-1, 1, -1}},
       1,
       [](int u, int v, int w) {
         return Rat(2) * Z3(u, 1, 1, -1, 1, 1) +
                Rat(2) * Z3(1, -1, 1, -1, u, 1) -
                Rat(2) * Z3(u, 1, 1, -1, 1, -1) + Rat(v) * Z2(1, -1, v, 1) +
                Z2(v, -1, 1, 1) + Z2(1, -1, v, -1) - Z2(v, -1, 1, -1) +
                Z2(2, 1, u, 1) - Z2(u, 1, 2, 1);
       }},
      {"wsum-2b-pxm",
       {{1, 1, -1}, {1, -1, -1}},
       1,
       [](int u, int v, int w) {
         return Zst(cp3(1, 1, 1, -1, u, -1)) + Z3(1, -1, 1, 1, u, -1) -
                Z3(1, -1, 1, -1, u, -1) + Zst(cp3(1, 1, 1, 1, u, -1)) -
                Z2(v, -1, 1, -1) + Z2(v, -1, 1, 1) + Zst(cp2(1, 1, v, 1)) +
                Rat(v) * Zst(cp2(1, 1, v, -1)) + Z2(2, -1, u, -1) +
                Z2(2, 1, u, -1) + Z1(w, -1) +
                Rat(3) * mul(Z1(2, -1), Z1(u, -1));
       }},
  };
  for (const auto& line : w2b) {
    const std::string name = line.name;
    auto sign_sets = line.sign_sets;
    const Rat factor = line.lhs_factor;
    auto rhs_fn = line.rhs;
    add(name, 5, 4, std::nullopt,
        "2^b weighted sum over triple Euler sums (" + name + ")",
        [name, sign_sets, factor, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          RegPoly lhs;
          for (int a = 1; a <= w - 2; ++a)
            for (int b = 1; b <= w - a - 1; ++b) {
              const Rat coeff = factor * rat_pow(Rat(2), b - 1);
              for (const auto& ss : sign_sets)
                lhs += coeff *
                       Zsh(cp3(a, ss[0], b, ss[1], w - a - b, ss[2]));
            }
          return make(name, w, std::move(lhs), rhs_fn(u, v, w),
                      "2^b weighted sum over triple Euler sums");
        });
  }

  // ---- depth-3 part B: 3^a 2^b weighted sums --------------------------
  struct W3a2bLine {
    const char* name;
    std::vector<std::array<int, 3>> sign_sets;
    std::function<RegPoly(int u, int v, int w, const Rat& c2)> rhs;
  };
  const std::vector<W3a2bLine> w3a2b = {
      {"wsum-3a2b-ppp",
       {{1, 1, 1}},
       [](int u, int v, int w, const Rat& c2) {
         return (c2 / 3 + u) * Z1(w) + Rat(2) * Zst(cp3(1, 1, 1, 1, u, 1)) -
                Rat(2) * Z2(u, 1, 2, 1) + Rat(w) * Zst(cp2(1, 1, v, 1));
       }},
      {"wsum-3a2b-mix1",
       {{1, -1, 1}, {-1, 1, -1}, {-1, -1, -1}},
       [](int u, int v, int w, const Rat& c2) {
         return Rat(2) * Z3(1, -1, 1, 1, u, 1) +
                Rat(2) * Zst(cp3(1, 1, 1, -1, u, 1)) +
                Rat(2) * Z3(1, -1, 1, -1, u, 1) + c2 * Z1(w) +
                Rat(2) * Z2(1, -1, v, 1) + Rat(2) * Zst(cp2(1, 1, v, -1)) +
                Rat(2) * Z2(1, -1, v, -1) - Rat(2) * Z2(u, 1, 2, 1) -
                Rat(4) * Z2(u, 1, 2, -1) +
                Rat(u) * (Rat(2) * Z2(1, -1, v, 1) + Rat(2) * Z1(w, -1) +
                          Z1(w) + Zst(cp2(1, 1, v, 1)));
       }},
      {"wsum-3a2b-mix2",
       {{1, -1, -1}, {1, 1, -1}, {-1, -1, 1}},
       [](int u, int v, int w, const Rat& c2) {
         return Rat(2) * Zst(cp3(1, 1, 1, 1, u, -1)) +
                Rat(2) * Zst(cp3(1, 1, 1, -1, u, -1)) +
                Rat(2) * Z3(1, -1, 1, 1, u, -1) +
                Rat(2) * Zst(cp2(1, 1, v, -1)) + Rat(2) * Z2(1, -1, v, -1) +
                Rat(2) * Zst(cp2(1, 1, v, 1)) + Z2(2, -1, u, -1) -
                Z2(2, 1, u, -1) - Rat(4) * Z2(u, -1, 2, 1) -
                Rat(2) * Z2(u, -1, 2, -1) +
                Rat(u) * (Rat(2) * Zst(cp2(1, 1, v, -1)) +
                          Z2(1, -1, v, -1) + Z1(w) + Rat(2) * Z1(w, -1)) +
                c2 * Z1(w, -1) + Z1(w) - Z1(w, -1);
       }},
      {"wsum-3a2b-mpp",
       {{-1, 1, 1}},
       [](int u, int v, int w, const Rat& c2) {
         return Rat(2) * Z3(1, -1, 1, -1, u, -1) +
                Rat(u) * Z2(1, -1, v, -1) + Rat(2) * Z2(1, -1, v, 1) +
                Z2(2, 1, u, -1) - Rat(2) * Z2(u, -1, 2, -1) -
                Z2(2, -1, u, -1) + (c2 / 3 + 1) * Z1(w, -1) +
                Rat(w - 3) * Z1(w);
       }},
  };
  for (const auto& line : w3a2b) {
    const std::string name = line.name;
    auto sign_sets = line.sign_sets;
    auto rhs_fn = line.rhs;
    add(name, 6, 4, std::nullopt,
        "3^a 2^b weighted sum over triple Euler sums (" + name + ")",
        [name, sign_sets, rhs_fn](int w) {
          const int u = w - 2, v = w - 1;
          const Rat c2 = Rat(v) * (v - 1) / 2;
          RegPoly lhs;
          for (int a = 1; a <= w - 2; ++a)
            for (int b = 1; b <= w - a - 1; ++b) {
              const Rat coeff =
                  Rat(2) * rat_pow(Rat(3), a - 1) * rat_pow(Rat(2), b - 1);
              for (const auto& ss : sign_sets)
                lhs += coeff *
                       Zsh(cp3(a, ss[0], b, ss[1], w - a - b, ss[2]));
            }
          return make(name, w, std::move(lhs), rhs_fn(u, v, w, c2),
                      "3^a 2^b weighted sum over triple Euler sums");
        });
  }
  add("KT-main", 6, 4, std::nullopt,
      "weighted triple T-value sum (Kaneko-Tsumura conjecture)", [](int w) {
        RegPoly lhs;
        for (int a = 2; a <= w - 2; ++a)
          for (int b = 1; b <= w - a - 1; ++b) {
            const Rat coeff =
                rat_pow(Rat(2), b) * (rat_pow(Rat(3), a - 1) - 1);
            lhs += coeff * Tv({a, b, w - a - b});
          }
        RegPoly rhs = (Rat(2, 3) * Rat(w - 1) * Rat(w - 2)) * Tv({w});
        return make("KT-main", w, std::move(lhs), std::move(rhs),
                    "weighted triple T-value sum (Kaneko-Tsumura conjecture)");
      });

  // ---- auxiliary weight-2 facts ---------------------------------------
  add("z11rel-a", 5, 2, 2, "weight-2 double-shuffle consequence", [](int w) {
    require_weight(w, 2, "z11rel-a");
    RegPoly lhs = Z2(1, -1, 1, -1) - Z2(1, -1, 1, 1);
    return make("z11rel-a", 2, std::move(lhs), Z1(2, -1),
                "weight-2 double-shuffle consequence");
  });
  add("z11rel-b", 5, 2, 2, "weight-2 double-shuffle consequence", [](int w) {
    require_weight(w, 2, "z11rel-b");
    RegPoly lhs = Rat(2) * Z1(2, -1);
    return make("z11rel-b", 2, std::move(lhs), -Z1(2),
                "weight-2 double-shuffle consequence");
  });

  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Identity build_catalog_identity(const std::string& name, int w) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (e == nullptr) throw DomainError("unknown identity: " + name);
  if (e->fixed_weight && w != *e->fixed_weight)
    throw RangeError(name + " is a fixed identity of weight " +
                     std::to_string(*e->fixed_weight));
  if (w < e->min_weight)
    throw RangeError(name + " needs weight >= " +
                     std::to_string(e->min_weight));
  return e->build(w);
}

namespace {

std::vector<DerivationLink> build_links() {
  std::vector<DerivationLink> links;
  auto d2 = [](Depth2Case c, Rat x, Rat y, Rat coeff = 1) {
    DerivationTerm t;
    t.family = 2;
    t.case2 = c;
    t.point = SpecPoint(std::move(x), std::move(y));
    t.coeff = std::move(coeff);
    return t;
  };
  auto d3a = [](std::array<int, 3> signs, Rat x, Rat y, Rat z,
                Rat coeff = 1) {
    DerivationTerm t;
    t.family = 3;
    t.signs = signs;
    t.point = SpecPoint(std::move(x), std::move(y), std::move(z));
    t.coeff = std::move(coeff);
    return t;
  };
  auto d3b = [](std::array<int, 3> signs, Rat coeff = 1) {
    DerivationTerm t;
    t.family = 6;
    t.signs = signs;
    t.point = SpecPoint(1, 1, 1);
    t.coeff = std::move(coeff);
    return t;
  };

  links.push_back({"sum-depth2-pp", {d2(Depth2Case::pp, 1, 0)}, 1});
  links.push_back({"sum-depth2-mm", {d2(Depth2Case::pm, 1, 0)}, 1});
  links.push_back({"sum-depth2-mp", {d2(Depth2Case::mm, 1, 0)}, 1});
  links.push_back({"sum-depth2-pm", {d2(Depth2Case::pm, 0, 1)}, 1});
  links.push_back({"T-weighted-depth2",
                   {d2(Depth2Case::pp, 1, 1), d2(Depth2Case::mm, 1, 1),
                    d2(Depth2Case::pm, 1, 1, -2)},
                   2});

  // Sums over z(a,b,1): third shuffle term carries (z3, z1 z3, z2).
  const std::vector<std::pair<const char*, std::array<int, 3>>> ab1_sigma = {
      {"sum-ab1-ppp", {1, 1, 1}},   {"sum-ab1-pmp", {1, -1, 1}},
      {"sum-ab1-mpp", {-1, 1, 1}},  {"sum-ab1-mmp", {-1, -1, 1}},
      {"sum-ab1-mmm", {-1, -1, -1}}, {"sum-ab1-ppm", {1, 1, -1}},
      {"sum-ab1-pmm", {1, -1, -1}}, {"sum-ab1-mpm", {-1, 1, -1}},
  };
  for (const auto& [name, sg] : ab1_sigma) {
    const int z3 = sg[0], z1 = sg[0] * sg[1], z2 = sg[2];
    links.push_back({name, {d3a({z1, z2, z3}, 1, 0, 0)}, 1});
  }
  // Sums over z(1,b,c): first shuffle term carries (z1, z3 z1, z1 z2 z3).
  const std::vector<std::pair<const char*, std::array<int, 3>>> onebc_sigma =
      {{"sum-1bc-ppp", {1, 1, 1}},   {"sum-1bc-pmp", {1, -1, 1}},
       {"sum-1bc-mpp", {-1, 1, 1}},  {"sum-1bc-mmp", {-1, -1, 1}},
       {"sum-1bc-mmm", {-1, -1, -1}}, {"sum-1bc-ppm", {1, 1, -1}},
       {"sum-1bc-pmm", {1, -1, -1}}, {"sum-1bc-mpm", {-1, 1, -1}}};
  for (const auto& [name, sg] : onebc_sigma) {
    const int z1 = sg[0], z3 = sg[0] * sg[1], z2 = sg[1] * sg[2];
    links.push_back({name, {d3a({z1, z2, z3}, 0, 1, 0)}, 1});
  }
  // Full sums over z(a,b,c): second shuffle term carries (z1, z2, z3 z1 z2).
  const std::vector<std::pair<const char*, std::array<int, 3>>> abc_sigma = {
      {"sum-abc-ppp", {1, 1, 1}},   {"sum-abc-pmp", {1, -1, 1}},
      {"sum-abc-mpp", {-1, 1, 1}},  {"sum-abc-mmp", {-1, -1, 1}},
      {"sum-abc-mpm", {-1, 1, -1}}, {"sum-abc-pmm", {1, -1, -1}},
      {"sum-abc-ppm", {1, 1, -1}},  {"sum-abc-mmm", {-1, -1, -1}}};
  std::map<std::string, std::array<int, 3>> abc_vectors;
  for (const auto& [name, sg] : abc_sigma) {
    const int z1 = sg[0], z2 = sg[1], z3 = sg[0] * sg[1] * sg[2];
    abc_vectors[name] = {z1, z2, z3};
    links.push_back({name, {d3a({z1, z2, z3}, 0, 0, 1)}, 1});
  }
  {
    // T(a,b,c) statement: signed combination of the eight cases.
    DerivationLink link;
    link.target = "T-sum-depth3";
    link.scale = 1;
    for (const auto& [name, sg] : abc_sigma) {
      int exp = 0;
      if (sg[0] < 0) exp += 3;
      if (sg[1] < 0) exp += 2;
      if (sg[2] < 0) exp += 1;
      const auto z = abc_vectors[name];
      link.terms.push_back(
          d3a(z, 0, 0, 1, (exp % 2 == 0) ? Rat(1) : Rat(-1)));
    }
    links.push_back(std::move(link));
  }
  // Sums over z(a,1,c): second stuffle permutation carries (z1, z3, z2).
  const std::vector<std::pair<const char*, std::array<int, 3>>> a1c_sigma = {
      {"sum-a1c-ppp", {1, 1, 1}},   {"sum-a1c-pmm", {1, -1, -1}},
      {"sum-a1c-mmp", {-1, -1, 1}}, {"sum-a1c-mpm", {-1, 1, -1}},
      {"sum-a1c-mpp", {-1, 1, 1}},  {"sum-a1c-ppm", {1, 1, -1}},
      {"sum-a1c-pmp", {1, -1, 1}},  {"sum-a1c-mmm", {-1, -1, -1}}};
  for (const auto& [name, sg] : a1c_sigma) {
    const int z1 = sg[0], z3 = sg[1], z2 = sg[2];
    links.push_back({name, {d3a({z1, z2, z3}, 1, 1, 0)}, 1});
  }
  // 2^b sums: first shuffle term carries (z1, z3 z1, z1 z2 z3).
  const std::vector<std::pair<const char*, std::array<int, 3>>> w2b_sigma = {
      {"wsum-2b-ppp", {1, 1, 1}},  {"wsum-2b-pmp", {1, -1, 1}},
      {"wsum-2b-mpp", {-1, 1, 1}}, {"wsum-2b-mmp", {-1, -1, 1}},
      {"wsum-2b-mxm", {-1, -1, -1}}, {"wsum-2b-pxm", {1, 1, -1}}};
  for (const auto& [name, sg] : w2b_sigma) {
    const int z1 = sg[0], z3 = sg[0] * sg[1], z2 = sg[1] * sg[2];
    links.push_back({name, {d3a({z1, z2, z3}, 0, 1, 1)}, 1});
  }
  // Triple products at (1,1,1).
  links.push_back({"wsum-3a2b-ppp", {d3b({1, 1, 1})}, 3});
  links.push_back({"wsum-3a2b-mix1", {d3b({-1, -1, 1})}, 1});
  links.push_back({"wsum-3a2b-mix2", {d3b({-1, 1, 1})}, 1});
  links.push_back({"wsum-3a2b-mpp", {d3b({-1, -1, -1})}, 3});
  return links;
}

}  // namespace

const std::vector<DerivationLink>& derivation_links() {
  static const std::vector<DerivationLink> links = build_links();
  return links;
}

Identity build_derived_combination(const DerivationLink& link, int w) {
  Identity out;
  out.name = "derived(" + link.target + ")";
  out.weight = w;
  out.provenance = "functional-equation combination for " + link.target;
  out.derivation = Identity::Derivation::derived;
  for (const DerivationTerm& t : link.terms) {
    Identity part;
    switch (t.family) {
      case 2: part = depth2_equation(t.case2, w, t.point); break;
      case 3: part = depth3a_equation(t.signs, w, t.point); break;
      case 6: part = depth3b_equation(t.signs, w, t.point); break;
      default: throw DomainError("unknown derivation family");
    }
    out.lhs += t.coeff * part.lhs;
    out.rhs += t.coeff * part.rhs;
  }
  return out;
}

}  // namespace tvf
