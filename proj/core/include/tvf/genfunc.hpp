#pragma once

#include <tvf/algebra.hpp>

#include <array>
#include <functional>
#include <mutex>

namespace tvf {

// Specialization point for the functional equations; the catalog only
// needs entries in {0, 1} but any rationals work.
struct SpecPoint {
  Rat x = 0;
  Rat y = 0;
  Rat z = 0;

  SpecPoint() = default;
  SpecPoint(Rat x_, Rat y_, Rat z_ = 0)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
    if (x == 0 && y == 0 && z == 0)
      throw DomainError("specialization point must have a nonzero entry");
  }
};

enum class Sharp { star, sha };

// Truncated generating function of #-regularized values with a fixed sign
// pattern: coefficient of x_1^{s_1-1}...x_d^{s_d-1} is the regularized
// polynomial of (s; z).  Thin memoized view over the regularization maps.
class FSeries {
 public:
  FSeries(std::vector<int> signs, Sharp sharp, int truncation_weight);

  int depth() const { return static_cast<int>(signs_.size()); }
  int truncation_weight() const { return weight_; }
  const RegPoly& coeff(const std::vector<int>& exponents) const;

 private:
  std::vector<int> signs_;
  Sharp sharp_;
  int weight_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, RegPoly> memo_;
};

// The three depth-2 functional-equation lines, keyed by the sign case of
// the product (z(a)z(b), z(a)z(b-bar), z(a-bar)z(b-bar)).
enum class Depth2Case { pp, pm, mm };

Identity depth2_equation(Depth2Case c, int w, const SpecPoint& p);
// The (+,+) line held coefficient-by-coefficient in (x, y): one identity
// per monomial x^i y^(w-2-i).
std::vector<Identity> depth2_poly_identities(Depth2Case c, int w);

// Depth-3 functional equations: the double-times-single product family
// (with its delta correction term) and the triple-product family.
Identity depth3a_equation(const std::array<int, 3>& signs, int w,
                          const SpecPoint& p);
Identity depth3b_equation(const std::array<int, 3>& signs, int w,
                          const SpecPoint& p);

struct CatalogEntry {
  std::string name;
  int section = 0;  // 4 = depth-2 family, 5 = depth-3 A, 6 = depth-3 B
  int min_weight = 0;
  std::optional<int> fixed_weight;
  std::string provenance;
  std::function<Identity(int)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);
Identity build_catalog_identity(const std::string& name, int w);

// A catalog identity whose proof is a specialization of one of the
// functional equations: sum(coeff * derived equation) should match
// scale * transcribed identity modulo the double-shuffle span.
struct DerivationTerm {
  int family = 2;  // 2 = depth2, 3 = depth3a, 6 = depth3b
  Depth2Case case2 = Depth2Case::pp;
  std::array<int, 3> signs{1, 1, 1};
  SpecPoint point;
  Rat coeff = 1;
};

struct DerivationLink {
  std::string target;
  std::vector<DerivationTerm> terms;
  Rat scale = 1;
};

const std::vector<DerivationLink>& derivation_links();
Identity build_derived_combination(const DerivationLink& link, int w);

}  // namespace tvf
