#pragma once

#include <tvf/algebra.hpp>

#include <iosfwd>
#include <memory>
#include <variant>

namespace tvf {

// All level-2 compositions of the given weight in canonical order.
std::vector<SignedComposition> compositions_of_weight(int w);
std::vector<SignedComposition> admissible_compositions_of_weight(int w);

// Ambient basis for weight-W relation vectors: T-degree ascending, within
// a degree the admissible compositions of weight W-k in canonical order;
// the degree-W slot is the rational unit column.
class SymbolBasis {
 public:
  explicit SymbolBasis(int weight);

  struct Column {
    int t_degree = 0;
    std::optional<SignedComposition> comp;  // nullopt: the unit column
  };

  int weight() const { return weight_; }
  int size() const { return static_cast<int>(columns_.size()); }
  const std::vector<Column>& columns() const { return columns_; }
  int column_of(int t_degree, const SignedComposition& c) const;
  int unit_column() const { return unit_column_; }

 private:
  int weight_;
  std::vector<Column> columns_;
  std::map<std::pair<int, SignedComposition>, int> index_;
  int unit_column_ = -1;
};

struct SparseRow {
  std::string provenance;
  std::vector<std::pair<int, Rat>> entries;  // sorted by column
};

// Sparse vector of a polynomial relation over the basis, one block per
// T-degree.  Throws StructuralError on weight mismatch.
std::vector<std::pair<int, Rat>> vectorize(const RegPoly& p,
                                           const SymbolBasis& basis);

class SpanChecker;

struct RelationSystem {
  int weight = 0;
  std::shared_ptr<const SymbolBasis> basis;
  std::vector<SparseRow> rows;

  // Lazily built elimination of the row space (shared across calls).
  const SpanChecker& checker() const;

 private:
  mutable std::shared_ptr<SpanChecker> checker_;
};

// One sound relation row set per unordered pair of level-2 compositions
// with weight(u) + weight(v) = W:
//   - the double product expansion (shuffle route minus rho of the stuffle
//     route) whenever at least one factor is admissible, and
//   - the regularization comparison of every divergent word of weight W.
// Rows are split by T-degree.
RelationSystem generate_dsh_system(int weight, int cap = 8);

struct Certificate {
  std::vector<std::pair<std::size_t, Rat>> multipliers;  // row index, factor
};
struct Residual {
  std::vector<std::pair<int, Rat>> entries;
};
using MembershipResult = std::variant<Certificate, Residual>;

// Fraction-free-style exact elimination with combination tracking, so that
// membership reductions return certificates over the original rows.
class SpanChecker {
 public:
  explicit SpanChecker(const RelationSystem& sys);

  int rank() const { return rank_; }
  std::map<int, int> rank_by_degree() const;  // T-degree -> pivot count
  MembershipResult reduce(const RegPoly& difference) const;
  // Exact re-multiplication of the certificate against the stored rows.
  bool validate(const RegPoly& difference, const Certificate& cert) const;

 private:
  struct Pivot {
    int lead = -1;
    std::map<int, Rat> entries;        // monic in the lead column
    std::map<std::size_t, Rat> combo;  // over original row indices
  };
  std::pair<std::map<int, Rat>, std::map<std::size_t, Rat>> run_reduction(
      std::map<int, Rat> vec) const;

  const RelationSystem* sys_;
  std::map<int, Pivot> pivots_;  // keyed by lead column
  int rank_ = 0;
};

MembershipResult check_membership(const Identity& id,
                                  const RelationSystem& sys);
int rank(const RelationSystem& sys);

// Versioned JSON serialization used for on-disk caching.
std::string relation_system_to_json(const RelationSystem& sys);
RelationSystem relation_system_from_json(const std::string& text);

}  // namespace tvf
