#include <tvf/relations.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <mutex>

namespace tvf {

namespace {

void emit_exponent_vectors(int w, int d, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (d == 1) {
    acc.push_back(w);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int first = 1; first <= w - (d - 1); ++first) {
    acc.push_back(first);
    emit_exponent_vectors(w - first, d - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SignedComposition> compositions_of_weight(int w) {
  if (w < 1) throw RangeError("weight must be >= 1");
  std::vector<SignedComposition> out;
  for (int d = 1; d <= w; ++d) {
    std::vector<std::vector<int>> exps;
    std::vector<int> acc;
    emit_exponent_vectors(w, d, acc, exps);
    for (const auto& e : exps) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Part> parts;
        parts.reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
          parts.push_back(Part{e[static_cast<std::size_t>(j)],
                               ((mask >> j) & 1u) != 0});
        out.emplace_back(std::move(parts));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedComposition> admissible_compositions_of_weight(int w) {
  std::vector<SignedComposition> all = compositions_of_weight(w);
  std::erase_if(all, [](const SignedComposition& c) { return !c.admissible(); });
  return all;
}

SymbolBasis::SymbolBasis(int weight) : weight_(weight) {
  if (weight < 1) throw RangeError("basis weight must be >= 1");
  for (int k = 0; k < weight_; ++k) {
    for (const SignedComposition& c :
         admissible_compositions_of_weight(weight_ - k)) {
      index_.emplace(std::make_pair(k, c), size());
      columns_.push_back(Column{k, c});
    }
  }
  unit_column_ = size();
  columns_.push_back(Column{weight_, std::nullopt});
}

int SymbolBasis::column_of(int t_degree, const SignedComposition& c) const {
  auto it = index_.find(std::make_pair(t_degree, c));
  if (it == index_.end())
    throw StructuralError("symbol T^" + std::to_string(t_degree) + " z(" +
                          c.text() + ") is outside the weight-" +
                          std::to_string(weight_) + " basis");
  return it->second;
}

std::vector<std::pair<int, Rat>> vectorize(const RegPoly& p,
                                           const SymbolBasis& basis) {
  std::vector<std::pair<int, Rat>> out;
  for (const auto& [k, lin] : p.coefficients()) {
    if (lin.constant_part() != 0) {
      if (k != basis.weight())
        throw StructuralError("rational slot at T-degree " +
                              std::to_string(k) + " in a weight-" +
                              std::to_string(basis.weight()) + " vector");
      out.emplace_back(basis.unit_column(), lin.constant_part());
    }
    for (const auto& [c, q] : lin.terms())
      out.emplace_back(basis.column_of(k, c), q);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

const SpanChecker& RelationSystem::checker() const {
  static std::mutex build_mutex;
  std::lock_guard<std::mutex> lock(build_mutex);
  if (!checker_) checker_ = std::make_shared<SpanChecker>(*this);
  return *checker_;
}

RelationSystem generate_dsh_system(int weight, int cap) {
  if (weight < 2) throw RangeError("double-shuffle system needs weight >= 2");
  if (weight > cap)
    throw CapacityError("weight " + std::to_string(weight) +
                        " exceeds the configured cap " + std::to_string(cap));
  RelationSystem sys;
  sys.weight = weight;
  sys.basis = std::make_shared<SymbolBasis>(weight);
  const RhoMap& rho = default_rho();

  auto push_rows = [&](const RegPoly& diff, const std::string& prov) {
    for (const auto& [k, lin] : diff.coefficients()) {
      RegPoly slice = RegPoly::t_power(k, lin);
      auto entries = vectorize(slice, *sys.basis);
      if (entries.empty()) continue;
      sys.rows.push_back(SparseRow{prov + " @T^" + std::to_string(k),
                                   std::move(entries)});
    }
  };

  // Product comparisons over unordered pairs.
  for (int wa = 1; 2 * wa <= weight; ++wa) {
    const int wb = weight - wa;
    const auto us = compositions_of_weight(wa);
    const auto vs = compositions_of_weight(wb);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (wa == wb && v < u) continue;
        if (!u.admissible() && !v.admissible()) continue;
        RegPoly diff = reg_shuffle(shuffle(u, v));
        diff -= rho(reg_stuffle(stuffle(u, v)));
        push_rows(diff, "pair (" + u.text() + " | " + v.text() + ") product");
      }
    }
  }
  // Regularization comparison of every divergent weight-W word.
  for (const auto& c : compositions_of_weight(weight)) {
    if (c.admissible()) continue;
    RegPoly diff = reg_shuffle(c);
    diff -= rho(reg_stuffle(c));
    push_rows(diff, "word (" + c.text() + ")");
  }
  return sys;
}

SpanChecker::SpanChecker(const RelationSystem& sys) : sys_(&sys) {
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    std::map<int, Rat> vec(sys.rows[i].entries.begin(),
                           sys.rows[i].entries.end());
    auto [reduced, combo] = run_reduction(std::move(vec));
    if (reduced.empty()) continue;
    const int lead = reduced.begin()->first;
    const Rat inv = Rat(1) / reduced.begin()->second;
    Pivot p;
    p.lead = lead;
    for (auto& [col, q] : reduced) p.entries.emplace(col, q * inv);
    for (auto& [row, q] : combo) p.combo.emplace(row, -q * inv);
    p.combo[i] += inv;
    if (p.combo[i] == 0) p.combo.erase(i);
    pivots_.emplace(lead, std::move(p));
    ++rank_;
  }
}

std::pair<std::map<int, Rat>, std::map<std::size_t, Rat>>
SpanChecker::run_reduction(std::map<int, Rat> vec) const {
  // Maintains vec = original - sum combo_i * row_i.
  std::map<std::size_t, Rat> combo;
  auto it = vec.begin();
  while (it != vec.end()) {
    if (it->second == 0) {
      it = vec.erase(it);
      continue;
    }
    auto pv = pivots_.find(it->first);
    if (pv == pivots_.end()) {
      ++it;
      continue;
    }
    const Rat factor = it->second;  // pivot is monic
    for (const auto& [col, q] : pv->second.entries) {
      auto [slot, inserted] = vec.emplace(col, 0);
      slot->second -= factor * q;
    }
    for (const auto& [row, q] : pv->second.combo) {
      combo[row] += factor * q;
      if (combo[row] == 0) combo.erase(row);
    }
    it = vec.begin();  // lead entry vanished; restart from the front
  }
  return {std::move(vec), std::move(combo)};
}

std::map<int, int> SpanChecker::rank_by_degree() const {
  std::map<int, int> out;
  for (const auto& [lead, p] : pivots_)
    out[sys_->basis->columns()[static_cast<std::size_t>(lead)].t_degree] += 1;
  return out;
}

MembershipResult SpanChecker::reduce(const RegPoly& difference) const {
  auto entries = vectorize(difference, *sys_->basis);
  std::map<int, Rat> vec(entries.begin(), entries.end());
  auto [reduced, combo] = run_reduction(std::move(vec));
  if (reduced.empty()) {
    Certificate cert;
    for (auto& [row, q] : combo) cert.multipliers.emplace_back(row, q);
    return cert;
  }
  Residual res;
  for (auto& [col, q] : reduced)
    if (q != 0) res.entries.emplace_back(col, q);
  return res;
}

bool SpanChecker::validate(const RegPoly& difference,
                           const Certificate& cert) const {
  std::map<int, Rat> acc;
  for (const auto& [row, q] : cert.multipliers)
    for (const auto& [col, e] : sys_->rows[row].entries) acc[col] += q * e;
  auto entries = vectorize(difference, *sys_->basis);
  std::map<int, Rat> want(entries.begin(), entries.end());
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
  return acc == want;
}

MembershipResult check_membership(const Identity& id,
                                  const RelationSystem& sys) {
  if (id.weight != sys.weight)
    throw StructuralError("identity weight " + std::to_string(id.weight) +
                          " does not match system weight " +
                          std::to_string(sys.weight));
  return sys.checker().reduce(id.difference());
}

int rank(const RelationSystem& sys) { return sys.checker().rank(); }

std::string relation_system_to_json(const RelationSystem& sys) {
  nlohmann::json j;
  j["format"] = 1;
  j["weight"] = sys.weight;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& col : sys.basis->columns()) {
    nlohmann::json c;
    c["t"] = col.t_degree;
    c["index"] = col.comp ? col.comp->text() : "";
    basis.push_back(std::move(c));
  }
  j["basis"] = std::move(basis);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : sys.rows) {
    nlohmann::json r;
    r["prov"] = row.provenance;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [col, q] : row.entries)
      entries.push_back({col, rat_text(Rat(numerator(q))),
                         rat_text(Rat(denominator(q)))});
    r["entries"] = std::move(entries);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

RelationSystem relation_system_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("format") || j["format"].get<int>() != 1)
    throw ParseError("unsupported relation cache format");
  RelationSystem sys;
  sys.weight = j["weight"].get<int>();
  sys.basis = std::make_shared<SymbolBasis>(sys.weight);
  // The basis is canonical; verify the cached one agrees.
  const auto& basis_json = j["basis"];
  if (static_cast<int>(basis_json.size()) != sys.basis->size())
    throw ParseError("relation cache basis does not match");
  for (int i = 0; i < sys.basis->size(); ++i) {
    const auto& col = sys.basis->columns()[static_cast<std::size_t>(i)];
    const auto& cj = basis_json[static_cast<std::size_t>(i)];
    const std::string want = col.comp ? col.comp->text() : "";
    if (cj["t"].get<int>() != col.t_degree ||
        cj["index"].get<std::string>() != want)
      throw ParseError("relation cache basis does not match");
  }
  for (const auto& rj : j["rows"]) {
    SparseRow row;
    row.provenance = rj["prov"].get<std::string>();
    for (const auto& ej : rj["entries"]) {
      const int col = ej[0].get<int>();
      const Rat num = rat_parse(ej[1].get<std::string>());
      const Rat den = rat_parse(ej[2].get<std::string>());
      row.entries.emplace_back(col, num / den);
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

}  // namespace tvf
