#include "godeaux/graded_quotient.hpp"

#include "godeaux/group_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace godeaux {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

}  // namespace

GradedPresentation::GradedPresentation(Descriptor desc, std::vector<Polynomial> relations, int parameter_cap)
    : desc_(std::move(desc)), relations_(std::move(relations)), parameter_cap_(parameter_cap) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    if (!same_ring(r.descriptor(), desc_)) throw std::invalid_argument("relation from another ring");
    Grading g = degree_and_weight(r);
    if (g.kind == Grading::Kind::kZero) throw std::invalid_argument("relation " + std::to_string(i) + " is zero");
    if (!g.homogeneous())
      throw std::invalid_argument("relation " + std::to_string(i) + " is not homogeneous: " + render_polynomial(r));
    gradings_.push_back(g);
  }
}

// ---------------------------------------------------------------------------

MonomialIndex::MonomialIndex(const RingDescriptor& desc) : desc_(&desc), order_(MonomialOrder{&desc}) {}

MonomialIndex::MonomialIndex(const RingDescriptor& desc, const std::vector<Monomial>& monomials)
    : MonomialIndex(desc) {
  for (const auto& m : monomials) add(m);
}

void MonomialIndex::add(const Monomial& m) {
  if (order_.try_emplace(m, 0).second) dirty_ = true;
}

void MonomialIndex::add_all(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) add(m);
}

const std::vector<Monomial>& MonomialIndex::monomials() const {
  if (dirty_) {
    sorted_.clear();
    std::size_t i = 0;
    for (auto& [m, idx] : order_) {
      idx = i++;
      sorted_.push_back(m);
    }
    dirty_ = false;
  }
  return sorted_;
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  monomials();
  auto it = order_.find(m);
  if (it == order_.end()) throw std::out_of_range("monomial outside the graded piece");
  return it->second;
}

SparseVector MonomialIndex::coordinates(const Polynomial& p) const {
  monomials();
  SparseVector v;
  v.reserve(p.size());
  for (const auto& [m, c] : p.terms()) v.emplace_back(at(m), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial MonomialIndex::polynomial(const Descriptor& desc, const SparseVector& v) const {
  const auto& mons = monomials();
  Polynomial p(desc);
  for (const auto& [i, c] : v) p.add_term(mons.at(i), c);
  return p;
}

// ---------------------------------------------------------------------------

IdealPiece ideal_piece_data(const GradedPresentation& pres, int m, int w) {
  const auto& desc = pres.descriptor();
  const int d = desc->torsion_order();
  IdealPiece piece;
  for (std::size_t i = 0; i < pres.relations().size(); ++i) {
    const Grading& g = pres.gradings()[i];
    if (m < g.degree) continue;
    for (const auto& u : enumerate_monomials(*desc, m - g.degree, mod(w - g.weight, d), pres.parameter_cap())) {
      piece.spanning.push_back(Polynomial::monomial(desc, u) * pres.relations()[i]);
      piece.relation_index.push_back(i);
      piece.multiplier.push_back(u);
    }
  }
  MonomialIndex index(*desc);
  for (const auto& p : piece.spanning) index.add_all(p);
  EchelonBasis echelon(index.size(), desc->field_order());
  for (const auto& p : piece.spanning) echelon.insert(index.coordinates(p));
  for (const auto& row : echelon.rows()) piece.basis.push_back(index.polynomial(desc, row));
  return piece;
}

std::vector<Polynomial> ideal_piece(const GradedPresentation& pres, int m, int w) {
  return ideal_piece_data(pres, m, w).basis;
}

std::size_t ambient_dim(const GradedPresentation& pres, int m, int w) {
  return enumerate_monomials(*pres.descriptor(), m, w, pres.parameter_cap()).size();
}

std::size_t quotient_dim(const GradedPresentation& pres, int m, int w) {
  if (pres.descriptor()->has_parameters())
    throw std::logic_error("specialise the parameters before computing dimensions");
  if (m < 0) return 0;
  return ambient_dim(pres, m, w) - ideal_piece(pres, m, w).size();
}

HilbertTable::HilbertTable(int max_degree, int torsion_order)
    : max_degree_(max_degree), torsion_order_(torsion_order),
      entries_(static_cast<std::size_t>((max_degree + 1) * torsion_order), 0) {}

std::size_t HilbertTable::at(int m, int w) const {
  if (m < 0 || m > max_degree_) throw std::out_of_range("degree outside the table");
  return entries_[static_cast<std::size_t>(m * torsion_order_ + mod(w, torsion_order_))];
}

void HilbertTable::set(int m, int w, std::size_t value) {
  if (m < 0 || m > max_degree_) throw std::out_of_range("degree outside the table");
  entries_[static_cast<std::size_t>(m * torsion_order_ + mod(w, torsion_order_))] = value;
}

std::size_t HilbertTable::total(int m) const {
  std::size_t t = 0;
  for (int w = 0; w < torsion_order_; ++w) t += at(m, w);
  return t;
}

HilbertTable hilbert(const GradedPresentation& pres, int max_degree) {
  HilbertTable table(max_degree, pres.descriptor()->torsion_order());
  for (int m = 0; m <= max_degree; ++m)
    for (int w = 0; w < table.torsion_order(); ++w) table.set(m, w, quotient_dim(pres, m, w));
  return table;
}

// ---------------------------------------------------------------------------

IdealMembership reduces_to_zero(const GradedPresentation& pres, const Polynomial& p) {
  const auto& desc = pres.descriptor();
  if (!same_ring(p.descriptor(), desc)) throw std::invalid_argument("descriptor mismatch");
  IdealMembership result;
  result.cofactors.assign(pres.relations().size(), Polynomial(desc));
  Grading g = degree_and_weight(p);
  if (g.kind == Grading::Kind::kZero) {
    result.member = true;
    return result;
  }
  if (!g.homogeneous()) throw std::invalid_argument("inhomogeneous input");

  IdealPiece piece = ideal_piece_data(pres, g.degree, g.weight);
  MonomialIndex index(*desc);
  index.add_all(p);
  for (const auto& s : piece.spanning) index.add_all(s);
  EchelonBasis echelon(index.size(), desc->field_order(), true);
  for (const auto& s : piece.spanning) echelon.insert(index.coordinates(s));
  auto cert = echelon.certificate(index.coordinates(p));
  if (!cert) return result;
  result.member = true;
  for (const auto& [j, c] : *cert)
    result.cofactors[piece.relation_index[j]].add_term(piece.multiplier[j], c);
  return result;
}

bool certificate_recombines(const GradedPresentation& pres, const Polynomial& p,
                            const std::vector<Polynomial>& cofactors) {
  if (cofactors.size() != pres.relations().size()) return false;
  Polynomial sum(pres.descriptor());
  for (std::size_t i = 0; i < cofactors.size(); ++i) sum += cofactors[i] * pres.relations()[i];
  return sum == p;
}

long koszul_prediction(const GradedPresentation& pres, int m, int w) {
  const auto& desc = *pres.descriptor();
  const auto& gr = pres.gradings();
  const std::size_t k = gr.size();
  if (k > 20) throw std::invalid_argument("too many relations for inclusion-exclusion");
  long total = 0;
  for (std::size_t subset = 0; subset < (std::size_t{1} << k); ++subset) {
    int shift_deg = 0, shift_wt = 0, sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (subset & (std::size_t{1} << i)) {
        shift_deg += gr[i].degree;
        shift_wt += gr[i].weight;
        sign = -sign;
      }
    if (m - shift_deg < 0) continue;
    total += sign * static_cast<long>(
                        weight_space_dim(desc, m - shift_deg, mod(w - shift_wt, desc.torsion_order()), pres.parameter_cap()));
  }
  return total;
}

bool koszul_check(const GradedPresentation& pres, int max_degree, std::optional<KoszulMismatch>* first_mismatch) {
  const int d = pres.descriptor()->torsion_order();
  for (int m = 0; m <= max_degree; ++m)
    for (int w = 0; w < d; ++w) {
      long expected = koszul_prediction(pres, m, w);
      std::size_t actual = quotient_dim(pres, m, w);
      if (expected < 0 || static_cast<std::size_t>(expected) != actual) {
        if (first_mismatch) *first_mismatch = KoszulMismatch{m, w, expected, actual};
        return false;
      }
    }
  return true;
}

bool multiplication_injectivity(const GradedPresentation& pres, std::string_view variable, int max_degree) {
  const auto& desc = pres.descriptor();
  const std::size_t var = desc->require_index(variable);
  const int dv = desc->variable(var).degree;
  const int wv = desc->variable(var).weight;
  const int d = desc->torsion_order();
  if (dv <= 0) throw std::invalid_argument("multiplication by a degree-0 variable");
  const Polynomial v = Polynomial::variable(desc, var);
  for (int m = 0; m + dv <= max_degree; ++m)
    for (int w = 0; w < d; ++w) {
      const int target_w = mod(w + wv, d);
      MonomialIndex index(*desc, enumerate_monomials(*desc, m + dv, target_w, pres.parameter_cap()));
      EchelonBasis echelon(index.size(), desc->field_order());
      for (const auto& b : ideal_piece(pres, m + dv, target_w)) echelon.insert(index.coordinates(b));
      const std::size_t base_rank = echelon.rank();
      for (const auto& u : enumerate_monomials(*desc, m, w, pres.parameter_cap()))
        echelon.insert(index.coordinates(Polynomial::monomial(desc, u) * v));
      if (echelon.rank() - base_rank != quotient_dim(pres, m, w)) return false;
    }
  return true;
}

}  // namespace godeaux
