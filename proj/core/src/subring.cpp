#include "godeaux/subring.hpp"

#include "godeaux/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace godeaux {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

// Degree-m piece of the ambient ring with normal forms modulo its relations.
class AmbientPiece {
 public:
  AmbientPiece(const MembershipPredicate& pred, int m)
      : desc_(pred.ambient()),
        index_(*desc_, enumerate_monomials(*desc_, m)),
        ideal_(index_.size(), desc_->field_order()) {
    if (pred.quotient().relations().empty()) return;
    for (int w = 0; w < desc_->torsion_order(); ++w)
      for (const auto& b : ideal_piece(pred.quotient(), m, w)) ideal_.insert(index_.coordinates(b));
  }

  std::size_t dim() const { return index_.size(); }
  const MonomialIndex& index() const { return index_; }
  SparseVector normal_form(const Polynomial& p) const { return ideal_.reduce(index_.coordinates(p)).residual; }
  Polynomial polynomial(const SparseVector& v) const { return index_.polynomial(desc_, v); }

 private:
  Descriptor desc_;
  MonomialIndex index_;
  EchelonBasis ideal_;
};

// Evaluates monomials in named generator symbols as ambient polynomials.
class ProductEvaluator {
 public:
  ProductEvaluator(const Descriptor& ambient, std::vector<Polynomial> gens, std::vector<int> degrees)
      : ambient_(ambient), gens_(std::move(gens)) {
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < gens_.size(); ++i) vars.push_back({"g" + std::to_string(i + 1), degrees[i], 0});
    free_ = make_descriptor(std::move(vars), 1, ambient->field_order());
    cache_.emplace(MonomialOrder{free_.get()});
  }

  const Descriptor& free_ring() const { return free_; }

  std::vector<Monomial> monomials(int m) const {
    if (free_->size() == 0) return m == 0 ? std::vector<Monomial>{Monomial()} : std::vector<Monomial>{};
    return enumerate_monomials(*free_, m);
  }

  const Polynomial& eval(const Monomial& mon) {
    auto it = cache_->find(mon);
    if (it != cache_->end()) return it->second;
    std::size_t last = mon.exponents.size();
    while (last > 0 && mon.exponents[last - 1] == 0) --last;
    Polynomial value = Polynomial::constant(ambient_, Scalar(1));
    if (last > 0) {
      Monomial prev = mon;
      --prev.exponents[last - 1];
      value = eval(prev) * gens_[last - 1];
    }
    return cache_->emplace(mon, std::move(value)).first->second;
  }

  Polynomial eval(const Polynomial& free_element) {
    Polynomial out(ambient_);
    for (const auto& [m, c] : free_element.terms()) out += eval(m) * c;
    return out;
  }

 private:
  Descriptor ambient_;
  std::vector<Polynomial> gens_;
  Descriptor free_;
  std::optional<std::map<Monomial, Polynomial, MonomialOrder>> cache_;
};

// Combinations c (dense) over `basis` whose image under the linear map lies in `kernel`.
std::vector<SparseVector> restrict_to_kernel(const std::vector<SparseVector>& basis,
                                             const std::vector<SparseVector>& images, std::size_t target_dim,
                                             int field, const std::vector<SparseVector>* extra = nullptr) {
  const std::size_t k = basis.size();
  const std::size_t cols = k + (extra ? extra->size() : 0);
  Matrix mat(target_dim, cols, field);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& [i, x] : images[j]) mat(i, j) = x;
  if (extra)
    for (std::size_t j = 0; j < extra->size(); ++j)
      for (const auto& [i, x] : (*extra)[j]) mat(i, k + j) = x;
  std::vector<SparseVector> out;
  for (const auto& kv : kernel_basis(mat)) {
    SparseVector combo;
    for (std::size_t j = 0; j < k; ++j) {
      if (kv[j].is_zero()) continue;
      // combination sum kv[j] * basis[j]
      SparseVector scaled = basis[j];
      for (auto& [i, x] : scaled) x *= kv[j];
      SparseVector merged;
      std::merge(combo.begin(), combo.end(), scaled.begin(), scaled.end(), std::back_inserter(merged),
                 [](const auto& a, const auto& b) { return a.first < b.first; });
      combo.clear();
      for (auto& e : merged) {
        if (!combo.empty() && combo.back().first == e.first) {
          combo.back().second += e.second;
          if (combo.back().second.is_zero()) combo.pop_back();
        } else {
          combo.push_back(std::move(e));
        }
      }
    }
    if (!combo.empty()) out.push_back(std::move(combo));
  }
  return out;
}

std::vector<SparseVector> independent(const std::vector<SparseVector>& vectors, std::size_t dim, int field) {
  EchelonBasis e(dim, field);
  std::vector<SparseVector> out;
  for (const auto& v : vectors)
    if (e.insert(v)) out.push_back(v);
  return out;
}

std::vector<SparseVector> apply_condition(const MembershipPredicate& pred, const AmbientPiece& piece, int m,
                                          const std::vector<SparseVector>& basis, const Condition& cond) {
  const auto& desc = pred.ambient();
  const int field = desc->field_order();
  if (basis.empty()) return basis;

  if (const auto* wc = std::get_if<WeightCondition>(&cond)) {
    // image = components of the wrong weight
    const auto& mons = piece.index().monomials();
    std::vector<SparseVector> images;
    for (const auto& v : basis) {
      SparseVector img;
      for (const auto& [i, x] : v)
        if (mons[i].weight(*desc) != mod(wc->weight, desc->torsion_order())) img.emplace_back(i, x);
      images.push_back(std::move(img));
    }
    return independent(restrict_to_kernel(basis, images, piece.dim(), field), piece.dim(), field);
  }

  if (const auto* cc = std::get_if<CongruenceImageCondition>(&cond)) {
    std::vector<SparseVector> span;
    std::vector<int> degrees;
    std::vector<Polynomial> gens;
    for (const auto& g : cc->image_generators) {
      Grading gr = degree_and_weight(g);
      if (!gr.homogeneous() || gr.degree <= 0) throw std::invalid_argument("image generators must be homogeneous of positive degree");
      gens.push_back(g);
      degrees.push_back(gr.degree);
    }
    ProductEvaluator image(desc, gens, degrees);
    for (const auto& mon : image.monomials(m)) span.push_back(piece.normal_form(image.eval(mon)));
    for (const auto& h : cc->ideal_generators) {
      Grading gr = degree_and_weight(h);
      if (!gr.homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
      if (gr.degree > m) continue;
      for (const auto& u : enumerate_monomials(*desc, m - gr.degree))
        span.push_back(piece.normal_form(Polynomial::monomial(desc, u) * h));
    }
    // u-part of the kernel of [basis | -span]
    std::vector<SparseVector> negated = span;
    for (auto& v : negated)
      for (auto& [i, x] : v) x = -x;
    return independent(restrict_to_kernel(basis, basis, piece.dim(), field, &negated), piece.dim(), field);
  }

  const auto& sc = std::get<SubstitutionEqualityCondition>(cond);
  Scalar eps = Scalar(Rational((sc.alternating && m % 2 != 0) ? -1 : 1), field);
  std::vector<Polynomial> diffs;
  for (const auto& v : basis) {
    Polynomial g = piece.polynomial(v);
    diffs.push_back(substitute(g, sc.first) - substitute(g, sc.second) * eps);
  }
  MonomialIndex target(*diffs.front().descriptor());
  for (const auto& d : diffs) target.add_all(d);
  std::vector<SparseVector> images;
  for (const auto& d : diffs) images.push_back(target.coordinates(d));
  return independent(restrict_to_kernel(basis, images, target.size(), field), piece.dim(), field);
}

std::vector<Polynomial> canonical_basis(const AmbientPiece& piece, const std::vector<SparseVector>& vectors,
                                        int field) {
  if (vectors.empty()) return {};
  Matrix mat(vectors.size(), piece.dim(), field);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [i, x] : vectors[r]) mat(r, i) = x;
  auto red = rref(std::move(mat));
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) out.push_back(piece.polynomial(to_sparse(red.reduced.row(r))));
  return out;
}

std::vector<SparseVector> subspace_vectors(const MembershipPredicate& pred, const AmbientPiece& piece, int m) {
  std::vector<SparseVector> start;
  for (const auto& mon : piece.index().monomials()) {
    auto nf = piece.normal_form(Polynomial::monomial(pred.ambient(), mon));
    if (!nf.empty()) start.push_back(std::move(nf));
  }
  auto basis = independent(start, piece.dim(), pred.ambient()->field_order());
  for (const auto& cond : pred.conditions()) basis = apply_condition(pred, piece, m, basis, cond);
  return basis;
}

}  // namespace

MembershipPredicate::MembershipPredicate(Descriptor ambient, std::vector<Polynomial> ambient_relations)
    : ambient_(std::move(ambient)), quotient_(ambient_, std::move(ambient_relations)) {
  if (ambient_->has_parameters()) throw std::invalid_argument("membership predicates need a parameter-free ambient ring");
}

MembershipPredicate& MembershipPredicate::add(Condition condition) {
  if (auto* sc = std::get_if<SubstitutionEqualityCondition>(&condition)) {
    if (sc->first.size() != ambient_->size() || sc->second.size() != ambient_->size())
      throw std::invalid_argument("substitution needs one image per ambient variable");
  }
  conditions_.push_back(std::move(condition));
  return *this;
}

std::vector<Polynomial> subspace_basis(const MembershipPredicate& pred, int m) {
  if (m < 0) return {};
  AmbientPiece piece(pred, m);
  return canonical_basis(piece, subspace_vectors(pred, piece, m), pred.ambient()->field_order());
}

Polynomial ambient_normal_form(const MembershipPredicate& pred, const Polynomial& p) {
  Grading g = degree_and_weight(p);
  if (g.kind == Grading::Kind::kZero) return p;
  if (!g.homogeneous()) throw std::invalid_argument("inhomogeneous input");
  AmbientPiece piece(pred, g.degree);
  return piece.polynomial(piece.normal_form(p));
}

bool is_member(const MembershipPredicate& pred, const Polynomial& p) {
  Grading g = degree_and_weight(p);
  if (g.kind == Grading::Kind::kZero) return true;
  if (!g.homogeneous()) return false;
  AmbientPiece piece(pred, g.degree);
  EchelonBasis e(piece.dim(), pred.ambient()->field_order());
  for (const auto& v : subspace_vectors(pred, piece, g.degree)) e.insert(v);
  return e.contains(piece.normal_form(p));
}

Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  for (const auto& [m, c] : p.terms())
    if (!c.is_rational()) return p * p.leading_coefficient().inverse();
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    const Rational& r = c.rational_value();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.denominator().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.numerator().get_mpz_t());
  }
  Rational scale{mpq_class(den, num)};
  if (p.leading_coefficient().rational_value().sign() < 0) scale = -scale;
  return p * Scalar(scale, p.descriptor()->field_order());
}

std::vector<Generator> minimal_generators(const MembershipPredicate& pred, int max_degree) {
  const int field = pred.ambient()->field_order();
  std::vector<std::vector<Polynomial>> v_basis(static_cast<std::size_t>(max_degree + 1));
  std::vector<Generator> gens;
  for (int m = 1; m <= max_degree; ++m) {
    AmbientPiece piece(pred, m);
    auto vm = subspace_vectors(pred, piece, m);
    v_basis[m] = canonical_basis(piece, vm, field);
    EchelonBasis products(piece.dim(), field);
    for (const auto& g : gens) {
      int rest = m - g.degree;
      if (rest < 1) continue;
      for (const auto& b : v_basis[rest]) products.insert(piece.normal_form(g.poly * b));
    }
    for (const auto& b : v_basis[m]) {
      auto residual = products.reduce(piece.normal_form(b)).residual;
      if (residual.empty()) continue;
      products.insert(residual);
      gens.push_back({integer_primitive(piece.polynomial(residual)), m});
    }
  }
  return gens;
}

std::size_t SubringPresentation::relation_count() const {
  std::size_t n = 0;
  for (const auto& [m, c] : census) n += c;
  return n;
}

SubringPresentation presentation(const MembershipPredicate& pred, int max_degree) {
  const int field = pred.ambient()->field_order();
  SubringPresentation out;
  out.max_degree = max_degree;
  out.generators = minimal_generators(pred, max_degree);
  std::vector<Polynomial> polys;
  std::vector<int> degrees;
  for (const auto& g : out.generators) {
    polys.push_back(g.poly);
    degrees.push_back(g.degree);
  }
  ProductEvaluator evaluator(pred.ambient(), polys, degrees);
  out.free_ring = evaluator.free_ring();

  std::vector<std::vector<Monomial>> free_monomials;
  std::vector<std::vector<SparseVector>> kernel;
  for (int m = 0; m <= max_degree; ++m) {
    AmbientPiece piece(pred, m);
    out.hilbert.push_back(m == 0 ? subspace_vectors(pred, piece, 0).size() : subspace_vectors(pred, piece, m).size());
    free_monomials.push_back(evaluator.monomials(m));
    const auto& fm = free_monomials.back();
    MonomialIndex free_index(*out.free_ring, fm);

    EchelonBasis images(piece.dim(), field, true);
    std::vector<SparseVector> km;
    for (const auto& mon : fm) {
      SparseVector rel;
      if (!images.insert(piece.normal_form(evaluator.eval(mon)), &rel)) km.push_back(std::move(rel));
    }

    EchelonBasis lower(fm.size(), field);
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
      int rest = m - out.generators[i].degree;
      if (rest < 0) continue;
      const auto& lower_mons = free_monomials[static_cast<std::size_t>(rest)];
      for (const auto& k : kernel[static_cast<std::size_t>(rest)]) {
        SparseVector shifted;
        for (const auto& [j, c] : k) {
          Monomial mon = lower_mons[j];
          ++mon.exponents[i];
          shifted.emplace_back(free_index.at(mon), c);
        }
        std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        lower.insert(shifted);
      }
    }
    std::size_t fresh = 0;
    for (const auto& k : km) {
      if (!lower.insert(k)) continue;
      ++fresh;
      out.relations.push_back(free_index.polynomial(out.free_ring, k));
    }
    out.census[m] = fresh;
    kernel.push_back(std::move(km));
  }

  bool top_active = out.census[max_degree] > 0 ||
                    std::any_of(out.generators.begin(), out.generators.end(),
                                [&](const Generator& g) { return g.degree == max_degree; });
  if (top_active) out.warning = "census may be truncated";
  return out;
}

Polynomial evaluate_in_ambient(const MembershipPredicate& pred, const SubringPresentation& pres,
                               const Polynomial& free_element) {
  std::vector<Polynomial> images;
  for (const auto& g : pres.generators) images.push_back(g.poly);
  Polynomial value = images.empty() ? free_element.lift_to(pred.ambient()) : substitute(free_element, images);
  Grading g = degree_and_weight(value);
  if (g.kind == Grading::Kind::kZero || pred.quotient().relations().empty()) return value;
  return ambient_normal_form(pred, value);
}

bool subring_contains(const MembershipPredicate& pred, const std::vector<Polynomial>& generators,
                      const Polynomial& p) {
  Grading g = degree_and_weight(p);
  if (g.kind == Grading::Kind::kZero) return true;
  if (!g.homogeneous()) return false;
  std::vector<int> degrees;
  for (const auto& gen : generators) {
    Grading gg = degree_and_weight(gen);
    if (!gg.homogeneous() || gg.degree <= 0) throw std::invalid_argument("generators must be homogeneous of positive degree");
    degrees.push_back(gg.degree);
  }
  ProductEvaluator evaluator(pred.ambient(), generators, degrees);
  AmbientPiece piece(pred, g.degree);
  EchelonBasis span(piece.dim(), pred.ambient()->field_order());
  for (const auto& mon : evaluator.monomials(g.degree)) span.insert(piece.normal_form(evaluator.eval(mon)));
  return span.contains(piece.normal_form(p));
}

bool GeneratorListReport::all_members() const {
  return std::all_of(members.begin(), members.end(), [](const Member& m) { return m.member; });
}

bool GeneratorListReport::generates() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.ok; });
}

GeneratorListReport verify_generator_list(const MembershipPredicate& pred, const std::vector<Polynomial>& claimed,
                                          int max_degree) {
  const int field = pred.ambient()->field_order();
  GeneratorListReport report;
  std::vector<Polynomial> usable;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    Grading g = degree_and_weight(claimed[i]);
    bool member = g.homogeneous() && g.degree > 0 && is_member(pred, claimed[i]);
    report.members.push_back({i, g, member});
    if (g.homogeneous() && g.degree > 0) {
      usable.push_back(claimed[i]);
      degrees.push_back(g.degree);
    }
  }
  ProductEvaluator evaluator(pred.ambient(), usable, degrees);
  for (int m = 1; m <= max_degree; ++m) {
    AmbientPiece piece(pred, m);
    auto vm = subspace_vectors(pred, piece, m);
    EchelonBasis v_span(piece.dim(), field);
    for (const auto& v : vm) v_span.insert(v);
    EchelonBasis generated(piece.dim(), field);
    bool contained = true;
    for (const auto& mon : evaluator.monomials(m)) {
      auto nf = piece.normal_form(evaluator.eval(mon));
      if (!v_span.contains(nf)) contained = false;
      generated.insert(nf);
    }
    report.degrees.push_back({m, vm.size(), generated.rank(), contained && generated.rank() == vm.size()});
  }
  return report;
}

}  // namespace godeaux
