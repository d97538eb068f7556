#pragma once

#include "godeaux/linalg.hpp"
#include "godeaux/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

// S / (relations) with S the bi-graded polynomial ring of the descriptor.
// Relations must be nonzero and homogeneous in both gradings.
class GradedPresentation {
 public:
  GradedPresentation(Descriptor desc, std::vector<Polynomial> relations, int parameter_cap = 1);

  const Descriptor& descriptor() const { return desc_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Grading>& gradings() const { return gradings_; }
  int parameter_cap() const { return parameter_cap_; }

 private:
  Descriptor desc_;
  std::vector<Polynomial> relations_;
  std::vector<Grading> gradings_;
  int parameter_cap_;
};

// Coordinates of a graded piece: monomials in canonical order.
class MonomialIndex {
 public:
  explicit MonomialIndex(const RingDescriptor& desc);
  explicit MonomialIndex(const RingDescriptor& desc, const std::vector<Monomial>& monomials);

  void add(const Monomial& m);
  void add_all(const Polynomial& p);
  std::size_t size() const { return order_.size(); }
  const std::vector<Monomial>& monomials() const;
  std::size_t at(const Monomial& m) const;

  SparseVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const Descriptor& desc, const SparseVector& v) const;

 private:
  const RingDescriptor* desc_;
  mutable std::map<Monomial, std::size_t, MonomialOrder> order_;
  mutable std::vector<Monomial> sorted_;
  mutable bool dirty_ = true;
};

struct IdealPiece {
  std::vector<Polynomial> spanning;          // u * relation products
  std::vector<std::size_t> relation_index;   // relation used for each product
  std::vector<Monomial> multiplier;          // u for each product
  std::vector<Polynomial> basis;             // echelon basis of the span
};

IdealPiece ideal_piece_data(const GradedPresentation& pres, int m, int w);
std::vector<Polynomial> ideal_piece(const GradedPresentation& pres, int m, int w);

std::size_t ambient_dim(const GradedPresentation& pres, int m, int w);
// Requires a presentation without degree-0 parameters.
std::size_t quotient_dim(const GradedPresentation& pres, int m, int w);

class HilbertTable {
 public:
  HilbertTable(int max_degree, int torsion_order);

  int max_degree() const { return max_degree_; }
  int torsion_order() const { return torsion_order_; }
  std::size_t at(int m, int w) const;
  void set(int m, int w, std::size_t value);
  std::size_t total(int m) const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

 private:
  int max_degree_;
  int torsion_order_;
  std::vector<std::size_t> entries_;
};

HilbertTable hilbert(const GradedPresentation& pres, int max_degree);

// p = sum_i cofactors[i] * relations[i] when member.
struct IdealMembership {
  bool member = false;
  std::vector<Polynomial> cofactors;
};

IdealMembership reduces_to_zero(const GradedPresentation& pres, const Polynomial& p);
bool certificate_recombines(const GradedPresentation& pres, const Polynomial& p,
                            const std::vector<Polynomial>& cofactors);

// Inclusion-exclusion prediction of dim (S/(r_1..r_k))_{m,w} for a regular
// sequence, from monomial counts only.
long koszul_prediction(const GradedPresentation& pres, int m, int w);

struct KoszulMismatch {
  int m;
  int w;
  long expected;
  std::size_t actual;
};

bool koszul_check(const GradedPresentation& pres, int max_degree,
                  std::optional<KoszulMismatch>* first_mismatch = nullptr);

// Multiplication by `variable` maps (S/I)_{m,w} injectively for all m with
// m + deg(variable) <= max_degree.
bool multiplication_injectivity(const GradedPresentation& pres, std::string_view variable, int max_degree);

}  // namespace godeaux
