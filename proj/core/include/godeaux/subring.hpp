#pragma once

#include "godeaux/graded_quotient.hpp"
#include "godeaux/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace godeaux {

// Torsion weight equals `weight`.
struct WeightCondition {
  int weight = 0;
};

// g lies in (degree-m piece of the subalgebra generated by image_generators)
// + (ideal generated by ideal_generators), both homogeneous.
struct CongruenceImageCondition {
  std::vector<Polynomial> image_generators;
  std::vector<Polynomial> ideal_generators;
};

// first(g) = eps(m) * second(g), where first/second are substitutions given by
// the images of the ambient variables and eps(m) = (-1)^m when alternating.
struct SubstitutionEqualityCondition {
  std::vector<Polynomial> first;
  std::vector<Polynomial> second;
  bool alternating = false;
};

using Condition = std::variant<WeightCondition, CongruenceImageCondition, SubstitutionEqualityCondition>;

// Degree-wise linear subspace V_m of the ambient ring S/(ambient relations).
// Elements of a quotient ambient are represented by their normal forms.
class MembershipPredicate {
 public:
  explicit MembershipPredicate(Descriptor ambient, std::vector<Polynomial> ambient_relations = {});

  MembershipPredicate& add(Condition condition);

  const Descriptor& ambient() const { return ambient_; }
  const GradedPresentation& quotient() const { return quotient_; }
  const std::vector<Condition>& conditions() const { return conditions_; }

 private:
  Descriptor ambient_;
  GradedPresentation quotient_;
  std::vector<Condition> conditions_;
};

// Canonical (reduced echelon) basis of V_m.
std::vector<Polynomial> subspace_basis(const MembershipPredicate& pred, int m);
bool is_member(const MembershipPredicate& pred, const Polynomial& p);
// Normal form modulo the ambient relations.
Polynomial ambient_normal_form(const MembershipPredicate& pred, const Polynomial& p);

struct Generator {
  Polynomial poly;
  int degree;
};

std::vector<Generator> minimal_generators(const MembershipPredicate& pred, int max_degree);

struct SubringPresentation {
  int max_degree = 0;
  std::vector<Generator> generators;
  Descriptor free_ring;                     // symbols g1..gk with the generator degrees
  std::map<int, std::size_t> census;        // degree -> new minimal relations, 0..max_degree
  std::vector<Polynomial> relations;        // in free_ring
  std::vector<std::size_t> hilbert;         // dim V_m, m = 0..max_degree
  std::optional<std::string> warning;

  std::size_t relation_count() const;
};

SubringPresentation presentation(const MembershipPredicate& pred, int max_degree);
// The ambient element obtained by substituting generators for the free symbols.
Polynomial evaluate_in_ambient(const MembershipPredicate& pred, const SubringPresentation& pres,
                               const Polynomial& free_element);

// p (homogeneous) lies in the degree-deg(p) piece of the subring generated by `generators`.
bool subring_contains(const MembershipPredicate& pred, const std::vector<Polynomial>& generators,
                      const Polynomial& p);

struct GeneratorListReport {
  struct Member {
    std::size_t index;
    Grading grading;
    bool member;
  };
  struct Degree {
    int degree;
    std::size_t subspace_dim;
    std::size_t generated_dim;
    bool ok;
  };
  std::vector<Member> members;
  std::vector<Degree> degrees;

  bool all_members() const;
  bool generates() const;
  bool ok() const { return all_members() && generates(); }
};

GeneratorListReport verify_generator_list(const MembershipPredicate& pred, const std::vector<Polynomial>& claimed,
                                          int max_degree);

// Clears denominators and content; makes the leading coefficient positive.
Polynomial integer_primitive(const Polynomial& p);

}  // namespace godeaux
