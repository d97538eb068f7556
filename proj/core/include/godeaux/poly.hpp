#pragma once

#include "godeaux/arith.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace godeaux {

struct Variable {
  std::string name;
  int degree = 1;  // 0 only for symbolic parameters
  int weight = 0;  // torsion weight, reduced mod the torsion order
};

// Ordered variables with (degree, torsion weight) bi-grading over Q(zeta_n).
class RingDescriptor {
 public:
  RingDescriptor(std::vector<Variable> variables, int torsion_order = 1, int field_order = 1);

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  int torsion_order() const { return torsion_order_; }
  int field_order() const { return field_order_; }
  bool has_parameters() const;

  // Same variables over a different coefficient field.
  std::shared_ptr<const RingDescriptor> with_field_order(int field_order) const;
  // Drops the degree-0 parameter variables.
  std::shared_ptr<const RingDescriptor> without_parameters() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  std::vector<Variable> variables_;
  int torsion_order_;
  int field_order_;
};

using Descriptor = std::shared_ptr<const RingDescriptor>;

Descriptor make_descriptor(std::vector<Variable> variables, int torsion_order = 1,
                           int field_order = 1);
bool same_ring(const Descriptor& a, const Descriptor& b);

// Ring descriptor file: "torsion_order d", "field Q|Q(z3)|Q(z4)|Q(z5)" and
// "name degree torsion_weight" lines; '#' starts a comment.
Descriptor parse_ring_descriptor(std::string_view text);
std::string render_ring_descriptor(const RingDescriptor& desc);

struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial unit(std::size_t nvars, std::size_t var);

  int degree(const RingDescriptor& desc) const;
  int weight(const RingDescriptor& desc) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Descending graded reverse-lexicographic order: the leading monomial sorts first.
struct MonomialOrder {
  const RingDescriptor* desc;
  bool operator()(const Monomial& a, const Monomial& b) const;  // a before b
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  explicit Polynomial(Descriptor desc);
  static Polynomial constant(Descriptor desc, const Scalar& c);
  static Polynomial variable(Descriptor desc, std::string_view name);
  static Polynomial variable(Descriptor desc, std::size_t index);
  static Polynomial monomial(Descriptor desc, Monomial m, const Scalar& c = Scalar(1));

  const Descriptor& descriptor() const { return desc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Monomial& m, const Scalar& c);
  // Same variables, coefficients re-expressed over `target`'s field.
  Polynomial lift_to(Descriptor target) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1).embed(a.desc_->field_order()); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;
  Scalar field_scalar(const Scalar& c) const;

  Descriptor desc_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

struct Grading {
  enum class Kind { kHomogeneous, kInhomogeneous, kZero };
  Kind kind = Kind::kZero;
  int degree = 0;
  int weight = 0;

  bool homogeneous() const { return kind == Kind::kHomogeneous; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

Grading degree_and_weight(const Polynomial& p);
std::string to_string(const Grading& g);

// Simultaneous substitution var_i -> images[i]; all images share one descriptor.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images);

// Monomials of weighted degree m (and torsion weight w if given), in canonical
// order. Degree-0 parameter variables have exponents capped at `parameter_cap`.
std::vector<Monomial> enumerate_monomials(const RingDescriptor& desc, int m,
                                          std::optional<int> w = std::nullopt,
                                          int parameter_cap = 1);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Names not in the descriptor are looked up here (used by fixture files).
using Bindings = std::map<std::string, Polynomial, std::less<>>;

Polynomial parse_polynomial(std::string_view text, const Descriptor& desc,
                            const Bindings* bindings = nullptr);
std::string render_polynomial(const Polynomial& p);
std::string render_monomial(const RingDescriptor& desc, const Monomial& m);

// Polynomial file: one "name = expr" or bare "expr" per line, '#' comments.
// Earlier names may be used in later lines. Unnamed entries get "_<line>".
struct NamedPolynomial {
  std::string name;
  Polynomial poly;
};
std::vector<NamedPolynomial> parse_polynomial_file(std::string_view text, const Descriptor& desc,
                                                   Bindings bindings = {});
const Polynomial& find_named(const std::vector<NamedPolynomial>& list, std::string_view name);

}  // namespace godeaux
