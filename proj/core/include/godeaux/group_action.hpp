#pragma once

#include "godeaux/poly.hpp"

#include <optional>

namespace godeaux {

// Diagonal action of Z/d: the generator multiplies each variable by
// root^(torsion weight), with root a fixed primitive d-th root of unity.
class CyclicAction {
 public:
  explicit CyclicAction(int order);

  int order() const { return order_; }
  const Scalar& root() const { return root_; }

 private:
  int order_;
  Scalar root_;
};

// Applies the k-th power of the generator. Polynomials over Q are lifted to
// Q(zeta_d) first.
Polynomial act(const CyclicAction& action, long k, const Polynomial& p);

// w with act(1, p) = root^w p, or nullopt for mixed weights. The zero
// polynomial has weight 0.
std::optional<int> weight_of(const CyclicAction& action, const Polynomial& p);

// Number of monomials of degree m and torsion weight w. Counted directly from
// the weights, without enumerating.
std::size_t weight_space_dim(const RingDescriptor& desc, int m, int w, int parameter_cap = 1);

// Keeps the terms of torsion weight w.
Polynomial project_to_weight(const Polynomial& p, int w);

}  // namespace godeaux
