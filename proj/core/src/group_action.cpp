#include "godeaux/group_action.hpp"

#include <stdexcept>
#include <vector>

namespace godeaux {

CyclicAction::CyclicAction(int order) : order_(order), root_(Scalar::root_of_unity(order, 1)) {
  if (!is_supported_order(order)) throw std::invalid_argument("unsupported cyclic group order");
}

Polynomial act(const CyclicAction& action, long k, const Polynomial& p) {
  const auto& desc = *p.descriptor();
  if (desc.torsion_order() != action.order() && action.order() != 1)
    throw std::invalid_argument("action order does not match the torsion grading");
  Descriptor target = p.descriptor();
  if (target->field_order() != action.root().order()) {
    if (target->field_order() != 1) throw ArithmeticError("incompatible fields");
    target = target->with_field_order(action.root().order());
  }
  std::vector<Polynomial> images;
  images.reserve(desc.size());
  for (std::size_t i = 0; i < desc.size(); ++i) {
    long exponent = k * desc.variable(i).weight;
    images.push_back(Polynomial::variable(target, i) * pow(action.root(), exponent % action.order()));
  }
  return substitute(p, images);
}

std::optional<int> weight_of(const CyclicAction& action, const Polynomial& p) {
  if (p.is_zero()) return 0;
  Polynomial moved = act(action, 1, p);
  Polynomial lifted = p.lift_to(moved.descriptor());
  for (int w = 0; w < action.order(); ++w)
    if (moved == lifted * pow(action.root(), w)) return w;
  return std::nullopt;
}

std::size_t weight_space_dim(const RingDescriptor& desc, int m, int w, int parameter_cap) {
  if (m < 0) return 0;
  const int d = desc.torsion_order();
  // count[deg][wt] over the variables processed so far
  std::vector<std::vector<std::size_t>> count(static_cast<std::size_t>(m + 1), std::vector<std::size_t>(d, 0));
  count[0][0] = 1;
  for (const auto& v : desc.variables()) {
    auto next = std::vector<std::vector<std::size_t>>(count.size(), std::vector<std::size_t>(d, 0));
    for (int deg = 0; deg <= m; ++deg)
      for (int wt = 0; wt < d; ++wt) {
        if (count[deg][wt] == 0) continue;
        int max_exp = v.degree == 0 ? parameter_cap : (m - deg) / v.degree;
        for (int e = 0; e <= max_exp; ++e)
          next[deg + e * v.degree][(wt + e * v.weight) % d] += count[deg][wt];
      }
    count = std::move(next);
  }
  return count[m][((w % d) + d) % d];
}

Polynomial project_to_weight(const Polynomial& p, int w) {
  const auto& desc = *p.descriptor();
  const int d = desc.torsion_order();
  w = ((w % d) + d) % d;
  Polynomial out(p.descriptor());
  for (const auto& [m, c] : p.terms())
    if (m.weight(desc) == w) out.add_term(m, c);
  return out;
}

}  // namespace godeaux
