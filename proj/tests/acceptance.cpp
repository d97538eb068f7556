// One line per acceptance criterion; exit status 0 iff all pass.
#include "godeaux/arith.hpp"
#include "godeaux/group_action.hpp"
#include "godeaux/linalg.hpp"
#include "godeaux/scenarios.hpp"

#include <iostream>
#include <random>

using namespace godeaux;

namespace {

struct Tally {
  std::size_t passed = 0, total = 0;
  std::vector<std::string> failed;

  void add(const Check& c) {
    ++total;
    if (c.passed()) ++passed;
    else failed.push_back(c.id + " (expected " + c.expected + ", got " + c.actual + ")");
  }
  void add(bool ok, const std::string& what) { add(Check{what, "", "", "ok", ok ? "ok" : "failed"}); }
  bool ok() const { return total > 0 && passed == total; }
};

template <class Pred>
Tally select(const VerificationReport& r, Pred pred) {
  Tally t;
  for (const auto& c : r.checks())
    if (pred(c.id)) t.add(c);
  return t;
}

bool starts(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int failures = 0;

void line(int n, const std::string& title, const Tally& t) {
  std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << t.passed << "/" << t.total
            << "]\n";
  for (const auto& f : t.failed) std::cout << "     " << f << "\n";
  if (!t.ok()) ++failures;
}

Tally properties(const VerificationReport& sc_first) {
  Tally t;
  std::mt19937_64 gen(2024);
  auto rnd = [&](long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); };

  bool field = true;
  for (int order : {1, 3, 4, 5})
    for (int trial = 0; trial < 50; ++trial) {
      auto make = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(rnd(-9, 9), rnd(1, 6));
        return Scalar::from_coefficients(order, c);
      };
      Scalar a = make(), b = make(), c = make();
      field = field && (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c);
      if (!a.is_zero()) field = field && (a * a.inverse()).is_one();
    }
  t.add(field, "field axioms");

  const auto& sc = sc_data();
  bool hom = true;
  for (int trial = 0; trial < 20; ++trial) {
    auto random_poly = [&](int deg) {
      Polynomial p(sc.desc);
      for (int m = 0; m <= deg; ++m)
        for (const auto& mon : enumerate_monomials(*sc.desc, m))
          if (gen() % 2) p.add_term(mon, Scalar(rnd(-5, 5)));
      return p;
    };
    std::vector<Polynomial> images{random_poly(2), random_poly(2), random_poly(1)};
    Polynomial p = random_poly(2), q = random_poly(3);
    hom = hom && substitute(p * q, images) == substitute(p, images) * substitute(q, images) &&
          substitute(p + q, images) == substitute(p, images) + substitute(q, images);
  }
  t.add(hom, "substitution is a ring homomorphism");

  const auto& z5 = z5_data();
  CyclicAction g(5);
  bool act_hom = true;
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p(z5.desc), q(z5.desc);
    for (const auto& mon : enumerate_monomials(*z5.desc, 2))
      if (gen() % 2) p.add_term(mon, Scalar::root_of_unity(5, rnd(0, 4)));
    for (const auto& mon : enumerate_monomials(*z5.desc, 3))
      if (gen() % 2) q.add_term(mon, Scalar(rnd(-4, 4)).embed(5));
    long k = rnd(0, 9);
    act_hom = act_hom && act(g, k, p * q) == act(g, k, p) * act(g, k, q) && act(g, 5, p) == p;
  }
  t.add(act_hom, "group action is a ring homomorphism of order 5");

  bool rn = true;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(static_cast<std::size_t>(rnd(0, 6)), static_cast<std::size_t>(rnd(1, 7)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Scalar(rnd(-2, 2));
    rn = rn && rank(m) + kernel_basis(m).size() == m.cols();
  }
  t.add(rn, "rank + nullity = columns");

  const MembershipPredicate pred = sc_predicate();
  bool closed = true;
  for (int i = 2; i <= 6; ++i)
    for (int j = i; i + j <= 12; j += 2) {
      Polynomial p(sc.desc), q(sc.desc);
      for (const auto& b : subspace_basis(pred, i)) p += b * Scalar(rnd(-20, 20));
      for (const auto& b : subspace_basis(pred, j)) q += b * Scalar(rnd(-20, 20));
      closed = closed && is_member(pred, p * q);
    }
  t.add(closed, "multiplicative closure of V");

  t.add(to_json(run_sc(12)) == to_json(sc_first), "sc report identical on rerun");
  t.add(to_json(run_z4(42, 12)) == to_json(run_z4(42, 12)), "z4 report identical on rerun");
  return t;
}

}  // namespace

int main() {
  Z3Options z3opt;
  z3opt.max_degree = 12;
  const VerificationReport z3 = run_z3(z3opt);
  const VerificationReport z5 = run_z5(12);
  const VerificationReport z4 = run_z4(42, 12);
  const VerificationReport sc = run_sc(12);

  line(1, "Z/3 syzygies vanish with symbolic parameters", select(z3, [](const std::string& id) {
         return starts(id, "syzygy-");
       }));
  line(2, "Z/3 x2^2*H_i in (f0,f1,f2,h0) with certificates", select(z3, [](const std::string& id) {
         return starts(id, "H-membership-");
       }));
  line(3, "Z/3 Hilbert table at three parameter samples, m <= 12", select(z3, [](const std::string& id) {
         return starts(id, "hilbert-") || id == "samples-agree";
       }));
  // The criterion asks for a basis at every m <= 6, so the span-only rows are
  // held to "basis" here rather than to the weaker fixture expectation.
  Tally table1;
  for (Check c : z3.checks()) {
    if (starts(c.id, "table1-")) c.expected = "basis";
    if (starts(c.id, "table1-") || starts(c.id, "x2-injective")) table1.add(c);
  }
  line(4, "Z/3 tabulated bases (m <= 6) and x2 injective up to 12", table1);
  if (!table1.ok())
    std::cout << "     the m = 6 rows list x2^2*R^4_w' plus the cubic monomials, 7 (w=0) or 6 (w=1,2)\n"
                 "     elements for a 5-dimensional piece; they span it but cannot be a basis\n";
  line(5, "Z/5 quintic: invariance, 10 triple points, fixed points, plurigenera", select(z5, [](const std::string&) {
         return true;
       }));
  line(6, "Z/4 complete intersection: Koszul, dimensions, seed independence", select(z4, [](const std::string&) {
         return true;
       }));
  line(7, "simply connected example: V_m, generators, 54 relations", select(sc, [](const std::string&) {
         return true;
       }));
  line(8, "property suites", properties(sc));

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
