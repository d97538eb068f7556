#pragma once

#include "godeaux/graded_quotient.hpp"
#include "godeaux/poly.hpp"
#include "godeaux/report.hpp"
#include "godeaux/subring.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace godeaux {

// Plurigenus 1 + binom(m, 2) of a Godeaux surface (1, 0 for m = 0, 1).
std::size_t oracle_plurigenus(int m);
// h^0(C, mM + iL) on a paracanonical curve for the Z/3 cover, 0 <= i < 3.
std::size_t oracle_curve_dim(int m, int i);

// Integers in [-20, 20] from a seeded mt19937_64; the same on every platform.
std::vector<long> random_integers(std::uint64_t seed, std::size_t count);

// Worker cap from GODEAUX_THREADS (default: hardware concurrency, at least 1).
unsigned worker_limit();
// Runs jobs on at most worker_limit() threads; results keep the job order.
template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& jobs);

// ---------------------------------------------------------------------------
// Z/3

struct Z3Params {
  Rational alpha, beta, gamma;

  std::string label() const;
  friend bool operator==(const Z3Params&, const Z3Params&) = default;
};

struct Table1Entry {
  int degree;
  int weight;
  bool basis;  // false: the listed monomials only span
  std::vector<Monomial> monomials;
};

struct Z3Data {
  Descriptor symbolic;  // x2, y0, y1, y2, z1, z2, alpha, beta, gamma
  Descriptor numeric;   // without the parameters
  Polynomial F2;
  std::vector<NamedPolynomial> relations;  // f0 f1 f2 g0 g1 g2 h0 H0 H1 H2
  std::vector<NamedPolynomial> syzygies;
  Polynomial g2_displayed;
  std::vector<Table1Entry> table1;

  const Polynomial& relation(std::string_view name) const { return find_named(relations, name); }
};

// Parsed once from the bundled fixtures.
const Z3Data& z3_data();
Polynomial specialize(const Polynomial& p, const Z3Params& params);
GradedPresentation z3_presentation(const Z3Params& params);
Z3Params seeded_params(std::uint64_t seed);

enum class Z3Mode { kSymbolic, kNumeric, kBoth };

struct Z3Options {
  Z3Params params;
  Z3Mode mode = Z3Mode::kBoth;
  int max_degree = 12;
  std::uint64_t seed = 42;
};

VerificationReport run_z3(const Z3Options& options);

// ---------------------------------------------------------------------------
// Z/5

struct Z5Data {
  Descriptor desc;
  std::vector<Polynomial> planes;  // l0..l4
  Polynomial q;
};

const Z5Data& z5_data();
VerificationReport run_z5(int max_degree);

// ---------------------------------------------------------------------------
// Z/4

struct Z4Sample {
  std::uint64_t seed;
  Polynomial q1;  // degree 4, weight 0
  Polynomial q2;  // degree 4, weight 2
};

Descriptor z4_ring();
Z4Sample z4_sample(std::uint64_t seed);
GradedPresentation z4_presentation(const Z4Sample& sample);
VerificationReport run_z4(std::uint64_t seed, int max_degree);

// ---------------------------------------------------------------------------
// Simply connected example

struct ScData {
  Descriptor desc;  // a, b, c
  Polynomial f;
  std::vector<Polynomial> sigma1;
  std::vector<Polynomial> sigma2;
  std::vector<Polynomial> claimed;  // the 13 published generators
};

const ScData& sc_data();
// V_m = {g : g in Q[a,b,c^2]_m + f S_{m-2}, sigma1(g) = (-1)^m sigma2(g)}.
MembershipPredicate sc_predicate();
VerificationReport run_sc(int max_degree, std::uint64_t seed = 42);

// ---------------------------------------------------------------------------

struct DimensionTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::size_t>> rows;  // rows[m], m = 0..max_degree
};

DimensionTable to_dimension_table(const HilbertTable& table);
std::vector<std::string> preset_names();
// Throws std::invalid_argument for an unknown preset.
DimensionTable preset_hilbert(std::string_view preset, int max_degree, const Z3Params& params = {},
                              std::uint64_t seed = 42);

}  // namespace godeaux

#include "godeaux/detail/parallel.hpp"
