#include "godeaux/scenarios.hpp"

#include "godeaux/data.hpp"
#include "godeaux/group_action.hpp"
#include "godeaux/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

namespace godeaux {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class Range>
std::string join_numbers(const Range& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(std::to_string(v));
  return join(parts);
}

std::string census_string(const std::map<int, std::size_t>& census, bool keep_zero) {
  std::vector<std::string> parts;
  for (const auto& [m, c] : census)
    if (keep_zero || c) parts.push_back(std::to_string(m) + ":" + std::to_string(c));
  return "{" + join(parts) + "}";
}

std::size_t binom2(int m) { return static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2; }

// Rank change when `monomials` are added to the ideal piece at (m, w):
// "basis", "spans" (dependent but spanning) or a description of the shortfall.
std::string quotient_span_status(const GradedPresentation& pres, int m, int w, const std::vector<Monomial>& monomials) {
  const auto& desc = pres.descriptor();
  MonomialIndex index(*desc, enumerate_monomials(*desc, m, w));
  EchelonBasis echelon(index.size(), desc->field_order());
  for (const auto& b : ideal_piece(pres, m, w)) echelon.insert(index.coordinates(b));
  const std::size_t qdim = index.size() - echelon.rank();
  std::size_t gained = 0;
  for (const auto& mon : monomials)
    if (mon.degree(*desc) == m && mon.weight(*desc) == w &&
        echelon.insert(index.coordinates(Polynomial::monomial(desc, mon))))
      ++gained;
  if (gained == qdim) return gained == monomials.size() ? "basis" : "spans";
  return "rank " + std::to_string(gained) + " of " + std::to_string(qdim);
}

// Whether span(ideal piece at (m, w)) = span(gens).
std::string ideal_piece_status(const GradedPresentation& pres, int m, int w, const std::vector<Polynomial>& gens,
                               const std::string& label) {
  const auto& desc = pres.descriptor();
  MonomialIndex index(*desc, enumerate_monomials(*desc, m, w));
  auto basis = ideal_piece(pres, m, w);
  EchelonBasis ideal(index.size(), desc->field_order());
  for (const auto& b : basis) ideal.insert(index.coordinates(b));
  EchelonBasis given(index.size(), desc->field_order());
  bool inside = true;
  for (const auto& g : gens) {
    given.insert(index.coordinates(g));
    inside = inside && ideal.contains(index.coordinates(g));
  }
  if (inside && given.rank() == ideal.rank()) return "dim " + std::to_string(ideal.rank()) + ", span(" + label + ")";
  return "dim " + std::to_string(ideal.rank()) + ", differs from span(" + label + ")";
}

std::string dims_row(const HilbertTable& table, int m) {
  std::vector<std::size_t> row;
  for (int w = 0; w < table.torsion_order(); ++w) row.push_back(table.at(m, w));
  return join_numbers(row);
}

Polynomial constant(const Descriptor& desc, long value) {
  return Polynomial::constant(desc, Scalar(Rational(value), desc->field_order()));
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t oracle_plurigenus(int m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (m == 1) return 0;
  return 1 + binom2(m);
}

std::size_t oracle_curve_dim(int m, int i) {
  if (i < 0 || i > 2) throw std::out_of_range("torsion index outside 0..2");
  if (m < 0) return 0;
  if (m == 0) return i == 0 ? 1 : 0;
  if (m == 1) return i == 2 ? 1 : 0;
  if (m == 2) return i == 1 ? 2 : 1;
  return static_cast<std::size_t>(m - 1);
}

std::vector<long> random_integers(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::vector<long> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<long>(gen() % 41) - 20);
  return out;
}

unsigned worker_limit() {
  unsigned limit = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GODEAUX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) limit = static_cast<unsigned>(v);
  }
  return limit;
}

// ---------------------------------------------------------------------------
// Z/3

std::string Z3Params::label() const {
  return "(" + alpha.to_string() + "," + beta.to_string() + "," + gamma.to_string() + ")";
}

const Z3Data& z3_data() {
  static const Z3Data data = [] {
    Descriptor symbolic = parse_ring_descriptor(data::file("z3.ring"));
    Z3Data d{symbolic, symbolic->without_parameters(), Polynomial(symbolic), {}, {}, Polynomial(symbolic), {}};
    auto all = parse_polynomial_file(data::file("z3_relations.poly"), d.symbolic);
    Bindings bindings;
    for (const auto& np : all) {
      bindings.emplace(np.name, np.poly);
      if (np.name == "F2") d.F2 = np.poly;
      else if (np.name == "g2_displayed") d.g2_displayed = np.poly;
      else d.relations.push_back(np);
    }
    d.syzygies = parse_polynomial_file(data::file("z3_syzygies.poly"), d.symbolic, bindings);

    std::istringstream table{std::string(data::file("z3_table1.txt"))};
    std::string line;
    while (std::getline(table, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      Table1Entry e{};
      std::string kind, mono;
      if (!(ls >> e.degree >> e.weight >> kind)) continue;
      e.basis = kind == "basis";
      while (ls >> mono) e.monomials.push_back(parse_polynomial(mono, d.numeric).leading_monomial());
      d.table1.push_back(std::move(e));
    }
    return d;
  }();
  return data;
}

Polynomial specialize(const Polynomial& p, const Z3Params& params) {
  const auto& d = z3_data();
  std::map<std::string, Polynomial> images;
  for (const auto& v : d.numeric->variables()) images.emplace(v.name, Polynomial::variable(d.numeric, v.name));
  images.emplace("alpha", Polynomial::constant(d.numeric, Scalar(params.alpha)));
  images.emplace("beta", Polynomial::constant(d.numeric, Scalar(params.beta)));
  images.emplace("gamma", Polynomial::constant(d.numeric, Scalar(params.gamma)));
  return substitute(p, images);
}

GradedPresentation z3_presentation(const Z3Params& params) {
  std::vector<Polynomial> rels;
  for (const auto& r : z3_data().relations) rels.push_back(specialize(r.poly, params));
  return GradedPresentation(z3_data().numeric, std::move(rels));
}

Z3Params seeded_params(std::uint64_t seed) {
  auto v = random_integers(seed, 3);
  return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

namespace {

constexpr const char* kZ3Ref = "restricted canonical ring of the Z/3 cover";
constexpr const char* kCurveRef = "dimension on paracanonical curves";

struct Placement {
  const char* name;
  const char* grading;
};

constexpr Placement kTable1Placement[] = {
    {"f0", "(4,0)"}, {"f1", "(4,1)"}, {"f2", "(4,2)"}, {"g0", "(5,0)"}, {"g1", "(5,1)"},
    {"g2", "(5,2)"}, {"h0", "(6,0)"}, {"H0", "(6,0)"}, {"H1", "(6,1)"}, {"H2", "(6,2)"}};

void z3_symbolic(VerificationReport& report) {
  const auto& d = z3_data();
  CyclicAction action(3);
  for (const auto& [name, grading] : kTable1Placement) {
    const auto& r = d.relation(name);
    report.add(std::string("placement-") + name, std::string("degree and weight of ") + name,
               "relation table", grading, to_string(degree_and_weight(r)));
    auto w = weight_of(action, r);
    report.add(std::string("action-weight-") + name, std::string("character of ") + name + " under Z/3",
               "relation table", std::string(1, grading[3]), w ? std::to_string(*w) : "mixed");
  }
  report.add("g2-displayed-grading", "displayed g2 = y0*z1-y2*z2+y2*x2^3", "relations g (displayed form)",
             "inhomogeneous", to_string(degree_and_weight(d.g2_displayed)));
  report.note("g2 uses the tabulated form y0*z2-y1*z1+x2^3*y2; the displayed y0*z1-y2*z2+y2*x2^3 is not weight homogeneous");
  report.note("h0 uses x2^2*F2 (degree 6); the table prints x2^4*F2");

  const char* syz_text[] = {"x2*g0-y0*f2-y1*f1+y2*f0", "x2*g1-y0*f0+y2*f1+h0", "x2*g2-y0*f1+y1*f0-y2*f2"};
  for (std::size_t i = 0; i < d.syzygies.size(); ++i)
    report.add("syzygy-" + std::to_string(i), std::string(syz_text[i]) + " with alpha, beta, gamma symbolic",
               "syzygies among the relations", "0", render_polynomial(d.syzygies[i].poly));

  GradedPresentation sub(d.symbolic, {d.relation("f0"), d.relation("f1"), d.relation("f2"), d.relation("h0")});
  const Polynomial x2sq = pow(Polynomial::variable(d.symbolic, "x2"), 2);
  for (const char* name : {"H0", "H1", "H2"}) {
    Polynomial target = x2sq * d.relation(name);
    auto res = reduces_to_zero(sub, target);
    std::string actual = !res.member ? "not a member"
                         : certificate_recombines(sub, target, res.cofactors) ? "member, certificate recombines"
                                                                              : "member, certificate does not recombine";
    report.add(std::string("H-membership-") + name, std::string("x2^2*") + name + " in (f0,f1,f2,h0), symbolic",
               "relations H", "member, certificate recombines", actual);
  }
}

struct NumericResult {
  VerificationReport part{"z3"};
  HilbertTable table{0, 3};
};

NumericResult z3_numeric(const Z3Params& params, int max_degree) {
  NumericResult out;
  const std::string at = "@" + params.label();
  auto& report = out.part;
  GradedPresentation pres = z3_presentation(params);
  out.table = hilbert(pres, max_degree);
  std::vector<std::size_t> expected_totals, actual_totals;
  for (int m = 0; m <= max_degree; ++m) {
    std::vector<std::size_t> expected;
    for (int w = 0; w < 3; ++w) expected.push_back(oracle_curve_dim(m, w));
    report.add("hilbert-m" + std::to_string(m) + at, "quotient dimensions per weight at degree " + std::to_string(m),
               kCurveRef, join_numbers(expected), dims_row(out.table, m));
    if (m >= 1) {
      expected_totals.push_back(expected[0] + expected[1] + expected[2]);
      actual_totals.push_back(out.table.total(m));
    }
  }
  report.add("hilbert-totals" + at, "total dimensions for m = 1..D", kCurveRef, join_numbers(expected_totals),
             join_numbers(actual_totals));

  for (const auto& e : z3_data().table1) {
    if (e.degree > max_degree) continue;
    report.add("table1-m" + std::to_string(e.degree) + "-w" + std::to_string(e.weight) + at,
               std::string("tabulated monomials ") + (e.basis ? "form a basis of" : "span") + " the quotient piece",
               "monomial table", e.basis ? "basis" : "spans", quotient_span_status(pres, e.degree, e.weight, e.monomials));
  }

  const auto& d = z3_data();
  const Polynomial x2 = Polynomial::variable(d.numeric, "x2");
  report.add("ideal-piece-4-2" + at, "ideal piece at degree 4, weight 2", "relation f2", "dim 1, span(f2)",
             ideal_piece_status(pres, 4, 2, {specialize(d.relation("f2"), params)}, "f2"));
  report.add("ideal-piece-5-0" + at, "ideal piece at degree 5, weight 0", "relations g", "dim 2, span(x2*f1,g0)",
             ideal_piece_status(pres, 5, 0,
                                {x2 * specialize(d.relation("f1"), params), specialize(d.relation("g0"), params)},
                                "x2*f1,g0"));
  report.add("x2-injective" + at, "multiplication by x2 is injective on quotient pieces", "S and z's",
             "injective up to degree " + std::to_string(max_degree),
             multiplication_injectivity(pres, "x2", max_degree)
                 ? "injective up to degree " + std::to_string(max_degree)
                 : "not injective");
  return out;
}

}  // namespace

VerificationReport run_z3(const Z3Options& options) {
  VerificationReport report("z3");
  report.set_config("max_degree", std::to_string(options.max_degree));
  report.set_config("mode", options.mode == Z3Mode::kSymbolic  ? "symbolic"
                            : options.mode == Z3Mode::kNumeric ? "numeric"
                                                               : "both");
  report.set_config("params", options.params.label());
  report.set_config("seed", std::to_string(options.seed));
  report.note("ring statements are verified up to degree " + std::to_string(options.max_degree) + " only");

  if (options.mode != Z3Mode::kNumeric) z3_symbolic(report);

  if (options.mode == Z3Mode::kSymbolic) {
    report.note("symbolic mode: Hilbert-table checks skipped, they need specialised parameters");
    return report;
  }
  std::vector<Z3Params> samples{options.params};
  for (const auto& p : {Z3Params{0, 0, 0}, Z3Params{1, 1, 1}, seeded_params(options.seed)})
    if (std::find(samples.begin(), samples.end(), p) == samples.end()) samples.push_back(p);
  std::vector<std::string> labels;
  std::vector<std::function<NumericResult()>> jobs;
  for (const auto& p : samples) {
    labels.push_back(p.label());
    jobs.push_back([p, D = options.max_degree] { return z3_numeric(p, D); });
  }
  report.set_config("samples", join(labels, " "));
  auto results = run_parallel(jobs);
  bool agree = true;
  for (const auto& r : results) {
    for (const auto& c : r.part.checks()) report.add(c);
    agree = agree && r.table == results.front().table;
  }
  report.add("samples-agree", "Hilbert tables agree across parameter samples", kCurveRef,
             "identical at " + std::to_string(results.size()) + " samples",
             agree ? "identical at " + std::to_string(results.size()) + " samples" : "tables differ");
  return report;
}

// ---------------------------------------------------------------------------
// Z/5

const Z5Data& z5_data() {
  static const Z5Data data = [] {
    Descriptor desc = parse_ring_descriptor(data::file("z5.ring"));
    Z5Data d{desc, {}, Polynomial(desc)};
    auto list = parse_polynomial_file(data::file("z5_factors.poly"), d.desc);
    for (int k = 0; k < 5; ++k) d.planes.push_back(find_named(list, "l" + std::to_string(k)));
    d.q = find_named(list, "q");
    return d;
  }();
  return data;
}

VerificationReport run_z5(int max_degree) {
  constexpr const char* kRef = "invariant quintic of the Z/5 quotient";
  VerificationReport report("z5");
  report.set_config("max_degree", std::to_string(max_degree));
  const auto& d = z5_data();
  CyclicAction action(5);

  report.add("q-grading", "q is homogeneous of degree 5 and weight 0", kRef, "(5,0)",
             to_string(degree_and_weight(d.q)));
  report.add("q-invariant", "act(1, q) = q", kRef, "invariant", act(action, 1, d.q) == d.q ? "invariant" : "moved");

  std::vector<std::string> orbit;
  for (int k = 0; k < 5; ++k) {
    auto image = act(action, 1, d.planes[k]);
    std::string target = "?";
    for (int j = 0; j < 5; ++j)
      if (image == d.planes[j]) target = "l" + std::to_string(j);
    orbit.push_back("l" + std::to_string(k) + "->" + target);
  }
  report.add("plane-orbit", "the generator permutes the five planes cyclically", kRef,
             "l0->l1,l1->l2,l2->l3,l3->l4,l4->l0", join(orbit));

  auto plane_rank = [&](const std::vector<int>& idx) {
    Matrix m(idx.size(), 4, 5);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t i = 0; i < 4; ++i)
        m(r, i) = d.planes[idx[r]].coefficient(Monomial::unit(4, i)).embed(5);
    return rank(m);
  };
  std::size_t triples = 0, total_triples = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k, ++total_triples) triples += plane_rank({i, j, k}) == 3;
  report.add("triple-points", "each triple of planes meets in one point", kRef, "10 of 10",
             std::to_string(triples) + " of " + std::to_string(total_triples));
  std::size_t quadruples = 0;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> idx;
    for (int i = 0; i < 5; ++i)
      if (i != skip) idx.push_back(i);
    quadruples += plane_rank(idx) == 4;
  }
  report.add("no-quadruple-points", "no four planes share a point", kRef, "5 of 5 quadruples have rank 4",
             std::to_string(quadruples) + " of 5 quadruples have rank 4");

  std::vector<std::string> fixed;
  for (std::size_t i = 0; i < 4; ++i) {
    Monomial e(std::vector<int>(4, 0));
    e.exponents[i] = 5;
    fixed.push_back("q(e" + std::to_string(i + 1) + ")" + (d.q.coefficient(e).is_zero() ? "=0" : "!=0"));
  }
  report.add("fixed-points", "coordinate fixed points are off q = 0", kRef, "q(e1)!=0,q(e2)!=0,q(e3)!=0,q(e4)!=0",
             join(fixed));

  GradedPresentation pres(d.desc, {d.q});
  for (int m = 0; m <= max_degree; ++m) {
    std::size_t counted = weight_space_dim(*d.desc, m, 0) - (m >= 5 ? weight_space_dim(*d.desc, m - 5, 0) : 0);
    report.add("plurigenus-m" + std::to_string(m), "dim (S/(q))^G by weight counting", "paracanonical 2",
               std::to_string(oracle_plurigenus(m)), std::to_string(counted));
  }
  std::vector<std::size_t> expected, direct;
  for (int m = 0; m <= max_degree; ++m) {
    expected.push_back(oracle_plurigenus(m));
    direct.push_back(quotient_dim(pres, m, 0));
  }
  report.add("plurigenus-direct", "dim (S/(q))^G_m, m = 0..D, by exact rank", "paracanonical 2",
             join_numbers(expected), join_numbers(direct));
  report.add("q-regular", "Koszul check for the single relation q", kRef, "true",
             koszul_check(pres, max_degree) ? "true" : "false");
  return report;
}

// ---------------------------------------------------------------------------
// Z/4

Descriptor z4_ring() {
  static const Descriptor desc = parse_ring_descriptor(data::file("z4.ring"));
  return desc;
}

Z4Sample z4_sample(std::uint64_t seed) {
  const Descriptor desc = z4_ring();
  auto m0 = enumerate_monomials(*desc, 4, 0);
  auto m2 = enumerate_monomials(*desc, 4, 2);
  auto coeffs = random_integers(seed, m0.size() + m2.size());
  Z4Sample s{seed, Polynomial(desc), Polynomial(desc)};
  for (std::size_t i = 0; i < m0.size(); ++i) s.q1.add_term(m0[i], Scalar(coeffs[i]));
  for (std::size_t i = 0; i < m2.size(); ++i) s.q2.add_term(m2[i], Scalar(coeffs[m0.size() + i]));
  return s;
}

GradedPresentation z4_presentation(const Z4Sample& sample) {
  return GradedPresentation(z4_ring(), {sample.q1, sample.q2});
}

namespace {

std::string koszul_status(const GradedPresentation& pres, int max_degree) {
  if (pres.relations().size() == 2 && (pres.gradings()[0] != Grading{Grading::Kind::kHomogeneous, 4, 0} ||
                                       pres.gradings()[1] != Grading{Grading::Kind::kHomogeneous, 4, 2}))
    return "relations of the wrong grading";
  std::optional<KoszulMismatch> mismatch;
  if (koszul_check(pres, max_degree, &mismatch)) return "regular up to degree " + std::to_string(max_degree);
  return "mismatch at (" + std::to_string(mismatch->m) + "," + std::to_string(mismatch->w) + "): predicted " +
         std::to_string(mismatch->expected) + ", actual " + std::to_string(mismatch->actual);
}

// A sample whose Koszul check passes, resampling once with seed + 1.
std::pair<Z4Sample, std::string> z4_regular_sample(std::uint64_t seed, int max_degree, VerificationReport& report) {
  Z4Sample s = z4_sample(seed);
  std::string status = koszul_status(z4_presentation(s), max_degree);
  if (status.rfind("regular", 0) != 0) {
    report.note("seed " + std::to_string(seed) + " gave a degenerate sample (" + status + "); resampled with seed " +
                std::to_string(seed + 1));
    s = z4_sample(seed + 1);
    status = koszul_status(z4_presentation(s), max_degree);
    report.note("seed " + std::to_string(seed + 1) + ": " + status);
  }
  return {std::move(s), status};
}

}  // namespace

VerificationReport run_z4(std::uint64_t seed, int max_degree) {
  constexpr const char* kRef = "Z/4: complete intersection of degree (4,4)";
  VerificationReport report("z4");
  report.set_config("max_degree", std::to_string(max_degree));
  report.set_config("seed", std::to_string(seed));

  auto [sample, status] = z4_regular_sample(seed, max_degree, report);
  report.set_config("sample_seed", std::to_string(sample.seed));
  report.add("q1-grading", "q1 is a random element of degree 4, weight 0", kRef, "(4,0)",
             to_string(degree_and_weight(sample.q1)));
  report.add("q2-grading", "q2 is a random element of degree 4, weight 2", kRef, "(4,2)",
             to_string(degree_and_weight(sample.q2)));
  const std::string regular = "regular up to degree " + std::to_string(max_degree);
  report.add("koszul", "(q1, q2) matches the inclusion-exclusion prediction", kRef, regular, status);

  HilbertTable table = hilbert(z4_presentation(sample), max_degree);
  for (int m = 1; m <= max_degree; ++m) {
    std::vector<std::size_t> expected(4, oracle_plurigenus(m));
    if (m == 1) expected = {0, 1, 1, 1};
    report.add("dims-m" + std::to_string(m), "quotient dimensions per weight at degree " + std::to_string(m),
               "paracanonical 2", join_numbers(expected), dims_row(table, m));
  }

  const std::uint64_t other_seed = sample.seed + 1000;
  VerificationReport scratch("z4");
  auto [other, other_status] = z4_regular_sample(other_seed, max_degree, scratch);
  for (const auto& n : scratch.notes()) report.note(n);
  report.set_config("comparison_seed", std::to_string(other.seed));
  HilbertTable other_table = hilbert(z4_presentation(other), max_degree);
  report.add("seed-independence", "a second seed gives the same dimension table", kRef,
             "identical (" + regular + ")",
             other_table == table ? "identical (" + other_status + ")" : "tables differ (" + other_status + ")");
  return report;
}

// ---------------------------------------------------------------------------
// Simply connected example

const ScData& sc_data() {
  static const ScData data = [] {
    Descriptor desc = parse_ring_descriptor(data::file("sc.ring"));
    ScData d{desc, Polynomial(desc), {}, {}, {}};
    auto list = parse_polynomial_file(data::file("sc_data.poly"), d.desc);
    d.f = find_named(list, "f");
    for (const char* v : {"a", "b", "c"}) {
      d.sigma1.push_back(find_named(list, std::string("sigma1_") + v));
      d.sigma2.push_back(find_named(list, std::string("sigma2_") + v));
    }
    for (const auto& np : parse_polynomial_file(data::file("sc_generators.poly"), d.desc)) d.claimed.push_back(np.poly);
    return d;
  }();
  return data;
}

MembershipPredicate sc_predicate() {
  const auto& d = sc_data();
  MembershipPredicate pred(d.desc);
  const auto c = Polynomial::variable(d.desc, "c");
  pred.add(CongruenceImageCondition{{Polynomial::variable(d.desc, "a"), Polynomial::variable(d.desc, "b"), c * c},
                                    {d.f}});
  pred.add(SubstitutionEqualityCondition{d.sigma1, d.sigma2, true});
  return pred;
}

VerificationReport run_sc(int max_degree, std::uint64_t seed) {
  constexpr const char* kRef = "canonical ring of the simply connected example";
  VerificationReport report("sc");
  report.set_config("max_degree", std::to_string(max_degree));
  report.set_config("seed", std::to_string(seed));
  report.note("glueing condition: sigma1(g) = (-1)^m sigma2(g) with sigma2 = (0, -(a+c)/2, (c-3a)/2)");
  const auto& d = sc_data();
  const MembershipPredicate pred = sc_predicate();

  std::vector<std::vector<Polynomial>> bases;
  for (int m = 0; m <= max_degree; ++m) {
    bases.push_back(subspace_basis(pred, m));
    report.add("dim-V-m" + std::to_string(m), "dim V_" + std::to_string(m), "paracanonical 2",
               std::to_string(oracle_plurigenus(m)), std::to_string(bases.back().size()));
  }

  // Random elements of V_i and V_j multiply into V_{i+j}.
  std::size_t tried = 0, closed = 0;
  std::uint64_t draw = seed;
  for (int i = 2; i <= max_degree; ++i)
    for (int j = i; i + j <= max_degree && j <= i + 1; ++j) {
      auto random_element = [&](int m) {
        auto coeffs = random_integers(draw++, bases[m].size());
        Polynomial p(d.desc);
        for (std::size_t k = 0; k < coeffs.size(); ++k) p += bases[m][k] * Scalar(coeffs[k]);
        return p;
      };
      ++tried;
      closed += is_member(pred, random_element(i) * random_element(j));
    }
  report.add("closure", "products of random elements of V_i and V_j lie in V_{i+j}", kRef,
             std::to_string(tried) + " of " + std::to_string(tried), std::to_string(closed) + " of " + std::to_string(tried));

  auto listed = verify_generator_list(pred, d.claimed, std::min(max_degree, 10));
  std::size_t members = 0;
  std::vector<std::string> failures;
  for (const auto& m : listed.members) {
    members += m.member;
    if (!m.member) failures.push_back("#" + std::to_string(m.index + 1));
  }
  report.add("listed-generators-members", "each listed generator lies in V", kRef,
             std::to_string(d.claimed.size()) + " of " + std::to_string(d.claimed.size()),
             std::to_string(members) + " of " + std::to_string(d.claimed.size()) +
                 (failures.empty() ? "" : " (fails: " + join(failures) + ")"));
  std::vector<std::string> short_degrees;
  for (const auto& deg : listed.degrees)
    if (!deg.ok)
      short_degrees.push_back(std::to_string(deg.degree) + ":" + std::to_string(deg.generated_dim) + "/" +
                              std::to_string(deg.subspace_dim));
  const std::string gen_bound = "generate V_m for m <= " + std::to_string(std::min(max_degree, 10));
  report.add("listed-generators-generate", "the listed generators span every V_m", kRef, gen_bound,
             short_degrees.empty() ? gen_bound : "short at " + join(short_degrees));

  SubringPresentation pres = presentation(pred, max_degree);
  std::map<int, std::size_t> gen_census;
  for (const auto& g : pres.generators) ++gen_census[g.degree];
  report.add("generator-census", "degrees of the computed minimal generators", kRef, "{2:2,3:4,4:4,5:3}",
             census_string(gen_census, false));

  std::map<int, std::size_t> nonzero, upper;
  for (const auto& [m, c] : pres.census) {
    if (m <= 10) nonzero[m] = c;
    else upper[m] = c;
  }
  report.add("relation-census", "new minimal relations per degree", kRef, "{6:6,7:12,8:18,9:12,10:6}",
             census_string(nonzero, false));
  if (max_degree > 10) {
    std::map<int, std::size_t> zeros;
    for (int m = 11; m <= max_degree; ++m) zeros[m] = 0;
    report.add("relation-census-above-10", "no new relations beyond degree 10", kRef, census_string(zeros, true),
               census_string(upper, true));
  }
  report.add("relation-total", "total number of minimal relations", kRef, "54", std::to_string(pres.relation_count()));
  if (pres.warning) report.note(*pres.warning);

  std::size_t vanish = 0;
  for (const auto& r : pres.relations) vanish += evaluate_in_ambient(pred, pres, r).is_zero();
  report.add("relations-vanish", "every relation maps to zero in Q[a,b,c]", kRef,
             std::to_string(pres.relations.size()) + " of " + std::to_string(pres.relations.size()),
             std::to_string(vanish) + " of " + std::to_string(pres.relations.size()));

  std::vector<Polynomial> computed;
  for (const auto& g : pres.generators) computed.push_back(g.poly);
  std::size_t contained = 0;
  for (const auto& g : d.claimed) contained += subring_contains(pred, computed, g);
  report.add("listed-generators-in-computed-subring", "each listed generator lies in the computed subring", kRef,
             std::to_string(d.claimed.size()) + " of " + std::to_string(d.claimed.size()),
             std::to_string(contained) + " of " + std::to_string(d.claimed.size()));

  // The display without parity signs: g(a,0,c) - g(0, (a+c)/2, (3a+c)/2) for g = 3a^2+3b^2+c^2.
  const auto a = Polynomial::variable(d.desc, "a");
  const auto c = Polynomial::variable(d.desc, "c");
  const Scalar half(Rational(1, 2));
  std::vector<Polynomial> display{constant(d.desc, 0), (a + c) * half, (a * Scalar(3) + c) * half};
  const Polynomial& g = d.claimed.at(1);
  report.add("sign-free-display", "the display without parity signs rejects 3a^2+3b^2+c^2", "glueing condition",
             "-3*a*c", render_polynomial(substitute(g, d.sigma1) - substitute(g, display)));
  return report;
}

// ---------------------------------------------------------------------------

DimensionTable to_dimension_table(const HilbertTable& table) {
  DimensionTable out;
  for (int w = 0; w < table.torsion_order(); ++w) out.columns.push_back("w" + std::to_string(w));
  for (int m = 0; m <= table.max_degree(); ++m) {
    std::vector<std::size_t> row;
    for (int w = 0; w < table.torsion_order(); ++w) row.push_back(table.at(m, w));
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> preset_names() { return {"z3", "z4", "z5", "z5-invariants", "sc"}; }

DimensionTable preset_hilbert(std::string_view preset, int max_degree, const Z3Params& params, std::uint64_t seed) {
  if (preset == "z3") return to_dimension_table(hilbert(z3_presentation(params), max_degree));
  if (preset == "z4") return to_dimension_table(hilbert(z4_presentation(z4_sample(seed)), max_degree));
  const auto& z5 = z5_data();
  if (preset == "z5") return to_dimension_table(hilbert(GradedPresentation(z5.desc, {z5.q}), max_degree));
  if (preset == "z5-invariants") {
    GradedPresentation pres(z5.desc, {z5.q});
    DimensionTable out{{"w0"}, {}};
    for (int m = 0; m <= max_degree; ++m) out.rows.push_back({quotient_dim(pres, m, 0)});
    return out;
  }
  if (preset == "sc") {
    const MembershipPredicate pred = sc_predicate();
    DimensionTable out{{"dim"}, {}};
    for (int m = 0; m <= max_degree; ++m) out.rows.push_back({subspace_basis(pred, m).size()});
    return out;
  }
  throw std::invalid_argument("unknown preset '" + std::string(preset) + "'");
}

}  // namespace godeaux
