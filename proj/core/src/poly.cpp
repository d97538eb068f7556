#include "godeaux/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace godeaux {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int mod(int a, int d) { return ((a % d) + d) % d; }

}  // namespace

RingDescriptor::RingDescriptor(std::vector<Variable> variables, int torsion_order, int field_order)
    : variables_(std::move(variables)), torsion_order_(torsion_order), field_order_(field_order == 2 ? 1 : field_order) {
  if (torsion_order_ < 1) throw std::invalid_argument("torsion order must be >= 1");
  if (!is_supported_order(field_order_)) throw std::invalid_argument("unsupported field order");
  std::set<std::string, std::less<>> seen;
  for (auto& v : variables_) {
    if (!is_identifier(v.name)) throw std::invalid_argument("invalid variable name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable '" + v.name + "'");
    if (v.degree < 0) throw std::invalid_argument("negative degree for '" + v.name + "'");
    v.weight = mod(v.weight, torsion_order_);
  }
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

std::size_t RingDescriptor::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool RingDescriptor::has_parameters() const {
  return std::any_of(variables_.begin(), variables_.end(), [](const Variable& v) { return v.degree == 0; });
}

Descriptor RingDescriptor::with_field_order(int field_order) const {
  return make_descriptor(variables_, torsion_order_, field_order);
}

Descriptor RingDescriptor::without_parameters() const {
  std::vector<Variable> vars;
  std::copy_if(variables_.begin(), variables_.end(), std::back_inserter(vars),
               [](const Variable& v) { return v.degree > 0; });
  return make_descriptor(std::move(vars), torsion_order_, field_order_);
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.torsion_order_ != b.torsion_order_ || a.field_order_ != b.field_order_) return false;
  if (a.variables_.size() != b.variables_.size()) return false;
  for (std::size_t i = 0; i < a.variables_.size(); ++i) {
    const auto &x = a.variables_[i], &y = b.variables_[i];
    if (x.name != y.name || x.degree != y.degree || x.weight != y.weight) return false;
  }
  return true;
}

Descriptor make_descriptor(std::vector<Variable> variables, int torsion_order, int field_order) {
  return std::make_shared<const RingDescriptor>(std::move(variables), torsion_order, field_order);
}

bool same_ring(const Descriptor& a, const Descriptor& b) { return a == b || *a == *b; }

Descriptor parse_ring_descriptor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int torsion = 1, field = 1, lineno = 0;
  std::vector<Variable> vars;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto bad = [&](const std::string& why) {
      return std::invalid_argument("ring descriptor line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "torsion_order") {
      if (!(ls >> torsion)) throw bad("expected torsion order");
    } else if (head == "field") {
      std::string f;
      ls >> f;
      if (f == "Q") field = 1;
      else if (f == "Q(z3)") field = 3;
      else if (f == "Q(z4)") field = 4;
      else if (f == "Q(z5)") field = 5;
      else throw bad("unknown field '" + f + "'");
    } else {
      Variable v{head, 0, 0};
      if (!(ls >> v.degree >> v.weight)) throw bad("expected 'name degree torsion_weight'");
      vars.push_back(std::move(v));
    }
    std::string extra;
    if (ls >> extra) throw bad("trailing input '" + extra + "'");
  }
  if (vars.empty()) throw std::invalid_argument("ring descriptor declares no variables");
  return make_descriptor(std::move(vars), torsion, field);
}

std::string render_ring_descriptor(const RingDescriptor& desc) {
  std::ostringstream out;
  out << "torsion_order " << desc.torsion_order() << "\n";
  out << "field " << (desc.field_order() == 1 ? std::string("Q") : "Q(z" + std::to_string(desc.field_order()) + ")")
      << "\n";
  for (const auto& v : desc.variables()) out << v.name << " " << v.degree << " " << v.weight << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

Monomial Monomial::unit(std::size_t nvars, std::size_t var) {
  Monomial m = one(nvars);
  m.exponents.at(var) = 1;
  return m;
}

int Monomial::degree(const RingDescriptor& desc) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * desc.variable(i).degree;
  return d;
}

int Monomial::weight(const RingDescriptor& desc) const {
  int w = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) w += exponents[i] * desc.variable(i).weight;
  return mod(w, desc.torsion_order());
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(*desc), db = b.degree(*desc);
  if (da != db) return da > db;
  for (std::size_t i = a.exponents.size(); i-- > 0;)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
  return false;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Descriptor desc) : desc_(std::move(desc)), terms_(MonomialOrder{desc_.get()}) {
  if (!desc_) throw std::invalid_argument("polynomial without ring descriptor");
}

Polynomial Polynomial::constant(Descriptor desc, const Scalar& c) {
  Polynomial p(std::move(desc));
  p.add_term(Monomial::one(p.desc_->size()), c);
  return p;
}

Polynomial Polynomial::variable(Descriptor desc, std::string_view name) {
  auto i = desc->require_index(name);
  return variable(std::move(desc), i);
}

Polynomial Polynomial::variable(Descriptor desc, std::size_t index) {
  Polynomial p(std::move(desc));
  p.add_term(Monomial::unit(p.desc_->size(), index), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(Descriptor desc, Monomial m, const Scalar& c) {
  Polynomial p(std::move(desc));
  if (m.exponents.size() != p.desc_->size()) throw std::invalid_argument("monomial length mismatch");
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::field_scalar(const Scalar& c) const {
  return c.order() == desc_->field_order() ? c : c.embed(desc_->field_order());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(Rational(), desc_->field_order()) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, field_scalar(c));
  if (!inserted) {
    it->second += field_scalar(c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::lift_to(Descriptor target) const {
  if (target->size() != desc_->size()) throw std::invalid_argument("descriptor mismatch");
  Polynomial out(std::move(target));
  for (const auto& [m, c] : terms_) out.add_term(m, c.is_rational() ? c.embed(out.desc_->field_order()) : c);
  return out;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(desc_, o.desc_)) throw std::invalid_argument("descriptor mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Scalar s = field_scalar(c);
  for (auto& [m, coef] : terms_) coef *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.desc_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.desc_, b.desc_)) return false;
  return a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.descriptor(), Scalar(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Grading degree_and_weight(const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto& desc = *p.descriptor();
  Grading g{Grading::Kind::kHomogeneous, p.leading_monomial().degree(desc), p.leading_monomial().weight(desc)};
  for (const auto& [m, c] : p.terms())
    if (m.degree(desc) != g.degree || m.weight(desc) != g.weight)
      return {Grading::Kind::kInhomogeneous, 0, 0};
  return g;
}

std::string to_string(const Grading& g) {
  switch (g.kind) {
    case Grading::Kind::kZero: return "zero";
    case Grading::Kind::kInhomogeneous: return "inhomogeneous";
    case Grading::Kind::kHomogeneous: break;
  }
  return "(" + std::to_string(g.degree) + "," + std::to_string(g.weight) + ")";
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.descriptor()->size()) throw std::invalid_argument("missing image");
  if (images.empty()) return p;
  const Descriptor& target = images.front().descriptor();
  for (const auto& img : images)
    if (!same_ring(img.descriptor(), target)) throw std::invalid_argument("images must share a descriptor");

  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Scalar(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c.is_rational() ? c.embed(target->field_order()) : c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i] > 0) term *= power(i, m.exponents[i]);
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
  const auto& desc = *p.descriptor();
  std::vector<bool> used(desc.size(), false);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < desc.size(); ++i)
      if (m.exponents[i] > 0) used[i] = true;

  std::optional<Descriptor> target;
  for (const auto& [name, img] : images) target = img.descriptor();
  if (!target) target = p.descriptor();

  std::vector<Polynomial> vec;
  vec.reserve(desc.size());
  for (std::size_t i = 0; i < desc.size(); ++i) {
    auto it = images.find(desc.variable(i).name);
    if (it != images.end()) {
      vec.push_back(it->second);
    } else if (used[i]) {
      throw std::invalid_argument("missing image for variable '" + desc.variable(i).name + "'");
    } else {
      vec.emplace_back(*target);
    }
  }
  return substitute(p, vec);
}

std::vector<Monomial> enumerate_monomials(const RingDescriptor& desc, int m, std::optional<int> w,
                                          int parameter_cap) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  const std::size_t n = desc.size();
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining != 0) return;
      Monomial mono(e);
      if (!w || mono.weight(desc) == mod(*w, desc.torsion_order())) out.push_back(std::move(mono));
      return;
    }
    int d = desc.variable(i).degree;
    int max_exp = d == 0 ? parameter_cap : remaining / d;
    for (int k = 0; k <= max_exp; ++k) {
      e[i] = k;
      rec(i + 1, remaining - k * d);
    }
    e[i] = 0;
  };
  rec(0, m);
  std::sort(out.begin(), out.end(), MonomialOrder{&desc});
  return out;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what == "empty input" ? what : what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Descriptor& desc, const Bindings* bindings)
      : text_(text), desc_(desc), bindings_(bindings) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty input", 0);
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  Polynomial expr() {
    bool negate = accept('-');
    if (!negate) accept('+');
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  unsigned natural() {
    skip();
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) base = pow(base, natural());
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (at_digit()) {
      std::size_t start = pos_;
      while (at_digit()) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) throw ParseError("expected denominator", pos_);
        while (at_digit()) ++pos_;
      }
      try {
        return Polynomial::constant(desc_, Scalar(Rational::parse(text_.substr(start, pos_ - start)),
                                                  desc_->field_order()));
      } catch (const ArithmeticError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto i = desc_->index_of(name)) return Polynomial::variable(desc_, *i);
      if (bindings_) {
        if (auto it = bindings_->find(name); it != bindings_->end()) {
          if (!same_ring(it->second.descriptor(), desc_)) throw ParseError("binding from another ring", start);
          return it->second;
        }
      }
      if (name.size() == 2 && name[0] == 'z' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        int n = name[1] - '0';
        if (!is_supported_order(n)) throw ParseError("unsupported root of unity", start);
        Scalar root = Scalar::root_of_unity(n);
        if (root.order() != 1 && root.order() != desc_->field_order())
          throw ParseError("incompatible fields", start);
        return Polynomial::constant(desc_, root);
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  std::string_view text_;
  const Descriptor& desc_;
  const Bindings* bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Descriptor& desc, const Bindings* bindings) {
  return PolynomialParser(text, desc, bindings).parse();
}

std::string render_monomial(const RingDescriptor& desc, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += desc.variable(i).name;
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& desc = *p.descriptor();
  for (const auto& [m, c] : p.terms()) {
    std::string mono = render_monomial(desc, m);
    if (c.is_rational()) {
      const Rational& r = c.rational_value();
      bool negative = r.sign() < 0;
      if (negative) out += "-";
      else if (!out.empty()) out += "+";
      Rational mag = negative ? -r : r;
      if (mono.empty()) out += mag.to_string();
      else if (mag.is_one()) out += mono;
      else out += mag.to_string() + "*" + mono;
    } else {
      if (!out.empty()) out += "+";
      out += "(" + c.to_string() + ")";
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out;
}

std::vector<NamedPolynomial> parse_polynomial_file(std::string_view text, const Descriptor& desc,
                                                   Bindings bindings) {
  std::vector<NamedPolynomial> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string name = "_" + std::to_string(lineno);
    std::string body = line;
    if (auto eq = line.find('='); eq != std::string::npos) {
      std::string lhs = line.substr(0, eq);
      lhs.erase(0, lhs.find_first_not_of(" \t"));
      lhs.erase(lhs.find_last_not_of(" \t") + 1);
      if (!is_identifier(lhs)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad name '" + lhs + "'");
      name = lhs;
      body = line.substr(eq + 1);
    }
    try {
      Polynomial p = parse_polynomial(body, desc, &bindings);
      bindings.insert_or_assign(name, p);
      out.push_back({name, std::move(p)});
    } catch (const ParseError& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

const Polynomial& find_named(const std::vector<NamedPolynomial>& list, std::string_view name) {
  for (const auto& np : list)
    if (np.name == name) return np.poly;
  throw std::out_of_range("no polynomial named '" + std::string(name) + "'");
}

}  // namespace godeaux
