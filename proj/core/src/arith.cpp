#include "godeaux/arith.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace godeaux {

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ArithmeticError("division by zero");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

// ---------------------------------------------------------------------------

namespace {

// Coefficients c_0..c_{phi-1} of Phi_n (the leading 1 is implicit).
std::span<const int> cyclotomic_tail(int order) {
  static constexpr int kOne[] = {-1};  // t - 1
  static constexpr int kTwo[] = {1};   // t + 1
  static constexpr int kThree[] = {1, 1};
  static constexpr int kFour[] = {1, 0};
  static constexpr int kFive[] = {1, 1, 1, 1};
  switch (order) {
    case 1: return kOne;
    case 2: return kTwo;
    case 3: return kThree;
    case 4: return kFour;
    case 5: return kFive;
    default: throw ArithmeticError("unsupported cyclotomic order " + std::to_string(order));
  }
}

int normalise_order(int order) { return order == 2 ? 1 : order; }

// Reduces a dense coefficient vector (any length) modulo Phi_n in place.
void reduce_mod_phi(std::vector<Rational>& c, int order) {
  auto tail = cyclotomic_tail(order);
  const auto phi = static_cast<std::ptrdiff_t>(tail.size());
  for (auto j = static_cast<std::ptrdiff_t>(c.size()) - 1; j >= phi; --j) {
    if (c[j].is_zero()) continue;
    Rational lead = c[j];
    c[j] = Rational();
    for (std::ptrdiff_t i = 0; i < phi; ++i)
      if (tail[i] != 0) c[j - phi + i] -= lead * Rational(tail[i]);
  }
  c.resize(static_cast<std::size_t>(phi));
}

}  // namespace

int cyclotomic_degree(int order) {
  switch (order) {
    case 1:
    case 2: return 1;
    case 3:
    case 4: return 2;
    case 5: return 4;
    default: throw ArithmeticError("unsupported cyclotomic order " + std::to_string(order));
  }
}

bool is_supported_order(int order) { return order >= 1 && order <= 5; }

Scalar::Scalar(Rational value, int order) : order_(0) {
  order = normalise_order(order);
  cyclotomic_degree(order);
  order_ = static_cast<std::uint8_t>(order);
  coeffs_[0] = std::move(value);
}

Scalar Scalar::from_coefficients(int order, std::span<const Rational> coeffs) {
  order = normalise_order(order);
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  if (c.empty()) c.emplace_back();
  if (order == 1) {
    // Over Q the "generator" is 1 itself.
    Rational sum;
    for (const auto& x : c) sum += x;
    return Scalar(sum, 1);
  }
  reduce_mod_phi(c, order);
  Scalar s(Rational(), order);
  for (std::size_t i = 0; i < c.size(); ++i) s.coeffs_[i] = std::move(c[i]);
  return s;
}

Scalar Scalar::root_of_unity(int order, long k) {
  if (!is_supported_order(order)) throw ArithmeticError("unsupported cyclotomic order " + std::to_string(order));
  long r = ((k % order) + order) % order;
  if (order == 1) return Scalar(1);
  if (order == 2) return Scalar(r == 0 ? 1 : -1);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[static_cast<std::size_t>(r)] = 1;
  return from_coefficients(order, c);
}

bool Scalar::is_zero() const {
  for (const auto& c : coefficients())
    if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const {
  auto c = coefficients();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0].is_one(); }

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw ArithmeticError("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::embed(int order) const {
  order = normalise_order(order);
  if (order == order_) return *this;
  return Scalar(rational_value(), order);
}

void Scalar::check_compatible(const Scalar& o) const {
  if (order_ != o.order_) throw ArithmeticError("incompatible fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_compatible(o);
  for (int i = 0; i < degree(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_compatible(o);
  for (int i = 0; i < degree(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_compatible(o);
  if (order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const int phi = degree();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j)
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_mod_phi(prod, order_);
  for (int i = 0; i < phi; ++i) coeffs_[i] = std::move(prod[i]);
  return *this;
}

Scalar operator-(Scalar a) {
  for (int i = 0; i < a.degree(); ++i) a.coeffs_[i] = -a.coeffs_[i];
  return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ != b.order_) return false;
  for (int i = 0; i < a.degree(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

Scalar Scalar::conjugate(long k) const {
  if (order_ == 1) return *this;
  const long n = order_;
  k = ((k % n) + n) % n;
  if (std::gcd(k, n) != 1) throw ArithmeticError("not a Galois automorphism");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int j = 0; j < degree(); ++j) c[static_cast<std::size_t>((j * k) % n)] += coeffs_[j];
  return from_coefficients(order_, c);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (order_ == 1) return Scalar(coeffs_[0].inverse());
  // a^{-1} = (product of the other conjugates) / norm(a); the norm is rational.
  Scalar others(Rational(1), order_);
  for (long k = 2; k < order_; ++k)
    if (std::gcd(k, static_cast<long>(order_)) == 1) others *= conjugate(k);
  Scalar norm = *this * others;
  Rational inv_norm = norm.rational_value().inverse();
  for (int i = 0; i < others.degree(); ++i) others.coeffs_[i] *= inv_norm;
  return others;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return coeffs_[0].to_string();
  std::string out;
  const std::string gen = "z" + std::to_string(order_);
  for (int j = degree() - 1; j >= 0; --j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (j == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += gen;
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar result(Rational(1), base.order());
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, int order) : text_(text), order_(normalise_order(order)) {}

  Scalar parse() {
    skip();
    if (pos_ == text_.size()) throw std::invalid_argument("empty input");
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
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

  Scalar expr() {
    bool negate = accept('-');
    if (!negate) accept('+');
    Scalar v = term();
    if (negate) v = -v;
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    while (accept('*')) v *= factor();
    return v;
  }
  long natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  Scalar factor() {
    skip();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && text_[pos_] == 'z') {
      ++pos_;
      long n = natural();
      long k = 1;
      if (accept('^')) k = natural();
      if (!is_supported_order(static_cast<int>(n))) fail("unsupported root of unity");
      int field = normalise_order(static_cast<int>(n));
      if (field != 1 && field != order_) throw ArithmeticError("incompatible fields");
      return pow(Scalar::root_of_unity(static_cast<int>(n), 1), k).embed(order_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected scalar");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
    }
    return Scalar(Rational::parse(text_.substr(start, pos_ - start)), order_);
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, int order) { return ScalarParser(text, order).parse(); }

}  // namespace godeaux
