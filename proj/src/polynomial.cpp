#include "lisgf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

// Appends "c*mono" style text for one term. `first` controls the sign layout.
void append_term(std::ostringstream& out, const Rational& c, const std::string& mono, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  const Rational magnitude = abs(c);
  if (mono.empty()) {
    out << magnitude.get_str();
  } else if (magnitude == 1) {
    out << mono;
  } else {
    out << magnitude.get_str() << '*' << mono;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// Q[q][x] view of a bivariate polynomial: index = x-degree, entry = polynomial in q.
using XForm = std::vector<UPoly>;

XForm to_xform(const BPoly& p) {
  XForm out(p.is_zero() ? 0 : p.degree_x() + 1);
  std::vector<std::vector<Rational>> dense(out.size());
  for (const auto& [m, c] : p.terms()) {
    auto& row = dense[m.x_deg];
    if (row.size() <= static_cast<std::size_t>(m.q_deg)) row.resize(m.q_deg + 1);
    row[m.q_deg] = c;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = UPoly(std::move(dense[i]));
  return out;
}

BPoly from_xform(const XForm& f) {
  BPoly out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& cs = f[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (sgn(cs[j]) != 0) out += BPoly::monomial(cs[j], static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

void trim(XForm& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly xform_content(const XForm& f) {
  UPoly g;
  for (const auto& c : f) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

XForm divide_coeffs(const XForm& f, const UPoly& d) {
  XForm out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(divmod(c, d).first);
  return out;
}

XForm primitive_part(const XForm& f) {
  if (f.empty()) return f;
  return divide_coeffs(f, xform_content(f));
}

// Pseudo-remainder of a by b as polynomials in x over Q[q].
XForm pseudo_remainder(XForm a, const XForm& b) {
  const UPoly& lead_b = b.back();
  const int deg_b = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= deg_b && !a.empty()) {
    const UPoly lead_a = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - deg_b;
    for (auto& c : a) c = c * lead_b;
    for (int i = 0; i <= deg_b; ++i) a[i + shift] -= lead_a * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> cs(degree + 1, Rational(0));
  cs[degree] = c;
  return UPoly(std::move(cs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> cs;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] * static_cast<long>(i));
  return UPoly(std::move(cs));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(cs));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    append_term(out, coeffs_[i], power(var, static_cast<int>(i)), first);
    first = false;
  }
  return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int db = divisor.degree();
  if (dividend.degree() < db) return {UPoly(), dividend};
  std::vector<Rational> quot(dividend.degree() - db + 1, Rational(0));
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    const Rational factor = rem[i] / lead;
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * divisor.coeffs()[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly pow(const UPoly& base, unsigned exponent) {
  UPoly result = UPoly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

// ---------------------------------------------------------------------------
// BPoly

BPoly::BPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

BPoly BPoly::x() { return monomial(1, 1, 0); }
BPoly BPoly::q() { return monomial(1, 0, 1); }

BPoly BPoly::monomial(const Rational& c, int x_deg, int q_deg) {
  BPoly p;
  if (sgn(c) != 0) p.terms_.emplace(Monomial{x_deg, q_deg}, c);
  return p;
}

BPoly BPoly::from_upoly(const UPoly& p, bool in_q) {
  BPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const int e = static_cast<int>(i);
    out.add_term(in_q ? Monomial{0, e} : Monomial{e, 0}, p.coeffs()[i]);
  }
  return out;
}

void BPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational BPoly::coeff(int x_deg, int q_deg) const {
  auto it = terms_.find(Monomial{x_deg, q_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg);
  return d;
}

int BPoly::degree_q() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.q_deg);
  return d;
}

Rational BPoly::eval(const Rational& x0, const Rational& q0) const {
  // Horner over the x-major view keeps the number of big multiplications low.
  const XForm f = to_xform(*this);
  Rational acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x0 + it->eval(q0);
  return acc;
}

UPoly BPoly::at_q(const Rational& q0) const {
  const XForm f = to_xform(*this);
  std::vector<Rational> cs;
  cs.reserve(f.size());
  for (const auto& c : f) cs.push_back(c.eval(q0));
  return UPoly(std::move(cs));
}

BPoly BPoly::d_dq() const {
  BPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.q_deg > 0) out.add_term(Monomial{m.x_deg, m.q_deg - 1}, c * m.q_deg);
  }
  return out;
}

Rational BPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

BPoly BPoly::operator-() const {
  BPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BPoly& BPoly::operator+=(const BPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BPoly& BPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  BPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.x_deg + mb.x_deg, ma.q_deg + mb.q_deg}, ca * cb);
    }
  }
  return out;
}

std::string BPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = power("x", m.x_deg);
    const std::string qp = power("q", m.q_deg);
    if (!qp.empty()) mono = mono.empty() ? qp : mono + "*" + qp;
    append_term(out, c, mono, first);
    first = false;
  }
  return out.str();
}

BPoly pow(const BPoly& base, unsigned exponent) {
  BPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

std::optional<BPoly> divide_exact(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  XForm rem = to_xform(a);
  const XForm div = to_xform(b);
  if (rem.empty()) return BPoly();
  if (rem.size() < div.size()) return std::nullopt;
  XForm quot(rem.size() - div.size() + 1);
  while (!rem.empty()) {
    if (rem.size() < div.size()) return std::nullopt;
    auto [qc, rc] = divmod(rem.back(), div.back());
    if (!rc.is_zero()) return std::nullopt;
    const std::size_t shift = rem.size() - div.size();
    for (std::size_t i = 0; i < div.size(); ++i) rem[i + shift] -= qc * div[i];
    quot[shift] = std::move(qc);
    trim(rem);
  }
  return from_xform(quot);
}

BPoly gcd(const BPoly& a, const BPoly& b) {
  XForm fa = to_xform(a);
  XForm fb = to_xform(b);
  if (fa.empty() && fb.empty()) return BPoly();
  UPoly content_gcd;
  if (fa.empty()) {
    content_gcd = xform_content(fb);
  } else if (fb.empty()) {
    content_gcd = xform_content(fa);
  } else {
    content_gcd = gcd(xform_content(fa), xform_content(fb));
  }
  fa = primitive_part(fa);
  fb = primitive_part(fb);
  if (fa.size() < fb.size()) std::swap(fa, fb);
  while (!fb.empty()) {
    XForm r = primitive_part(pseudo_remainder(fa, fb));
    fa = std::move(fb);
    fb = std::move(r);
  }
  BPoly g = from_xform(fa) * BPoly::from_upoly(content_gcd, /*in_q=*/true);
  // Normalize: integer coefficients with content 1, positive leading x-major term.
  g *= Rational(1) / g.content();
  const XForm gx = to_xform(g);
  if (sgn(gx.back().leading()) < 0) g = -g;
  return g;
}

}  // namespace lisgf
