#include "morava/expoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace morava {

IntValuedPoly::IntValuedPoly(std::vector<Integer> binomial_coefficients)
    : coef_(std::move(binomial_coefficients)) {
  trim();
}

void IntValuedPoly::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

IntValuedPoly IntValuedPoly::constant(const Integer& c) {
  return IntValuedPoly({c});
}

IntValuedPoly IntValuedPoly::binom_basis(unsigned long k) {
  std::vector<Integer> c(k + 1, 0);
  c[k] = 1;
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::shifted_binom(unsigned long k, long long shift) {
  // binom(x+s, k) = sum_j binom(s, k-j) binom(x, j)
  std::vector<Integer> c(k + 1);
  for (unsigned long j = 0; j <= k; ++j) c[j] = binomial(shift, k - j);
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::from_values(const std::vector<Integer>& values) {
  return IntValuedPoly(inverse_binomial_transform(values));
}

Integer IntValuedPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (size_t k = 0; k < coef_.size(); ++k) acc += coef_[k] * binomial(x, k);
  return acc;
}

IntValuedPoly IntValuedPoly::operator+(const IntValuedPoly& o) const {
  std::vector<Integer> c(std::max(coef_.size(), o.coef_.size()), 0);
  for (size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) c[i] += o.coef_[i];
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::operator-() const {
  std::vector<Integer> c = coef_;
  for (auto& x : c) x = -x;
  return IntValuedPoly(std::move(c));
}

IntValuedPoly IntValuedPoly::operator-(const IntValuedPoly& o) const {
  return *this + (-o);
}

IntValuedPoly IntValuedPoly::operator*(const IntValuedPoly& o) const {
  if (is_zero() || o.is_zero()) return IntValuedPoly();
  // Products of binomial-basis elements have awkward coefficients; go through
  // values at 0..D and interpolate back.
  size_t d = static_cast<size_t>(degree() + o.degree());
  std::vector<Integer> values(d + 1);
  for (size_t i = 0; i <= d; ++i)
    values[i] = eval(Integer(i)) * o.eval(Integer(i));
  return from_values(values);
}

IntValuedPoly IntValuedPoly::scaled(const Integer& c) const {
  std::vector<Integer> out = coef_;
  for (auto& x : out) x *= c;
  return IntValuedPoly(std::move(out));
}

bool operator<(const IntValuedPoly& a, const IntValuedPoly& b) {
  if (a.coef_.size() != b.coef_.size())
    return a.coef_.size() < b.coef_.size();
  for (size_t i = a.coef_.size(); i-- > 0;)
    if (a.coef_[i] != b.coef_[i]) return a.coef_[i] < b.coef_[i];
  return false;
}

std::string IntValuedPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = coef_.size(); k-- > 0;) {
    if (coef_[k] == 0) continue;
    Integer c = coef_[k];
    if (!out.empty()) {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string basis = k == 0 ? "" : (k == 1 ? var : "C(" + var + "," + std::to_string(k) + ")");
    if (basis.empty())
      out += c.str();
    else if (c == 1)
      out += basis;
    else if (c == -1)
      out += "-" + basis;
    else
      out += c.str() + "*" + basis;
  }
  return out;
}

ExpoPoly::ExpoPoly(long long p) : p_(p) {
  if (!is_prime(p)) throw std::domain_error("ExpoPoly: p must be prime");
}

ExpoPoly ExpoPoly::constant(long long p, const Rational& c) {
  return power_term(p, c, IntValuedPoly());
}

ExpoPoly ExpoPoly::power_term(long long p, const Rational& c, IntValuedPoly f) {
  ExpoPoly e(p);
  e.terms_.push_back({c, std::move(f)});
  e.canonicalize();
  return e;
}

void ExpoPoly::canonicalize() {
  for (auto& t : terms_) {
    Integer f0 = t.f.constant_term();
    if (f0 != 0) {
      t.c *= pow_rational(Rational(p_), f0);
      t.f = t.f - IntValuedPoly::constant(f0);
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.f < b.f; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().f == t.f)
      merged.back().c += t.c;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.c == 0; });
  terms_ = std::move(merged);
}

Rational ExpoPoly::eval(const Integer& n) const {
  Rational acc = 0;
  for (const auto& t : terms_)
    acc += t.c * pow_rational(Rational(p_), t.f.eval(n));
  return acc;
}

Rational ExpoPoly::at_minus_one() const { return eval(Integer(-1)); }

ExpoPoly ExpoPoly::operator+(const ExpoPoly& o) const {
  if (p_ != o.p_) throw std::domain_error("ExpoPoly: mixed primes");
  ExpoPoly out(p_);
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  out.canonicalize();
  return out;
}

ExpoPoly ExpoPoly::operator-(const ExpoPoly& o) const {
  return *this + o.scaled(-1);
}

ExpoPoly ExpoPoly::operator*(const ExpoPoly& o) const {
  if (p_ != o.p_) throw std::domain_error("ExpoPoly: mixed primes");
  ExpoPoly out(p_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.terms_.push_back({a.c * b.c, a.f + b.f});
  out.canonicalize();
  return out;
}

ExpoPoly ExpoPoly::scaled(const Rational& c) const {
  ExpoPoly out(p_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.c *= c;
  out.canonicalize();
  return out;
}

bool operator==(const ExpoPoly& a, const ExpoPoly& b) {
  if (a.p_ != b.p_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].c != b.terms_[i].c || !(a.terms_[i].f == b.terms_[i].f))
      return false;
  return true;
}

std::string ExpoPoly::str() const {
  if (terms_.empty()) return "0";
  std::string p = std::to_string(p_);
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.f.is_zero()) {
      piece = fraction_string(t.c);
    } else {
      std::string base = p + "^(" + t.f.str() + ")";
      piece = (t.c == 1) ? base : fraction_string(t.c) + " * " + base;
    }
    out += out.empty() ? piece : " + " + piece;
  }
  return out;
}

Rational extrapolate_minus_one(const ExpoPoly& e) { return e.at_minus_one(); }

}  // namespace morava
