#include "latpath/tpoly.hpp"

#include <sstream>

#include "latpath/errors.hpp"
#include "latpath/kernels.hpp"

namespace latpath {

namespace {

const OmegaPoly& zero_poly() {
  static const OmegaPoly z;
  return z;
}

}  // namespace

TPoly::TPoly(std::vector<OmegaPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

TPoly::TPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

TPoly::TPoly(OmegaPoly c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

TPoly TPoly::monomial(const OmegaPoly& c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<OmegaPoly> v(power + 1);
  v[power] = c;
  return TPoly(std::move(v));
}

const OmegaPoly& TPoly::operator[](std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : zero_poly();
}

void TPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  *this = *this * o;
  return *this;
}

TPoly& TPoly::operator*=(const OmegaPoly& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TPoly TPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<OmegaPoly> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return TPoly(std::move(v));
}

TPoly TPoly::eval_omega(const BigInt& x) const {
  std::vector<OmegaPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c.eval(x));
  return TPoly(std::move(v));
}

TPoly TPoly::substitute_neg_t() const {
  TPoly r = *this;
  for (std::size_t n = 1; n < r.coeffs_.size(); n += 2) r.coeffs_[n] = -r.coeffs_[n];
  return r;
}

TPoly TPoly::compress_even() const {
  std::vector<OmegaPoly> v;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n % 2 == 1) {
      if (!coeffs_[n].is_zero()) {
        throw InvalidArgument("compress_even: odd power t^" + std::to_string(n) + " present");
      }
      continue;
    }
    v.push_back(coeffs_[n]);
  }
  return TPoly(std::move(v));
}

std::string TPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << "; ";
    os << coeffs_[i].to_string();
  }
  os << ']';
  return os.str();
}

TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<OmegaPoly> out(a.coeffs().size() + b.coeffs().size() - 1);
  kernels::parallel::convolve(a.coeffs(), b.coeffs(), out);
  return TPoly(std::move(out));
}

TPoly operator*(TPoly a, const OmegaPoly& c) { return a *= c; }
TPoly operator*(const OmegaPoly& c, TPoly a) { return a *= c; }

TPoly pow(const TPoly& base, unsigned exp) {
  TPoly result(1);
  TPoly b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

TPoly exact_div_unit(const TPoly& num, const TPoly& den) {
  if (den.is_zero() || (den[0] != OmegaPoly(1) && den[0] != OmegaPoly(-1))) {
    throw NonUnitConstant("divisor constant term " + den[0].to_string() + " is not +-1");
  }
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw InexactDivision(num.to_string() + " is not divisible by " + den.to_string());
  }
  const bool neg = den[0] == OmegaPoly(-1);
  const std::size_t qlen = static_cast<std::size_t>(num.degree() - den.degree()) + 1;
  std::vector<OmegaPoly> q(qlen);
  for (std::size_t n = 0; n < qlen; ++n) {
    OmegaPoly acc = num[n];
    for (std::size_t i = 1; i <= n && i < den.coeffs().size(); ++i) {
      acc -= den[i] * q[n - i];
    }
    q[n] = neg ? -acc : acc;
  }
  TPoly quotient(std::move(q));
  if (quotient * den != num) {
    throw InexactDivision(num.to_string() + " is not divisible by " + den.to_string());
  }
  return quotient;
}

}  // namespace latpath
