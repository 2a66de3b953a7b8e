#include "latpath/omega_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "latpath/errors.hpp"

namespace latpath {

namespace {

const BigInt& zero_int() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

OmegaPoly::OmegaPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

OmegaPoly::OmegaPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

OmegaPoly::OmegaPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

OmegaPoly OmegaPoly::omega() { return monomial(1, 1); }

OmegaPoly OmegaPoly::monomial(const BigInt& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<BigInt> v(power + 1, 0);
  v[power] = c;
  return OmegaPoly(std::move(v));
}

const BigInt& OmegaPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_int();
}

void OmegaPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

OmegaPoly& OmegaPoly::operator-=(const OmegaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

OmegaPoly& OmegaPoly::operator*=(const OmegaPoly& o) {
  *this = *this * o;
  return *this;
}

OmegaPoly& OmegaPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

OmegaPoly OmegaPoly::operator-() const {
  OmegaPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void OmegaPoly::add_product(const OmegaPoly& a, const OmegaPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < n) coeffs_.resize(n, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

OmegaPoly OmegaPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return OmegaPoly(std::move(v));
}

BigInt OmegaPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string OmegaPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

OmegaPoly OmegaPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InvalidArgument("empty polynomial text");
  std::vector<BigInt> acc;
  std::size_t pos = 0;
  auto fail = [&] {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "'");
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits.push_back(s[pos++]);
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          e.push_back(s[pos++]);
        }
        if (e.empty()) fail();
        power = std::stoul(e);
      }
    } else if (digits.empty()) {
      fail();
    }
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    if (acc.size() <= power) acc.resize(power + 1, 0);
    acc[power] += sign * c;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail();
  }
  return OmegaPoly(std::move(acc));
}

OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }

OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
  OmegaPoly r;
  r.add_product(a, b);
  return r;
}

OmegaPoly operator*(OmegaPoly a, const BigInt& c) { return a *= c; }
OmegaPoly operator*(const BigInt& c, OmegaPoly a) { return a *= c; }

OmegaPoly pow(const OmegaPoly& base, unsigned exp) {
  OmegaPoly result = 1;
  OmegaPoly b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

OmegaPoly exact_div(const OmegaPoly& a, const OmegaPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw InexactDivision(a.to_string() + " is not divisible by " + b.to_string());
  }
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(rem.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) {
      throw InexactDivision(a.to_string() + " is not divisible by " + b.to_string());
    }
    q[k] = top / bc[db];
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; })) {
    throw InexactDivision(a.to_string() + " is not divisible by " + b.to_string());
  }
  return OmegaPoly(std::move(q));
}

OmegaPoly exact_div(const OmegaPoly& a, const BigInt& d) {
  if (d == 0) throw InexactDivision("division by zero");
  std::vector<BigInt> out;
  out.reserve(a.coeffs().size());
  for (const BigInt& c : a.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InexactDivision(a.to_string() + " is not divisible by " + d.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.push_back(std::move(q));
  }
  return OmegaPoly(std::move(out));
}

bool coefficientwise_le(const OmegaPoly& a, const OmegaPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

OmegaPoly opoly_arith(const OmegaPoly& a, const OmegaPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  return {};
}

}  // namespace latpath
