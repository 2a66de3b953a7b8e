#include "latpath/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "latpath/errors.hpp"
#include "latpath/kernels.hpp"

namespace latpath {

namespace {

void require_order(long order) {
  if (order < 0) throw InvalidArgument("series order must be >= 0");
}

bool is_unit(const OmegaPoly& c) { return c == OmegaPoly(1) || c == OmegaPoly(-1); }

std::string join(std::span<const OmegaPoly> cs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << "; ";
    os << cs[i].to_string();
  }
  os << ']';
  return os.str();
}

}  // namespace

TSeries::TSeries(long order) : order_(order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries::TSeries(std::vector<OmegaPoly> coeffs, long order)
    : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries::TSeries(const TPoly& p, long order) : TSeries(order) {
  const auto cs = p.coeffs();
  for (std::size_t n = 0; n < cs.size() && n < coeffs_.size(); ++n) coeffs_[n] = cs[n];
}

const OmegaPoly& TSeries::operator[](long n) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("coefficient t^" + std::to_string(n) +
                            " beyond series order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

TSeries& TSeries::operator+=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TSeries& TSeries::operator*=(const OmegaPoly& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TSeries TSeries::truncated(long order) const {
  if (order > order_) {
    throw InvalidArgument("cannot extend a series of order " + std::to_string(order_));
  }
  return TSeries(coeffs_, order);
}

TSeries TSeries::shifted(std::size_t k) const {
  std::vector<OmegaPoly> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return TSeries(std::move(v), order_);
}

TSeries TSeries::eval_omega(const BigInt& x) const {
  std::vector<OmegaPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c.eval(x));
  return TSeries(std::move(v), order_);
}

std::string TSeries::to_string() const {
  return join(coeffs_) + " + O(t^" + std::to_string(order_ + 1) + ")";
}

TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
TSeries operator*(TSeries a, const OmegaPoly& c) { return a *= c; }

TSeries series_mul(const TSeries& a, const TSeries& b) {
  const long order = std::min(a.order(), b.order());
  std::vector<OmegaPoly> out(static_cast<std::size_t>(order) + 1);
  kernels::parallel::convolve(a.coeffs(), b.coeffs(), out);
  return TSeries(std::move(out), order);
}

TSeries pow(const TSeries& base, unsigned exp) {
  TSeries result = TSeries::one(base.order());
  TSeries b = base;
  while (exp > 0) {
    if (exp & 1U) result = series_mul(result, b);
    exp >>= 1U;
    if (exp > 0) b = series_mul(b, b);
  }
  return result;
}

TSeries series_inv(const TSeries& a) {
  const OmegaPoly& c0 = a[0];
  if (!is_unit(c0)) {
    throw NonUnitConstant("series constant term " + c0.to_string() + " is not +-1");
  }
  const bool neg = c0 == OmegaPoly(-1);
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<OmegaPoly> b(n);
  b[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    OmegaPoly acc;
    for (std::size_t i = 1; i <= k; ++i) acc.add_product(a.coeffs()[i], b[k - i]);
    b[k] = neg ? acc : -acc;
  }
  return TSeries(std::move(b), a.order());
}

TSeries series_from_rational(const RationalGF& r, long order) {
  require_order(order);
  const OmegaPoly& d0 = r.den[0];
  if (!is_unit(d0)) {
    throw NonUnitConstant("denominator constant term " + d0.to_string() + " is not +-1");
  }
  const bool neg = d0 == OmegaPoly(-1);
  const auto n = static_cast<std::size_t>(order) + 1;
  const std::size_t dlen = r.den.coeffs().size();
  std::vector<OmegaPoly> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    OmegaPoly acc = r.num[k];
    for (std::size_t i = 1; i < dlen && i <= k; ++i) {
      acc -= r.den[i] * c[k - i];
    }
    c[k] = neg ? -acc : acc;
  }
  return TSeries(std::move(c), order);
}

LaurentSeries::LaurentSeries(long order) : order_(order) {}

LaurentSeries::LaurentSeries(long min_exp, std::vector<OmegaPoly> coeffs, long order)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), order_(order) {
  const long keep = std::max(0L, order - min_exp + 1);
  if (static_cast<long>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
  normalize();
}

LaurentSeries LaurentSeries::from_series(const TSeries& s, long shift) {
  return LaurentSeries(shift, {s.coeffs().begin(), s.coeffs().end()}, s.order() + shift);
}

void LaurentSeries::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const OmegaPoly& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  min_exp_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

OmegaPoly LaurentSeries::operator[](long e) const {
  if (e > order_) {
    throw std::out_of_range("Laurent coefficient t^" + std::to_string(e) +
                            " beyond order " + std::to_string(order_));
  }
  const long idx = e - min_exp_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const long order = std::min(order_, o.order_);
  long lo = std::min(is_zero() ? o.min_exp_ : min_exp_, o.is_zero() ? min_exp_ : o.min_exp_);
  std::vector<OmegaPoly> v;
  for (long e = lo; e <= order; ++e) v.push_back((*this)[e] + o[e]);
  *this = LaurentSeries(lo, std::move(v), order);
  return *this;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string() << ")*t^" << (min_exp_ + static_cast<long>(i));
  }
  if (first) os << '0';
  os << " + O(t^" << order_ + 1 << ')';
  return os.str();
}

LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }

LaurentSplit laurent_split(const LaurentSeries& x) {
  if (x.order() < 0) throw InvalidArgument("laurent_split needs order >= 0");
  std::vector<OmegaPoly> neg;
  for (long e = x.min_exp(); e < 0; ++e) neg.push_back(x[e]);
  std::vector<OmegaPoly> reg;
  for (long e = 0; e <= x.order(); ++e) reg.push_back(x[e]);
  return {LaurentSeries(x.min_exp(), std::move(neg), x.order()),
          TSeries(std::move(reg), x.order())};
}

}  // namespace latpath
