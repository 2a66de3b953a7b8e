#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "latpath/omega_poly.hpp"
#include "latpath/series.hpp"
#include "latpath/tpoly.hpp"
#include "latpath/tri_matrix.hpp"

namespace test {

using latpath::OmegaPoly;
using latpath::TPoly;
using latpath::TSeries;

inline OmegaPoly W(const char* s) { return OmegaPoly::parse(s); }

inline std::vector<long> unit_coeffs(const TSeries& s) {
  std::vector<long> v;
  for (const auto& c : s.coeffs()) v.push_back(c.eval(1).get_si());
  return v;
}

inline std::vector<long> unit_coeffs(const TPoly& p) {
  std::vector<long> v;
  for (const auto& c : p.coeffs()) v.push_back(c.eval(1).get_si());
  return v;
}

inline std::vector<std::vector<long>> unit_rows(const latpath::TriMatrix& m) {
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<long> r;
    for (const auto& c : m.row(i)) r.push_back(c.eval(1).get_si());
    rows.push_back(r);
  }
  return rows;
}

/// Small random generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  OmegaPoly omega_poly(int max_degree = 4, long bound = 20) {
    std::vector<latpath::BigInt> c(static_cast<std::size_t>(integer(0, max_degree + 1)));
    for (auto& x : c) x = integer(-bound, bound);
    return OmegaPoly(std::move(c));
  }

  TPoly tpoly(int max_degree = 5) {
    std::vector<OmegaPoly> c(static_cast<std::size_t>(integer(0, max_degree + 1)));
    for (auto& x : c) x = omega_poly(3, 9);
    return TPoly(std::move(c));
  }

  TSeries series(long order) {
    std::vector<OmegaPoly> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = omega_poly(3, 9);
    return TSeries(std::move(c), order);
  }

  TSeries unit_series(long order) {
    TSeries s = series(order);
    std::vector<OmegaPoly> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = integer(0, 1) ? 1 : -1;
    return TSeries(std::move(c), order);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace test
