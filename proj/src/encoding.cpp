#include "latpath/encoding.hpp"

#include "latpath/errors.hpp"

namespace latpath {

Json encode(const OmegaPoly& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json encode(const TPoly& p) {
  Json arr = Json::array();
  for (const OmegaPoly& c : p.coeffs()) arr.push_back(encode(c));
  return arr;
}

Json encode(const TSeries& s) {
  Json coeffs = Json::array();
  for (const OmegaPoly& c : s.coeffs()) coeffs.push_back(encode(c));
  Json out = Json::object();
  out["coeffs"] = std::move(coeffs);
  out["order"] = s.order();
  return out;
}

Json encode(const TriMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (const OmegaPoly& v : m.row(i)) row.push_back(encode(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

OmegaPoly decode_omega_poly(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const Json& c : j) {
    if (!c.is_string()) throw InvalidArgument("polynomial coefficient must be a decimal string");
    coeffs.emplace_back(c.get<std::string>());
  }
  return OmegaPoly(std::move(coeffs));
}

TPoly decode_tpoly(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("t-polynomial JSON must be an array");
  std::vector<OmegaPoly> coeffs;
  for (const Json& c : j) coeffs.push_back(decode_omega_poly(c));
  return TPoly(std::move(coeffs));
}

TSeries decode_series(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("order")) {
    throw InvalidArgument("series JSON needs coeffs and order");
  }
  std::vector<OmegaPoly> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(decode_omega_poly(c));
  return TSeries(std::move(coeffs), j.at("order").get<long>());
}

TriMatrix decode_matrix(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix JSON must be an array of rows");
  TriMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != i + 1) throw InvalidArgument("matrix row has the wrong length");
    for (std::size_t k = 0; k <= i; ++k) m.set(i, k, decode_omega_poly(j[i][k]));
  }
  return m;
}

}  // namespace latpath
