#pragma once

#include <json.hpp>

#include "latpath/omega_poly.hpp"
#include "latpath/series.hpp"
#include "latpath/tpoly.hpp"
#include "latpath/tri_matrix.hpp"

namespace latpath {

using Json = nlohmann::ordered_json;

/// OmegaPoly as an array of decimal strings, index i holding the w^i coefficient.
Json encode(const OmegaPoly& p);
/// TPoly as an array of OmegaPoly arrays.
Json encode(const TPoly& p);
/// TSeries as {"coeffs": [...], "order": N}.
Json encode(const TSeries& s);
/// TriMatrix as an array of rows, row i holding columns 0..i.
Json encode(const TriMatrix& m);

OmegaPoly decode_omega_poly(const Json& j);
TPoly decode_tpoly(const Json& j);
TSeries decode_series(const Json& j);
TriMatrix decode_matrix(const Json& j);

}  // namespace latpath
