#pragma once

#include "latpath/series.hpp"

namespace latpath::detail {

/// The series solving f = 1 + w t^step f + t^pair f^2, one coefficient at a time:
/// f_n = w f_{n-step} + sum_{i=0}^{n-pair} f_i f_{n-pair-i}.
/// pair = 2 is the ordinary path count; pair = 1 is the compressed w=2 count.
TSeries quadratic_fixed_point(int step, long order, int pair = 2);

}  // namespace latpath::detail
