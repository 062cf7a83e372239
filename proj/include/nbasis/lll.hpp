#ifndef NBASIS_LLL_HPP
#define NBASIS_LLL_HPP

#include <vector>

#include "nbasis/interval.hpp"
#include "nbasis/rational.hpp"

namespace nbasis {

using RealRow = std::vector<BigFloat>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

struct LllResult {
  std::vector<RealRow> basis;  // reduced rows = transform * input rows
  IntegerMatrix transform;     // unimodular
  unsigned swaps = 0;
};

/// LLL reduction of the row vectors of `rows` (linearly independent, any
/// ambient dimension) with Lovasz parameter delta in (1/4, 1). Gram-Schmidt
/// data are recomputed at `precision` bits after every update; a vanishing or
/// negative Gram-Schmidt norm raises PrecisionError so the caller can retry
/// with more bits.
LllResult lll_reduce(const std::vector<RealRow>& rows, double delta, PrecisionBits precision);

/// True when the rows satisfy size reduction (|mu| <= 1/2 + eps) and the
/// Lovasz condition at the given precision.
bool is_lll_reduced(const std::vector<RealRow>& rows, double delta, PrecisionBits precision);

}  // namespace nbasis

#endif
