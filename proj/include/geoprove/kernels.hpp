#pragma once

#include <cstddef>

#include "geoprove/polynomial.hpp"

namespace geoprove::kernels {

/// Products with at least this many monomial pairs are split across OpenMP
/// threads.
inline constexpr std::size_t kParallelMultiplyThreshold = 4096;

/// Chunked product: each thread multiplies a slice of `a` by all of `b`,
/// sorts and combines its partial result, then the partials are merged.
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Same kernel with the parallel region forced on or off.
Polynomial multiply_chunked(const Polynomial& a, const Polynomial& b, bool parallel);

/// Serial reference: accumulates every pair product in an ordered map.
Polynomial multiply_reference(const Polynomial& a, const Polynomial& b);

}  // namespace geoprove::kernels
