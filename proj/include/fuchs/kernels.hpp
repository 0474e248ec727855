#pragma once

#include "fuchs/matrix.hpp"

#include <cstddef>
#include <vector>

// Data-parallel inner loops of the exact linear algebra. Each kernel has a
// plain serial version, kept as the reference the OpenMP version is tested
// and benchmarked against. Both produce bit-identical results because all
// arithmetic is exact.
namespace fuchs::kernels {

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m);
} // namespace serial

namespace omp {
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<std::size_t> rref_inplace(Matrix& m);
} // namespace omp

// Work (rows x cols) below which the OpenMP kernels run single-threaded.
inline constexpr std::size_t parallel_threshold = 2048;

int max_threads();

} // namespace fuchs::kernels
