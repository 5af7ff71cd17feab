#pragma once

#include <cstdint>

#include "core/dataset.hpp"

namespace rashomon {
namespace synthetic {

// 2-D classification, labels split by the first feature with a clear margin
// gap; every depth-1 tree with a threshold inside the gap is perfect.
Dataset separable_margin(std::size_t n, std::uint64_t seed);

// Exact corner XOR with binary features: n/4 points per corner, label -1 on
// the diagonal corners and +1 off it. Depth 1 cannot beat risk 1/2, depth 2
// solves it.
Dataset xor_corners(std::size_t n);

// Concentric circles: inner disk -1, surrounding ring +1, mapped into the
// unit square.
Dataset circles(std::size_t n, std::uint64_t seed);

// separable_margin with labels flipped at the given rate.
Dataset noisy_margin(std::size_t n, double flip_probability, std::uint64_t seed);

// 1-D wave regression target sampled on a grid: y = 1.2 x + 0.4 sin(6x),
// plus Gaussian-ish noise. Polynomial hierarchies fit it increasingly well.
Dataset wave_regression(std::size_t n, double noise, std::uint64_t seed);

}  // namespace synthetic
}  // namespace rashomon
