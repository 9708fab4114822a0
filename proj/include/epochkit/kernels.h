// Copyright 2026  The epochkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the Apache 2 License for the specific language governing permissions
// and limitations under the License.

#ifndef EPOCHKIT_KERNELS_H_
#define EPOCHKIT_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Sample-rate numeric kernels. Each kernel exists in a serial reference
// form and an OpenMP form. The parallel variants keep the per-element
// summation order of the serial ones, so both produce bit-identical
// results; the serial forms stay around as the comparison baseline for
// tests and benchmarks. The *_auto entry points dispatch on
// parallel::enabled() and input size.

namespace epochkit::kernels {

// y[n] = (1/wlen) * sum_m w[m] * x[n + m - (wlen-1)/2], samples outside
// x treated as zero. wlen must be odd and y.size() == x.size().
void sliding_weighted_mean_serial(std::span<const double> x,
                                  std::span<const double> w,
                                  std::span<double> y);
void sliding_weighted_mean_parallel(std::span<const double> x,
                                    std::span<const double> w,
                                    std::span<double> y);
void sliding_weighted_mean_auto(std::span<const double> x,
                                std::span<const double> w,
                                std::span<double> y);

// Mean of squares. The parallel form reduces over a fixed chunk grid that
// does not depend on the thread count, keeping the result deterministic.
double mean_square_serial(std::span<const double> x);
double mean_square_parallel(std::span<const double> x);
double mean_square_auto(std::span<const double> x);

// Per-segment FIR inverse filter: e[n] = x[n] - sum_k a_seg[k-1]*x[n-k]
// where a_seg is chosen by segment_of(n) = clamp((n - offset)/step, 0,
// n_segments-1). Coefficient rows are concatenated in `coeffs`, `order`
// values per segment.
void inverse_filter_serial(std::span<const double> x,
                           std::span<const double> coeffs, int order,
                           long offset, long step, long n_segments,
                           std::span<double> e);
void inverse_filter_parallel(std::span<const double> x,
                             std::span<const double> coeffs, int order,
                             long offset, long step, long n_segments,
                             std::span<double> e);
void inverse_filter_auto(std::span<const double> x,
                         std::span<const double> coeffs, int order,
                         long offset, long step, long n_segments,
                         std::span<double> e);

}  // namespace epochkit::kernels

#endif  // EPOCHKIT_KERNELS_H_
