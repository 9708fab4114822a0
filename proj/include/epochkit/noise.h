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

#ifndef EPOCHKIT_NOISE_H_
#define EPOCHKIT_NOISE_H_

#include <cstdint>
#include <vector>

#include "epochkit/waveform.h"

namespace epochkit {

// Mean-square power over the full signal extent. This whole-utterance
// convention (rather than voiced-only power) is the one used everywhere
// SNR is quoted; evaluation reports echo it in their metadata.
double signal_power(const Waveform& x);

// Returns x + g*noise with g chosen so that
// 10*log10(P_signal / P_scaled_noise) == snr_db. Noise shorter than the
// signal is tiled end-to-end starting at a random circular offset drawn
// from `seed`; longer noise is truncated. snr_db = +infinity returns a
// copy of x. Throws BadInput for zero-power signal or noise.
Waveform add_noise(const Waveform& x, const Waveform& noise, double snr_db,
                   std::uint64_t seed = 0);

// White Gaussian noise, unit variance.
Waveform white_noise(std::size_t length, double sample_rate,
                     std::uint64_t seed);

// Babble substitute built by summing 8 randomly time-shifted, RMS-balanced
// copies drawn from the given source signals (typically the other
// utterances of a corpus). Output is normalized to unit RMS.
Waveform pseudo_babble(const std::vector<const Waveform*>& sources,
                       std::size_t length, double sample_rate,
                       std::uint64_t seed);

}  // namespace epochkit

#endif  // EPOCHKIT_NOISE_H_
