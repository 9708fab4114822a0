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

#ifndef EPOCHKIT_WAVEFORM_H_
#define EPOCHKIT_WAVEFORM_H_

#include <cstddef>
#include <string>
#include <vector>

namespace epochkit {

// A uniformly sampled signal. Amplitudes are dimensionless, nominally in
// [-1, 1] for audio loaded from PCM files. The same container carries
// speech, EGG, residual and mean-based signals.
struct Waveform {
  std::vector<double> samples;
  double sample_rate = 0.0;  // Hz, > 0

  Waveform() = default;
  Waveform(std::vector<double> s, double rate)
      : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Throws BadInput if the rate is non-positive or any sample is NaN/Inf.
// `context` names the producing operation in the error message.
void validate(const Waveform& w, const char* context);

struct WavReadOptions {
  // Channel to extract from a multi-channel file. -1 requires mono input;
  // loading a multi-channel file without an explicit selection is an error.
  int channel = -1;
};

// Reads a PCM WAV file (16-bit integer or 32-bit float, little-endian).
// Integer samples are normalized by the full scale 32768.
Waveform load_wav(const std::string& path, const WavReadOptions& opt = {});

// Writes 16-bit PCM. Samples are clamped to [-1, 1] and rounded; the
// round trip load(save(x)) differs from x by at most one quantization step.
void save_wav_pcm16(const std::string& path, const Waveform& w);

// Writes IEEE float-32 WAV (used for residual dumps, no quantization).
void save_wav_float32(const std::string& path, const Waveform& w);

// Rational-ratio resampling with a windowed-sinc kernel. Both rates must
// be integral. Intended as an explicit opt-in for inputs not at 16 kHz.
Waveform resample(const Waveform& x, double target_rate);

}  // namespace epochkit

#endif  // EPOCHKIT_WAVEFORM_H_
