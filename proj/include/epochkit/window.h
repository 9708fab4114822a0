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

#ifndef EPOCHKIT_WINDOW_H_
#define EPOCHKIT_WINDOW_H_

#include <vector>

namespace epochkit {

enum class WindowKind { kBlackman, kHanning, kRectangular };

// Symmetric window coefficients of the given length (length >= 1).
// Only the first half is evaluated from the closed form; the second half
// is mirrored, so c[i] == c[length-1-i] holds exactly. All coefficients
// are >= 0 and the center of an odd-length window is 1.
std::vector<double> window_coefficients(WindowKind kind, int length);

const char* window_kind_name(WindowKind kind);

}  // namespace epochkit

#endif  // EPOCHKIT_WINDOW_H_
