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

#ifndef EPOCHKIT_PARALLEL_H_
#define EPOCHKIT_PARALLEL_H_

namespace epochkit::parallel {

// Process-wide switch for the OpenMP kernel variants. All kernels compute
// per-element results that do not depend on scheduling, so enabling or
// disabling parallelism never changes output bits, only wall time.
void set_enabled(bool on);
bool enabled();

// Caps the number of OpenMP threads (0 = hardware default).
void set_threads(int n);
int threads();

}  // namespace epochkit::parallel

#endif  // EPOCHKIT_PARALLEL_H_
