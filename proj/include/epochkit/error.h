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

#ifndef EPOCHKIT_ERROR_H_
#define EPOCHKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace epochkit {

// Base class for all library errors. Subtypes distinguish bad user input
// (files, configs) from signal-content conditions a caller may want to
// recover from (e.g. no voiced speech found).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class BadInput : public Error {
 public:
  explicit BadInput(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

class NoVoicedSpeech : public Error {
 public:
  explicit NoVoicedSpeech(const std::string& msg) : Error(msg) {}
};

}  // namespace epochkit

#endif  // EPOCHKIT_ERROR_H_
