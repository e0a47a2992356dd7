// Copyright 2026 The Dirloud Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIRLOUD_ERRORS_H_
#define DIRLOUD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dirloud {

// Error classes double as process exit codes for the command line tool:
// 2 usage, 3 input format, 4 rate/shape mismatch, 5 internal.
enum class ErrorClass : int {
  kUsage = 2,
  kInputFormat = 3,
  kMismatch = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass error_class, const std::string& what)
      : std::runtime_error(what), class_(error_class) {}

  ErrorClass error_class() const { return class_; }
  int exit_code() const { return static_cast<int>(class_); }

 private:
  ErrorClass class_;
};

// --- signal_io ---

struct FileIoError : Error {
  explicit FileIoError(const std::string& w) : Error(ErrorClass::kInputFormat, w) {}
};

struct CorruptFileError : Error {
  explicit CorruptFileError(const std::string& w) : Error(ErrorClass::kInputFormat, w) {}
};

struct NotStereoError : Error {
  explicit NotStereoError(const std::string& w) : Error(ErrorClass::kInputFormat, w) {}
};

struct UnsupportedEncodingError : Error {
  explicit UnsupportedEncodingError(const std::string& w) : Error(ErrorClass::kInputFormat, w) {}
};

struct UnsupportedRateError : Error {
  explicit UnsupportedRateError(const std::string& w) : Error(ErrorClass::kMismatch, w) {}
};

struct RateMismatchError : Error {
  explicit RateMismatchError(const std::string& w) : Error(ErrorClass::kMismatch, w) {}
};

// --- analysis pipeline ---

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorClass::kUsage, w) {}
};

struct InputTooShortError : Error {
  explicit InputTooShortError(const std::string& w) : Error(ErrorClass::kInputFormat, w) {}
};

struct InfeasiblePartitionError : Error {
  explicit InfeasiblePartitionError(const std::string& w) : Error(ErrorClass::kUsage, w) {}
};

struct EmptySubsetError : Error {
  explicit EmptySubsetError(const std::string& w) : Error(ErrorClass::kUsage, w) {}
};

struct ShapeMismatchError : Error {
  explicit ShapeMismatchError(const std::string& w) : Error(ErrorClass::kMismatch, w) {}
};

struct ParameterMismatchError : Error {
  explicit ParameterMismatchError(const std::string& w) : Error(ErrorClass::kMismatch, w) {}
};

struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& w) : Error(ErrorClass::kInternal, w) {}
};

// --- synth ---

struct BadIntervalError : Error {
  explicit BadIntervalError(const std::string& w) : Error(ErrorClass::kUsage, w) {}
};

}  // namespace dirloud

#endif  // DIRLOUD_ERRORS_H_
