/* Copyright 2026 The glcodec Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GLC_ERROR_H_
#define GLC_ERROR_H_

#include <stdexcept>
#include <string>

namespace glc {

// Every failure raised by the library carries one of these classes. The CLI
// maps them onto diagnostics and exit codes.
enum class ErrorKind {
  kParameterDomain,
  kOutOfAlphabet,
  kLookup,
  kCapacity,
  kCoding,
  kCorruption,
  kInput,
  kIo,
  kValidation,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace glc

#endif  // GLC_ERROR_H_
