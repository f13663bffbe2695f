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

#include "glc/error.h"

namespace glc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameterDomain: return "parameter-domain";
    case ErrorKind::kOutOfAlphabet: return "out-of-alphabet";
    case ErrorKind::kLookup: return "lookup";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kCoding: return "coding";
    case ErrorKind::kCorruption: return "corruption";
    case ErrorKind::kInput: return "input";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kValidation: return "validation";
  }
  return "unknown";
}

}  // namespace glc
