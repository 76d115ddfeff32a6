// Copyright 2026 The klmapprox Authors
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

#ifndef KLM_ERROR_H_
#define KLM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace klm {

enum class ErrorCode {
  kEmptyDistribution,
  kBadMass,
  kNonFiniteValue,
  kBadSelection,
  kBadM,
  kBadEps,
  kTooLarge,
  kSupportExplosion,
  kParse,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as klm::Error; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace klm

#endif  // KLM_ERROR_H_
