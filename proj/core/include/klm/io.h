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
#ifndef KLM_IO_H_
#define KLM_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "klm/distribution.h"

namespace klm {

// Distribution files:
//   CSV   one "value,probability" pair per line; an optional non-numeric
//         header line; blank lines and lines starting with '#' are ignored.
//   JSON  {"values": [...], "probs": [...]}
// Writers emit 17 significant digits, so write(read(f)) is value-identical.
enum class FileFormat { kCsv, kJson };

// JSON if the extension is ".json" or the first non-blank character is '{'.
FileFormat detect_format(const std::filesystem::path& path,
                         std::string_view content);

// Parse failures throw Error(kParse) naming the line or field; invalid
// distributions throw the corresponding distribution error.
DiscreteDistribution parse_csv(std::string_view text,
                               MassPolicy policy = MassPolicy::kStrict);
DiscreteDistribution parse_json(std::string_view text,
                                MassPolicy policy = MassPolicy::kStrict);

std::string to_csv(const DiscreteDistribution& dist);
std::string to_json(const DiscreteDistribution& dist);
std::string format_distribution(const DiscreteDistribution& dist,
                                FileFormat format);

// %.17g.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);

struct LoadedDistribution {
  DiscreteDistribution dist;
  FileFormat format;
};
LoadedDistribution read_distribution(const std::filesystem::path& path,
                                     MassPolicy policy = MassPolicy::kStrict);

// Writes to a sibling temporary file and renames it over `path`, so a
// failed write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace klm

#endif  // KLM_IO_H_
