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
#include "klm/io.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "klm/error.h"

namespace klm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
  return out;
}

}  // namespace

FileFormat detect_format(const std::filesystem::path& path,
                         std::string_view content) {
  if (path.extension() == ".json") return FileFormat::kJson;
  const std::string_view body = trim(content);
  if (!body.empty() && body.front() == '{') return FileFormat::kJson;
  return FileFormat::kCsv;
}

DiscreteDistribution parse_csv(std::string_view text, MassPolicy policy) {
  std::vector<std::pair<double, double>> pairs;
  bool header_allowed = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected 'value,probability'");
    }
    const std::string_view value_field = line.substr(0, comma);
    const std::string_view prob_field = line.substr(comma + 1);
    const auto value = parse_number(value_field);
    const auto prob = parse_number(prob_field);
    if (!value || !prob) {
      if (header_allowed && !value && !prob) {
        header_allowed = false;
        continue;
      }
      const bool bad_value = !value;
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": cannot parse " +
                      (bad_value ? "value '" + std::string(trim(value_field))
                                 : "probability '" + std::string(trim(prob_field))) +
                      "'");
    }
    header_allowed = false;
    pairs.emplace_back(*value, *prob);
  }
  return make_distribution(pairs, policy);
}

DiscreteDistribution parse_json(std::string_view text, MassPolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParse, "expected an object with 'values' and 'probs'");
  }
  auto numbers = [&](const char* field) {
    if (!doc.contains(field) || !doc[field].is_array()) {
      throw Error(ErrorCode::kParse,
                  std::string("field '") + field + "' must be an array");
    }
    std::vector<double> out;
    const auto& array = doc[field];
    for (std::size_t i = 0; i < array.size(); ++i) {
      if (!array[i].is_number()) {
        throw Error(ErrorCode::kParse, std::string("field '") + field + "'[" +
                                           std::to_string(i) + "] is not a number");
      }
      out.push_back(array[i].get<double>());
    }
    return out;
  };
  const std::vector<double> values = numbers("values");
  const std::vector<double> probs = numbers("probs");
  return make_distribution(values, probs, policy);
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string to_csv(const DiscreteDistribution& dist) {
  std::string out = "value,probability\n";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out += format_double(dist.value(i));
    out += ',';
    out += format_double(dist.prob(i));
    out += '\n';
  }
  return out;
}

std::string to_json(const DiscreteDistribution& dist) {
  auto join = [](std::span<const double> xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) s += ", ";
      s += format_double(xs[i]);
    }
    return s + "]";
  };
  return "{\"values\": " + join(dist.values()) + ", \"probs\": " +
         join(dist.probs()) + "}\n";
}

std::string format_distribution(const DiscreteDistribution& dist,
                                FileFormat format) {
  return format == FileFormat::kJson ? to_json(dist) : to_csv(dist);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LoadedDistribution read_distribution(const std::filesystem::path& path,
                                     MassPolicy policy) {
  const std::string text = read_text_file(path);
  const FileFormat format = detect_format(path, text);
  try {
    return LoadedDistribution{format == FileFormat::kJson ? parse_json(text, policy)
                                                          : parse_csv(text, policy),
                              format};
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  std::filesystem::path temp = path;
  temp += ".partial";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw Error(ErrorCode::kIo, "write failed for " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw Error(ErrorCode::kIo, "cannot rename onto " + path.string() + ": " +
                                    ec.message());
  }
}

}  // namespace klm
