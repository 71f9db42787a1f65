#include "vanhecke/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace vanhecke {

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

double parse_field(std::string_view field, const std::string& source,
                   std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  const char* const last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw CsvError(source + ":" + std::to_string(line_no) +
                       ": malformed number \"" + std::string(field) + "\"",
                   line_no);
  }
  return value;
}

}  // namespace

SampleSet read_samples(std::istream& in, const std::string& source) {
  std::vector<double> xs;
  std::vector<double> vs;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    // Tolerate CRLF input.
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') {
      continue;
    }
    const std::size_t comma = content.find(',');
    if (comma == std::string_view::npos || content.find(',', comma + 1) != std::string_view::npos) {
      throw CsvError(source + ":" + std::to_string(line_no) +
                         ": expected two comma-separated columns",
                     line_no);
    }
    const std::string_view first = trim(content.substr(0, comma));
    const std::string_view second = trim(content.substr(comma + 1));
    if (!header_seen) {
      if (first != "x" || second != "v") {
        throw CsvError(source + ":" + std::to_string(line_no) +
                           ": expected header \"x,v\"",
                       line_no);
      }
      header_seen = true;
      continue;
    }
    xs.push_back(parse_field(first, source, line_no));
    vs.push_back(parse_field(second, source, line_no));
  }
  if (!header_seen) {
    throw CsvError(source + ": empty input, expected header \"x,v\"", 0);
  }
  if (xs.empty()) {
    throw CsvError(source + ": no data rows", 0);
  }
  return SampleSet(Eigen::Map<Eigen::VectorXd>(xs.data(), xs.size()),
                   Eigen::Map<Eigen::VectorXd>(vs.data(), vs.size()));
}

SampleSet read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError("cannot open \"" + path + "\"", 0);
  }
  return read_samples(in, path);
}

void write_samples(std::ostream& out, const SampleSet& samples) {
  out << "x,v\n";
  char buffer[64];
  for (Eigen::Index i = 0; i < samples.n(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.17g,%.17g\n", samples.abscissas()[i],
                  samples.values()[i]);
    out << buffer;
  }
}

void write_samples(const std::string& path, const SampleSet& samples) {
  std::ofstream out(path);
  if (!out) {
    throw CsvError("cannot open \"" + path + "\" for writing", 0);
  }
  write_samples(out, samples);
}

}  // namespace vanhecke
