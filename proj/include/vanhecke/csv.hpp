#pragma once

#include <iosfwd>
#include <string>

#include "vanhecke/model.hpp"

namespace vanhecke {

// CSV signal format: header "x,v", one record per line, '.' decimal point,
// lines starting with '#' and blank lines are skipped.

/// Throws CsvError with the offending 1-based line number on malformed input.
SampleSet read_samples(std::istream& in, const std::string& source = "<stream>");
SampleSet read_samples(const std::string& path);

/// Writes with 17 significant digits, enough to round-trip binary64 exactly.
void write_samples(std::ostream& out, const SampleSet& samples);
void write_samples(const std::string& path, const SampleSet& samples);

}  // namespace vanhecke
