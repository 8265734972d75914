#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "planch/jack.hpp"
#include "planch/observable.hpp"
#include "planch/polycheck.hpp"
#include "planch/verify.hpp"
#include "planch/workspace.hpp"

namespace planch {

enum class Format { csv, json };

// Accepts "csv" or "json"; anything else is a usage_error.
Format parse_format(const std::string& text);

// RFC-4180 style quoting: the field is wrapped in double quotes whenever it
// contains a comma, quote, or newline (partitions always need this), with
// inner quotes doubled. Plain fields pass through unchanged.
std::string csv_field(const std::string& raw);

struct AvgSeries {
  std::string observable;  // the spec string as parsed
  Rat theta;
  Provenance provenance;
  std::vector<int> ns;
  std::vector<Rat> values;
};

// CSV is the bare value list on one line, e.g. "0,1,2,3,4,5,6".
std::string render_avg(const AvgSeries& series, Format format);

std::string render_measure(const MeasureTable& table, Format format);
std::string render_kernel(const GrowthKernel& kernel, const Rat& theta,
                          Format format);
std::string render_coords(const Partition& la, const Rat& theta,
                          const KerovCoords& coords, Format format);

// CSV is the value series as n,value rows; JSON carries the full report
// including the binomial-basis interpolant.
std::string render_report(const PolyReport& report, Format format);

struct JackView {
  Partition lambda;
  Rat theta;
  SymFunc expansion;  // P_lambda in the monomial basis
  Rat norm;
  Rat dim;
  Rat dim_prime;
};

std::string render_jack(const JackView& view, Format format);

struct SampleRun {
  int n = 0;
  Rat theta;
  std::uint64_t seed = 0;
  int trajectories = 0;
  bool with_paths = false;
  std::vector<std::vector<Partition>> paths;  // each is the chain from empty
  MeasureTable exact;                         // reference weights at size n
};

std::string render_sample(const SampleRun& run, Format format);

// One row per case plus a trailing "# passed M/N" comment in CSV.
std::string render_suite(const SuiteResult& result, Format format);

// Writes to the path when nonempty, otherwise to the fallback stream.
void emit(const std::string& text, const std::string& out_path,
          std::ostream& fallback);

}  // namespace planch
