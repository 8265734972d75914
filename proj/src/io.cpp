#include "planch/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace planch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Partition fields are always quoted so that "" (the empty diagram) and
// multi-part strings read back unambiguously.
std::string csv_partition(const Partition& la) {
  return "\"" + la.str() + "\"";
}

ordered_json rat_array(const std::vector<Rat>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(rat_str(v));
  return arr;
}

template <typename Pairs>
ordered_json pair_array(const Pairs& pairs) {
  ordered_json arr = ordered_json::array();
  for (const auto& [la, w] : pairs) {
    arr.push_back(ordered_json::array({la.str(), rat_str(w)}));
  }
  return arr;
}

std::string coord_line(const char* label, const std::vector<Rat>& values) {
  std::string line = label;
  for (const auto& v : values) {
    line += ',';
    line += rat_str(v);
  }
  line += '\n';
  return line;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw usage_error("unknown format '" + text + "' (expected csv or json)");
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string render_avg(const AvgSeries& series, Format format) {
  if (format == Format::csv) {
    std::string line;
    for (size_t i = 0; i < series.values.size(); ++i) {
      if (i) line += ',';
      line += rat_str(series.values[i]);
    }
    line += '\n';
    return line;
  }
  ordered_json j;
  j["observable"] = series.observable;
  j["theta"] = rat_str(series.theta);
  j["measure"] = provenance_str(series.provenance);
  j["n"] = series.ns;
  j["values"] = rat_array(series.values);
  return dump(j);
}

std::string render_measure(const MeasureTable& table, Format format) {
  if (format == Format::csv) {
    std::string out = "partition,weight\n";
    for (const auto& [la, w] : table.weights) {
      out += csv_partition(la) + "," + rat_str(w) + "\n";
    }
    return out;
  }
  ordered_json j;
  j["n"] = table.n;
  j["theta"] = rat_str(table.theta);
  j["provenance"] = provenance_str(table.provenance);
  j["weights"] = pair_array(table.weights);
  return dump(j);
}

std::string render_kernel(const GrowthKernel& kernel, const Rat& theta,
                          Format format) {
  if (format == Format::csv) {
    std::string out = "partition,weight\n";
    for (const auto& [la, w] : kernel.targets) {
      out += csv_partition(la) + "," + rat_str(w) + "\n";
    }
    return out;
  }
  ordered_json j;
  j["source"] = kernel.source.str();
  j["theta"] = rat_str(theta);
  j["targets"] = pair_array(kernel.targets);
  return dump(j);
}

std::string render_coords(const Partition& la, const Rat& theta,
                          const KerovCoords& coords, Format format) {
  if (format == Format::csv) {
    return coord_line("X", coords.X) + coord_line("Y", coords.Y);
  }
  ordered_json j;
  j["lambda"] = la.str();
  j["theta"] = rat_str(theta);
  j["X"] = rat_array(coords.X);
  j["Y"] = rat_array(coords.Y);
  return dump(j);
}

std::string render_report(const PolyReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "n,value\n";
    for (size_t i = 0; i < report.values.size(); ++i) {
      out += std::to_string(i) + "," + rat_str(report.values[i]) + "\n";
    }
    return out;
  }
  ordered_json j;
  j["observable"] = report.spec;
  j["theta"] = rat_str(report.theta);
  j["degree_bound"] = report.claimed_degree;
  j["n_max"] = report.n_max;
  j["values"] = rat_array(report.values);
  j["verdict"] = report.verdict;
  j["interpolant"] = rat_array(report.interpolant.coeffs);
  return dump(j);
}

std::string render_jack(const JackView& view, Format format) {
  if (format == Format::csv) {
    std::string out = "partition,coefficient\n";
    for (const auto& [mu, c] : view.expansion.terms) {
      out += csv_partition(mu) + "," + rat_str(c) + "\n";
    }
    out += "# norm=" + rat_str(view.norm) + "\n";
    out += "# dim=" + rat_str(view.dim) + "\n";
    out += "# dim_prime=" + rat_str(view.dim_prime) + "\n";
    return out;
  }
  ordered_json j;
  j["lambda"] = view.lambda.str();
  j["theta"] = rat_str(view.theta);
  j["basis"] = "monomial";
  j["terms"] = pair_array(view.expansion.terms);
  j["norm"] = rat_str(view.norm);
  j["dim"] = rat_str(view.dim);
  j["dim_prime"] = rat_str(view.dim_prime);
  return dump(j);
}

std::string render_sample(const SampleRun& run, Format format) {
  std::map<Partition, int> counts;
  for (const auto& path : run.paths) counts[path.back()] += 1;
  const Rat total = Rat(Int(run.trajectories));

  if (format == Format::csv) {
    std::string out;
    if (run.with_paths) {
      out += "trajectory";
      for (int k = 0; k <= run.n; ++k) {
        out += ",lambda" + std::to_string(k);
      }
      out += '\n';
      for (size_t t = 0; t < run.paths.size(); ++t) {
        out += std::to_string(t);
        for (const auto& la : run.paths[t]) out += "," + csv_partition(la);
        out += '\n';
      }
    } else {
      out += "trajectory,final\n";
      for (size_t t = 0; t < run.paths.size(); ++t) {
        out += std::to_string(t) + "," + csv_partition(run.paths[t].back()) +
               "\n";
      }
    }
    out += "\n# frequencies\npartition,count,empirical,exact\n";
    for (const auto& [la, w] : run.exact.weights) {
      const int c = counts.count(la) ? counts.at(la) : 0;
      out += csv_partition(la) + "," + std::to_string(c) + "," +
             rat_str(Rat(Int(c)) / total) + "," + rat_str(w) + "\n";
    }
    return out;
  }

  ordered_json j;
  j["n"] = run.n;
  j["theta"] = rat_str(run.theta);
  j["seed"] = run.seed;
  j["trajectories"] = run.trajectories;
  if (run.with_paths) {
    ordered_json paths = ordered_json::array();
    for (const auto& path : run.paths) {
      ordered_json steps = ordered_json::array();
      for (const auto& la : path) steps.push_back(la.str());
      paths.push_back(std::move(steps));
    }
    j["paths"] = std::move(paths);
  } else {
    ordered_json finals = ordered_json::array();
    for (const auto& path : run.paths) finals.push_back(path.back().str());
    j["finals"] = std::move(finals);
  }
  ordered_json freq = ordered_json::array();
  for (const auto& [la, w] : run.exact.weights) {
    const int c = counts.count(la) ? counts.at(la) : 0;
    ordered_json row;
    row["partition"] = la.str();
    row["count"] = c;
    row["empirical"] = rat_str(Rat(Int(c)) / total);
    row["exact"] = rat_str(w);
    freq.push_back(std::move(row));
  }
  j["frequencies"] = std::move(freq);
  return dump(j);
}

std::string render_suite(const SuiteResult& result, Format format) {
  if (format == Format::csv) {
    std::string out = "case,status,detail\n";
    for (const auto& c : result.cases) {
      out += csv_field(c.name);
      out += c.pass ? ",pass," : ",FAIL,";
      out += csv_field(c.detail) + "\n";
    }
    out += "# passed " + std::to_string(result.passed()) + "/" +
           std::to_string(result.cases.size()) + "\n";
    return out;
  }
  ordered_json j;
  j["suite"] = result.suite;
  ordered_json cases = ordered_json::array();
  for (const auto& c : result.cases) {
    ordered_json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  j["passed"] = result.passed();
  j["total"] = result.cases.size();
  j["all_pass"] = result.all_pass();
  return dump(j);
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw usage_error("cannot open output file '" + out_path + "'");
  file << text;
  file.flush();
  if (!file) throw usage_error("failed writing output file '" + out_path + "'");
}

}  // namespace planch
