#include "radloc/csv.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "radloc/errors.hpp"

namespace radloc {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open for writing: " + path.string());
  }
  return file;
}

void finish_write(std::ofstream& file, const std::filesystem::path& path) {
  file.flush();
  if (!file) {
    throw IoError("write failed: " + path.string());
  }
}

[[noreturn]] void malformed(const std::filesystem::path& path, std::size_t line_no,
                            const std::string& what) {
  throw IoError("malformed CSV " + path.string() + " line " + std::to_string(line_no) + ": " +
                what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <class Int>
Int parse_int(std::string_view s) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

bool parse_flag(std::string_view s) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw std::invalid_argument("not a 0/1 flag: '" + std::string(s) + "'");
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "convex") return Algorithm::kConvex;
  if (s == "baseline") return Algorithm::kBaseline;
  throw std::invalid_argument("unknown algorithm tag: '" + std::string(s) + "'");
}

TargetClass parse_class(std::string_view s) {
  if (s == "guaranteed-like") return TargetClass::kGuaranteedLike;
  if (s == "unguaranteed") return TargetClass::kUnguaranteed;
  throw std::invalid_argument("unknown target class: '" + std::string(s) + "'");
}

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    throw std::invalid_argument("double formatting failed");
  }
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return value;
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<TrialRecord>& records) {
  std::ofstream file = open_for_write(path);
  file << kRecordsHeader << '\n';
  for (const TrialRecord& r : records) {
    file << r.trial_id << ',' << format_double(r.sigma_db) << ','
         << format_double(r.true_source.x) << ',' << format_double(r.true_source.y) << ','
         << format_double(r.initial.x) << ',' << format_double(r.initial.y) << ','
         << to_string(r.algorithm) << ',' << to_string(r.target_class) << ','
         << format_double(r.estimate.x) << ',' << format_double(r.estimate.y) << ','
         << format_double(r.sq_error) << ',' << r.iterations << ',' << flag(r.converged) << ','
         << flag(r.spurious) << ',' << format_double(r.mu) << ',' << r.seed << ','
         << r.failure << '\n';
  }
  finish_write(file, path);
}

void write_table_csv(const std::filesystem::path& path, const std::vector<AggregateRow>& table) {
  std::ofstream file = open_for_write(path);
  file << kTableHeader << '\n';
  for (const AggregateRow& row : table) {
    file << format_double(row.sigma_db) << ',' << to_string(row.algorithm) << ','
         << to_string(row.target_class) << ',' << format_double(row.mean_sq_error) << ','
         << row.trial_count << '\n';
  }
  finish_write(file, path);
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<TrajectorySample>& trajectory) {
  std::ofstream file = open_for_write(path);
  file << kTrajectoryHeader << '\n';
  for (const TrajectorySample& s : trajectory) {
    file << s.iteration << ',' << format_double(s.position.x) << ','
         << format_double(s.position.y) << '\n';
  }
  finish_write(file, path);
}

std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open for reading: " + path.string());
  }
  std::string line;
  if (!std::getline(file, line) || line != kRecordsHeader) {
    malformed(path, 1, "missing or unexpected header");
  }
  std::vector<TrialRecord> records;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string_view> f = split_fields(line);
    if (f.size() != 17) {
      malformed(path, line_no, "expected 17 fields, got " + std::to_string(f.size()));
    }
    try {
      TrialRecord r;
      r.trial_id = parse_int<std::int64_t>(f[0]);
      r.sigma_db = parse_double(f[1]);
      r.true_source = {parse_double(f[2]), parse_double(f[3])};
      r.initial = {parse_double(f[4]), parse_double(f[5])};
      r.algorithm = parse_algorithm(f[6]);
      r.target_class = parse_class(f[7]);
      r.estimate = {parse_double(f[8]), parse_double(f[9])};
      r.sq_error = parse_double(f[10]);
      r.iterations = parse_int<std::int64_t>(f[11]);
      r.converged = parse_flag(f[12]);
      r.spurious = parse_flag(f[13]);
      r.mu = parse_double(f[14]);
      r.seed = parse_int<std::uint64_t>(f[15]);
      r.failure = std::string(f[16]);
      records.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      malformed(path, line_no, e.what());
    }
  }
  if (file.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return records;
}

}  // namespace radloc
