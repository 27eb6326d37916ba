#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "radloc/solver.hpp"
#include "radloc/sweep.hpp"

namespace radloc {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Inverse of format_double; throws std::invalid_argument on malformed input.
double parse_double(std::string_view s);

// Fixed CSV headers. Booleans are written as 0/1, doubles via format_double,
// and the failure column is empty for successful rows.
inline constexpr std::string_view kRecordsHeader =
    "trial_id,sigma_db,true_x,true_y,init_x,init_y,algorithm,class,"
    "est_x,est_y,sq_error,iterations,converged,spurious,mu,seed,failure";
inline constexpr std::string_view kTableHeader =
    "sigma_db,algorithm,class,mean_sq_error,trial_count";
inline constexpr std::string_view kTrajectoryHeader = "iteration,x,y";

// Writers emit UTF-8, comma separators, one header row and '\n' endings.
// They throw IoError carrying the path on any failure.
void write_records_csv(const std::filesystem::path& path,
                       const std::vector<TrialRecord>& records);
void write_table_csv(const std::filesystem::path& path,
                     const std::vector<AggregateRow>& table);
void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<TrajectorySample>& trajectory);

// Parses a file produced by write_records_csv back into records; the round
// trip is exact. Throws IoError on unreadable or malformed files.
std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path);

}  // namespace radloc
