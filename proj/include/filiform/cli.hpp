#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace filiform::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes.
enum Exit : int { ok = 0, negative = 1, input_error = 2, undecided = 3 };

/// Runs `filiform <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A generated golden table: tab-separated, first row is the header, the
/// first `keys` columns identify a row.
struct Table {
  std::string file;
  std::size_t keys = 1;
  std::vector<std::vector<std::string>> rows;
};

std::vector<Table> paper_tables();
std::string render(const Table& t);

/// First divergent cell between a table and the text of its golden file, or
/// an empty string when they agree.
std::string first_divergence(const Table& t, const std::string& golden);

}  // namespace filiform::cli
