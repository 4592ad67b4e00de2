#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

std::vector<std::string> split_csv(const std::string& line);

// Strict numeric field parsing; `context` names the file location for errors.
double parse_double_field(const std::string& field, const std::string& context);
long parse_long_field(const std::string& field, const std::string& context);
int parse_int_field(const std::string& field, const std::string& context);

// Shortest round-trip formatting so written files reload bit-exactly.
std::string format_double(double v);

class CsvReader {
 public:
  CsvReader(const std::string& path, const std::string& expected_header);

  // Fills `fields` with the next non-empty row; false at end of file.
  bool next(std::vector<std::string>& fields);

  long line_number() const { return line_no_; }
  const std::string& path() const { return path_; }
  std::string where() const { return path_ + ":" + std::to_string(line_no_); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(where() + ": " + msg);
  }

 private:
  std::string path_;
  std::ifstream in_;
  long line_no_ = 0;
  std::size_t n_cols_ = 0;
};

// Writes via a temp file in the same directory, then renames into place.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace rppg
