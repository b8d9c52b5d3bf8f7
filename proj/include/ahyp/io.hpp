#pragma once
// Declarative job files: `key = value` lines plus a bracketed matrix block
// listing the configuration's column vectors one per line.  '#' starts a
// comment.  Example:
//
//   p = 3
//   columns = [
//     3 0
//     0 3
//     2 2
//   ]
//   v = 0 0 -1/2
//   b_max = 3

#include "ahyp/rational.hpp"

#include <fstream>
#include <map>
#include <optional>

namespace ahyp {

struct JobFile {
  std::map<std::string, std::string> scalars;
  std::optional<MatZ> columns;  // rows of the block = the column vectors a_i
  std::vector<std::string> labels;
};

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline JobFile parse_job_text(const std::string& text) {
  JobFile job;
  std::istringstream in(text);
  std::string raw;
  long lineno = 0;
  bool in_matrix = false;
  MatZ rows;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (in_matrix) {
      if (line == "]") {
        job.columns = rows;
        in_matrix = false;
        continue;
      }
      VecZ row;
      try {
        row = parse_integer_vector(line);
      } catch (const std::invalid_argument& e) {
        fail(std::string("bad matrix row: ") + e.what());
      }
      if (!rows.empty() && row.size() != rows[0].size()) fail("matrix rows have mixed widths");
      rows.push_back(std::move(row));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected `key = value`");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (value == "[") {
      if (key != "columns") fail("only `columns` may open a matrix block");
      if (job.columns) fail("duplicate columns block");
      in_matrix = true;
      rows.clear();
      continue;
    }
    if (key == "labels") {
      job.labels = split_tokens(value);
      continue;
    }
    if (!job.scalars.emplace(key, value).second) fail("duplicate key `" + key + "`");
  }
  if (in_matrix) fail("unterminated columns block");
  return job;
}

inline JobFile parse_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_text(buf.str());
}

}  // namespace ahyp
