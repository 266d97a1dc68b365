#pragma once

// Golden-file CLI cases: "$ args", expected stdout lines, "? exit".

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace projectivoid::testing {

struct GoldenCase {
  std::string command;
  std::vector<std::string> args;
  std::string expected;
  int exit_code = 0;
};

/// Shell-style word splitting with single and double quotes.
inline std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        cur += c;
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_word = true;
    } else if (c == ' ') {
      if (in_word) words.push_back(cur);
      cur.clear();
      in_word = false;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quote) throw std::runtime_error("unterminated quote: " + line);
  if (in_word) words.push_back(cur);
  return words;
}

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

inline std::vector<GoldenCase> load_golden(const std::string& dir) {
  std::ifstream in(dir + "/golden.txt");
  if (!in) throw std::runtime_error("cannot open " + dir + "/golden.txt");
  std::vector<GoldenCase> cases;
  GoldenCase* open = nullptr;
  std::string line;
  while (std::getline(in, line)) {
    if (!open) {
      if (line.rfind("$ ", 0) == 0) {
        GoldenCase c;
        c.command = replace_all(line.substr(2), "@DATA@", dir + "/data");
        c.args = split_words(c.command);
        cases.push_back(std::move(c));
        open = &cases.back();
      }
      continue;
    }
    if (line.rfind("? ", 0) == 0) {
      open->exit_code = std::stoi(line.substr(2));
      open = nullptr;
    } else {
      open->expected += line + "\n";
    }
  }
  if (open) throw std::runtime_error("unterminated case: " + open->command);
  return cases;
}

/// Single-quoted for /bin/sh.
inline std::string shell_quote(const std::string& word) {
  return "'" + replace_all(word, "'", "'\\''") + "'";
}

}  // namespace projectivoid::testing
