#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symshift/core.hpp"
#include "symshift/graphs.hpp"
#include "symshift/localmaps.hpp"

namespace symshift::io {

// .sft files:
//   alphabet: 0 1
//   forbidden: 1 1        (one word per line, repeatable)
// '#' starts a comment. Errors are E_PARSE with "<source>:<line>:" prefixes.
SftSpec parse_sft(std::string_view text, const std::string &source = "<input>");
std::string format_sft(const SftSpec &spec);

// .rule files:
//   radius: 1
//   map: 0 0 1 -> 1       (2r+1 window tokens, one line per window)
// Completeness is checked against `domain`; windows that are locally
// forbidden in the domain are ignored.
LocalRule parse_rule(std::string_view text, const SftSpec &domain, const std::string &source = "<input>");
std::string format_rule(const LocalRule &rule);

// .pres documents (JSON):
//   {"alphabet": ["0","1"], "states": ["a","b"],
//    "edges": [{"from": "a", "to": "b", "label": "1"}, ...]}
LabeledGraph parse_presentation(std::string_view text, const std::string &source = "<input>");
std::string format_presentation(const LabeledGraph &graph);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

SftSpec load_sft(const std::filesystem::path &path);
LocalRule load_rule(const std::filesystem::path &path, const SftSpec &domain);
LabeledGraph load_presentation(const std::filesystem::path &path);

} // namespace symshift::io
