#pragma once

#include <string>

#include "bq/biquandle.hpp"
#include "bq/group.hpp"
#include "bq/quandle.hpp"
#include "bq/structure.hpp"

namespace bq {

std::string read_file(const std::string& path); // throws format_error

// Table file: first line n, then n rows of n 1-based entries.
OpTable load_table(const std::string& path);
// Biquandle file: under block, blank line, over block.
std::pair<OpTable, OpTable> load_biquandle_tables(const std::string& path);
// Group file: a "group" header line, then a table block.
Group load_group(const std::string& path);
// Structure file: quandle block, blank line, n cycle-notation lines.
Structure load_structure(const std::string& path);

std::string biquandle_to_text(const Biquandle& b);
void write_file(const std::string& path, const std::string& content);

} // namespace bq
