#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bq {

// An n-by-n operation table over {0..n-1}. Files use 1-based entries.
struct OpTable {
    int n = 0;
    std::vector<int> cell; // row-major, cell[i*n+j] = i o j

    OpTable() = default;
    explicit OpTable(int order) : n(order), cell(order * order, 0) {}
    OpTable(int order, std::vector<int> cells) : n(order), cell(std::move(cells)) {}

    int at(int i, int j) const { return cell[i * n + j]; }
    int& at(int i, int j) { return cell[i * n + j]; }

    bool in_range() const; // every cell in {0..n-1}

    bool operator==(const OpTable&) const = default;
    bool operator<(const OpTable& o) const;

    std::string to_text() const;                 // "n\nrow...\n" with 1-based cells
    static OpTable from_stream(std::istream& in); // throws format_error
    static OpTable from_text(const std::string& text);
};

} // namespace bq
