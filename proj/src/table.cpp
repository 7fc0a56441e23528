#include "bq/table.hpp"

#include <sstream>

#include "bq/errors.hpp"

namespace bq {

bool OpTable::in_range() const {
    for (int v : cell)
        if (v < 0 || v >= n) return false;
    return static_cast<int>(cell.size()) == n * n;
}

bool OpTable::operator<(const OpTable& o) const {
    if (n != o.n) return n < o.n;
    return cell < o.cell;
}

std::string OpTable::to_text() const {
    std::ostringstream out;
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << at(i, j) + 1;
        }
        out << '\n';
    }
    return out.str();
}

OpTable OpTable::from_stream(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw format_error("table: missing order line");
    if (n < 1) throw format_error("table: order must be positive, got " + std::to_string(n));
    OpTable t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = 0;
            if (!(in >> v))
                throw format_error("table: missing entry at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
            if (v < 1 || v > n)
                throw format_error("table: entry " + std::to_string(v) + " at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) + " out of range 1.." + std::to_string(n));
            t.at(i, j) = v - 1;
        }
    return t;
}

OpTable OpTable::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_stream(in);
}

} // namespace bq
