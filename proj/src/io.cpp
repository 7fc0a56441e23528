#include "bq/io.hpp"

#include <fstream>
#include <sstream>

#include "bq/errors.hpp"

namespace bq {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write file: " + path);
    out << content;
}

OpTable load_table(const std::string& path) {
    std::istringstream in(read_file(path));
    OpTable t = OpTable::from_stream(in);
    int extra;
    if (in >> extra) throw format_error("table file " + path + ": trailing data");
    return t;
}

std::pair<OpTable, OpTable> load_biquandle_tables(const std::string& path) {
    std::istringstream in(read_file(path));
    OpTable under = OpTable::from_stream(in);
    OpTable over = OpTable::from_stream(in);
    if (under.n != over.n) throw format_error("biquandle file " + path + ": table orders differ");
    return {std::move(under), std::move(over)};
}

Group load_group(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string header;
    if (!(in >> header) || header != "group")
        throw format_error("group file " + path + ": missing 'group' header");
    return make_group(OpTable::from_stream(in));
}

Structure load_structure(const std::string& path) {
    std::istringstream in(read_file(path));
    return read_structure(in);
}

std::string biquandle_to_text(const Biquandle& b) {
    return b.under.to_text() + "\n" + b.over.to_text();
}

} // namespace bq
