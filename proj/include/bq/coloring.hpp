#pragma once

#include <map>
#include <string>
#include <vector>

#include "bq/biquandle.hpp"
#include "bq/gauss.hpp"
#include "bq/quandle.hpp"
#include "bq/structure.hpp"

namespace bq {

struct ColoringCount {
    long long value = 0;
    std::vector<std::vector<int>> colorings; // filled only when requested
};

// Colorings of the diagram's arcs: at a positive crossing the outgoing under
// arc is (under-in) * (over); at a negative crossing the relation is
// inverted. Backtracking solver.
ColoringCount quandle_colorings(const Diagram& d, const Quandle& y, bool list = false);

// Colorings of the diagram's semiarcs. At a positive crossing with incoming
// under color x and outgoing over color w read against the over strand's
// orientation: under-out = x under w and over-in = w over x. A negative
// crossing uses the same relations with the in/out roles swapped on both
// strands (the inverse pair map). Backtracking solver.
ColoringCount biquandle_colorings(const Diagram& d, const Biquandle& z, bool list = false);

struct StructureInvariant {
    std::vector<StructureClass> classes;
    std::vector<long long> counts;   // count per class, in class order
    std::vector<long long> multiset; // counts, sorted
};

// The biquandle structure coloring invariant: coloring counts over all
// structure classes of y.
StructureInvariant structure_coloring_invariant(const Diagram& d, const Quandle& y);

// Built-in named diagrams. Throws domain_error(listing available names) for
// unknown names.
const std::map<std::string, std::string>& fixture_codes();
GaussCode fixture(const std::string& name);

// Fixture file format: "name: code" lines, '#' comments.
std::map<std::string, std::string> parse_fixture_file(const std::string& text);

// Insert a Reidemeister-I kink (a new crossing with both passages adjacent)
// before token position pos. over_first picks OU vs UO order.
GaussCode insert_kink(const GaussCode& g, int pos, int sign, bool over_first);

} // namespace bq
