#pragma once

#include <string>
#include <vector>

#include "bq/errors.hpp"

namespace bq {

struct Passage {
    bool over = false;
    int label = 0; // crossing label as written
    int sign = +1;
};

// An oriented signed Gauss code: the passage sequence read along the knot.
struct GaussCode {
    std::vector<Passage> tokens;

    int crossing_count() const { return static_cast<int>(tokens.size()) / 2; }
    std::string to_string() const;
};

// Grammar: ((O|U)<digits>(+|-))*, case-insensitive, whitespace allowed
// between tokens. Validation: every label occurs exactly twice, once Over
// and once Under, with equal signs. Errors carry the offending token index.
GaussCode parse_gauss_code(const std::string& text);

struct Crossing {
    int sign = +1;
    // Semiarc ids; semiarc i is the interval following token i.
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
};

struct Diagram {
    GaussCode code;
    int semiarc_count = 0;                // 2 * crossings, or 1 for the unknot
    std::vector<Crossing> crossings;
    std::vector<int> arc_of_semiarc;      // semiarc -> arc index
    int arc_count = 0;
};

Diagram build_diagram(const GaussCode& g);

// Genus of the closed orientable surface on which the code's diagram embeds
// (0 = planar-realizable, i.e. classical).
int virtual_genus(const GaussCode& g);

} // namespace bq
