#pragma once

#include <iosfwd>
#include <vector>

#include "bq/biquandle.hpp"
#include "bq/perm.hpp"
#include "bq/quandle.hpp"
#include "bq/report.hpp"

namespace bq {

// A biquandle structure on a quandle: an n-tuple of quandle automorphisms
// (beta_1..beta_n) satisfying the two structure conditions.
struct Structure {
    Quandle base;
    std::vector<Perm> betas;

    bool operator==(const Structure&) const = default;
};

PropertyReport validate_structure(const Quandle& q, const std::vector<Perm>& betas);

// x under y = beta_y(x*y), x over y = beta_y(x); asserts the output
// validates and that its associated quandle is the base, table-for-table.
Biquandle induce_biquandle(const Structure& s);

// base = associated quandle, beta_y = over-table column map; asserts the
// output validates.
Structure extract_structure(const Biquandle& b);

// All structures on q, iterated over Aut(q)^n in lexicographic order of the
// permutation image tuples.
std::vector<Structure> enumerate_structures(const Quandle& q);

struct StructureClass {
    Structure representative; // lexicographically least member
    int size = 0;             // number of structures in the class
};

// Group enumerate_structures(q) by isomorphism of the induced biquandles.
// Classes ordered by their representative.
std::vector<StructureClass> classify_structures(const Quandle& q);

// Number of isomorphism classes of constant structures; cross-checked by the
// caller against conjugacy_class_count(automorphism_group(q)).
int count_constant_structures(const Quandle& q);

// Structure file: quandle table block, blank line, then n cycle-notation
// lines. Throws format_error on malformed input.
Structure read_structure(std::istream& in);
std::string structure_to_text(const Structure& s);

} // namespace bq
