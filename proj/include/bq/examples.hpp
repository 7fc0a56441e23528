#pragma once

#include <string>
#include <vector>

#include "bq/biquandle.hpp"
#include "bq/quandle.hpp"
#include "bq/structure.hpp"

namespace bq::examples {

// The trivial order-2 quandle.
Quandle t2();
// The three order-3 quandles: (a) trivial, (b) non-affine, (c) dihedral.
Quandle order3_a();
Quandle order3_b();
Quandle order3_c();
// The order-4 quandle driving the knot tables.
Quandle y4();

struct NamedBiquandle {
    std::string name; // A1..A5, B1..B4, C1..C6
    Structure structure;
    Biquandle biquandle;
};

// The fifteen order-3 biquandles in the published structure order.
const std::vector<NamedBiquandle>& order3_biquandles();

} // namespace bq::examples
