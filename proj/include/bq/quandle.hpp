#pragma once

#include "bq/perm.hpp"
#include "bq/report.hpp"
#include "bq/table.hpp"

namespace bq {

// A finite quandle: idempotent, right-invertible, right self-distributive.
struct Quandle {
    OpTable table;

    Quandle() = default;
    explicit Quandle(OpTable t) : table(std::move(t)) {}

    int size() const { return table.n; }
    int op(int x, int y) const { return table.at(x, y); }
    // Right translation R_y and its inverse.
    Perm right_translation(int y) const;
    int op_inv(int x, int y) const; // z with z*y = x

    bool operator==(const Quandle&) const = default;
};

PropertyReport validate_quandle(const OpTable& t);

bool is_medial_quandle(const Quandle& q);
bool is_commutative_quandle(const Quandle& q);
bool is_connected_quandle(const Quandle& q);

Quandle trivial_quandle(int n);

// Throws domain_error unless the table validates.
Quandle make_quandle(OpTable t);

} // namespace bq
