#pragma once

#include <optional>
#include <vector>

#include "bq/perm.hpp"
#include "bq/quandle.hpp"
#include "bq/report.hpp"
#include "bq/table.hpp"

namespace bq {

// A finite biquandle: two operations (under, over) satisfying the diagonal,
// invertibility and exchange-law axioms.
struct Biquandle {
    OpTable under; // x under y
    OpTable over;  // x over y

    Biquandle() = default;
    Biquandle(OpTable u, OpTable o) : under(std::move(u)), over(std::move(o)) {}

    int size() const { return under.n; }
    int u(int x, int y) const { return under.at(x, y); }
    int o(int x, int y) const { return over.at(x, y); }

    Perm alpha(int y) const; // x -> x under y
    Perm beta(int y) const;  // x -> x over y

    bool operator==(const Biquandle&) const = default;
    bool operator<(const Biquandle& b) const;
};

PropertyReport validate_biquandle(const OpTable& under, const OpTable& over);

// x*y = beta_y^{-1}(x under y); asserts the result is a quandle.
Quandle associated_quandle(const Biquandle& b);

bool is_medial_biquandle(const Biquandle& b);
bool is_commutative_biquandle(const Biquandle& b);
bool is_involutory_biquandle(const Biquandle& b);
// Returns the witnessing sigma when both operations equal a single bijection
// of the left argument.
std::optional<Perm> is_constant_action(const Biquandle& b);
bool is_two_reductive(const Biquandle& b);

// Partition of the carrier under the relation generated by x ~ x under y and
// x ~ x over y; classes sorted, each class sorted.
std::vector<std::vector<int>> biquandle_components(const Biquandle& b);

// Throws domain_error unless the tables validate.
Biquandle make_biquandle(OpTable under, OpTable over);

} // namespace bq
