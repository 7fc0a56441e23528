#pragma once

#include <optional>
#include <vector>

#include "bq/biquandle.hpp"
#include "bq/perm.hpp"
#include "bq/quandle.hpp"

namespace bq {

// Lexicographically least bijection carrying one structure onto the other,
// if any. Backtracking with per-element invariant-profile pruning.
std::optional<Perm> quandle_isomorphism(const Quandle& a, const Quandle& b);
std::optional<Perm> biquandle_isomorphism(const Biquandle& a, const Biquandle& b);

// All permutations preserving the operation, sorted; closed under
// composition and inverse (asserted).
std::vector<Perm> automorphism_group(const Quandle& q);

// Number of conjugacy classes; throws domain_error if the set is not a group.
int conjugacy_class_count(const std::vector<Perm>& group);

} // namespace bq
