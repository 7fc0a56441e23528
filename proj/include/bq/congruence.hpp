#pragma once

#include <utility>
#include <vector>

#include "bq/biquandle.hpp"

namespace bq {

// Terms over the two biquandle operations.
struct Term {
    enum Kind { Var, Under, Over } kind = Var;
    int var = 0;     // when kind == Var
    int left = -1;   // indices into the owning Identity's node pool
    int right = -1;
};

struct Identity {
    std::vector<Term> nodes; // shared node pool
    int lhs = 0;
    int rhs = 0;
    int var_count = 0;

    int var(int v);               // adds a Var node, returns its index
    int under_node(int l, int r); // adds an Under node
    int over_node(int l, int r);

    int eval(int node, const Biquandle& x, const std::vector<int>& assign) const;
};

// The four 2-reductivity identities a op (b op' c) = a op b.
std::vector<Identity> two_reductivity_identities();

// All pairs (eval(lhs), eval(rhs)) over all variable assignments.
std::vector<std::pair<int, int>> instantiate_identities(const Biquandle& x,
                                                        const std::vector<Identity>& ids);

// A partition of {0..n-1}; union-find representation.
struct Congruence {
    std::vector<int> parent;

    explicit Congruence(int n);
    int find(int a);
    int find(int a) const;
    bool merge(int a, int b);
    int class_count() const;
    // Classes sorted by least element, each sorted.
    std::vector<std::vector<int>> classes() const;
};

bool is_congruence(const Biquandle& x, const Congruence& c);

// Smallest congruence on x containing the given pairs (union-find plus
// worklist saturation).
Congruence congruence_closure(const Biquandle& x,
                              const std::vector<std::pair<int, int>>& pairs);

struct Quotient {
    Biquandle biquandle;
    std::vector<int> projection; // carrier element -> class index
};

// Throws domain_error unless c is a congruence; asserts well-definedness and
// that the quotient validates. Classes are numbered by least element.
Quotient quotient_biquandle(const Biquandle& x, const Congruence& c);

// Quotient by the congruence generated by the 2-reductivity identities;
// asserts the result is 2-reductive.
Quotient two_reductive_quotient(const Biquandle& x);

} // namespace bq
