#pragma once

#include "bq/biquandle.hpp"
#include "bq/quandle.hpp"
#include "bq/report.hpp"
#include "bq/table.hpp"

namespace bq {

// A finite group given by its Cayley table.
struct Group {
    OpTable cayley;
    int identity = 0;
    std::vector<int> inverse;

    int size() const { return cayley.n; }
    int op(int a, int b) const { return cayley.at(a, b); }
    int inv(int a) const { return inverse[a]; }

    bool is_abelian() const;
};

PropertyReport validate_group(const OpTable& t);
// Throws domain_error unless the table validates.
Group make_group(OpTable t);
Group cyclic_group(int n);

bool is_group_automorphism(const Group& g, const Perm& p);

// Core quandle: g*h = h g^{-1} h.
Quandle core_quandle(const Group& g);
// Affine quandle on an abelian group: g*h = phi(g) + (id - phi)(h).
Quandle affine_quandle(const Group& g, const Perm& phi);
// Wada biquandle: g under h = h^{-1} g^{-1} h, g over h = h^{-2} g.
// Its associated quandle is the core quandle.
Biquandle wada_biquandle(const Group& g);
// Affine biquandle on an abelian group:
// g under h = psi(phi(g)) + (psi - psi phi)(h), g over h = psi(g).
// Its associated quandle is the affine quandle Aff(G, phi).
Biquandle affine_biquandle(const Group& g, const Perm& phi, const Perm& psi);

// Product biquandle of two quandles (Q,*) and (K,o):
// (x,a) under (z,b) = (x*z, a), (x,a) over (z,b) = (x, a o^{-1} b).
// Asserts the output validates.
Biquandle product_biquandle(const Quandle& q, const Quandle& k);

} // namespace bq
