#pragma once

#include <functional>
#include <vector>

#include "bq/biquandle.hpp"
#include "bq/quandle.hpp"
#include "bq/report.hpp"
#include "bq/structure.hpp"

namespace bq {

using HomElement = std::vector<int>; // image of each source element

struct HomSet {
    int source_size = 0;
    int target_size = 0;
    std::vector<HomElement> elements; // lexicographically sorted
};

// Backtracking enumeration; lexicographically sorted results.
HomSet enumerate_quandle_homs(const Quandle& a, const Quandle& b);
HomSet enumerate_biquandle_homs(const Biquandle& x, const Biquandle& y);

// The Hom-object under pointwise operations, together with its elements.
// Throws domain_error when the target is not medial.
struct HomQuandle {
    HomSet homs;
    Quandle quandle; // element i is homs.elements[i]
};
struct HomBiquandle {
    HomSet homs;
    Biquandle biquandle;
};
HomQuandle hom_quandle(const Quandle& a, const Quandle& b);
HomBiquandle hom_biquandle(const Biquandle& x, const Biquandle& y);

// Proposition-3 criterion: a quandle homomorphism f between the base
// quandles lifts iff f alpha_x = beta_{f(x)} f for every x.
bool lift_check(const HomElement& f, const Structure& sx, const Structure& sy);

// Verifies that the associated quandle of Hom_B(x,y) is exactly the
// lift-selected subquandle of Hom_Q(Q(x),Q(y)), and that the Hom-biquandle's
// structure maps are the pointwise betas.
PropertyReport hom_associated_quandle_check(const Biquandle& x, const Biquandle& y);

// Functorial maps between Hom-biquandles. Both assert homomorphy.
// precompose: Hom_B(Y,Z) -> Hom_B(X,Z), f -> f after h (h: X->Y).
std::vector<int> precompose(const HomElement& h, const Biquandle& x,
                            const Biquandle& y, const Biquandle& z);
// postcompose: Hom_B(A,X) -> Hom_B(A,Y), f -> h after f (h: X->Y).
std::vector<int> postcompose(const HomElement& h, const Biquandle& a,
                             const Biquandle& x, const Biquandle& y);

// Lexicographically least minimum-size subset whose closure under both
// operations is the whole carrier.
std::vector<int> minimal_generating_set(const Biquandle& x);

struct PowerEmbedding {
    std::vector<int> generators;           // the minimal generating set used
    std::vector<std::vector<int>> image;   // j(f) for each hom, in hom order
    Biquandle image_biquandle;             // componentwise ops restricted to the image
};
// Proposition 7: Hom_B(x,y) embeds into y^k via evaluation on a minimal
// generating set; asserts the embedding is an isomorphism onto its image.
PowerEmbedding embed_into_power(const Biquandle& x, const Biquandle& y);

} // namespace bq
