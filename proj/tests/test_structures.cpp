#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "bq/biquandle.hpp"
#include "bq/errors.hpp"
#include "bq/examples.hpp"
#include "bq/iso.hpp"
#include "bq/structure.hpp"

using namespace bq;
using namespace bq::examples;

namespace {

// Independent oracle: filter Aut(q)^n directly by the two structure
// conditions, without going through enumerate_structures' search order.
std::vector<Structure> brute_structures(const Quandle& q) {
    auto aut = automorphism_group(q);
    int n = q.size();
    std::vector<Structure> out;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<Perm> betas;
        for (int i = 0; i < n; ++i) betas.push_back(aut[idx[i]]);
        bool ok = true;
        // Condition 2: y -> beta_y(y) bijective.
        std::vector<bool> seen(n, false);
        for (int y = 0; y < n && ok; ++y) {
            int v = betas[y].img[y];
            if (seen[v]) ok = false;
            seen[v] = true;
        }
        // Condition 1: beta_{beta_y(x*y)} beta_y = beta_{beta_x(y)} beta_x.
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                Perm lhs = betas[y].then(betas[betas[y].img[q.op(x, y)]]);
                Perm rhs = betas[x].then(betas[betas[x].img[y]]);
                if (lhs.img != rhs.img) ok = false;
            }
        if (ok) out.push_back(Structure{q, betas});
        int i = n - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(aut.size())) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("structure validation") {
    const auto& bs = order3_biquandles();
    for (const auto& nb : bs)
        CHECK(validate_structure(nb.structure.base, nb.structure.betas).holds);
    // A non-automorphism beta is rejected.
    Quandle b = order3_b();
    std::vector<Perm> bad(3, Perm::from_cycles("(1 2)", 3)); // (12) not in Aut(b)
    CHECK_FALSE(validate_structure(b, bad).holds);
    // Violating condition 2: constant diagonal.
    Quandle a = order3_a();
    std::vector<Perm> c2 = {Perm::from_cycles("(1 2)", 3), Perm::identity(3), Perm::identity(3)};
    // beta_1(1)=2, beta_2(2)=2 collide.
    CHECK_FALSE(validate_structure(a, c2).holds);
}

TEST_CASE("enumerate_structures matches the Aut^n brute-force oracle") {
    for (const Quandle& q : {t2(), order3_a(), order3_b(), order3_c(), y4()}) {
        auto fast = enumerate_structures(q);
        auto brute = brute_structures(q);
        REQUIRE(fast.size() == brute.size());
        std::set<std::vector<std::vector<int>>> a, b;
        for (const auto& s : fast) {
            std::vector<std::vector<int>> key;
            for (const auto& p : s.betas) key.push_back(p.img);
            a.insert(key);
        }
        for (const auto& s : brute) {
            std::vector<std::vector<int>> key;
            for (const auto& p : s.betas) key.push_back(p.img);
            b.insert(key);
        }
        CHECK(a == b);
    }
}

TEST_CASE("census of structure classes") {
    CHECK(classify_structures(t2()).size() == 2);
    CHECK(classify_structures(order3_a()).size() == 5);
    CHECK(classify_structures(order3_b()).size() == 4);
    CHECK(classify_structures(order3_c()).size() == 6);
    CHECK(classify_structures(y4()).size() == 8);
    // Class sizes sum to the raw structure count.
    for (const Quandle& q : {t2(), order3_a(), order3_b(), order3_c(), y4()}) {
        auto classes = classify_structures(q);
        int total = 0;
        for (const auto& c : classes) total += c.size;
        CHECK(total == static_cast<int>(enumerate_structures(q).size()));
    }
}

TEST_CASE("the listed order-3 representatives are recovered up to class equivalence") {
    const auto& bs = order3_biquandles();
    auto covered = [&](const Quandle& q, const char* prefix) {
        auto classes = classify_structures(q);
        // Every named structure's induced biquandle is isomorphic to exactly
        // one class representative, and distinct names hit distinct classes.
        std::set<int> hit;
        for (const auto& nb : bs) {
            if (nb.name.rfind(prefix, 0) != 0) continue;
            int found = -1;
            for (size_t i = 0; i < classes.size(); ++i) {
                Biquandle rep = induce_biquandle(classes[i].representative);
                if (biquandle_isomorphism(nb.biquandle, rep)) {
                    found = static_cast<int>(i);
                    break;
                }
            }
            REQUIRE_MESSAGE(found >= 0, nb.name, " not covered");
            CHECK_MESSAGE(!hit.count(found), nb.name, " duplicates a class");
            hit.insert(found);
        }
        CHECK(hit.size() == classes.size());
    };
    covered(order3_a(), "A");
    covered(order3_b(), "B");
    covered(order3_c(), "C");
}

TEST_CASE("constant structure classes equal conjugacy classes of Aut") {
    for (const Quandle& q : {t2(), order3_a(), order3_b(), order3_c(), y4()})
        CHECK(count_constant_structures(q) == conjugacy_class_count(automorphism_group(q)));
    CHECK(count_constant_structures(order3_a()) == 3);
    CHECK(count_constant_structures(order3_b()) == 2);
    CHECK(count_constant_structures(order3_c()) == 3);
}

TEST_CASE("induce and extract are mutually inverse") {
    for (const Quandle& q : {t2(), order3_a(), order3_b(), order3_c(), y4()})
        for (const auto& s : enumerate_structures(q)) {
            Biquandle b = induce_biquandle(s);
            CHECK(validate_biquandle(b.under, b.over).holds);
            Structure back = extract_structure(b);
            CHECK(back.base.table.cell == s.base.table.cell);
            bool same = true;
            for (int i = 0; i < q.size(); ++i)
                if (back.betas[i].img != s.betas[i].img) same = false;
            CHECK(same);
            // The associated quandle of the induced biquandle is the base.
            CHECK(associated_quandle(b).table.cell == q.table.cell);
        }
}

TEST_CASE("every biquandle arises from the structure of its associated quandle") {
    // Round trip starting from the biquandle side.
    for (const auto& nb : order3_biquandles()) {
        Structure s = extract_structure(nb.biquandle);
        Biquandle again = induce_biquandle(s);
        CHECK(again.under.cell == nb.biquandle.under.cell);
        CHECK(again.over.cell == nb.biquandle.over.cell);
    }
}

TEST_CASE("connectedness of induced biquandles follows the base quandle") {
    // A biquandle induced on a connected base is connected.
    for (const auto& s : enumerate_structures(order3_c())) {
        Biquandle b = induce_biquandle(s);
        CHECK(biquandle_components(b).size() == 1);
    }
    CHECK(is_connected_quandle(order3_c()));
}

TEST_CASE("constant structures induce medial biquandles") {
    // Constant structures (beta_y independent of y) always induce medial
    // biquandles when the base is medial.
    for (const Quandle& q : {order3_a(), order3_b(), order3_c(), y4()}) {
        REQUIRE(is_medial_quandle(q));
        for (const auto& s : enumerate_structures(q)) {
            bool constant = true;
            for (int y = 1; y < q.size(); ++y)
                if (s.betas[y].img != s.betas[0].img) constant = false;
            if (constant) CHECK(is_medial_biquandle(induce_biquandle(s)));
        }
    }
}

TEST_CASE("no structure on these bases has beta maps outside Aut") {
    // Sanity: all enumerated betas are automorphisms of the base.
    for (const Quandle& q : {order3_b(), y4()}) {
        auto aut = automorphism_group(q);
        std::set<std::vector<int>> auts;
        for (const auto& p : aut) auts.insert(p.img);
        for (const auto& s : enumerate_structures(q))
            for (const auto& b : s.betas) CHECK(auts.count(b.img));
    }
}

TEST_CASE("structure file round trip") {
    for (const auto& nb : order3_biquandles()) {
        std::string text = structure_to_text(nb.structure);
        std::istringstream in(text);
        Structure back = read_structure(in);
        CHECK(back.base.table.cell == nb.structure.base.table.cell);
        for (int i = 0; i < 3; ++i) CHECK(back.betas[i].img == nb.structure.betas[i].img);
        CHECK(structure_to_text(back) == text);
    }
    std::istringstream bad("3\n1 1 1\n2 2 2\n3 3 3\n\nid\n(1 2)\n");
    CHECK_THROWS_AS(read_structure(bad), format_error); // missing a beta line
}
