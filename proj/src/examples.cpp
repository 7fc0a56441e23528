#include "bq/examples.hpp"

namespace bq::examples {

namespace {

Quandle from_rows(int n, std::vector<int> rows_1based) {
    OpTable t(n);
    for (int i = 0; i < n * n; ++i) t.cell[i] = rows_1based[i] - 1;
    return make_quandle(std::move(t));
}

} // namespace

Quandle t2() { return from_rows(2, {1, 1, 2, 2}); }

Quandle order3_a() { return trivial_quandle(3); }

Quandle order3_b() { return from_rows(3, {1, 1, 1, 3, 2, 2, 2, 3, 3}); }

Quandle order3_c() { return from_rows(3, {1, 3, 2, 3, 2, 1, 2, 1, 3}); }

Quandle y4() { return from_rows(4, {1, 3, 4, 2, 4, 2, 1, 3, 2, 4, 3, 1, 3, 1, 2, 4}); }

const std::vector<NamedBiquandle>& order3_biquandles() {
    static const std::vector<NamedBiquandle> all = [] {
        struct Spec {
            const char* name;
            Quandle (*base)();
            const char* b1;
            const char* b2;
            const char* b3;
        };
        const Spec specs[] = {
            {"A1", order3_a, "id", "id", "id"},
            {"A2", order3_a, "id", "id", "(1 2)"},
            {"A3", order3_a, "id", "(2 3)", "(2 3)"},
            {"A4", order3_a, "(2 3)", "(2 3)", "(2 3)"},
            {"A5", order3_a, "(1 2 3)", "(1 2 3)", "(1 2 3)"},
            {"B1", order3_b, "id", "id", "id"},
            {"B2", order3_b, "id", "(2 3)", "(2 3)"},
            {"B3", order3_b, "(2 3)", "id", "id"},
            {"B4", order3_b, "(2 3)", "(2 3)", "(2 3)"},
            {"C1", order3_c, "id", "id", "id"},
            {"C2", order3_c, "id", "(1 2 3)", "(1 3 2)"},
            {"C3", order3_c, "(2 3)", "(2 3)", "(2 3)"},
            {"C4", order3_c, "(2 3)", "(1 3)", "(1 2)"},
            {"C5", order3_c, "(1 2)", "(2 3)", "(1 3)"},
            {"C6", order3_c, "(1 2 3)", "(1 2 3)", "(1 2 3)"},
        };
        std::vector<NamedBiquandle> out;
        for (const auto& sp : specs) {
            NamedBiquandle nb;
            nb.name = sp.name;
            nb.structure.base = sp.base();
            nb.structure.betas = {Perm::from_cycles(sp.b1, 3), Perm::from_cycles(sp.b2, 3),
                                  Perm::from_cycles(sp.b3, 3)};
            nb.biquandle = induce_biquandle(nb.structure);
            out.push_back(std::move(nb));
        }
        return out;
    }();
    return all;
}

} // namespace bq::examples
