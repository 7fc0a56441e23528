#include "bq/coloring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bq/errors.hpp"
#include "bq/parallel.hpp"

namespace bq {

ColoringCount quandle_colorings(const Diagram& d, const Quandle& y, bool list) {
    ColoringCount res;
    int n = y.size();
    int arcs = d.arc_count;
    if (d.crossings.empty()) {
        res.value = n;
        if (list)
            for (int c = 0; c < n; ++c) res.colorings.push_back({c});
        return res;
    }
    // Constraint per crossing: under-out arc color determined by under-in
    // and over arc colors. Group constraints by the largest arc index they
    // mention and check as soon as that arc is assigned.
    struct Con {
        int sign, a_in, a_out, a_over;
    };
    std::vector<std::vector<Con>> by_arc(arcs);
    for (const auto& c : d.crossings) {
        Con con{c.sign, d.arc_of_semiarc[c.under_in], d.arc_of_semiarc[c.under_out],
                d.arc_of_semiarc[c.over_in]};
        int hi = std::max({con.a_in, con.a_out, con.a_over});
        by_arc[hi].push_back(con);
    }
    std::vector<int> col(arcs, -1);
    std::function<void(int)> rec = [&](int a) {
        if (a == arcs) {
            ++res.value;
            if (list) res.colorings.push_back(col);
            return;
        }
        for (int v = 0; v < n; ++v) {
            col[a] = v;
            bool ok = true;
            for (const auto& con : by_arc[a]) {
                int in = col[con.a_in], out = col[con.a_out], over = col[con.a_over];
                int want = con.sign > 0 ? y.op(in, over) : y.op_inv(in, over);
                if (out != want) { ok = false; break; }
            }
            if (ok) rec(a + 1);
        }
        col[a] = -1;
    };
    rec(0);
    return res;
}

ColoringCount biquandle_colorings(const Diagram& d, const Biquandle& z, bool list) {
    ColoringCount res;
    int n = z.size();
    if (d.crossings.empty()) {
        res.value = n;
        if (list)
            for (int c = 0; c < n; ++c) res.colorings.push_back({c});
        return res;
    }
    int m = d.semiarc_count;
    // Two relations per crossing. At a positive crossing, reading the over
    // strand against its orientation (w = over-out color):
    //   under-out = under-in UNDER over-out, over-in = over-out OVER under-in.
    // At a negative crossing the in/out roles swap on both strands.
    struct Con {
        int sign, ui, uo, oi, oo;
    };
    std::vector<std::vector<Con>> by_semiarc(m);
    for (const auto& c : d.crossings) {
        Con con{c.sign, c.under_in, c.under_out, c.over_in, c.over_out};
        int hi = std::max({con.ui, con.uo, con.oi, con.oo});
        by_semiarc[hi].push_back(con);
    }
    std::vector<int> col(m, -1);
    std::function<void(int)> rec = [&](int s) {
        if (s == m) {
            ++res.value;
            if (list) res.colorings.push_back(col);
            return;
        }
        for (int v = 0; v < n; ++v) {
            col[s] = v;
            bool ok = true;
            for (const auto& con : by_semiarc[s]) {
                int ui = col[con.ui], uo = col[con.uo];
                int oi = col[con.oi], oo = col[con.oo];
                if (con.sign < 0) {
                    std::swap(ui, uo);
                    std::swap(oi, oo);
                }
                if (uo != z.u(ui, oo) || oi != z.o(oo, ui)) { ok = false; break; }
            }
            if (ok) rec(s + 1);
        }
        col[s] = -1;
    };
    rec(0);
    return res;
}

StructureInvariant structure_coloring_invariant(const Diagram& d, const Quandle& y) {
    StructureInvariant inv;
    inv.classes = classify_structures(y);
    int k = static_cast<int>(inv.classes.size());
    inv.counts.assign(k, 0);
    parallel_for(k, [&](int i) {
        Biquandle b = induce_biquandle(inv.classes[i].representative);
        inv.counts[i] = biquandle_colorings(d, b).value;
    });
    inv.multiset = inv.counts;
    std::sort(inv.multiset.begin(), inv.multiset.end());
    return inv;
}

const std::map<std::string, std::string>& fixture_codes() {
    // Classical codes are braid-closure traversals of the knots named by
    // their standard table symbols; virtual codes are representatives picked
    // by exhaustive search over all 3-crossing signed Gauss codes, keyed by
    // their coloring invariants (see data/fixtures.gauss for provenance
    // notes, including the caveat on v3_6).
    static const std::map<std::string, std::string> codes = {
        {"unknot", ""},
        {"3_1", "O1+U2+O3+U1+O2+U3+"},
        {"4_1", "O1+U2-O4-U1+O3+U4-O2-U3+"},
        {"5_1", "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+"},
        {"5_2", "O1+U2+O3+O4+U6+U1+O2+U3+U5-O6+U4+O5-"},
        {"6_1", "O1+U2+U4-O6+U7-O5-U6+U1+O2+O3+U5-O7-U3+O4-"},
        {"6_2", "O1+U2+O3+U4-O6-U1+O2+U3+O5+U6-O4-U5+"},
        {"6_3", "O1+U2+O4+U5-O6-U1+O2+U3-O5-U6-O3-U4+"},
        {"v3_1", "O1+O2+U1+O3-U2+U3-"},
        {"v3_2", "O1+U1+O2+O3+U2+U3+"},
        {"v3_3", "O1+O2+U1+U3+U2+O3+"},
        {"v3_4", "O1-U1-O2+O3+U2+U3+"},
        {"v3_5", "O1+O2+O3+U1+U2+U3+"},
        {"v3_6", "O1+U3+O2+U1+O3+U2+"},
        {"v3_7", "O1-O2-O3-U1-U2-U3-"},
    };
    return codes;
}

GaussCode fixture(const std::string& name) {
    const auto& codes = fixture_codes();
    auto it = codes.find(name);
    if (it == codes.end()) {
        std::string names;
        for (const auto& [k, v] : codes) {
            if (!names.empty()) names += ", ";
            names += k;
        }
        throw domain_error("unknown fixture \"" + name + "\"; available: " + names);
    }
    return parse_gauss_code(it->second);
}

std::map<std::string, std::string> parse_fixture_file(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw format_error("fixture file line " + std::to_string(lineno) + ": expected \"name: code\"");
        std::string name = line.substr(b, colon - b);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        std::string code = line.substr(colon + 1);
        size_t cb = code.find_first_not_of(" \t\r");
        code = cb == std::string::npos ? "" : code.substr(cb);
        while (!code.empty() && (code.back() == ' ' || code.back() == '\t' || code.back() == '\r'))
            code.pop_back();
        parse_gauss_code(code); // validate
        out[name] = code;
    }
    return out;
}

GaussCode insert_kink(const GaussCode& g, int pos, int sign, bool over_first) {
    GaussCode out;
    int fresh = 0;
    for (const auto& t : g.tokens) fresh = std::max(fresh, t.label);
    ++fresh;
    int m = static_cast<int>(g.tokens.size());
    if (pos < 0 || pos > m) throw domain_error("insert_kink: position out of range");
    out.tokens = g.tokens;
    out.tokens.insert(out.tokens.begin() + pos,
                      {Passage{over_first, fresh, sign}, Passage{!over_first, fresh, sign}});
    // rebuild via the parser to re-run validation
    return parse_gauss_code(out.to_string());
}

} // namespace bq
