#include "bq/gauss.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace bq {

std::string GaussCode::to_string() const {
    std::ostringstream out;
    for (const auto& t : tokens)
        out << (t.over ? 'O' : 'U') << t.label << (t.sign > 0 ? '+' : '-');
    return out.str();
}

GaussCode parse_gauss_code(const std::string& text) {
    GaussCode g;
    size_t i = 0;
    int token_index = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (c != 'O' && c != 'U')
            throw format_error("gauss code: token " + std::to_string(token_index + 1) +
                               ": expected 'O' or 'U', got '" + std::string(1, text[i]) + "'");
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw format_error("gauss code: token " + std::to_string(token_index + 1) + ": missing crossing label");
        int label = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            label = label * 10 + (text[i++] - '0');
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw format_error("gauss code: token " + std::to_string(token_index + 1) + ": missing sign");
        int sign = text[i] == '+' ? +1 : -1;
        ++i;
        g.tokens.push_back(Passage{c == 'O', label, sign});
        ++token_index;
    }
    // validation
    std::map<int, std::vector<int>> by_label;
    for (size_t t = 0; t < g.tokens.size(); ++t) by_label[g.tokens[t].label].push_back(static_cast<int>(t));
    for (const auto& [label, occ] : by_label) {
        if (occ.size() == 1)
            throw format_error("gauss code: token " + std::to_string(occ[0] + 1) + ": crossing " +
                               std::to_string(label) + " occurs only once");
        if (occ.size() > 2)
            throw format_error("gauss code: token " + std::to_string(occ[2] + 1) + ": crossing " +
                               std::to_string(label) + " occurs more than twice");
        const Passage& a = g.tokens[occ[0]];
        const Passage& b = g.tokens[occ[1]];
        if (a.over == b.over)
            throw format_error("gauss code: token " + std::to_string(occ[1] + 1) + ": crossing " +
                               std::to_string(label) + " passes " + (a.over ? "over" : "under") + " twice");
        if (a.sign != b.sign)
            throw format_error("gauss code: token " + std::to_string(occ[1] + 1) + ": crossing " +
                               std::to_string(label) + " has mismatched signs");
    }
    return g;
}

Diagram build_diagram(const GaussCode& g) {
    Diagram d;
    d.code = g;
    int m = static_cast<int>(g.tokens.size());
    if (m == 0) {
        d.semiarc_count = 1;
        d.arc_of_semiarc = {0};
        d.arc_count = 1;
        return d;
    }
    d.semiarc_count = m;
    std::map<int, std::pair<int, int>> pos; // label -> (under token idx, over token idx)
    for (int t = 0; t < m; ++t) {
        const auto& tok = g.tokens[t];
        auto& p = pos[tok.label];
        (tok.over ? p.second : p.first) = t;
    }
    // semiarc t is the interval after token t; the incoming semiarc of token
    // t is (t-1) mod m.
    for (auto& [label, p] : pos) {
        Crossing c;
        c.sign = g.tokens[p.first].sign;
        c.under_in = (p.first - 1 + m) % m;
        c.under_out = p.first;
        c.over_in = (p.second - 1 + m) % m;
        c.over_out = p.second;
        d.crossings.push_back(c);
    }
    // arcs: merge semiarcs across over-passages
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int t = 0; t < m; ++t)
        if (g.tokens[t].over) parent[find((t - 1 + m) % m)] = find(t);
    std::vector<int> index(m, -1);
    d.arc_of_semiarc.resize(m);
    for (int t = 0; t < m; ++t) {
        int r = find(t);
        if (index[r] < 0) index[r] = d.arc_count++;
        d.arc_of_semiarc[t] = index[r];
    }
    return d;
}

int virtual_genus(const GaussCode& g) {
    int m = static_cast<int>(g.tokens.size());
    if (m == 0) return 0;
    // Ribbon graph: darts are (token index, end) where end 0 = incoming
    // side, end 1 = outgoing side of that passage's strand at the crossing.
    // Dart id: 2*t + end. The opposite of the outgoing dart of token t is
    // the incoming dart of token t+1 (the semiarc connects them).
    std::vector<int> opp(2 * m);
    for (int t = 0; t < m; ++t) {
        opp[2 * t + 1] = 2 * ((t + 1) % m);
        opp[2 * ((t + 1) % m)] = 2 * t + 1;
    }
    // Rotation at each crossing: counterclockwise order of the four darts.
    // Positive crossing: (under-in, over-in, under-out, over-out); negative:
    // (under-in, over-out, under-out, over-in).
    std::map<int, std::pair<int, int>> pos; // label -> (under tok, over tok)
    for (int t = 0; t < m; ++t) {
        auto& p = pos[g.tokens[t].label];
        (g.tokens[t].over ? p.second : p.first) = t;
    }
    std::vector<int> next(2 * m);
    for (auto& [label, p] : pos) {
        int ui = 2 * p.first, uo = 2 * p.first + 1;
        int oi = 2 * p.second, oo = 2 * p.second + 1;
        std::vector<int> rot = g.tokens[p.first].sign > 0
                                   ? std::vector<int>{ui, oi, uo, oo}
                                   : std::vector<int>{ui, oo, uo, oi};
        for (int k = 0; k < 4; ++k) next[rot[k]] = rot[(k + 1) % 4];
    }
    // Faces: orbits of dart -> next[opp[dart]].
    std::vector<char> seen(2 * m, 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            d = next[opp[d]];
        }
    }
    // Euler characteristic: V = m/2 crossings, E = m semiarcs, F = faces.
    int euler = m / 2 - m + faces;
    return (2 - euler) / 2;
}

} // namespace bq
