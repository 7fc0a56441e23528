#include "bq/structure.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "bq/errors.hpp"
#include "bq/iso.hpp"

namespace bq {

namespace {

bool is_quandle_automorphism(const Quandle& q, const Perm& p) {
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (p(q.op(x, y)) != q.op(p(x), p(y))) return false;
    return true;
}

} // namespace

PropertyReport validate_structure(const Quandle& q, const std::vector<Perm>& betas) {
    int n = q.size();
    if (static_cast<int>(betas.size()) != n)
        throw format_error("structure: expected " + std::to_string(n) + " permutations, got " + std::to_string(betas.size()));
    for (int y = 0; y < n; ++y) {
        if (betas[y].size() != n || !betas[y].is_valid())
            throw format_error("structure: beta_" + std::to_string(y + 1) + " is not a permutation of the carrier");
        if (!is_quandle_automorphism(q, betas[y]))
            return PropertyReport::fail("structure", {y + 1}, "beta_y is not a quandle automorphism");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // condition (1): beta_{beta_y(x*y)} beta_y = beta_{beta_x(y)} beta_x
            const Perm& lhs_outer = betas[betas[y](q.op(x, y))];
            const Perm& rhs_outer = betas[betas[x](y)];
            if (!(betas[y].then(lhs_outer) == betas[x].then(rhs_outer)))
                return PropertyReport::fail("structure", {x + 1, y + 1},
                                            "condition (1): beta_{beta_y(x*y)} beta_y != beta_{beta_x(y)} beta_x");
        }
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
        int v = betas[y](y);
        if (seen[v])
            return PropertyReport::fail("structure", {y + 1}, "condition (2): y -> beta_y(y) is not a bijection");
        seen[v] = 1;
    }
    return PropertyReport::ok("structure");
}

Biquandle induce_biquandle(const Structure& s) {
    int n = s.base.size();
    OpTable u(n), o(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            u.at(x, y) = s.betas[y](s.base.op(x, y));
            o.at(x, y) = s.betas[y](x);
        }
    Biquandle b = make_biquandle(std::move(u), std::move(o));
    assert(associated_quandle(b).table == s.base.table);
    return b;
}

Structure extract_structure(const Biquandle& b) {
    Structure s;
    s.base = associated_quandle(b);
    for (int y = 0; y < b.size(); ++y) s.betas.push_back(b.beta(y));
    auto r = validate_structure(s.base, s.betas);
    assert(r.holds);
    (void)r;
    return s;
}

std::vector<Structure> enumerate_structures(const Quandle& q) {
    int n = q.size();
    std::vector<Perm> aut = automorphism_group(q);
    std::vector<Structure> out;
    std::vector<int> pick(n, 0);
    std::vector<Perm> betas(n, Perm::identity(n));
    // Iterate Aut(q)^n in lexicographic order of the chosen permutation
    // tuples (aut is sorted), pruning by partial condition-(2) checks.
    std::function<void(int)> rec = [&](int y) {
        if (y == n) {
            Structure s{q, betas};
            if (validate_structure(q, betas).holds) out.push_back(std::move(s));
            return;
        }
        for (size_t k = 0; k < aut.size(); ++k) {
            betas[y] = aut[k];
            bool ok = true;
            int dy = betas[y](y);
            for (int z = 0; z < y && ok; ++z)
                if (betas[z](z) == dy) ok = false;
            if (ok) rec(y + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<StructureClass> classify_structures(const Quandle& q) {
    auto all = enumerate_structures(q);
    std::vector<Biquandle> induced;
    induced.reserve(all.size());
    for (const auto& s : all) induced.push_back(induce_biquandle(s));

    std::vector<StructureClass> classes;
    std::vector<int> class_of(all.size(), -1);
    for (size_t i = 0; i < all.size(); ++i) {
        if (class_of[i] >= 0) continue;
        int id = static_cast<int>(classes.size());
        class_of[i] = id;
        StructureClass c;
        c.representative = all[i]; // enumeration order is lexicographic
        c.size = 1;
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (class_of[j] >= 0) continue;
            if (biquandle_isomorphism(induced[i], induced[j])) {
                class_of[j] = id;
                ++c.size;
            }
        }
        classes.push_back(std::move(c));
    }
    return classes;
}

int count_constant_structures(const Quandle& q) {
    // Count isomorphism classes among the constant structures only.
    auto all = enumerate_structures(q);
    std::vector<Biquandle> constant;
    for (const auto& s : all) {
        bool is_const = true;
        for (int y = 1; y < q.size() && is_const; ++y)
            if (!(s.betas[y] == s.betas[0])) is_const = false;
        if (is_const) constant.push_back(induce_biquandle(s));
    }
    std::vector<char> taken(constant.size(), 0);
    int count = 0;
    for (size_t i = 0; i < constant.size(); ++i) {
        if (taken[i]) continue;
        ++count;
        for (size_t j = i + 1; j < constant.size(); ++j)
            if (!taken[j] && biquandle_isomorphism(constant[i], constant[j])) taken[j] = 1;
    }
    return count;
}

Structure read_structure(std::istream& in) {
    OpTable t = OpTable::from_stream(in);
    Quandle q = make_quandle(std::move(t));
    std::string line;
    std::getline(in, line); // consume rest of the last table line
    std::vector<Perm> betas;
    while (static_cast<int>(betas.size()) < q.size() && std::getline(in, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        betas.push_back(Perm::from_cycles(line, q.size()));
    }
    if (static_cast<int>(betas.size()) != q.size())
        throw format_error("structure file: expected " + std::to_string(q.size()) + " permutation lines");
    return Structure{std::move(q), std::move(betas)};
}

std::string structure_to_text(const Structure& s) {
    std::ostringstream out;
    out << s.base.table.to_text() << '\n';
    for (const auto& b : s.betas) out << b.to_cycles() << '\n';
    return out.str();
}

} // namespace bq
