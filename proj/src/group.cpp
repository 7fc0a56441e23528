#include "bq/group.hpp"

#include "bq/errors.hpp"

namespace bq {

bool Group::is_abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

PropertyReport validate_group(const OpTable& t) {
    if (!t.in_range()) throw format_error("group table has out-of-range entries");
    int n = t.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
                    return PropertyReport::fail("group", {a + 1, b + 1, c + 1}, "associativity");
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (t.at(cand, a) != a || t.at(a, cand) != a) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    if (e < 0) return PropertyReport::fail("group", {}, "no identity element");
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n; ++b)
            if (t.at(a, b) == e && t.at(b, a) == e) { has_inv = true; break; }
        if (!has_inv) return PropertyReport::fail("group", {a + 1}, "no inverse");
    }
    return PropertyReport::ok("group");
}

Group make_group(OpTable t) {
    auto r = validate_group(t);
    if (!r.holds) throw domain_error("not a group: " + r.to_string());
    Group g;
    g.cayley = std::move(t);
    int n = g.cayley.n;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (g.cayley.at(cand, a) != a) { ok = false; break; }
        if (ok) { g.identity = cand; break; }
    }
    g.inverse.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.cayley.at(a, b) == g.identity) { g.inverse[a] = b; break; }
    return g;
}

Group cyclic_group(int n) {
    OpTable t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
    return make_group(std::move(t));
}

bool is_group_automorphism(const Group& g, const Perm& p) {
    if (p.size() != g.size() || !p.is_valid()) return false;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (p(g.op(a, b)) != g.op(p(a), p(b))) return false;
    return true;
}

Quandle core_quandle(const Group& g) {
    int n = g.size();
    OpTable t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.at(x, y) = g.op(g.op(y, g.inv(x)), y);
    return make_quandle(std::move(t));
}

Quandle affine_quandle(const Group& g, const Perm& phi) {
    if (!g.is_abelian()) throw domain_error("affine quandle requires an abelian group");
    if (!is_group_automorphism(g, phi)) throw domain_error("affine quandle: phi is not a group automorphism");
    int n = g.size();
    OpTable t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.at(x, y) = g.op(phi(x), g.op(y, g.inv(phi(y))));
    return make_quandle(std::move(t));
}

Biquandle wada_biquandle(const Group& g) {
    int n = g.size();
    OpTable u(n), o(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            u.at(x, y) = g.op(g.op(g.inv(y), g.inv(x)), y);
            o.at(x, y) = g.op(g.inv(g.op(y, y)), x);
        }
    return make_biquandle(std::move(u), std::move(o));
}

Biquandle affine_biquandle(const Group& g, const Perm& phi, const Perm& psi) {
    if (!g.is_abelian()) throw domain_error("affine biquandle requires an abelian group");
    if (!is_group_automorphism(g, phi) || !is_group_automorphism(g, psi))
        throw domain_error("affine biquandle: phi and psi must be group automorphisms");
    int n = g.size();
    OpTable u(n), o(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // psi(phi(x)) + psi(y) - psi(phi(y))
            u.at(x, y) = g.op(psi(phi(x)), g.op(psi(y), g.inv(psi(phi(y)))));
            o.at(x, y) = psi(x);
        }
    return make_biquandle(std::move(u), std::move(o));
}

Biquandle product_biquandle(const Quandle& q, const Quandle& k) {
    int nq = q.size(), nk = k.size();
    int n = nq * nk;
    auto idx = [&](int x, int a) { return x * nk + a; };
    OpTable u(n), o(n);
    for (int x = 0; x < nq; ++x)
        for (int a = 0; a < nk; ++a)
            for (int z = 0; z < nq; ++z)
                for (int b = 0; b < nk; ++b) {
                    u.at(idx(x, a), idx(z, b)) = idx(q.op(x, z), a);
                    o.at(idx(x, a), idx(z, b)) = idx(x, k.op_inv(a, b));
                }
    return make_biquandle(std::move(u), std::move(o));
}

} // namespace bq
