#include "bq/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "bq/errors.hpp"

namespace bq {

int Identity::var(int v) {
    nodes.push_back(Term{Term::Var, v, -1, -1});
    if (v + 1 > var_count) var_count = v + 1;
    return static_cast<int>(nodes.size()) - 1;
}

int Identity::under_node(int l, int r) {
    nodes.push_back(Term{Term::Under, 0, l, r});
    return static_cast<int>(nodes.size()) - 1;
}

int Identity::over_node(int l, int r) {
    nodes.push_back(Term{Term::Over, 0, l, r});
    return static_cast<int>(nodes.size()) - 1;
}

int Identity::eval(int node, const Biquandle& x, const std::vector<int>& assign) const {
    const Term& t = nodes[node];
    switch (t.kind) {
        case Term::Var: return assign[t.var];
        case Term::Under: return x.u(eval(t.left, x, assign), eval(t.right, x, assign));
        case Term::Over: return x.o(eval(t.left, x, assign), eval(t.right, x, assign));
    }
    return 0;
}

std::vector<Identity> two_reductivity_identities() {
    // a op (b op' c) = a op b for the four op/op' combinations.
    std::vector<Identity> ids;
    for (int outer = 0; outer < 2; ++outer)
        for (int inner = 0; inner < 2; ++inner) {
            Identity id;
            int a = id.var(0), b = id.var(1), c = id.var(2);
            int in = inner ? id.over_node(b, c) : id.under_node(b, c);
            id.lhs = outer ? id.over_node(a, in) : id.under_node(a, in);
            int b2 = id.var(1);
            int a2 = id.var(0);
            id.rhs = outer ? id.over_node(a2, b2) : id.under_node(a2, b2);
            ids.push_back(std::move(id));
        }
    return ids;
}

std::vector<std::pair<int, int>> instantiate_identities(const Biquandle& x,
                                                        const std::vector<Identity>& ids) {
    std::vector<std::pair<int, int>> pairs;
    int n = x.size();
    for (const auto& id : ids) {
        std::vector<int> assign(id.var_count, 0);
        std::function<void(int)> rec = [&](int v) {
            if (v == id.var_count) {
                pairs.emplace_back(id.eval(id.lhs, x, assign), id.eval(id.rhs, x, assign));
                return;
            }
            for (int a = 0; a < n; ++a) {
                assign[v] = a;
                rec(v + 1);
            }
        };
        rec(0);
    }
    return pairs;
}

Congruence::Congruence(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

int Congruence::find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

int Congruence::find(int a) const {
    while (parent[a] != a) a = parent[a];
    return a;
}

bool Congruence::merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a; // keep least element as the root
    return true;
}

int Congruence::class_count() const {
    int c = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
}

std::vector<std::vector<int>> Congruence::classes() const {
    std::vector<std::vector<int>> out;
    std::vector<int> index(parent.size(), -1);
    for (size_t i = 0; i < parent.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (index[r] < 0) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[r]].push_back(static_cast<int>(i));
    }
    return out;
}

bool is_congruence(const Biquandle& x, const Congruence& c) {
    int n = x.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (c.find(a) != c.find(b)) continue;
            for (int z = 0; z < n; ++z) {
                if (c.find(x.u(a, z)) != c.find(x.u(b, z))) return false;
                if (c.find(x.o(a, z)) != c.find(x.o(b, z))) return false;
                if (c.find(x.u(z, a)) != c.find(x.u(z, b))) return false;
                if (c.find(x.o(z, a)) != c.find(x.o(z, b))) return false;
            }
        }
    return true;
}

Congruence congruence_closure(const Biquandle& x,
                              const std::vector<std::pair<int, int>>& pairs) {
    int n = x.size();
    Congruence c(n);
    for (auto [a, b] : pairs) c.merge(a, b);
    // Worklist saturation: whenever two classes are merged, re-derive
    // consequences until nothing changes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (c.find(a) != c.find(b)) continue;
                for (int z = 0; z < n; ++z) {
                    changed |= c.merge(x.u(a, z), x.u(b, z));
                    changed |= c.merge(x.o(a, z), x.o(b, z));
                    changed |= c.merge(x.u(z, a), x.u(z, b));
                    changed |= c.merge(x.o(z, a), x.o(z, b));
                }
            }
    }
    assert(is_congruence(x, c));
    return c;
}

Quotient quotient_biquandle(const Biquandle& x, const Congruence& c) {
    if (!is_congruence(x, c)) throw domain_error("quotient_biquandle: partition is not a congruence");
    auto cls = c.classes();
    int m = static_cast<int>(cls.size());
    std::vector<int> proj(x.size());
    for (int i = 0; i < m; ++i)
        for (int e : cls[i]) proj[e] = i;
    OpTable u(m), o(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            u.at(i, j) = proj[x.u(cls[i][0], cls[j][0])];
            o.at(i, j) = proj[x.o(cls[i][0], cls[j][0])];
            // well-definedness check across all representatives
            for (int a : cls[i])
                for (int b : cls[j]) {
                    if (proj[x.u(a, b)] != u.at(i, j) || proj[x.o(a, b)] != o.at(i, j))
                        throw domain_error("quotient_biquandle: operations not well-defined on classes");
                }
        }
    Quotient q;
    q.biquandle = make_biquandle(std::move(u), std::move(o));
    q.projection = std::move(proj);
    return q;
}

Quotient two_reductive_quotient(const Biquandle& x) {
    auto pairs = instantiate_identities(x, two_reductivity_identities());
    auto gamma = congruence_closure(x, pairs);
    Quotient q = quotient_biquandle(x, gamma);
    if (!is_two_reductive(q.biquandle))
        throw domain_error("two_reductive_quotient: quotient is not 2-reductive");
    return q;
}

} // namespace bq
