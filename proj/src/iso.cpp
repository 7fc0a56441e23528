#include "bq/iso.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "bq/errors.hpp"

namespace bq {

namespace {

// Per-element invariant profile used to prune the bijection search.
std::vector<std::vector<int>> quandle_profiles(const Quandle& q) {
    int n = q.size();
    std::vector<std::vector<int>> prof(n);
    for (int y = 0; y < n; ++y) {
        Perm r = q.right_translation(y);
        std::vector<int> cycle_census(n + 1, 0);
        std::vector<char> done(n, 0);
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            int len = 0, j = i;
            while (!done[j]) { done[j] = 1; j = r(j); ++len; }
            ++cycle_census[len];
        }
        prof[y] = cycle_census;
        prof[y].push_back(q.op(y, y) == y ? 1 : 0);
        int fixed = 0;
        for (int x = 0; x < n; ++x)
            if (q.op(x, y) == x) ++fixed;
        prof[y].push_back(fixed);
    }
    return prof;
}

std::vector<std::vector<int>> biquandle_profiles(const Biquandle& b) {
    int n = b.size();
    std::vector<std::vector<int>> prof(n);
    for (int y = 0; y < n; ++y) {
        std::vector<int> p;
        for (const Perm& perm : {b.alpha(y), b.beta(y)}) {
            std::vector<int> census(n + 1, 0);
            std::vector<char> done(n, 0);
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                int len = 0, j = i;
                while (!done[j]) { done[j] = 1; j = perm(j); ++len; }
                ++census[len];
            }
            p.insert(p.end(), census.begin(), census.end());
        }
        p.push_back(b.u(y, y) == y ? 1 : 0);
        int fixed_u = 0, fixed_o = 0;
        for (int x = 0; x < n; ++x) {
            if (b.u(x, y) == x) ++fixed_u;
            if (b.o(x, y) == x) ++fixed_o;
        }
        p.push_back(fixed_u);
        p.push_back(fixed_o);
        prof[y] = std::move(p);
    }
    return prof;
}

// Generic backtracking search for the lexicographically least bijection phi
// with phi(x op y) = phi(x) op' phi(y) for each listed operation pair.
std::optional<Perm> find_iso(int n,
                             const std::vector<const OpTable*>& src_ops,
                             const std::vector<const OpTable*>& dst_ops,
                             const std::vector<std::vector<int>>& src_prof,
                             const std::vector<std::vector<int>>& dst_prof) {
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int x) -> bool {
        if (x == n) return true;
        for (int img = 0; img < n; ++img) {
            if (used[img] || src_prof[x] != dst_prof[img]) continue;
            phi[x] = img;
            used[img] = 1;
            bool ok = true;
            for (size_t k = 0; k < src_ops.size() && ok; ++k) {
                const OpTable& s = *src_ops[k];
                const OpTable& d = *dst_ops[k];
                for (int a = 0; a <= x && ok; ++a)
                    for (int b = 0; b <= x && ok; ++b) {
                        int v = s.at(a, b);
                        if (phi[v] >= 0 && d.at(phi[a], phi[b]) != phi[v]) ok = false;
                    }
            }
            if (ok && rec(x + 1)) return true;
            phi[x] = -1;
            used[img] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return Perm(phi);
}

} // namespace

std::optional<Perm> quandle_isomorphism(const Quandle& a, const Quandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    auto pa = quandle_profiles(a), pb = quandle_profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    return find_iso(a.size(), {&a.table}, {&b.table}, pa, pb);
}

std::optional<Perm> biquandle_isomorphism(const Biquandle& a, const Biquandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    auto pa = biquandle_profiles(a), pb = biquandle_profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    return find_iso(a.size(), {&a.under, &a.over}, {&b.under, &b.over}, pa, pb);
}

std::vector<Perm> automorphism_group(const Quandle& q) {
    int n = q.size();
    std::vector<Perm> autos;
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            autos.emplace_back(phi);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img]) continue;
            phi[x] = img;
            used[img] = 1;
            bool ok = true;
            for (int a = 0; a <= x && ok; ++a)
                for (int b = 0; b <= x && ok; ++b) {
                    int v = q.op(a, b);
                    if (v <= x && q.op(phi[a], phi[b]) != phi[v]) ok = false;
                }
            if (ok) rec(x + 1);
            phi[x] = -1;
            used[img] = 0;
        }
    };
    rec(0);
    std::sort(autos.begin(), autos.end());
    // Closure sanity checks.
    std::set<Perm> s(autos.begin(), autos.end());
    assert(s.count(Perm::identity(n)));
    for (const auto& p : autos) assert(s.count(p.inverse()));
    return autos;
}

int conjugacy_class_count(const std::vector<Perm>& group) {
    if (group.empty()) throw domain_error("conjugacy_class_count: empty input");
    std::set<Perm> s(group.begin(), group.end());
    int n = group.front().size();
    if (!s.count(Perm::identity(n))) throw domain_error("conjugacy_class_count: input lacks the identity");
    for (const auto& a : group) {
        if (!s.count(a.inverse())) throw domain_error("conjugacy_class_count: input not closed under inverse");
        for (const auto& b : group)
            if (!s.count(compose(a, b))) throw domain_error("conjugacy_class_count: input not closed under composition");
    }
    std::set<Perm> seen;
    int classes = 0;
    for (const auto& a : group) {
        if (seen.count(a)) continue;
        ++classes;
        for (const auto& g : group) seen.insert(compose(compose(g, a), g.inverse()));
    }
    return classes;
}

} // namespace bq
