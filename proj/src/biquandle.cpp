#include "bq/biquandle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bq/errors.hpp"

namespace bq {

Perm Biquandle::alpha(int y) const {
    std::vector<int> v(size());
    for (int x = 0; x < size(); ++x) v[x] = u(x, y);
    return Perm(std::move(v));
}

Perm Biquandle::beta(int y) const {
    std::vector<int> v(size());
    for (int x = 0; x < size(); ++x) v[x] = o(x, y);
    return Perm(std::move(v));
}

bool Biquandle::operator<(const Biquandle& b) const {
    if (!(under == b.under)) return under < b.under;
    return over < b.over;
}

PropertyReport validate_biquandle(const OpTable& under, const OpTable& over) {
    if (under.n != over.n) throw format_error("biquandle: under/over table orders differ");
    if (!under.in_range() || !over.in_range())
        throw format_error("biquandle table has out-of-range entries");
    int n = under.n;
    auto U = [&](int x, int y) { return under.at(x, y); };
    auto O = [&](int x, int y) { return over.at(x, y); };

    for (int x = 0; x < n; ++x)
        if (U(x, x) != O(x, x))
            return PropertyReport::fail("biquandle", {x + 1}, "diagonal: x under x != x over x");

    for (int y = 0; y < n; ++y) {
        std::vector<char> seen_u(n, 0), seen_o(n, 0);
        for (int x = 0; x < n; ++x) {
            if (seen_u[U(x, y)])
                return PropertyReport::fail("biquandle", {y + 1}, "alpha_y is not a bijection");
            seen_u[U(x, y)] = 1;
        }
        for (int x = 0; x < n; ++x) {
            if (seen_o[O(x, y)])
                return PropertyReport::fail("biquandle", {y + 1}, "beta_y is not a bijection");
            seen_o[O(x, y)] = 1;
        }
    }

    // Pair map S(x,y) = (y over x, x under y).
    std::vector<char> hit(n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int idx = O(y, x) * n + U(x, y);
            if (hit[idx])
                return PropertyReport::fail("biquandle", {x + 1, y + 1}, "pair map S is not a bijection");
            hit[idx] = 1;
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (U(U(x, y), U(z, y)) != U(U(x, z), O(y, z)))
                    return PropertyReport::fail("biquandle", {x + 1, y + 1, z + 1},
                                                "exchange law 1: (x u y) u (z u y) != (x u z) u (y o z)");
                if (O(U(x, y), U(z, y)) != U(O(x, z), O(y, z)))
                    return PropertyReport::fail("biquandle", {x + 1, y + 1, z + 1},
                                                "exchange law 2: (x u y) o (z u y) != (x o z) u (y o z)");
                if (O(O(x, y), O(z, y)) != O(O(x, z), U(y, z)))
                    return PropertyReport::fail("biquandle", {x + 1, y + 1, z + 1},
                                                "exchange law 3: (x o y) o (z o y) != (x o z) o (y u z)");
            }
    return PropertyReport::ok("biquandle");
}

Quandle associated_quandle(const Biquandle& b) {
    int n = b.size();
    OpTable t(n);
    for (int y = 0; y < n; ++y) {
        Perm binv = b.beta(y).inverse();
        for (int x = 0; x < n; ++x) t.at(x, y) = binv(b.u(x, y));
    }
    return make_quandle(std::move(t));
}

bool is_medial_biquandle(const Biquandle& b) {
    int n = b.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    if (b.u(b.u(x, y), b.u(z, w)) != b.u(b.u(x, z), b.u(y, w))) return false;
                    if (b.o(b.u(x, y), b.u(z, w)) != b.u(b.o(x, z), b.o(y, w))) return false;
                    if (b.o(b.o(x, y), b.o(z, w)) != b.o(b.o(x, z), b.o(y, w))) return false;
                }
    return true;
}

bool is_commutative_biquandle(const Biquandle& b) {
    int n = b.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.u(x, y) != b.u(y, x) || b.o(x, y) != b.o(y, x)) return false;
    return true;
}

bool is_involutory_biquandle(const Biquandle& b) {
    int n = b.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (b.u(x, b.o(y, x)) != b.u(x, y)) return false;
            if (b.o(x, b.u(y, x)) != b.o(x, y)) return false;
            if (b.u(b.u(x, y), y) != x) return false;
            if (b.o(b.o(x, y), y) != x) return false;
        }
    return true;
}

std::optional<Perm> is_constant_action(const Biquandle& b) {
    int n = b.size();
    if (n == 0) return Perm::identity(0);
    std::vector<int> sigma(n);
    for (int x = 0; x < n; ++x) sigma[x] = b.u(x, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (b.u(x, y) != sigma[x] || b.o(x, y) != sigma[x]) return std::nullopt;
    return Perm(std::move(sigma));
}

bool is_two_reductive(const Biquandle& b) {
    int n = b.size();
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < n; ++c) {
                if (b.u(a, b.u(x, c)) != b.u(a, x)) return false;
                if (b.o(a, b.o(x, c)) != b.o(a, x)) return false;
                if (b.u(a, b.o(x, c)) != b.u(a, x)) return false;
                if (b.o(a, b.u(x, c)) != b.o(a, x)) return false;
            }
    return true;
}

std::vector<std::vector<int>> biquandle_components(const Biquandle& b) {
    int n = b.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            parent[find(x)] = find(b.u(x, y));
            parent[find(x)] = find(b.o(x, y));
        }
    std::vector<std::vector<int>> classes;
    std::vector<int> index(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (index[r] < 0) {
            index[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[index[r]].push_back(x);
    }
    return classes;
}

Biquandle make_biquandle(OpTable under, OpTable over) {
    auto r = validate_biquandle(under, over);
    if (!r.holds) throw domain_error("not a biquandle: " + r.to_string());
    return Biquandle(std::move(under), std::move(over));
}

} // namespace bq
