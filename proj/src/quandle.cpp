#include "bq/quandle.hpp"

#include <sstream>

#include "bq/errors.hpp"

namespace bq {

Perm Quandle::right_translation(int y) const {
    std::vector<int> v(size());
    for (int x = 0; x < size(); ++x) v[x] = op(x, y);
    return Perm(std::move(v));
}

int Quandle::op_inv(int x, int y) const {
    for (int z = 0; z < size(); ++z)
        if (op(z, y) == x) return z;
    return -1;
}

std::string PropertyReport::to_string() const {
    std::ostringstream out;
    out << property << ": " << (holds ? "holds" : "fails");
    if (!holds) {
        if (!witness.empty()) {
            out << " at (";
            for (size_t i = 0; i < witness.size(); ++i) {
                if (i) out << ", ";
                out << witness[i];
            }
            out << ")";
        }
        if (!detail.empty()) out << " [" << detail << "]";
    }
    return out.str();
}

PropertyReport validate_quandle(const OpTable& t) {
    if (!t.in_range()) throw format_error("quandle table has out-of-range entries");
    int n = t.n;
    for (int x = 0; x < n; ++x)
        if (t.at(x, x) != x)
            return PropertyReport::fail("quandle", {x + 1}, "idempotence: x*x != x");
    for (int y = 0; y < n; ++y) {
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n; ++x) {
            int v = t.at(x, y);
            if (seen[v])
                return PropertyReport::fail("quandle", {y + 1}, "right translation R_y is not a bijection");
            seen[v] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z)))
                    return PropertyReport::fail("quandle", {x + 1, y + 1, z + 1},
                                                "right self-distributivity: (x*y)*z != (x*z)*(y*z)");
    return PropertyReport::ok("quandle");
}

bool is_medial_quandle(const Quandle& q) {
    int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (q.op(q.op(x, y), q.op(z, w)) != q.op(q.op(x, z), q.op(y, w)))
                        return false;
    return true;
}

bool is_commutative_quandle(const Quandle& q) {
    int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (q.op(x, y) != q.op(y, x)) return false;
    return true;
}

bool is_connected_quandle(const Quandle& q) {
    int n = q.size();
    if (n == 0) return true;
    // Orbit of element 0 under all R_y and their inverses.
    std::vector<char> in_orbit(n, 0);
    std::vector<int> stack = {0};
    in_orbit[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y) {
            int fwd = q.op(x, y);
            int bwd = q.op_inv(x, y);
            for (int nx : {fwd, bwd})
                if (!in_orbit[nx]) {
                    in_orbit[nx] = 1;
                    ++count;
                    stack.push_back(nx);
                }
        }
    }
    return count == n;
}

Quandle trivial_quandle(int n) {
    OpTable t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.at(x, y) = x;
    return Quandle(std::move(t));
}

Quandle make_quandle(OpTable t) {
    auto r = validate_quandle(t);
    if (!r.holds) throw domain_error("not a quandle: " + r.to_string());
    return Quandle(std::move(t));
}

} // namespace bq
