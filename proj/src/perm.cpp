#include "bq/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bq/errors.hpp"

namespace bq {

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

bool Perm::is_valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> v(img.size());
    for (int i = 0; i < size(); ++i) v[img[i]] = i;
    return Perm(std::move(v));
}

Perm Perm::then(const Perm& b) const {
    std::vector<int> v(img.size());
    for (int i = 0; i < size(); ++i) v[i] = b.img[img[i]];
    return Perm(std::move(v));
}

Perm compose(const Perm& a, const Perm& b) { return b.then(a); }

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i) return false;
    return true;
}

int Perm::order() const {
    Perm p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++k;
    }
    return k;
}

std::string Perm::to_cycles() const {
    std::ostringstream out;
    std::vector<char> done(img.size(), 0);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (done[i] || img[i] == i) continue;
        out << '(';
        int j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = 1;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = img[j];
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "id";
}

Perm Perm::from_cycles(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) || c == ' ') s += c;
    // trim
    size_t b = s.find_first_not_of(' ');
    size_t e = s.find_last_not_of(' ');
    s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    auto p = Perm::identity(n);
    if (s == "id" || s.empty()) return p;
    std::vector<char> used(n, 0);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        if (s[i] != '(') throw format_error("cycle notation: expected '(' at position " + std::to_string(i) + " in \"" + text + "\"");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            if (s[i] == ' ' || s[i] == ',') { ++i; continue; }
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw format_error("cycle notation: unexpected character '" + std::string(1, s[i]) + "' in \"" + text + "\"");
            int v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
            if (v < 1 || v > n) throw format_error("cycle notation: label " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            cyc.push_back(v - 1);
        }
        if (i >= s.size()) throw format_error("cycle notation: unbalanced '(' in \"" + text + "\"");
        ++i; // ')'
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (used[from]) throw format_error("cycle notation: label " + std::to_string(from + 1) + " repeated in \"" + text + "\"");
            used[from] = 1;
            if (cyc.size() > 1) p.img[from] = to;
        }
    }
    if (!p.is_valid()) throw format_error("cycle notation: not a permutation: \"" + text + "\"");
    return p;
}

} // namespace bq
