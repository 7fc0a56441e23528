#pragma once

#include <string>
#include <vector>

namespace bq {

// A permutation of {0..n-1}, stored as the image vector.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    static Perm identity(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    bool is_valid() const;
    Perm inverse() const;
    // (a.then(b))(x) = b(a(x))
    Perm then(const Perm& b) const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img < o.img; }

    bool is_identity() const;
    int order() const;

    // Disjoint-cycle notation with 1-based labels: "(1 2)(3)" fixed points
    // omitted, "id" for the identity.
    std::string to_cycles() const;
    // Parses "id" or "(1 2)(3 4)" over n points; throws format_error on
    // malformed input.
    static Perm from_cycles(const std::string& text, int n);
};

// compose(a, b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b);

} // namespace bq
