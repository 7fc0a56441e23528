#pragma once

#include <string>
#include <vector>

namespace bq {

// Result of an exhaustive axiom/property check. When the property fails,
// `witness` is the lexicographically least violating tuple (1-based labels)
// and `detail` names the violated identity.
struct PropertyReport {
    std::string property;
    bool holds = true;
    std::vector<int> witness;
    std::string detail;

    static PropertyReport ok(std::string name) {
        PropertyReport r;
        r.property = std::move(name);
        return r;
    }
    static PropertyReport fail(std::string name, std::vector<int> w, std::string why) {
        PropertyReport r;
        r.property = std::move(name);
        r.holds = false;
        r.witness = std::move(w);
        r.detail = std::move(why);
        return r;
    }
    std::string to_string() const;
};

} // namespace bq
