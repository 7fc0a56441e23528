#include "bq/hom.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "bq/errors.hpp"
#include "bq/iso.hpp"

namespace bq {

namespace {

// Backtracking over source elements in index order: assign images one at a
// time, checking every constraint whose arguments are all assigned.
template <typename CheckPartial>
std::vector<HomElement> backtrack_homs(int src_n, int dst_n, const CheckPartial& ok_up_to) {
    std::vector<HomElement> out;
    std::vector<int> f(src_n, -1);
    std::function<void(int)> rec = [&](int x) {
        if (x == src_n) {
            out.push_back(f);
            return;
        }
        for (int img = 0; img < dst_n; ++img) {
            f[x] = img;
            if (ok_up_to(f, x)) rec(x + 1);
        }
        f[x] = -1;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

HomSet enumerate_quandle_homs(const Quandle& a, const Quandle& b) {
    HomSet hs;
    hs.source_size = a.size();
    hs.target_size = b.size();
    hs.elements = backtrack_homs(a.size(), b.size(), [&](const std::vector<int>& f, int x) {
        for (int p = 0; p <= x; ++p)
            for (int q = 0; q <= x; ++q) {
                int v = a.op(p, q);
                if (v <= x && b.op(f[p], f[q]) != f[v]) return false;
            }
        return true;
    });
    return hs;
}

HomSet enumerate_biquandle_homs(const Biquandle& x, const Biquandle& y) {
    HomSet hs;
    hs.source_size = x.size();
    hs.target_size = y.size();
    hs.elements = backtrack_homs(x.size(), y.size(), [&](const std::vector<int>& f, int m) {
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                int vu = x.u(p, q), vo = x.o(p, q);
                if (vu <= m && y.u(f[p], f[q]) != f[vu]) return false;
                if (vo <= m && y.o(f[p], f[q]) != f[vo]) return false;
            }
        return true;
    });
    return hs;
}

HomQuandle hom_quandle(const Quandle& a, const Quandle& b) {
    if (!is_medial_quandle(b)) throw domain_error("hom_quandle: target must be medial");
    HomQuandle h;
    h.homs = enumerate_quandle_homs(a, b);
    const auto& els = h.homs.elements;
    int m = static_cast<int>(els.size());
    OpTable t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            HomElement prod(a.size());
            for (int x = 0; x < a.size(); ++x) prod[x] = b.op(els[i][x], els[j][x]);
            auto it = std::lower_bound(els.begin(), els.end(), prod);
            if (it == els.end() || *it != prod)
                throw domain_error("hom_quandle: pointwise product escaped the hom set");
            t.at(i, j) = static_cast<int>(it - els.begin());
        }
    h.quandle = make_quandle(std::move(t));
    return h;
}

HomBiquandle hom_biquandle(const Biquandle& x, const Biquandle& y) {
    if (!is_medial_biquandle(y)) throw domain_error("hom_biquandle: target must be medial");
    HomBiquandle h;
    h.homs = enumerate_biquandle_homs(x, y);
    const auto& els = h.homs.elements;
    int m = static_cast<int>(els.size());
    OpTable u(m), o(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            HomElement pu(x.size()), po(x.size());
            for (int e = 0; e < x.size(); ++e) {
                pu[e] = y.u(els[i][e], els[j][e]);
                po[e] = y.o(els[i][e], els[j][e]);
            }
            auto iu = std::lower_bound(els.begin(), els.end(), pu);
            auto io = std::lower_bound(els.begin(), els.end(), po);
            if (iu == els.end() || *iu != pu || io == els.end() || *io != po)
                throw domain_error("hom_biquandle: pointwise product escaped the hom set");
            u.at(i, j) = static_cast<int>(iu - els.begin());
            o.at(i, j) = static_cast<int>(io - els.begin());
        }
    h.biquandle = make_biquandle(std::move(u), std::move(o));
    assert(is_medial_biquandle(h.biquandle));
    return h;
}

bool lift_check(const HomElement& f, const Structure& sx, const Structure& sy) {
    int n = sx.base.size();
    for (int x = 0; x < n; ++x) {
        const Perm& ax = sx.betas[x];       // alpha_x of the source structure
        const Perm& bfx = sy.betas[f[x]];
        for (int z = 0; z < n; ++z)
            if (f[ax(z)] != bfx(f[z])) return false;
    }
    return true;
}

PropertyReport hom_associated_quandle_check(const Biquandle& x, const Biquandle& y) {
    if (!is_medial_biquandle(y)) throw domain_error("hom_associated_quandle_check: target must be medial");
    Structure sx = extract_structure(x);
    Structure sy = extract_structure(y);
    auto hb = hom_biquandle(x, y);
    auto qhoms = enumerate_quandle_homs(sx.base, sy.base);

    std::vector<HomElement> lifted;
    for (const auto& f : qhoms.elements)
        if (lift_check(f, sx, sy)) lifted.push_back(f);
    if (lifted != hb.homs.elements)
        return PropertyReport::fail("hom_associated_quandle", {},
                                    "lift-selected quandle homs differ from the biquandle hom set");

    // Q(Hom_B(x,y)) computed from indices must agree with the pointwise * of
    // the associated target quandle.
    Quandle assoc = associated_quandle(hb.biquandle);
    Quandle qy = sy.base;
    const auto& els = hb.homs.elements;
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = 0; j < els.size(); ++j) {
            HomElement prod(x.size());
            for (int e = 0; e < x.size(); ++e) prod[e] = qy.op(els[i][e], els[j][e]);
            auto it = std::lower_bound(els.begin(), els.end(), prod);
            if (it == els.end() || *it != prod)
                return PropertyReport::fail("hom_associated_quandle", {static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                            "pointwise * escapes the lifted hom set");
            if (assoc.op(static_cast<int>(i), static_cast<int>(j)) != static_cast<int>(it - els.begin()))
                return PropertyReport::fail("hom_associated_quandle", {static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                            "associated quandle of the Hom-biquandle is not the pointwise *");
        }

    // Structure maps of the Hom-biquandle are the pointwise betas.
    Structure shom = extract_structure(hb.biquandle);
    for (size_t g = 0; g < els.size(); ++g)
        for (size_t f = 0; f < els.size(); ++f) {
            HomElement img(x.size());
            for (int e = 0; e < x.size(); ++e) img[e] = sy.betas[els[g][e]](els[f][e]);
            auto it = std::lower_bound(els.begin(), els.end(), img);
            if (it == els.end() || *it != img ||
                shom.betas[g](static_cast<int>(f)) != static_cast<int>(it - els.begin()))
                return PropertyReport::fail("hom_associated_quandle", {static_cast<int>(f) + 1, static_cast<int>(g) + 1},
                                            "Hom-biquandle structure map is not the pointwise beta");
        }
    return PropertyReport::ok("hom_associated_quandle");
}

namespace {

int index_of(const std::vector<HomElement>& els, const HomElement& f, const char* what) {
    auto it = std::lower_bound(els.begin(), els.end(), f);
    if (it == els.end() || *it != f) throw domain_error(std::string(what) + ": map not in hom set");
    return static_cast<int>(it - els.begin());
}

} // namespace

std::vector<int> precompose(const HomElement& h, const Biquandle& x,
                            const Biquandle& y, const Biquandle& z) {
    if (!is_medial_biquandle(z)) throw domain_error("precompose: target must be medial");
    auto hyz = hom_biquandle(y, z);
    auto hxz = hom_biquandle(x, z);
    std::vector<int> map(hyz.homs.elements.size());
    for (size_t i = 0; i < hyz.homs.elements.size(); ++i) {
        const auto& f = hyz.homs.elements[i];
        HomElement fh(x.size());
        for (int e = 0; e < x.size(); ++e) fh[e] = f[h[e]];
        map[i] = index_of(hxz.homs.elements, fh, "precompose");
    }
    // assert homomorphy between the Hom-biquandles
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = 0; j < map.size(); ++j) {
            assert(hxz.biquandle.u(map[i], map[j]) ==
                   map[hyz.biquandle.u(static_cast<int>(i), static_cast<int>(j))]);
            assert(hxz.biquandle.o(map[i], map[j]) ==
                   map[hyz.biquandle.o(static_cast<int>(i), static_cast<int>(j))]);
        }
    return map;
}

std::vector<int> postcompose(const HomElement& h, const Biquandle& a,
                             const Biquandle& x, const Biquandle& y) {
    if (!is_medial_biquandle(x) || !is_medial_biquandle(y))
        throw domain_error("postcompose: both biquandles must be medial");
    auto hax = hom_biquandle(a, x);
    auto hay = hom_biquandle(a, y);
    std::vector<int> map(hax.homs.elements.size());
    for (size_t i = 0; i < hax.homs.elements.size(); ++i) {
        const auto& f = hax.homs.elements[i];
        HomElement hf(a.size());
        for (int e = 0; e < a.size(); ++e) hf[e] = h[f[e]];
        map[i] = index_of(hay.homs.elements, hf, "postcompose");
    }
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = 0; j < map.size(); ++j) {
            assert(hay.biquandle.u(map[i], map[j]) ==
                   map[hax.biquandle.u(static_cast<int>(i), static_cast<int>(j))]);
            assert(hay.biquandle.o(map[i], map[j]) ==
                   map[hax.biquandle.o(static_cast<int>(i), static_cast<int>(j))]);
        }
    return map;
}

namespace {

std::vector<int> closure(const Biquandle& x, std::vector<int> seed) {
    std::vector<char> in(x.size(), 0);
    for (int s : seed) in[s] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < x.size(); ++a) {
            if (!in[a]) continue;
            for (int b = 0; b < x.size(); ++b) {
                if (!in[b]) continue;
                for (int v : {x.u(a, b), x.o(a, b)})
                    if (!in[v]) { in[v] = 1; grew = true; }
            }
        }
    }
    std::vector<int> out;
    for (int a = 0; a < x.size(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

} // namespace

std::vector<int> minimal_generating_set(const Biquandle& x) {
    int n = x.size();
    if (n == 0) return {};
    // Try subsets by size, lexicographically, via combinations.
    for (int k = 1; k <= n; ++k) {
        std::vector<int> comb(k);
        std::function<std::vector<int>(int, int)> rec = [&](int pos, int start) -> std::vector<int> {
            if (pos == k) {
                if (static_cast<int>(closure(x, comb).size()) == n) return comb;
                return {};
            }
            for (int v = start; v < n; ++v) {
                comb[pos] = v;
                auto r = rec(pos + 1, v + 1);
                if (!r.empty()) return r;
            }
            return {};
        };
        auto r = rec(0, 0);
        if (!r.empty()) return r;
    }
    return {};
}

PowerEmbedding embed_into_power(const Biquandle& x, const Biquandle& y) {
    if (!is_medial_biquandle(y)) throw domain_error("embed_into_power: target must be medial");
    PowerEmbedding pe;
    pe.generators = minimal_generating_set(x);
    int k = static_cast<int>(pe.generators.size());
    auto hb = hom_biquandle(x, y);
    const auto& els = hb.homs.elements;
    for (const auto& f : els) {
        std::vector<int> tup(k);
        for (int i = 0; i < k; ++i) tup[i] = f[pe.generators[i]];
        pe.image.push_back(std::move(tup));
    }
    // Injectivity of j.
    {
        std::set<std::vector<int>> s(pe.image.begin(), pe.image.end());
        if (s.size() != pe.image.size()) throw domain_error("embed_into_power: j is not injective");
    }
    // Componentwise operations restricted to the image.
    int m = static_cast<int>(pe.image.size());
    auto find_tuple = [&](const std::vector<int>& t) {
        for (int i = 0; i < m; ++i)
            if (pe.image[i] == t) return i;
        throw domain_error("embed_into_power: image not closed under componentwise operations");
    };
    OpTable u(m), o(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<int> tu(k), to(k);
            for (int c = 0; c < k; ++c) {
                tu[c] = y.u(pe.image[i][c], pe.image[j][c]);
                to[c] = y.o(pe.image[i][c], pe.image[j][c]);
            }
            u.at(i, j) = find_tuple(tu);
            o.at(i, j) = find_tuple(to);
        }
    if (m > 0) {
        pe.image_biquandle = make_biquandle(std::move(u), std::move(o));
        // j is an isomorphism Hom_B(x,y) -> image: operations correspond index-wise.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                assert(pe.image_biquandle.u(i, j) == hb.biquandle.u(i, j));
                assert(pe.image_biquandle.o(i, j) == hb.biquandle.o(i, j));
            }
    }
    return pe;
}

} // namespace bq
