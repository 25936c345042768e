// Parameter instances of the defining and implied relations, as (lhs, rhs) pairs.
#include <algorithm>
#include <array>
#include <functional>

#include "fw/rewrite.hpp"

namespace fw {

namespace {

struct Gen_ {
    const Algebra& A;
    const Caps& caps;
    std::vector<RelInstance>& out;
    std::vector<int> cs;

    void add(const std::string& name, const Morphism& l, const Morphism& r) { out.push_back({name, l, r}); }

    // up to caps.coupons labels of the block, spread over the declaration order
    std::vector<int> labels(int j, int i, bool thick) const {
        std::vector<int> B;
        for (int b : A.block(j, i))
            if (!thick || A.basis[b].in_sub) B.push_back(b);
        if ((int)B.size() <= caps.coupons) return B;
        std::vector<int> r;
        int n = caps.coupons;
        for (int k = 0; k < n; ++k) r.push_back(B[(size_t)k * (B.size() - 1) / std::max(1, n - 1)]);
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }
    Morphism cp(int b, int z) const { return m_coupon(A, b, z); }
    Morphism cpe(int i, int j, const Elem& f, int z) const { return m_coupon(A, i, j, f, z); }
    static Morphism id(const Word& w) { return identity(w); }
    static Morphism T(const Morphism& a, const Morphism& b) { return tensor(a, b); }
};

long ipow3(int z) {
    long r = 1;
    while (z--) r *= 3;
    return r;
}

}  // namespace

std::vector<RelInstance> relation_instances(const Algebra& A, const Caps& caps) {
    std::vector<RelInstance> out;
    Gen_ G{A, caps, out, {}};
    for (int i = 0; i < std::min(caps.colors, A.num_idem()); ++i) G.cs.push_back(i);
    const int X = caps.thick;
    auto& cs = G.cs;
    using G_ = Gen_;

    // web associativity
    for (int i : cs)
        for (int x = 1; x <= X; ++x)
            for (int y = 1; y <= X; ++y)
                for (int z = 1; z <= X; ++z) {
                    if (x + y + z > X + 2) continue;
                    G.add("associativity", G_::T(m_split(i, x, y), m_id(i, z)) * m_split(i, x + y, z),
                          G_::T(m_id(i, x), m_split(i, y, z)) * m_split(i, x, y + z));
                    G.add("associativity", m_merge(i, x + y, z) * G_::T(m_merge(i, x, y), m_id(i, z)),
                          m_merge(i, x, y + z) * G_::T(m_id(i, x), m_merge(i, y, z)));
                }

    // merge-split and knothole
    for (int i : cs)
        for (int x = 1; x <= X + 1; ++x)
            for (int y = 1; x + y <= X + 2; ++y) {
                G.add("knothole", m_merge(i, x, y) * m_split(i, x, y), m_id(i, x + y) * Q(binomial(Q(x + y), x)));
                for (int z = 1; z < x + y; ++z) {
                    int w = x + y - z;
                    Morphism rhs({{i, x}, {i, y}}, {{i, z}, {i, w}});
                    for (int t = std::max(0, w - y); t <= std::min(x, w); ++t) {
                        Morphism bot = G_::T(m_split(i, x - t, t), m_split(i, y - w + t, w - t));
                        Morphism mid = embed({{i, x - t}}, m_cross(i, t, i, y - w + t), {{i, w - t}});
                        Morphism top = G_::T(m_merge(i, x - t, y - w + t), m_merge(i, t, w - t));
                        rhs += top * mid * bot;
                    }
                    G.add("merge-split", m_split(i, z, w) * m_merge(i, x, y), rhs);
                }
            }

    // Coxeter relations for arbitrary colors and thicknesses, and crossing absorption
    for (int i : cs)
        for (int j : cs)
            for (int x = 1; x <= X; ++x)
                for (int y = 1; y <= X; ++y) {
                    G.add("braid", m_cross(j, y, i, x) * m_cross(i, x, j, y), G_::id({{i, x}, {j, y}}));
                    if (i == j) {
                        G.add("cross-absorb", m_merge(i, y, x) * m_cross(i, x, i, y), m_merge(i, x, y));
                        G.add("cross-absorb", m_cross(i, y, i, x) * m_split(i, y, x), m_split(i, x, y));
                    }
                }
    {
        std::vector<std::array<int, 3>> th{{1, 1, 1}};
        if (X >= 2) th.insert(th.end(), {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
        for (int a : cs)
            for (int b : cs)
                for (int c : cs)
                    for (auto [x, y, z] : th) {
                        Morphism l = G_::T(m_cross(b, y, c, z), m_id(a, x));
                        l = l * G_::T(m_id(b, y), m_cross(a, x, c, z));
                        l = l * G_::T(m_cross(a, x, b, y), m_id(c, z));
                        Morphism r = G_::T(m_id(c, z), m_cross(a, x, b, y));
                        r = r * G_::T(m_cross(a, x, c, z), m_id(b, y));
                        r = r * G_::T(m_id(a, x), m_cross(b, y, c, z));
                        G.add("braid", l, r);
                    }
    }

    // split/merge intertwining with a passing strand
    for (int i : cs)
        for (int j : cs)
            for (int x = 1; x <= X; ++x)
                for (int y = 1; y <= X; ++y)
                    for (int z = 1; z <= X; ++z) {
                        if (x + y + z > X + 2) continue;
                        G.add("split-crossing", G_::T(m_id(j, z), m_split(i, x, y)) * m_cross(i, x + y, j, z),
                              G_::T(m_cross(i, x, j, z), m_id(i, y)) * G_::T(m_id(i, x), m_cross(i, y, j, z)) *
                                  G_::T(m_split(i, x, y), m_id(j, z)));
                        G.add("split-crossing", G_::T(m_split(i, x, y), m_id(j, z)) * m_cross(j, z, i, x + y),
                              G_::T(m_id(i, x), m_cross(j, z, i, y)) * G_::T(m_cross(j, z, i, x), m_id(i, y)) *
                                  G_::T(m_id(j, z), m_split(i, x, y)));
                        G.add("merge-crossing", m_cross(i, x + y, j, z) * G_::T(m_merge(i, x, y), m_id(j, z)),
                              G_::T(m_id(j, z), m_merge(i, x, y)) * G_::T(m_cross(i, x, j, z), m_id(i, y)) *
                                  G_::T(m_id(i, x), m_cross(i, y, j, z)));
                        G.add("merge-crossing", m_cross(j, z, i, x + y) * G_::T(m_id(j, z), m_merge(i, x, y)),
                              G_::T(m_merge(i, x, y), m_id(j, z)) * G_::T(m_id(i, x), m_cross(j, z, i, y)) *
                                  G_::T(m_cross(j, z, i, x), m_id(i, y)));
                    }

    // coupon relations
    for (int i : cs)
        for (int j : cs)
            for (int z = 1; z <= X; ++z) {
                auto L = G.labels(j, i, z > 1);
                if (i == j) G.add("coupon-linear", G.cp(A.idem_basis[i], z), m_id(i, z));
                for (int b : L) G.add("coupon-linear", G.cpe(i, j, scaled(A.unit(b), 3), z), G.cp(b, z) * Q(ipow3(z)));
                if (z == 1)
                    for (size_t a = 0; a + 1 < L.size(); ++a) {
                        Elem s = A.unit(L[a]);
                        add_to(s, A.unit(L[a + 1]));
                        G.add("coupon-linear", G.cpe(i, j, s, 1), G.cp(L[a], 1) + G.cp(L[a + 1], 1));
                    }
                for (int k : cs)
                    for (int b : L)
                        for (int h : G.labels(k, j, z > 1))
                            G.add("coupon-composition", G.cp(h, z) * G.cp(b, z), G.cpe(i, k, A.mul(A.unit(h), A.unit(b)), z));
                if (z >= 2)
                    for (size_t a = 0; a + 1 < L.size(); ++a) {
                        Elem f = A.unit(L[a]), g = A.unit(L[a + 1]), s = f;
                        add_to(s, g);
                        Morphism rhs({{i, z}}, {{j, z}});
                        for (int t = 0; t <= z; ++t)
                            rhs += m_merge(j, t, z - t) * G_::T(G.cpe(i, j, f, t), G.cpe(i, j, g, z - t)) * m_split(i, t, z - t);
                        G.add("coupon-composition", G.cpe(i, j, s, z), rhs);
                    }
                // thin odd coupons square to zero through a knothole
                if (z == 1)
                    for (int b : A.block(j, i))
                        if (A.basis[b].parity)
                            G.add("odd-knothole", m_merge(j, 1, 1) * G_::T(G.cp(b, 1), G.cp(b, 1)) * m_split(i, 1, 1),
                                  Morphism({{i, 2}}, {{j, 2}}));
            }

    for (int i : cs)
        for (int j : cs)
            for (int x = 1; x <= X; ++x)
                for (int y = 1; x + y <= X + 1; ++y)
                    for (int b : G.labels(j, i, true)) {
                        G.add("coupon-split-merge", m_split(j, x, y) * G.cp(b, x + y), G_::T(G.cp(b, x), G.cp(b, y)) * m_split(i, x, y));
                        G.add("coupon-split-merge", G.cp(b, x + y) * m_merge(i, x, y), m_merge(j, x, y) * G_::T(G.cp(b, x), G.cp(b, y)));
                    }

    for (int i : cs)
        for (int j : cs)
            for (int k : cs)
                for (int x = 1; x <= X; ++x)
                    for (int y = 1; y <= X; ++y)
                        for (int b : G.labels(j, i, x > 1)) {
                            G.add("coupon-crossing", m_cross(j, x, k, y) * G_::T(G.cp(b, x), m_id(k, y)),
                                  G_::T(m_id(k, y), G.cp(b, x)) * m_cross(i, x, k, y));
                            G.add("coupon-crossing", m_cross(k, y, j, x) * G_::T(m_id(k, y), G.cp(b, x)),
                                  G_::T(G.cp(b, x), m_id(k, y)) * m_cross(k, y, i, x));
                        }

    // affine dots
    for (int i : cs) {
        for (int j : cs)
            for (int x = 1; x <= X; ++x)
                for (int b : G.labels(j, i, x > 1))
                    G.add("dot-coupon-split-merge", m_dot(j, x) * G.cp(b, x), G.cpe(i, j, A.psi_inv(A.unit(b)), x) * m_dot(i, x));
        for (int x = 1; x <= X; ++x)
            for (int y = 1; x + y <= X + 1; ++y) {
                G.add("dot-coupon-split-merge", m_split(i, x, y) * m_dot(i, x + y), G_::T(m_dot(i, x), m_dot(i, y)) * m_split(i, x, y));
                G.add("dot-coupon-split-merge", m_dot(i, x + y) * m_merge(i, x, y), m_merge(i, x, y) * G_::T(m_dot(i, x), m_dot(i, y)));
            }
    }
    if (is_great(A)) {
        for (int i : cs)
            for (int j : cs) {
                for (int x = 1; x <= X; ++x)
                    for (int y = 1; y <= X; ++y) {
                        Morphism rhs({{i, x}, {j, y}}, {{j, y}, {i, x}});
                        for (int t = 0; t <= std::min(x, y); ++t) {
                            Morphism D = G_::T(m_split(i, t, x - t), m_split(j, y - t, t));
                            D = teleporter(A, i, j, t, reduced({{i, x - t}, {j, y - t}})) * D;
                            D = embed(reduced({{j, t}}), m_cross(i, x - t, j, y - t), reduced({{i, t}})) * D;
                            D = embed(reduced({{j, t}, {j, y - t}}), m_dot(i, x - t), reduced({{i, t}})) * D;
                            D = G_::T(m_merge(j, t, y - t), m_merge(i, x - t, t)) * D;
                            rhs += D * Q(t % 2 ? -1 : 1);
                        }
                        G.add("dot-crossing", m_cross(i, x, j, y) * G_::T(m_dot(i, x), m_id(j, y)), rhs);
                    }
                G.add("dot-crossing-thin", m_cross(i, 1, j, 1) * G_::T(m_id(i, 1), m_dot(j, 1)) - G_::T(m_dot(j, 1), m_id(i, 1)) * m_cross(i, 1, j, 1),
                      teleporter(A, i, j, 1, {}, true));
                G.add("dot-crossing-thin", m_cross(i, 1, j, 1) * G_::T(m_dot(i, 1), m_dot(j, 1)),
                      G_::T(m_dot(j, 1), m_dot(i, 1)) * m_cross(i, 1, j, 1));
                G.add("dot-crossing-thin", m_cross(j, 1, i, 1) * G_::T(m_dot(j, 1), m_id(i, 1)) - G_::T(m_id(i, 1), m_dot(j, 1)) * m_cross(j, 1, i, 1),
                      teleporter(A, j, i, 1) * Q(-1));
            }

        // x!·T(x) as a product of thin teleporters pairing strand k with strand k
        for (int i : cs)
            for (int j : cs)
                for (int x = 1; x <= caps.blowup; ++x)
                    for (int tw = 0; tw < 2; ++tw) {
                        Morphism f = G_::T(multi_split(i, std::vector<int>(x, 1)), multi_split(j, std::vector<int>(x, 1)));
                        for (int k = x - 1; k >= 0; --k) {
                            Word left, ctx, right;
                            for (int q = 0; q < k; ++q) left.push_back({i, 1});
                            for (int q = k + 1; q < x; ++q) ctx.push_back({j, 1});
                            for (int q = 0; q < k; ++q) ctx.push_back({j, 1});
                            for (int q = k + 1; q < x; ++q) right.push_back({i, 1});
                            f = embed(left, teleporter(A, i, j, 1, ctx, tw), right) * f;
                        }
                        f = G_::T(multi_merge(j, std::vector<int>(x, 1)), multi_merge(i, std::vector<int>(x, 1))) * f;
                        G.add("teleporter-blowup", teleporter(A, i, j, x, {}, tw) * Q(factorial(x)), f);
                    }

        // teleporting coupons
        for (int x = 1; x <= caps.tele; ++x)
            for (int i : cs)
                for (int j : cs)
                    for (int k : cs)
                        for (int l : cs)
                            for (int f : G.labels(i, k, x > 1))
                                for (int g : G.labels(j, l, x > 1)) {
                                    Q s = (A.basis[f].parity & A.basis[g].parity) ? -1 : 1;
                                    G.add("teleporter-slide", teleporter(A, i, j, x) * G_::T(G.cp(f, x), G.cp(g, x)),
                                          G_::T(G.cp(g, x), G.cpe(k, i, A.psi_inv(A.unit(f)), x)) * teleporter(A, k, l, x) * s);
                                    G.add("teleporter-slide", teleporter(A, i, j, x, {}, true) * G_::T(G.cp(f, x), G.cp(g, x)),
                                          G_::T(G.cpe(l, j, A.psi_inv(A.unit(g)), x), G.cp(f, x)) * teleporter(A, k, l, x, {}, true) * s);
                                }
    }

    // explosion followed by contraction
    for (int i : cs) {
        std::vector<Morphism> fs{m_id(i, 2), m_dot(i, 2), m_split(i, 1, 1), m_merge(i, 2, 1), m_cross(i, 2, i, 1)};
        for (int j : cs) {
            for (int b : G.labels(j, i, true)) fs.push_back(G.cp(b, 2));
            if (j != i) fs.push_back(m_cross(i, 2, j, 1));
        }
        for (auto& f : fs) {
            Q s = 1;
            for (auto& w : f.src) s *= factorial(w.x);
            for (auto& w : f.tgt) s *= factorial(w.x);
            G.add("explode-contract", contract(explode(f), f.src, f.tgt), f * s);
        }
    }

    // Green's product rule
    for (int i : cs) {
        std::function<void(int, std::vector<int>&, std::vector<std::vector<int>>&)> comps =
            [&](int n, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
                if (!n) {
                    acc.push_back(cur);
                    return;
                }
                for (int p = 1; p <= n; ++p) {
                    cur.push_back(p);
                    comps(n - p, cur, acc);
                    cur.pop_back();
                }
            };
        for (int n = 1; n <= caps.green; ++n) {
            std::vector<std::vector<int>> C;
            std::vector<int> cur;
            comps(n, cur, C);
            for (auto& xs : C)
                for (auto& ys : C) {
                    Word src, tgt;
                    for (int a : xs) src.push_back({i, a});
                    for (int a : ys) tgt.push_back({i, a});
                    Morphism rhs(src, tgt);
                    for (auto& mu : enumerate_basis(A, src, tgt, 0)) {
                        bool plain = true;
                        for (auto& row : mu.e)
                            for (auto& pc : row)
                                for (auto& [tb, m] : pc)
                                    if (tb.second != A.idem_basis[i]) plain = false;
                        if (plain) rhs += eta(A, mu);
                    }
                    G.add("green-product", multi_split(i, ys) * multi_merge(i, xs), rhs);
                }
        }
    }
    return out;
}

SuiteResult verify_relation_suite(Rewriter& R, const std::vector<RelInstance>& inst) {
    SuiteResult res;
    for (auto& r : inst) {
        ++res.checked;
        ++res.per_relation[r.name];
        try {
            if (!R.equal(r.lhs, r.rhs)) res.failures.push_back(r.name + " #" + std::to_string(res.per_relation[r.name]));
        } catch (const Error& e) {
            res.failures.push_back(r.name + " #" + std::to_string(res.per_relation[r.name]) + ": " + e.what());
        }
    }
    return res;
}

}  // namespace fw
