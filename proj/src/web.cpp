#include "fw/web.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace fw {

Word reduced(const Word& w) {
    Word r;
    for (auto& s : w)
        if (s.x > 0) r.push_back(s);
        else if (s.x < 0) throw Error(Err::InvalidParams, "negative thickness");
    return r;
}

int width(const Word& w) {
    int n = 0;
    for (auto& s : w) n += s.x;
    return n;
}

std::vector<int> thin_colors(const Word& w) {
    std::vector<int> r;
    for (auto& s : w)
        for (int k = 0; k < s.x; ++k) r.push_back(s.c);
    return r;
}

bool is_thin(const Word& w) {
    for (auto& s : w)
        if (s.x != 1) return false;
    return true;
}

std::string word_str(const Algebra& A, const Word& w) {
    std::string r;
    for (auto& s : w) {
        if (!r.empty()) r += " ";
        r += A.idem_names[s.c] + "^(" + std::to_string(s.x) + ")";
    }
    return r;
}

// ---------------------------------------------------------------- generators

Word Gen::src() const {
    switch (k) {
        case GK::Split: return {{i, x + y}};
        case GK::Merge: return {{i, x}, {i, y}};
        case GK::Cross: return {{i, x}, {j, y}};
        case GK::Coupon: return {{i, x}};
        case GK::Dot: return {{i, x}};
    }
    return {};
}

Word Gen::tgt() const {
    switch (k) {
        case GK::Split: return {{i, x}, {i, y}};
        case GK::Merge: return {{i, x + y}};
        case GK::Cross: return {{j, y}, {i, x}};
        case GK::Coupon: return {{j, x}};
        case GK::Dot: return {{i, x}};
    }
    return {};
}

bool Gen::operator<(const Gen& o) const {
    return std::tie(k, i, j, x, y, f) < std::tie(o.k, o.i, o.j, o.x, o.y, o.f);
}
bool Gen::operator==(const Gen& o) const {
    return std::tie(k, i, j, x, y, f) == std::tie(o.k, o.i, o.j, o.x, o.y, o.f);
}

static Word apply_slice(const Word& w, const Slice& sl) {
    Word gs = sl.g.src();
    if (sl.pos < 0 || sl.pos + gs.size() > w.size() || !std::equal(gs.begin(), gs.end(), w.begin() + sl.pos))
        throw Error(Err::BoundaryMismatch, "slice does not fit its word");
    Word r(w.begin(), w.begin() + sl.pos);
    Word gt = sl.g.tgt();
    r.insert(r.end(), gt.begin(), gt.end());
    r.insert(r.end(), w.begin() + sl.pos + gs.size(), w.end());
    return r;
}

Word Diagram::tgt() const {
    Word w = src;
    for (auto& sl : s) w = apply_slice(w, sl);
    return w;
}

int Diagram::affine_degree() const {
    int d = 0;
    for (auto& sl : s)
        if (sl.g.k == GK::Dot) d += sl.g.x;
    return d;
}

bool Diagram::operator<(const Diagram& o) const { return std::tie(src, s) < std::tie(o.src, o.s); }

// ---------------------------------------------------------------- morphisms

int Morphism::max_degree() const {
    int d = 0;
    for (auto& [D, c] : t) d = std::max(d, D.affine_degree());
    return d;
}

void Morphism::add(const Diagram& d, const Q& c) {
    if (c == 0) return;
    Q& v = t[d];
    v += c;
    if (v == 0) t.erase(d);
}

Morphism& Morphism::operator+=(const Morphism& o) {
    if (o.src != src || o.tgt != tgt) throw Error(Err::BoundaryMismatch, "sum of morphisms with different boundaries");
    for (auto& [d, c] : o.t) add(d, c);
    return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
    if (o.src != src || o.tgt != tgt) throw Error(Err::BoundaryMismatch, "difference of morphisms with different boundaries");
    for (auto& [d, c] : o.t) add(d, -c);
    return *this;
}

Morphism Morphism::operator+(const Morphism& o) const {
    Morphism r = *this;
    r += o;
    return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
    Morphism r = *this;
    r -= o;
    return r;
}

Morphism Morphism::operator*(const Q& c) const {
    Morphism r(src, tgt);
    if (c == 0) return r;
    for (auto& [d, v] : t) r.t[d] = v * c;
    return r;
}

Morphism identity(const Word& w) {
    Morphism r(reduced(w), reduced(w));
    r.t[Diagram{r.src, {}}] = 1;
    return r;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (g.tgt != f.src) throw Error(Err::BoundaryMismatch, "compose: target of right factor differs from source of left");
    Morphism r(g.src, f.tgt);
    for (auto& [dg, cg] : g.t)
        for (auto& [df, cf] : f.t) {
            Diagram d{dg.src, dg.s};
            d.s.insert(d.s.end(), df.s.begin(), df.s.end());
            r.add(d, cf * cg);
        }
    return r;
}

Morphism operator*(const Morphism& f, const Morphism& g) { return compose(f, g); }

Morphism tensor(const Morphism& f, const Morphism& g) {
    Word src = f.src, tgt = f.tgt;
    src.insert(src.end(), g.src.begin(), g.src.end());
    tgt.insert(tgt.end(), g.tgt.begin(), g.tgt.end());
    Morphism r(src, tgt);
    int shift = (int)f.src.size();
    for (auto& [df, cf] : f.t)
        for (auto& [dg, cg] : g.t) {
            Diagram d{src, {}};
            for (auto sl : dg.s) {
                sl.pos += shift;
                d.s.push_back(sl);
            }
            d.s.insert(d.s.end(), df.s.begin(), df.s.end());
            r.add(d, cf * cg);
        }
    return r;
}

Morphism embed(const Word& left, const Morphism& f, const Word& right) {
    return tensor(tensor(identity(left), f), identity(right));
}

static Morphism single(const Gen& g) {
    Morphism r(g.src(), g.tgt());
    r.t[Diagram{g.src(), {Slice{0, g}}}] = 1;
    return r;
}

Morphism m_id(int i, int x) { return identity({{i, x}}); }

Morphism m_split(int i, int x, int y) {
    if (x < 0 || y < 0) throw Error(Err::InvalidParams, "negative thickness");
    if (!x || !y) return m_id(i, x + y);
    Gen g;
    g.k = GK::Split, g.i = i, g.x = x, g.y = y;
    return single(g);
}

Morphism m_merge(int i, int x, int y) {
    if (x < 0 || y < 0) throw Error(Err::InvalidParams, "negative thickness");
    if (!x || !y) return m_id(i, x + y);
    Gen g;
    g.k = GK::Merge, g.i = i, g.x = x, g.y = y;
    return single(g);
}

Morphism m_cross(int i, int x, int j, int y) {
    if (x < 0 || y < 0) throw Error(Err::InvalidParams, "negative thickness");
    if (!x || !y) return identity({{i, x}, {j, y}});
    Gen g;
    g.k = GK::Cross, g.i = i, g.x = x, g.j = j, g.y = y;
    return single(g);
}

Morphism m_coupon(const Algebra& A, int i, int j, const Elem& f, int z) {
    if (z < 0) throw Error(Err::InvalidParams, "negative thickness");
    if (z == 0) return identity({});
    for (auto& [b, v] : f)
        if (A.basis[b].src != i || A.basis[b].tgt != j)
            throw Error(Err::InvalidParams, "coupon label not in the block " + A.idem_names[j] + "A" + A.idem_names[i]);
    if (z >= 2 && !A.elem_in_sub(f))
        throw Error(Err::InvalidParams, "thick coupon label " + A.elem_str(f) + " not in the subalgebra");
    Morphism r({{i, z}}, {{j, z}});
    if (f.empty()) return r;
    Gen g;
    g.k = GK::Coupon, g.i = i, g.j = j, g.x = z, g.f = f;
    return single(g);
}

Morphism m_coupon(const Algebra& A, int b, int z) { return m_coupon(A, A.basis[b].src, A.basis[b].tgt, A.unit(b), z); }

Morphism m_dot(int i, int z, int times) {
    if (z < 0 || times < 0) throw Error(Err::InvalidParams, "negative thickness");
    Morphism r = m_id(i, z);
    if (!z) return r;
    Gen g;
    g.k = GK::Dot, g.i = i, g.x = z;
    for (int k = 0; k < times; ++k) r = compose(single(g), r);
    return r;
}

Morphism multi_split(int i, const std::vector<int>& parts) {
    std::vector<int> p;
    for (int x : parts)
        if (x) p.push_back(x);
    int tot = std::accumulate(p.begin(), p.end(), 0);
    Morphism r = m_id(i, tot);
    Word right;
    // peel off the leftmost part each time
    int rest = tot;
    Word left;
    for (size_t k = 0; k + 1 < p.size(); ++k) {
        r = compose(embed(left, m_split(i, p[k], rest - p[k]), {}), r);
        left.push_back({i, p[k]});
        rest -= p[k];
    }
    return r;
}

Morphism multi_merge(int i, const std::vector<int>& parts) {
    std::vector<int> p;
    for (int x : parts)
        if (x) p.push_back(x);
    int tot = std::accumulate(p.begin(), p.end(), 0);
    Word src;
    for (int x : p) src.push_back({i, x});
    Morphism r = identity(src);
    // merge from the right
    for (int k = (int)p.size() - 2; k >= 0; --k) {
        Word left(src.begin(), src.begin() + k);
        int rest = 0;
        for (size_t q = k + 1; q < p.size(); ++q) rest += p[q];
        r = compose(embed(left, m_merge(i, p[k], rest), {}), r);
    }
    (void)tot;
    return r;
}

Morphism full_split(const Word& w) {
    Morphism r = identity({});
    for (auto& s : w) r = tensor(r, multi_split(s.c, std::vector<int>(s.x, 1)));
    return r;
}

Morphism full_merge(const Word& w) {
    Morphism r = identity({});
    for (auto& s : w) r = tensor(r, multi_merge(s.c, std::vector<int>(s.x, 1)));
    return r;
}

Morphism explode(const Morphism& f) { return compose(full_split(f.tgt), compose(f, full_merge(f.src))); }

Morphism contract(const Morphism& f, const Word& src, const Word& tgt) {
    return compose(full_merge(tgt), compose(f, full_split(src)));
}

Morphism boxed(const Algebra& A, int i, int j, const Elem& f, int m) {
    if (m <= 1 || A.elem_in_sub(f)) return m_coupon(A, i, j, f, m);
    Morphism mid = identity({});
    for (int k = 0; k < m; ++k) mid = tensor(mid, m_coupon(A, i, j, f, 1));
    return compose(multi_merge(j, std::vector<int>(m, 1)), compose(mid, multi_split(i, std::vector<int>(m, 1))));
}

bool is_great(const Algebra& A) {
    if (A.great_cache < 0) A.great_cache = check_great_pair(A).ok() ? 1 : 0;
    return A.great_cache == 1;
}

// restricted compositions of x over the basis list (odd entries at most once)
static void restricted_comps(const Algebra& A, const std::vector<int>& B, int x, size_t k, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (k == B.size()) {
        if (x == 0) out.push_back(cur);
        return;
    }
    int cap = A.basis[B[k]].parity ? std::min(1, x) : x;
    for (int m = 0; m <= cap; ++m) {
        cur[k] = m;
        restricted_comps(A, B, x - m, k + 1, cur, out);
    }
    cur[k] = 0;
}

Morphism teleporter(const Algebra& A, int i, int j, int x, const Word& ctx, bool twisted) {
    if (!is_great(A)) throw Error(Err::NotGreatPair, "teleporter needs a Frobenius great pair");
    Word src{{i, x}}, tgt{{j, x}};
    src.insert(src.end(), ctx.begin(), ctx.end());
    tgt.insert(tgt.end(), ctx.begin(), ctx.end());
    src.push_back({j, x});
    tgt.push_back({i, x});
    Morphism r(reduced(src), reduced(tgt));
    const auto& B = A.block(j, i);
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(B.size(), 0);
    restricted_comps(A, B, x, 0, cur, comps);
    for (auto& mu : comps) {
        Q num = 1, den = 1;
        std::vector<int> supp;  // decreasing
        for (int k = (int)B.size() - 1; k >= 0; --k)
            if (mu[k]) supp.push_back(k);
        for (int k : supp) {
            Q f = factorial(mu[k]);
            den *= f;
            if (A.basis[B[k]].in_sub) num *= f;
            if (A.elem_in_sub(A.dual(B[k]))) num *= f;
        }
        Q coef = num / den;
        if (!is_integer(coef)) throw Error(Err::NotGreatPair, "non-integral teleporter coefficient");
        std::vector<int> lp, rp;
        Morphism ld = identity({}), rd = identity({});
        for (int k : supp) {
            lp.push_back(mu[k]);
            Elem f = A.unit(B[k]);
            if (twisted) f = A.psi_inv(f);
            ld = tensor(ld, boxed(A, i, j, f, mu[k]));
        }
        for (auto it = supp.rbegin(); it != supp.rend(); ++it) {
            rp.push_back(mu[*it]);
            rd = tensor(rd, boxed(A, j, i, A.dual(B[*it]), mu[*it]));
        }
        Morphism left = compose(multi_merge(j, lp), compose(ld, multi_split(i, lp)));
        Morphism right = compose(multi_merge(i, rp), compose(rd, multi_split(j, rp)));
        if (x == 0) {
            left = identity({});
            right = identity({});
        }
        r += tensor(tensor(left, identity(ctx)), right) * coef;
    }
    return r;
}

// ---------------------------------------------------------------- double coset matrices

int DCM::degree() const {
    int d = 0;
    for (auto& row : e)
        for (auto& pc : row)
            for (auto& [tb, m] : pc) d += tb.first * m;
    return d;
}

bool DCM::operator<(const DCM& o) const { return std::tie(src, tgt, e) < std::tie(o.src, o.tgt, o.e); }

void validate(const Algebra& A, const DCM& m) {
    auto bad = [](const std::string& s) { throw Error(Err::InvalidMatrix, s); };
    if (m.e.size() != m.src.size()) bad("row count");
    std::vector<int> col(m.tgt.size(), 0);
    for (size_t r = 0; r < m.src.size(); ++r) {
        if (m.e[r].size() != m.tgt.size()) bad("column count");
        int row = 0;
        for (size_t s = 0; s < m.tgt.size(); ++s)
            for (auto& [tb, k] : m.e[r][s]) {
                auto [t, b] = tb;
                if (t < 0 || k < 0 || b < 0 || b >= A.dim()) bad("entry out of range");
                if (A.basis[b].src != m.src[r].c || A.basis[b].tgt != m.tgt[s].c) bad("entry not in the right block");
                if (A.basis[b].parity && k > 1) bad("odd entry with multiplicity > 1");
                row += k;
                col[s] += k;
            }
        if (row != m.src[r].x) bad("row sum");
    }
    for (size_t s = 0; s < m.tgt.size(); ++s)
        if (col[s] != m.tgt[s].x) bad("column sum");
}

namespace {

struct Piece {
    int r, s, t, b, m;  // source row, target column, dots, label, thickness
};

// sub-strands in bottom order: r ascending, s ascending, supp decreasing
std::vector<Piece> pieces(const Algebra& A, const DCM& mu, bool cabled) {
    std::vector<Piece> out;
    for (size_t r = 0; r < mu.src.size(); ++r)
        for (size_t s = 0; s < mu.tgt.size(); ++s) {
            auto& pc = mu.e[r][s];
            for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
                auto [t, b] = it->first;
                int m = it->second;
                if (!m) continue;
                if (cabled || (m > 1 && !A.basis[b].in_sub))
                    for (int k = 0; k < m; ++k) out.push_back({(int)r, (int)s, t, b, 1});
                else
                    out.push_back({(int)r, (int)s, t, b, m});
            }
        }
    return out;
}

// top order: s ascending, then r, stable
std::vector<int> top_order(const std::vector<Piece>& P) {
    std::vector<int> idx(P.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (P[a].s != P[b].s) return P[a].s < P[b].s;
        return P[a].r < P[b].r;
    });
    return idx;  // idx[topPos] = bottom piece
}

}  // namespace

Morphism eta(const Algebra& A, const DCM& mu) {
    validate(A, mu);
    auto P = pieces(A, mu, false);
    // split band
    Morphism bottom = identity({});
    for (size_t r = 0; r < mu.src.size(); ++r) {
        std::vector<int> parts;
        for (auto& p : P)
            if (p.r == (int)r) parts.push_back(p.m);
        bottom = tensor(bottom, multi_split(mu.src[r].c, parts));
    }
    // decoration band
    Morphism deco = identity({});
    for (auto& p : P) {
        int i = mu.src[p.r].c, j = mu.tgt[p.s].c;
        deco = tensor(deco, compose(m_coupon(A, i, j, A.unit(p.b), p.m), m_dot(i, p.m, p.t)));
    }
    Morphism f = compose(deco, bottom);
    // routing by adjacent transpositions
    std::vector<int> top = top_order(P);
    std::vector<int> rank(P.size());
    for (size_t k = 0; k < top.size(); ++k) rank[top[k]] = (int)k;
    std::vector<int> cur(P.size());
    std::iota(cur.begin(), cur.end(), 0);
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t a = 0; a + 1 < cur.size(); ++a) {
            if (rank[cur[a]] < rank[cur[a + 1]]) continue;
            Word left, right;
            for (size_t q = 0; q < a; ++q) left.push_back({mu.tgt[P[cur[q]].s].c, P[cur[q]].m});
            for (size_t q = a + 2; q < cur.size(); ++q) right.push_back({mu.tgt[P[cur[q]].s].c, P[cur[q]].m});
            auto& L = P[cur[a]];
            auto& R = P[cur[a + 1]];
            f = compose(embed(left, m_cross(mu.tgt[L.s].c, L.m, mu.tgt[R.s].c, R.m), right), f);
            std::swap(cur[a], cur[a + 1]);
            moved = true;
        }
    }
    // merge band
    Morphism topb = identity({});
    for (size_t s = 0; s < mu.tgt.size(); ++s) {
        std::vector<int> parts;
        for (int k : cur)
            if (P[k].s == (int)s) parts.push_back(P[k].m);
        topb = tensor(topb, multi_merge(mu.tgt[s].c, parts));
    }
    return compose(topb, f);
}

DCM cabling(const Algebra& A, const DCM& mu) {
    auto P = pieces(A, mu, true);
    auto top = top_order(P);
    DCM h;
    for (auto& p : P) h.src.push_back({mu.src[p.r].c, 1});
    for (int k : top) h.tgt.push_back({mu.tgt[P[k].s].c, 1});
    h.e.assign(P.size(), std::vector<PComp>(P.size()));
    for (size_t q = 0; q < top.size(); ++q) h.e[top[q]][q][{P[top[q]].t, P[top[q]].b}] = 1;
    return h;
}

namespace {

void int_matrices(const std::vector<int>& rows, std::vector<int> cols, size_t r, std::vector<std::vector<int>>& cur,
                  const std::function<bool(size_t, size_t)>& allowed, std::vector<std::vector<std::vector<int>>>& out) {
    if (r == rows.size()) {
        for (int c : cols)
            if (c) return;
        out.push_back(cur);
        return;
    }
    // distribute rows[r] among columns
    std::function<void(size_t, int)> go = [&](size_t s, int left) {
        if (s == cols.size()) {
            if (!left) int_matrices(rows, cols, r + 1, cur, allowed, out);
            return;
        }
        int cap = std::min(left, cols[s]);
        if (!allowed(r, s)) cap = 0;
        for (int k = 0; k <= cap; ++k) {
            cur[r][s] = k;
            cols[s] -= k;
            go(s + 1, left - k);
            cols[s] += k;
        }
        cur[r][s] = 0;
    };
    go(0, rows[r]);
}

// restricted P-compositions of size n over labels B with dots t <= tmax, degree <= budget
void pcomps(const Algebra& A, const std::vector<int>& B, int n, int tmax, int budget, std::vector<std::pair<PComp, int>>& out) {
    std::vector<std::pair<int, int>> P;
    for (int t = 0; t <= tmax; ++t)
        for (int b : B) P.push_back({t, b});
    PComp cur;
    std::function<void(size_t, int, int)> go = [&](size_t k, int left, int deg) {
        if (!left) {
            out.push_back({cur, deg});
            return;
        }
        if (k == P.size()) return;
        auto [t, b] = P[k];
        int cap = A.basis[b].parity ? 1 : left;
        cap = std::min(cap, left);
        for (int m = cap; m >= 0; --m) {
            if (deg + t * m > budget) continue;
            if (m) cur[P[k]] = m;
            go(k + 1, left - m, deg + t * m);
            cur.erase(P[k]);
        }
    };
    go(0, n, 0);
}

std::vector<DCM> enumerate(const Algebra& A, const Word& src0, const Word& tgt0, int tmax, int budget) {
    Word src = reduced(src0), tgt = reduced(tgt0);
    std::vector<int> rows, cols;
    for (auto& s : src) rows.push_back(s.x);
    for (auto& s : tgt) cols.push_back(s.x);
    std::vector<std::vector<std::vector<int>>> mats;
    std::vector<std::vector<int>> cur(rows.size(), std::vector<int>(cols.size(), 0));
    int_matrices(rows, cols, 0, cur,
                 [&](size_t r, size_t s) { return !A.block(tgt[s].c, src[r].c).empty(); }, mats);
    std::vector<DCM> out;
    for (auto& N : mats) {
        DCM d{src, tgt, std::vector<std::vector<PComp>>(src.size(), std::vector<PComp>(tgt.size()))};
        std::vector<std::pair<size_t, size_t>> cells;
        for (size_t r = 0; r < src.size(); ++r)
            for (size_t s = 0; s < tgt.size(); ++s)
                if (N[r][s]) cells.push_back({r, s});
        std::function<void(size_t, int)> go = [&](size_t k, int left) {
            if (k == cells.size()) {
                out.push_back(d);
                return;
            }
            auto [r, s] = cells[k];
            std::vector<std::pair<PComp, int>> opts;
            pcomps(A, A.block(tgt[s].c, src[r].c), N[r][s], tmax, left, opts);
            for (auto& [pc, deg] : opts) {
                d.e[r][s] = pc;
                go(k + 1, left - deg);
            }
            d.e[r][s].clear();
        };
        go(0, budget);
    }
    sort_basis(out);
    return out;
}

}  // namespace

std::vector<DCM> enumerate_basis(const Algebra& A, const Word& src, const Word& tgt, int max_degree) {
    return enumerate(A, src, tgt, max_degree, max_degree);
}

std::vector<DCM> enumerate_truncated(const Algebra& A, const Word& src, const Word& tgt, int ell) {
    if (ell < 1) return {};
    return enumerate(A, src, tgt, ell - 1, 1 << 28);
}

// ⋖: affine degree, then the cabled permutation (length, then lexicographic), then the [t,b] labels
void sort_basis(std::vector<DCM>& v) {
    struct Key {
        int deg, len;
        std::vector<int> perm;
        std::vector<std::pair<int, int>> lab;
        DCM mu;
    };
    std::vector<Key> keys;
    keys.reserve(v.size());
    for (auto& mu : v) {
        Key k{mu.degree(), 0, {}, {}, mu};
        // cabling order, computed without an algebra: thickness splitting only affects multiplicities
        std::vector<Piece> P;
        for (size_t r = 0; r < mu.src.size(); ++r)
            for (size_t s = 0; s < mu.tgt.size(); ++s)
                for (auto it = mu.e[r][s].rbegin(); it != mu.e[r][s].rend(); ++it)
                    for (int c = 0; c < it->second; ++c)
                        P.push_back({(int)r, (int)s, it->first.first, it->first.second, 1});
        auto top = top_order(P);
        k.perm.assign(P.size(), 0);
        for (size_t q = 0; q < top.size(); ++q) k.perm[top[q]] = (int)q;
        for (size_t a = 0; a < P.size(); ++a)
            for (size_t b = a + 1; b < P.size(); ++b)
                if (k.perm[a] > k.perm[b]) ++k.len;
        for (auto& p : P) k.lab.push_back({p.t, p.b});
        keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.deg, a.len, a.perm, a.lab, a.mu) < std::tie(b.deg, b.len, b.perm, b.lab, b.mu);
    });
    for (size_t k = 0; k < v.size(); ++k) v[k] = keys[k].mu;
}

}  // namespace fw
