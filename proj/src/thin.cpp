#include "fw/thin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fw {

int TTerm::degree() const { return std::accumulate(t.begin(), t.end(), 0); }

void tadd(TVec& v, const TTerm& k, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = v.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) v.erase(it);
}

void tadd(TVec& v, const TVec& o, const Q& c) {
    if (c == 0) return;
    for (auto& [k, x] : o) tadd(v, k, x * c);
}

static std::vector<int> inverse(const std::vector<int>& w) {
    std::vector<int> r(w.size());
    for (size_t q = 0; q < w.size(); ++q) r[w[q]] = (int)q;
    return r;
}

TTerm ThinEngine::id_term(const std::vector<int>& colors) const {
    TTerm T;
    size_t n = colors.size();
    T.w.resize(n);
    std::iota(T.w.begin(), T.w.end(), 0);
    T.t.assign(n, 0);
    for (size_t q = 0; q < n; ++q) T.b.push_back(A_.idem_basis[colors[q]]);
    return T;
}

std::vector<int> ThinEngine::top_colors(const TTerm& T) const {
    std::vector<int> c(T.w.size());
    for (size_t q = 0; q < T.w.size(); ++q) c[T.w[q]] = A_.basis[T.b[q]].tgt;
    return c;
}

TVec ThinEngine::symmetrizer(const Word& w) const {
    TTerm base = id_term(thin_colors(w));
    TVec out;
    std::vector<std::pair<int, int>> blocks;
    int o = 0;
    for (auto& s : w) {
        blocks.push_back({o, s.x});
        o += s.x;
    }
    std::function<void(size_t, TTerm&)> go = [&](size_t k, TTerm& T) {
        if (k == blocks.size()) {
            tadd(out, T, 1);
            return;
        }
        auto [off, x] = blocks[k];
        std::vector<int> p(x);
        std::iota(p.begin(), p.end(), 0);
        do {
            for (int a = 0; a < x; ++a) T.w[off + a] = off + p[a];
            go(k + 1, T);
        } while (std::next_permutation(p.begin(), p.end()));
        for (int a = 0; a < x; ++a) T.w[off + a] = off + a;
    };
    go(0, base);
    return out;
}

TVec ThinEngine::permute(const TVec& v, const std::vector<int>& pi) const {
    TVec out;
    for (auto& [T, c] : v) {
        TTerm U = T;
        for (auto& x : U.w) x = pi[x];
        tadd(out, U, c);
    }
    return out;
}

void ThinEngine::coupon_term(const TTerm& T, int p, int f, const Q& c, TVec& out) const {
    int q = 0;
    while (T.w[q] != p) ++q;
    int bq = T.b[q];
    if (A_.basis[f].src != A_.basis[bq].tgt) return;
    int par = 0;
    if (A_.basis[f].parity)
        for (int k = 0; k < q; ++k) par += A_.basis[T.b[k]].parity;
    Q s = (par & 1) ? -c : c;
    for (auto& [k, v] : A_.mul_basis(f, bq)) {
        TTerm U = T;
        U.b[q] = k;
        tadd(out, U, s * v);
    }
}

TVec ThinEngine::coupon(const TVec& v, int p, const Elem& f) const {
    TVec out;
    for (auto& [T, c] : v)
        for (auto& [k, x] : f) coupon_term(T, p, k, c * x, out);
    return out;
}

static long long step_limit() {
    static long long lim = [] {
        const char* e = std::getenv("FROBWEB_STEP_LIMIT");
        return e ? std::atoll(e) : 200000000LL;
    }();
    return lim;
}

void ThinEngine::dot_term(const TTerm& T, int p, const Q& c, TVec& out) const {
    auto key = std::make_pair(T, p);
    auto it = dot_cache_.find(key);
    if (it != dot_cache_.end()) {
        tadd(out, it->second, c);
        return;
    }
    static long long steps = 0;
    if (++steps > step_limit()) throw Error(Err::InternalLimit, "rewrite step budget exhausted");

    TVec res;
    int n = (int)T.w.size();
    auto winv = inverse(T.w);
    int k = -1;
    for (int a = 0; a + 1 < n; ++a)
        if (winv[a] > winv[a + 1]) {
            if (k < 0) k = a;
            if (p != a && p != a + 1) {
                k = a;
                break;
            }
        }
    if (k < 0) {
        // identity permutation: the dot slides under the coupon, twisting it by ψ^{-1}
        TTerm U = T;
        U.t[p]++;
        for (auto& [b, v] : A_.psi_inv(A_.unit(T.b[p]))) {
            U.b[p] = b;
            tadd(res, U, v);
        }
    } else {
        std::vector<int> sk(n);
        std::iota(sk.begin(), sk.end(), 0);
        std::swap(sk[k], sk[k + 1]);
        TTerm U = T;  // T = s_k ∘ U
        for (auto& x : U.w) x = sk[x];
        TVec sub;
        int p2 = p == k ? k + 1 : p == k + 1 ? k : p;
        dot_term(U, p2, 1, sub);
        res = permute(sub, sk);
        if (p == k || p == k + 1) {
            // teleporter correction: + for the dot on the right strand, − and twisted on the left
            bool left = p == k;
            auto col = top_colors(U);
            int ci = col[k], cj = col[k + 1];
            for (int b : A_.block(cj, ci)) {
                TVec one;
                for (auto& [d, v] : A_.dual(b)) coupon_term(U, k + 1, d, v, one);
                TVec two;
                Elem lb = left ? A_.psi_inv(A_.unit(b)) : A_.unit(b);
                for (auto& [V, x] : one)
                    for (auto& [e, y] : lb) coupon_term(V, k, e, x * y, two);
                tadd(res, two, left ? -1 : 1);
            }
        }
    }
    auto& slot = dot_cache_[key];
    slot = std::move(res);
    tadd(out, slot, c);
}

TVec ThinEngine::dot(const TVec& v, int p) const {
    TVec out;
    for (auto& [T, c] : v) dot_term(T, p, c, out);
    return out;
}

TVec ThinEngine::compose(const TVec& a, const TVec& b) const {
    TVec out;
    for (auto& [T, c] : a) {
        TVec X = b;
        int n = (int)T.w.size();
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < T.t[q]; ++s) X = dot(X, q);
        for (int q = n - 1; q >= 0; --q)
            if (!A_.is_idem(T.b[q])) X = coupon(X, q, A_.unit(T.b[q]));
        X = permute(X, T.w);
        tadd(out, X, c);
    }
    return out;
}

void ThinEngine::apply_slice(TVec& R, const Word& w, const Slice& sl) const {
    int o = 0;
    for (int k = 0; k < sl.pos; ++k) o += w[k].x;
    int n = width(w);
    const Gen& g = sl.g;
    switch (g.k) {
        case GK::Split: break;
        case GK::Merge: {
            int x = g.x, y = g.y;
            TVec out;
            std::vector<int> sel(x + y, 0);
            std::fill(sel.begin() + y, sel.end(), 1);  // 1 marks a final position of the left block
            do {
                std::vector<int> pi(n);
                std::iota(pi.begin(), pi.end(), 0);
                int a = 0, b = x;
                for (int k = 0; k < x + y; ++k) {
                    if (sel[k])
                        pi[o + a++] = o + k;
                    else
                        pi[o + b++] = o + k;
                }
                tadd(out, permute(R, pi));
            } while (std::next_permutation(sel.begin(), sel.end()));
            R = std::move(out);
            break;
        }
        case GK::Cross: {
            std::vector<int> pi(n);
            std::iota(pi.begin(), pi.end(), 0);
            for (int k = 0; k < g.x; ++k) pi[o + k] = o + g.y + k;
            for (int k = 0; k < g.y; ++k) pi[o + g.x + k] = o + k;
            R = permute(R, pi);
            break;
        }
        case GK::Coupon:
            for (int k = g.x - 1; k >= 0; --k) R = coupon(R, o + k, g.f);
            break;
        case GK::Dot:
            for (int k = 0; k < g.x; ++k) R = dot(R, o + k);
            break;
    }
}

TVec ThinEngine::explode(const Morphism& f) const {
    TVec out;
    for (auto& [D, c] : f.t) {
        TVec R = symmetrizer(D.src);
        Word w = D.src;
        for (auto& sl : D.s) {
            apply_slice(R, w, sl);
            Word nw(w.begin(), w.begin() + sl.pos);
            Word gt = sl.g.tgt();
            nw.insert(nw.end(), gt.begin(), gt.end());
            nw.insert(nw.end(), w.begin() + sl.pos + sl.g.src().size(), w.end());
            w = std::move(nw);
        }
        tadd(out, R, c);
    }
    return out;
}

TTerm ThinEngine::from_dcm(const DCM& mu) const {
    TTerm T;
    size_t n = mu.src.size();
    T.w.assign(n, -1);
    T.t.assign(n, 0);
    T.b.assign(n, 0);
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < mu.tgt.size(); ++s)
            for (auto& [tb, m] : mu.e[r][s]) {
                T.w[r] = (int)s;
                T.t[r] = tb.first;
                T.b[r] = tb.second;
            }
    return T;
}

DCM ThinEngine::to_dcm(const TTerm& T, const std::vector<int>& src, const std::vector<int>& tgt) const {
    DCM mu;
    for (int c : src) mu.src.push_back({c, 1});
    for (int c : tgt) mu.tgt.push_back({c, 1});
    mu.e.assign(src.size(), std::vector<PComp>(tgt.size()));
    for (size_t q = 0; q < src.size(); ++q) mu.e[q][T.w[q]][{T.t[q], T.b[q]}] = 1;
    return mu;
}

}  // namespace fw
