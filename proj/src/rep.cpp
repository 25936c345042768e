#include "fw/rep.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace fw {

namespace {

int sgn(int parity) { return parity & 1 ? -1 : 1; }

template <class K>
void madd(std::map<K, Q>& v, const K& k, const Q& c) {
    if (c == 0) return;
    Q& s = v[k];
    s += c;
    if (s == 0) v.erase(k);
}

}  // namespace

void kadd(KVec& v, const Key& k, const Q& c) { madd(v, k, c); }
void sadd(SVec& v, const State& s, const Q& c) { madd(v, s, c); }

std::vector<std::tuple<int, int, Elem>> gl_bracket(const Algebra& A, const GlGen& g, const GlGen& h) {
    std::vector<std::tuple<int, int, Elem>> out;
    if (g.s == h.r) out.emplace_back(g.r, h.s, A.mul_basis(g.b, h.b));
    if (h.s == g.r)
        out.emplace_back(h.r, g.s, scaled(A.mul_basis(h.b, g.b), Q(-sgn(A.basis[g.b].parity * A.basis[h.b].parity))));
    return out;
}

std::string Module::key_str(const Key& k) const {
    std::string s = "[";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + "]";
}

void Module::act_elem(const Key& k, int r, int s, const Elem& f, const Q& c, KVec& out) const {
    for (auto& [b, v] : f) act(k, GlGen{r, s, b}, c * v, out);
}

// ---------------------------------------------------------------- V

void NaturalModule::act(const Key& k, const GlGen& g, const Q& c, KVec& out) const {
    if (k[0] != g.r) return;
    for (auto& [d, v] : A_.mul_basis(k[1], g.b)) kadd(out, Key{g.s, d}, c * v);
}

std::vector<Key> NaturalModule::basis() const {
    std::vector<Key> r;
    for (int t = 0; t < n_; ++t)
        for (int b = 0; b < A_.dim(); ++b) r.push_back({t, b});
    return r;
}

std::string NaturalModule::key_str(const Key& k) const {
    return "v" + std::to_string(k[0] + 1) + "^" + A_.basis[k[1]].name;
}

// ---------------------------------------------------------------- tensor

std::pair<Key, Key> TensorModule::unpack(const Key& k) const {
    return {Key(k.begin() + 1, k.begin() + 1 + k[0]), Key(k.begin() + 1 + k[0], k.end())};
}

Key TensorModule::pack(const Key& a, const Key& b) {
    Key k{(int)a.size()};
    k.insert(k.end(), a.begin(), a.end());
    k.insert(k.end(), b.begin(), b.end());
    return k;
}

int TensorModule::parity(const Key& k) const {
    auto [a, b] = unpack(k);
    return (a_->parity(a) + b_->parity(b)) & 1;
}

void TensorModule::act(const Key& k, const GlGen& g, const Q& c, KVec& out) const {
    auto [a, b] = unpack(k);
    KVec t;
    a_->act(a, g, c * sgn(A_.basis[g.b].parity * b_->parity(b)), t);
    for (auto& [x, v] : t) kadd(out, pack(x, b), v);
    t.clear();
    b_->act(b, g, c, t);
    for (auto& [y, v] : t) kadd(out, pack(a, y), v);
}

std::vector<Key> TensorModule::basis() const {
    std::vector<Key> r;
    for (auto& a : a_->basis())
        for (auto& b : b_->basis()) r.push_back(pack(a, b));
    return r;
}

std::string TensorModule::key_str(const Key& k) const {
    auto [a, b] = unpack(k);
    return a_->key_str(a) + "⊗" + b_->key_str(b);
}

// ---------------------------------------------------------------- Verma

Key VermaModule::encode(const HMono& x, const LMono& y) {
    Key k{(int)x.size()};
    for (auto& h : x) k.insert(k.end(), h.begin(), h.end());
    for (auto& e : y) k.insert(k.end(), e.begin(), e.end());
    return k;
}

std::pair<VermaModule::HMono, VermaModule::LMono> VermaModule::decode(const Key& k) {
    HMono x;
    LMono y;
    size_t p = 1;
    for (int i = 0; i < k[0]; ++i, p += 2) x.push_back({k[p], k[p + 1]});
    for (; p < k.size(); p += 3) y.push_back({k[p], k[p + 1], k[p + 2]});
    return {x, y};
}

int VermaModule::parity(const Key& k) const {
    auto [x, y] = decode(k);
    int p = 0;
    for (auto& h : x) p += A_.basis[h[1]].parity;
    for (auto& e : y) p += A_.basis[e[2]].parity;
    return p & 1;
}

std::vector<Key> VermaModule::basis() const { throw Error(Err::InvalidParams, "the Verma module has no finite basis"); }

std::string VermaModule::key_str(const Key& k) const {
    auto [x, y] = decode(k);
    std::string s;
    for (auto& h : x) s += (s.empty() ? "" : "·") + ("h" + std::to_string(h[0] + 1) + "^" + A_.basis[h[1]].name);
    if (s.empty()) s = "1";
    std::string t;
    for (auto& e : y)
        t += (t.empty() ? "" : "·") +
             ("E" + std::to_string(e[0] + 1) + std::to_string(e[1] + 1) + "^" + A_.basis[e[2]].name);
    if (t.empty()) t = "1";
    return "(" + s + "⊗" + t + ")";
}

void VermaModule::h_mul(const HMono& x, int k, int a, const Q& c, std::map<HMono, Q>& out) const {
    if (c == 0) return;
    std::array<int, 2> h{k, a};
    int pa = A_.basis[a].parity;
    if (x.empty() || x.back() < h || (x.back() == h && !pa)) {
        HMono y = x;
        y.push_back(h);
        madd(out, y, c);
        return;
    }
    HMono xp(x.begin(), x.end() - 1);
    auto e = x.back();
    if (e == h) {  // odd square: (h^a)^2 = h^{a²}
        for (auto& [d, v] : A_.mul_basis(a, a)) h_mul(xp, k, d, c * v, out);
        return;
    }
    int s = sgn(A_.basis[e[1]].parity * pa);
    std::map<HMono, Q> tmp;
    h_mul(xp, k, a, Q(1), tmp);
    for (auto& [y, v] : tmp) h_mul(y, e[0], e[1], c * v * s, out);
    if (e[0] == k) {
        Elem br = A_.mul_basis(e[1], a);
        add_to(br, A_.mul_basis(a, e[1]), Q(-s));
        for (auto& [d, v] : br) h_mul(xp, k, d, c * v, out);
    }
}

void VermaModule::l_mul(const LMono& y, const std::array<int, 3>& e, const Q& c, std::map<LMono, Q>& out) const {
    if (c == 0) return;
    int pe = A_.basis[e[2]].parity;
    if (y.empty() || y.back() < e || (y.back() == e && !pe)) {
        LMono z = y;
        z.push_back(e);
        madd(out, z, c);
        return;
    }
    if (y.back() == e) return;  // odd off-diagonal square vanishes
    LMono yp(y.begin(), y.end() - 1);
    auto f = y.back();
    int s = sgn(A_.basis[f[2]].parity * pe);
    std::map<LMono, Q> tmp;
    l_mul(yp, e, Q(1), tmp);
    for (auto& [z, v] : tmp) l_mul(z, f, c * v * s, out);
    for (auto& [r, t, E] : gl_bracket(A_, GlGen{f[0], f[1], f[2]}, GlGen{e[0], e[1], e[2]}))
        for (auto& [d, v] : E) l_mul(yp, {r, t, d}, c * v, out);
}

void VermaModule::apply(const HMono& x, const LMono& y, const GlGen& g, const Q& c, VV& out) const {
    if (c == 0) return;
    if (g.r > g.s) {
        std::map<LMono, Q> t;
        l_mul(y, {g.r, g.s, g.b}, c, t);
        for (auto& [z, v] : t) madd(out, std::make_pair(x, z), v);
        return;
    }
    if (y.empty()) {
        if (g.r != g.s) return;  // upper part kills the highest weight line
        std::map<HMono, Q> t;
        h_mul(x, g.r, g.b, c, t);
        for (auto& [z, v] : t) madd(out, std::make_pair(z, LMono{}), v);
        return;
    }
    // Y'e·g = ±Y'g·e + Y'[e,g]
    auto e = y.back();
    LMono yp(y.begin(), y.end() - 1);
    int s = sgn(A_.basis[e[2]].parity * A_.basis[g.b].parity);
    VV tmp;
    apply(x, yp, g, Q(1), tmp);
    for (auto& [xy, v] : tmp) apply(xy.first, xy.second, GlGen{e[0], e[1], e[2]}, c * v * s, out);
    for (auto& [r, t, E] : gl_bracket(A_, GlGen{e[0], e[1], e[2]}, g))
        for (auto& [d, v] : E) apply(x, yp, GlGen{r, t, d}, c * v, out);
}

void VermaModule::act(const Key& k, const GlGen& g, const Q& c, KVec& out) const {
    auto [x, y] = decode(k);
    VV t;
    apply(x, y, g, c, t);
    for (auto& [xy, v] : t) kadd(out, encode(xy.first, xy.second), v);
}

std::shared_ptr<Module> make_module(const Algebra& A, int n, const std::string& kind) {
    if (kind == "trivial") return std::make_shared<TrivialModule>(A, n);
    if (kind == "V") return std::make_shared<NaturalModule>(A, n);
    if (kind == "VV")
        return std::make_shared<TensorModule>(std::make_shared<NaturalModule>(A, n), std::make_shared<NaturalModule>(A, n));
    if (kind == "verma") return std::make_shared<VermaModule>(A, n);
    throw Error(Err::InvalidParams, "unknown module '" + kind + "' (trivial, V, VV, verma)");
}

// ---------------------------------------------------------------- symmetric powers

int mono_parity(const Algebra& A, const Mono& m) {
    int p = 0;
    for (auto& f : m) p += A.basis[f.second].parity;
    return p & 1;
}

Q sort_mono(const Algebra& A, Mono& m) {
    int s = 1;
    for (size_t i = 1; i < m.size(); ++i)
        for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
            if (A.basis[m[j].second].parity && A.basis[m[j - 1].second].parity) s = -s;
            std::swap(m[j], m[j - 1]);
        }
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && A.basis[m[i].second].parity) return Q(0);
    return Q(s);
}

std::vector<Mono> sym_basis(const Algebra& A, int i, int x, int n) {
    std::vector<std::pair<int, int>> gens;
    for (int t = 0; t < n; ++t)
        for (int b = 0; b < A.dim(); ++b)
            if (A.basis[b].tgt == i) gens.push_back({t, b});
    std::vector<Mono> out;
    Mono cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if ((int)cur.size() == x) {
            out.push_back(cur);
            return;
        }
        for (size_t g = from; g < gens.size(); ++g) {
            cur.push_back(gens[g]);
            rec(A.basis[gens[g].second].parity ? g + 1 : g);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

void sym_act(const Algebra& A, const Mono& m, const GlGen& g, const Q& c, std::map<Mono, Q>& out) {
    int pg = A.basis[g.b].parity, after = mono_parity(A, m);
    for (size_t u = 0; u < m.size(); ++u) {
        after = (after + A.basis[m[u].second].parity) & 1;  // parity of factors right of u
        if (m[u].first != g.r) continue;
        for (auto& [d, v] : A.mul_basis(m[u].second, g.b)) {
            Mono z = m;
            z[u] = {g.s, d};
            Q s = sort_mono(A, z);
            madd(out, z, c * v * s * sgn(pg * after));
        }
    }
}

void mono_product(const Algebra& A, const std::vector<std::pair<int, Elem>>& fs, const Q& c, std::map<Mono, Q>& out) {
    Mono cur;
    std::function<void(size_t, Q)> rec = [&](size_t u, Q coef) {
        if (u == fs.size()) {
            Mono z = cur;
            Q s = sort_mono(A, z);
            madd(out, z, coef * s);
            return;
        }
        for (auto& [b, v] : fs[u].second) {
            cur.push_back({fs[u].first, b});
            rec(u + 1, coef * v);
            cur.pop_back();
        }
    };
    if (c != 0) rec(0, c);
}

std::string mono_str(const Algebra& A, const Mono& m) {
    if (m.empty()) return "1";
    std::string s;
    for (auto& [t, b] : m) s += (s.empty() ? "" : "·") + ("v" + std::to_string(t + 1) + "^" + A.basis[b].name);
    return s;
}

std::string state_str(const Module& M, const State& s) {
    std::string r = M.key_str(s.m);
    for (auto& w : s.w) r += " ⊗ " + mono_str(M.algebra(), w);
    return r;
}

std::vector<std::vector<std::vector<int>>> good_partitions(int k) {
    std::vector<int> u(k);
    std::iota(u.begin(), u.end(), 0);
    std::vector<std::vector<std::vector<int>>> out;
    do {
        std::vector<std::vector<int>> blocks(1);
        for (int p = 0; p < k; ++p) {
            blocks.back().push_back(u[p]);
            if (u[p] == *std::min_element(u.begin() + p, u.end()) && p + 1 < k) blocks.emplace_back();
        }
        out.push_back(blocks);
    } while (std::next_permutation(u.begin(), u.end()));
    return out;
}

// ---------------------------------------------------------------- evaluation

std::vector<State> Rep::basis(const Word& w) const {
    std::vector<State> out;
    for (auto& k : M_->basis()) out.push_back(State{k, {}});
    for (auto& s : w) {
        auto sb = sym_basis(A_, s.c, s.x, n_);
        std::vector<State> nx;
        for (auto& st : out)
            for (auto& m : sb) {
                State z = st;
                z.w.push_back(m);
                nx.push_back(std::move(z));
            }
        out = std::move(nx);
    }
    return out;
}

void Rep::prefix_act(const State& s, int q, const GlGen& g, const Q& c, SVec& out) const {
    if (c == 0) return;
    int pg = A_.basis[g.b].parity, after = 0;
    for (int j = 0; j < q; ++j) after += mono_parity(A_, s.w[j]);
    KVec mk;
    M_->act(s.m, g, c * sgn(pg * after), mk);
    for (auto& [k, v] : mk) {
        State z{k, s.w};
        sadd(out, z, v);
    }
    for (int j = 0; j < q; ++j) {
        after -= mono_parity(A_, s.w[j]);
        std::map<Mono, Q> t;
        sym_act(A_, s.w[j], g, c * sgn(pg * after), t);
        for (auto& [m, v] : t) {
            State z = s;
            z.w[j] = m;
            sadd(out, z, v);
        }
    }
}

void Rep::prefix_act_elem(const State& s, int q, int r, int t, const Elem& f, const Q& c, SVec& out) const {
    for (auto& [b, v] : f) prefix_act(s, q, GlGen{r, t, b}, c * v, out);
}

void Rep::act(const State& s, const GlGen& g, const Q& c, SVec& out) const { prefix_act(s, (int)s.w.size(), g, c, out); }

void Rep::casimir(const State& s, int p, const Q& c, SVec& out) const {
    const Mono& f = s.w[p];
    int k = (int)f.size();
    if (!k) return;
    int i = A_.basis[f[0].second].tgt;
    std::vector<int> Bi;
    for (int b = 0; b < A_.dim(); ++b)
        if (A_.basis[b].src == i) Bi.push_back(b);
    static thread_local std::map<int, std::vector<std::vector<std::vector<int>>>> parts_cache;
    auto& parts = parts_cache.try_emplace(k, good_partitions(k)).first->second;

    State pre{s.m, std::vector<Mono>(s.w.begin(), s.w.begin() + p)};
    std::vector<int> b(k, 0), r(k, 0);
    std::vector<Elem> g(k);
    std::vector<int> pg(k);
    auto par = [&](int x) { return A_.basis[x].parity; };

    std::function<void(int)> over_b = [&](int u) {
        if (u < k) {
            for (int x : Bi) {
                g[u] = A_.mul_basis(x, f[u].second);
                if (g[u].empty()) continue;
                b[u] = x;
                pg[u] = par(x) + par(f[u].second);
                over_b(u + 1);
            }
            return;
        }
        int s1 = 0;
        for (int a = 0; a < k; ++a)
            for (int z = a; z < k; ++z) s1 += par(b[a]) * par(f[z].second);
        for (auto& P : parts) {
            std::vector<int> u;
            for (auto& bl : P) u.insert(u.end(), bl.begin(), bl.end());
            int s2 = 0;
            for (int a = 0; a < k; ++a)
                for (int z = a + 1; z < k; ++z)
                    if (u[a] > u[z]) s2 += pg[u[a]] * pg[u[z]];
            // r at block heads is free, the rest is forced by the δ-chain
            std::vector<int> heads;
            for (auto& bl : P) heads.push_back(bl[0]);
            std::vector<int> hv(heads.size(), 0);
            for (;;) {
                for (size_t h = 0; h < P.size(); ++h) {
                    auto& bl = P[h];
                    r[bl[0]] = hv[h];
                    for (size_t a = 1; a < bl.size(); ++a) r[bl[a]] = f[bl[a - 1]].first;
                }
                SVec cur{{pre, Q(sgn(s1 + s2))}};
                for (auto& bl : P) {
                    Elem prod = g[bl[0]];
                    for (size_t a = 1; a < bl.size(); ++a) prod = A_.mul(prod, g[bl[a]]);
                    SVec nx;
                    if (!prod.empty())
                        for (auto& [st, v] : cur) prefix_act_elem(st, p, r[bl[0]], f[bl.back()].first, prod, v, nx);
                    cur = std::move(nx);
                    if (cur.empty()) break;
                }
                if (!cur.empty()) {
                    std::vector<std::pair<int, Elem>> fs;
                    for (int a = k - 1; a >= 0; --a) fs.push_back({r[a], A_.dual(b[a])});
                    std::map<Mono, Q> mm;
                    mono_product(A_, fs, Q(1), mm);
                    for (auto& [st, v] : cur)
                        for (auto& [mo, w] : mm) {
                            State z = st;
                            z.w.push_back(mo);
                            z.w.insert(z.w.end(), s.w.begin() + p + 1, s.w.end());
                            sadd(out, z, c * v * w);
                        }
                }
                size_t h = 0;
                while (h < hv.size() && ++hv[h] == n_) hv[h++] = 0;
                if (h == hv.size()) break;
            }
        }
    };
    over_b(0);
}

void Rep::apply_gen(const State& s, int p, const Gen& g, const Q& c, SVec& out) const {
    switch (g.k) {
    case GK::Split: {
        const Mono& m = s.w[p];
        int tot = (int)m.size();
        for (int mask = 0; mask < (1 << tot); ++mask) {
            if (__builtin_popcount(mask) != g.x) continue;
            Mono T, U;
            int eps = 0, oddU = 0;
            for (int q = 0; q < tot; ++q) {
                int odd = A_.basis[m[q].second].parity;
                if (mask >> q & 1) {
                    T.push_back(m[q]);
                    if (odd) eps += oddU;
                } else {
                    U.push_back(m[q]);
                    oddU += odd;
                }
            }
            State z = s;
            z.w[p] = T;
            z.w.insert(z.w.begin() + p + 1, U);
            sadd(out, z, c * sgn(eps));
        }
        break;
    }
    case GK::Merge: {
        Mono m = s.w[p];
        m.insert(m.end(), s.w[p + 1].begin(), s.w[p + 1].end());
        Q sg = sort_mono(A_, m);
        if (sg == 0) break;
        State z = s;
        z.w[p] = m;
        z.w.erase(z.w.begin() + p + 1);
        sadd(out, z, c * sg);
        break;
    }
    case GK::Cross: {
        State z = s;
        std::swap(z.w[p], z.w[p + 1]);
        sadd(out, z, c * sgn(mono_parity(A_, s.w[p]) * mono_parity(A_, s.w[p + 1])));
        break;
    }
    case GK::Coupon: {
        int before = M_->parity(s.m);
        for (int q = 0; q < p; ++q) before += mono_parity(A_, s.w[q]);
        std::map<Mono, Q> mm;
        if (s.w[p].size() == 1) {  // linear in f: split into homogeneous parts
            auto [t, b] = s.w[p][0];
            for (auto& [e, v] : g.f) {
                int pe = A_.basis[e].parity;
                mono_product(A_, {{t, A_.mul_basis(e, b)}}, c * v * sgn(pe * before), mm);
            }
        } else {
            std::vector<std::pair<int, Elem>> fs;
            for (auto& [t, b] : s.w[p]) fs.push_back({t, A_.mul(g.f, A_.unit(b))});
            mono_product(A_, fs, c * sgn(A_.parity(g.f) * before), mm);
        }
        for (auto& [mo, v] : mm) {
            State z = s;
            z.w[p] = mo;
            sadd(out, z, v);
        }
        break;
    }
    case GK::Dot:
        casimir(s, p, c, out);
        break;
    }
}

SVec Rep::apply_slice(const Slice& sl, const SVec& v) const {
    SVec nx;
    for (auto& [s, c] : v) apply_gen(s, sl.pos, sl.g, c, nx);
    return nx;
}

SVec Rep::apply(const Diagram& d, const SVec& v) const {
    SVec cur = v;
    for (auto& sl : d.s) {
        cur = apply_slice(sl, cur);
        if (cur.empty()) break;
    }
    return cur;
}

// diagrams sorted by slice sequence share the evaluation of common bottom parts
SVec Rep::apply(const Morphism& f, const SVec& v) const {
    std::vector<std::pair<const std::vector<Slice>*, Q>> ds;
    for (auto& [d, c] : f.t) ds.push_back({&d.s, c});
    std::sort(ds.begin(), ds.end(), [](auto& a, auto& b) { return *a.first < *b.first; });
    SVec out;
    std::vector<SVec> stack{v};
    const std::vector<Slice>* prev = nullptr;
    for (auto& [s, c] : ds) {
        size_t common = 0;
        if (prev)
            while (common < prev->size() && common < s->size() && (*prev)[common] == (*s)[common]) ++common;
        stack.resize(std::min(common, stack.size() - 1) + 1);
        while (stack.size() <= s->size()) stack.push_back(apply_slice((*s)[stack.size() - 1], stack.back()));
        for (auto& [st, x] : stack.back()) sadd(out, st, c * x);
        prev = s;
    }
    return out;
}

Matrix to_matrix(const std::vector<State>& rows, const std::vector<State>& cols, const std::vector<SVec>& images) {
    Matrix m{rows, cols, {}};
    std::map<State, int> idx;
    for (size_t i = 0; i < rows.size(); ++i) idx[rows[i]] = (int)i;
    for (size_t j = 0; j < images.size(); ++j)
        for (auto& [s, v] : images[j]) {
            auto it = idx.find(s);
            if (it == idx.end()) throw Error(Err::InternalLimit, "image outside the target basis");
            m.e[{it->second, (int)j}] = v;
        }
    return m;
}

bool has_dots(const Morphism& f) {
    for (auto& [d, c] : f.t)
        for (auto& sl : d.s)
            if (sl.g.k == GK::Dot) return true;
    return false;
}

// Without dots only the parity of the module factor is read, so one representative per parity suffices.
std::map<int, Key> Rep::parity_reps() const {
    std::map<int, Key> r;
    for (auto& k : M_->basis()) r.try_emplace(M_->parity(k), k);
    return r;
}

Matrix Rep::evaluate(const Morphism& f) const {
    auto cols = basis(f.src);
    bool dotfree = !has_dots(f);
    auto reps = parity_reps();
    std::map<State, SVec> done;
    std::vector<SVec> imgs;
    for (auto& s : cols) {
        if (!dotfree) {
            imgs.push_back(apply(f, SVec{{s, Q(1)}}));
            continue;
        }
        State r = s;
        r.m = reps.at(M_->parity(s.m));
        auto it = done.find(r);
        if (it == done.end()) it = done.emplace(r, apply(f, SVec{{r, Q(1)}})).first;
        SVec img;
        for (auto& [st, v] : it->second) {
            State z = st;
            z.m = s.m;
            img[z] = v;
        }
        imgs.push_back(std::move(img));
    }
    return to_matrix(basis(f.tgt), cols, imgs);
}

std::string matrix_json(const Module& M, const Matrix& m) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    j["cols"] = nlohmann::json::array();
    for (auto& s : m.rows) j["rows"].push_back(state_str(M, s));
    for (auto& s : m.cols) j["cols"].push_back(state_str(M, s));
    j["entries"] = nlohmann::json::array();
    for (auto& [rc, v] : m.e) j["entries"].push_back({rc.first, rc.second, qstr(v)});
    return j.dump();
}

// ---------------------------------------------------------------- checks

static std::vector<GlGen> all_gens(const Algebra& A, int n) {
    std::vector<GlGen> g;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int b = 0; b < A.dim(); ++b) g.push_back({r, s, b});
    return g;
}

static SVec act_vec(const Rep& R, const SVec& v, const GlGen& g) {
    SVec o;
    for (auto& [s, c] : v) R.act(s, g, c, o);
    return o;
}

static void add_vec(SVec& a, const SVec& b, const Q& c) {
    for (auto& [s, v] : b) sadd(a, s, c * v);
}

Report check_bracket(const Rep& R, const Word& w, int max_vectors) {
    const Algebra& A = R.module().algebra();
    Report rep;
    auto B = R.basis(w);
    if (max_vectors >= 0 && (int)B.size() > max_vectors) B.resize(max_vectors);
    auto G = all_gens(A, R.n());
    int bad = 0, tot = 0;
    std::string first;
    for (auto& s : B) {
        SVec v{{s, Q(1)}};
        std::map<GlGen, SVec> once;
        for (auto& g : G) once[g] = act_vec(R, v, g);
        for (auto& g : G)
            for (auto& h : G) {
                SVec lhs = act_vec(R, once[g], h);
                add_vec(lhs, act_vec(R, once[h], g), Q(-sgn(A.basis[g.b].parity * A.basis[h.b].parity)));
                for (auto& [r, t, E] : gl_bracket(A, g, h))
                    for (auto& [d, c] : E) add_vec(lhs, act_vec(R, v, GlGen{r, t, d}), -c);
                ++tot;
                if (!lhs.empty() && !bad++)
                    first = state_str(R.module(), s) + " with E" + std::to_string(g.r + 1) + std::to_string(g.s + 1) +
                            "^" + A.basis[g.b].name + ", E" + std::to_string(h.r + 1) + std::to_string(h.s + 1) + "^" +
                            A.basis[h.b].name;
            }
    }
    rep.add("bracket on " + R.module().name() + " ⊗ " + word_str(A, w), bad == 0,
            std::to_string(tot) + " pairs" + (bad ? ", first failure " + first : ""));
    return rep;
}

// direct thin formula, used to cross-check the k = 1 case
static SVec thin_casimir(const Rep& R, const State& s, int p) {
    const Algebra& A = R.module().algebra();
    SVec out;
    auto [t, a] = s.w[p][0];
    State pre{s.m, std::vector<Mono>(s.w.begin(), s.w.begin() + p)};
    for (int b = 0; b < A.dim(); ++b) {
        Elem ba = A.mul_basis(b, a);
        if (ba.empty()) continue;
        for (int r = 0; r < R.n(); ++r) {
            SVec img;
            R.prefix_act_elem(pre, p, r, t, ba, Q(sgn(A.basis[a].parity * A.basis[b].parity)), img);
            for (auto& [d, v] : A.dual(b))
                for (auto& [st, c] : img) {
                    State z = st;
                    z.w.push_back(Mono{{r, d}});
                    z.w.insert(z.w.end(), s.w.begin() + p + 1, s.w.end());
                    sadd(out, z, c * v);
                }
        }
    }
    return out;
}

Report check_thick_casimir(const Rep& R, int i, int k) {
    const Algebra& A = R.module().algebra();
    Report rep;
    std::string tag = " (" + R.module().name() + ", n=" + std::to_string(R.n()) + ", " + A.idem_names[i] + "^(" +
                      std::to_string(k) + "))";
    if (k == 1) {
        bool ok = true;
        for (auto& s : R.basis({{i, 1}})) {
            SVec a;
            R.casimir(s, 0, Q(1), a);
            if (a != thin_casimir(R, s, 0)) ok = false;
        }
        rep.add("thick Casimir k=1 equals thin formula" + tag, ok);
    } else {
        Morphism lhs = m_merge(i, k - 1, 1) * tensor(m_id(i, k - 1), m_dot(i, 1)) * tensor(m_dot(i, k - 1), m_id(i, 1));
        Morphism rhs = m_dot(i, k) * m_merge(i, k - 1, 1);
        bool ok = R.evaluate(lhs) == R.evaluate(rhs);
        rep.add("thick Casimir recursion" + tag, ok);
    }
    bool hom = true;
    int tot = 0;
    auto G = all_gens(A, R.n());
    for (auto& s : R.basis({{i, k}})) {
        SVec c;
        R.casimir(s, 0, Q(1), c);
        for (auto& g : G) {
            SVec x = act_vec(R, c, g);
            SVec y;
            for (auto& [st, v] : act_vec(R, SVec{{s, Q(1)}}, g)) R.casimir(st, 0, v, y);
            ++tot;
            if (x != y) hom = false;
        }
    }
    rep.add("thick Casimir is a module homomorphism" + tag, hom, std::to_string(tot) + " checks");
    return rep;
}

Report check_casimir_naturality(const Algebra& A, int n, int i) {
    Report rep;
    // twist on V⊗V
    {
        Rep R(A, n, make_module(A, n, "VV"));
        bool ok = true;
        auto tw = [&](const State& s, const Q& c, SVec& out) {
            const Key& k = s.m;  // [2, t1, b1, t2, b2]
            State z = s;
            z.m = {2, k[3], k[4], k[1], k[2]};
            sadd(out, z, c * sgn(A.basis[k[2]].parity * A.basis[k[4]].parity));
        };
        for (auto& s : R.basis({{i, 1}})) {
            SVec a, b, t;
            R.casimir(s, 0, Q(1), t);
            for (auto& [st, v] : t) tw(st, v, a);
            SVec u;
            tw(s, Q(1), u);
            for (auto& [st, v] : u) R.casimir(st, 0, v, b);
            if (a != b) ok = false;
        }
        rep.add("Casimir natural along the twist of V⊗V", ok);
    }
    // left multiplication by an even element on V
    {
        Rep R(A, n, make_module(A, n, "V"));
        bool ok = true;
        for (int f = 0; f < A.dim(); ++f) {
            if (A.basis[f].parity) continue;
            auto L = [&](const State& s, const Q& c, SVec& out) {
                for (auto& [d, v] : A.mul_basis(f, s.m[1])) {
                    State z = s;
                    z.m = {s.m[0], d};
                    sadd(out, z, c * v);
                }
            };
            for (auto& s : R.basis({{i, 1}})) {
                SVec a, b, t, u;
                R.casimir(s, 0, Q(1), t);
                for (auto& [st, v] : t) L(st, v, a);
                L(s, Q(1), u);
                for (auto& [st, v] : u) R.casimir(st, 0, v, b);
                if (a != b) ok = false;
            }
        }
        rep.add("Casimir natural along left multiplications on V", ok);
    }
    return rep;
}

int rank_of(const std::vector<SVec>& vs) {
    std::map<State, SVec> rows;  // pivot -> row with that smallest key
    int rank = 0;
    for (SVec v : vs) {
        while (!v.empty()) {
            auto it = rows.find(v.begin()->first);
            if (it == rows.end()) break;
            Q c = v.begin()->second / it->second.begin()->second;
            add_vec(v, it->second, -c);
        }
        if (v.empty()) continue;
        State p = v.begin()->first;
        rows[p] = std::move(v);
        ++rank;
    }
    return rank;
}

RankReport independence_check(const Algebra& A, const Word& src, const Word& tgt, int max_degree, int n) {
    int d = std::max(width(src), width(tgt));
    if (n < d)
        throw Error(Err::InsufficientN, "n = " + std::to_string(n) + " is below the exploded width " + std::to_string(d));
    auto mus = enumerate_basis(A, src, tgt, max_degree);
    Rep R(A, n, make_module(A, n, "verma"));
    State start{VermaModule::encode({}, {}), {}};
    auto cols = thin_colors(src);
    for (size_t k = 0; k < cols.size(); ++k) start.w.push_back(Mono{{(int)k, A.idem_basis[cols[k]]}});
    std::vector<SVec> imgs;
    for (auto& mu : mus) imgs.push_back(R.apply(explode(eta(A, mu)), SVec{{start, Q(1)}}));
    return RankReport{rank_of(imgs), (int)mus.size()};
}

RepSuiteResult verify_relations_rep(const Rep& R, const std::vector<RelInstance>& inst, long max_columns) {
    RepSuiteResult res;
    std::map<std::string, int> seen;
    for (auto& I : inst) {
        int no = ++seen[I.name];
        if (I.lhs.src != I.rhs.src || I.lhs.tgt != I.rhs.tgt) {
            res.failures.push_back(I.name + " #" + std::to_string(no) + ": boundary mismatch");
            continue;
        }
        auto cols = R.basis(I.lhs.src);
        if (!has_dots(I.lhs) && !has_dots(I.rhs)) {
            auto reps = R.parity_reps();
            std::vector<State> keep;
            for (auto& s : cols)
                if (reps.at(R.module().parity(s.m)) == s.m) keep.push_back(s);
            cols = std::move(keep);
        }
        if ((long)cols.size() > max_columns) {
            ++res.skipped;
            continue;
        }
        bool ok = true;
        for (auto& s : cols) {
            SVec v{{s, Q(1)}};
            if (R.apply(I.lhs, v) != R.apply(I.rhs, v)) {
                ok = false;
                break;
            }
        }
        ++res.checked;
        if (!ok) res.failures.push_back(I.name + " #" + std::to_string(no));
    }
    return res;
}

}  // namespace fw
