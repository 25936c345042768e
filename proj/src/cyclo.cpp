#include "fw/cyclo.hpp"

#include <algorithm>
#include <numeric>

namespace fw {

int CycDatum::level() const { return std::accumulate(L.begin(), L.end(), 0); }

Report validate_datum(const Algebra& A, const CycDatum& D) {
    Report r;
    int t = (int)D.L.size();
    bool shape = t > 0 && (int)D.c.size() == A.num_idem();
    for (auto& row : D.c) shape = shape && (int)row.size() == t;
    for (int L : D.L) shape = shape && L > 0;
    r.add("shape", shape, "need L_k > 0 and one c_{i,k} per idempotent and k");
    if (!shape) return r;
    for (int i = 0; i < A.num_idem(); ++i)
        for (int k = 0; k < t; ++k) {
            bool ok = true;
            for (auto& [b, v] : D.c[i][k]) ok = ok && A.basis[b].src == i && A.basis[b].tgt == i && !A.basis[b].parity;
            r.add("c_{" + A.idem_names[i] + "," + std::to_string(k + 1) + "} even in iAi", ok, A.elem_str(D.c[i][k]));
        }
    for (int k = 0; k < t; ++k) {
        std::string bad;
        for (int x = 0; x < A.dim(); ++x) {
            int i = A.basis[x].src, j = A.basis[x].tgt;
            Elem lhs = A.mul(D.c[j][k], A.unit(x));
            Elem rhs = A.mul(A.nakayama_power(A.unit(x), D.L[k]), D.c[i][k]);
            if (lhs != rhs && bad.empty()) bad = "x = " + A.basis[x].name;
        }
        r.add("c_{j," + std::to_string(k + 1) + "} x = ψ^{-L}(x) c_{i," + std::to_string(k + 1) + "}", bad.empty(), bad);
    }
    return r;
}

DotPoly expand_f(const Algebra& A, const CycDatum& D, int i) {
    int t = (int)D.L.size();
    DotPoly p;
    // S = set of factors contributing −c; dots above c_k push through it as ψ^{-m}
    for (int S = 0; S < (1 << t); ++S) {
        Elem e = A.unit(A.idem_basis[i]);
        int deg = 0, sign = 1;
        for (int k = t - 1; k >= 0; --k) {
            if (S >> k & 1) {
                e = A.mul(e, A.nakayama_power(D.c[i][k], deg));
                sign = -sign;
            } else {
                deg += D.L[k];
            }
        }
        if (e.empty()) continue;
        Elem& slot = p[deg];
        add_to(slot, e, Q(sign));
        if (slot.empty()) p.erase(deg);
    }
    return p;
}

Morphism dot_poly_morphism(const Algebra& A, int i, const DotPoly& p) {
    Morphism r({{i, 1}}, {{i, 1}});
    for (auto& [e, a] : p) r += m_coupon(A, i, i, a, 1) * m_dot(i, 1, e);
    return r;
}

CycDatum pure_idempotent_datum(const Algebra& A, const std::vector<std::vector<long>>& gamma) {
    CycDatum D;
    int t = gamma.empty() ? 0 : (int)gamma[0].size();
    D.L.assign(t, 1);
    D.c.resize(A.num_idem());
    for (int i = 0; i < A.num_idem(); ++i)
        for (int k = 0; k < t; ++k) D.c[i].push_back(scaled(A.dual(A.idem_basis[i]), Q(gamma.at(i).at(k))));
    return D;
}

Cyclotomic::Cyclotomic(const Algebra& A, CycDatum D) : A_(A), D_(std::move(D)), R_(A) {
    auto rep = validate_datum(A, D_);
    if (!rep.ok()) {
        std::string why;
        for (auto& it : rep.items)
            if (!it.ok) why += (why.empty() ? "" : "; ") + it.name + (it.detail.empty() ? "" : " (" + it.detail + ")");
        throw Error(Err::InvalidParams, "invalid cyclotomic datum: " + why);
    }
}

static Word thin_word(const std::vector<int>& cols) {
    Word w;
    for (int c : cols) w.push_back({c, 1});
    return w;
}

// x_q^ℓ − w (f ⊗ 1) w⁻¹, with w⁻¹ carrying strand q to the far left; lies in the ideal up to x_q^ℓ
const TVec& Cyclotomic::reducer(const std::vector<int>& colors, int q) {
    auto key = std::make_pair(colors, q);
    auto it = g_cache_.find(key);
    if (it != g_cache_.end()) return it->second;
    int ell = level(), i = colors[q];
    std::vector<int> cur = colors;
    Morphism there = identity(thin_word(cur));
    for (int p = q - 1; p >= 0; --p) {
        Word w = thin_word(cur);
        Word l(w.begin(), w.begin() + p), r(w.begin() + p + 2, w.end());
        there = embed(l, m_cross(cur[p], 1, cur[p + 1], 1), r) * there;
        std::swap(cur[p], cur[p + 1]);
    }
    Word rest = thin_word(cur);
    rest.erase(rest.begin());
    Morphism mid = embed({}, dot_poly_morphism(A_, i, expand_f(A_, D_, i)), rest);
    Morphism back = identity(thin_word(cur));
    for (int p = 0; p < q; ++p) {
        Word w = thin_word(cur);
        Word l(w.begin(), w.begin() + p), r(w.begin() + p + 2, w.end());
        back = embed(l, m_cross(cur[p], 1, cur[p + 1], 1), r) * back;
        std::swap(cur[p], cur[p + 1]);
    }
    ThinEngine& E = R_.engine();
    TVec g = E.explode(back * mid * there);
    for (auto& [T, c] : g) const_cast<Q&>(c) = -c;
    TTerm x = E.id_term(colors);
    x.t[q] = ell;
    tadd(g, x, Q(1));
    for (auto& [T, c] : g)
        if (T.degree() >= ell) throw Error(Err::InternalLimit, "cyclotomic reducer did not lower the degree");
    return g_cache_[key] = std::move(g);
}

TVec Cyclotomic::thin_reduce_vec(const TVec& v, const std::vector<int>& src_colors) {
    int ell = level();
    ThinEngine& E = R_.engine();
    TVec todo = v, done;
    while (!todo.empty()) {
        // highest degree first keeps cancellations early
        auto it = std::max_element(todo.begin(), todo.end(),
                                   [](auto& a, auto& b) { return a.first.degree() < b.first.degree(); });
        TTerm T = it->first;
        Q c = it->second;
        todo.erase(it);
        int q = -1;
        for (size_t k = 0; k < T.t.size() && q < 0; ++k)
            if (T.t[k] >= ell) q = (int)k;
        if (q < 0) {
            tadd(done, T, c);
            continue;
        }
        T.t[q] -= ell;
        tadd(todo, E.compose(TVec{{T, c}}, reducer(src_colors, q)));
    }
    return done;
}

Expansion Cyclotomic::thin_reduce(const Morphism& f) {
    if (!is_thin(f.src) || !is_thin(f.tgt)) throw Error(Err::InvalidParams, "thin_reduce needs thin source and target");
    auto sc = thin_colors(f.src), tc = thin_colors(f.tgt);
    Expansion e{f.src, f.tgt, {}};
    for (auto& [T, c] : thin_reduce_vec(R_.engine().explode(f), sc)) e.c[R_.engine().to_dcm(T, sc, tc)] = c;
    return e;
}

Expansion Cyclotomic::kappa(int d, int i) {
    Morphism f = identity({});
    for (int k = 0; k < d; ++k) f = tensor(f, m_dot(i, 1, level()));
    return thin_reduce(f);
}

Regularity Cyclotomic::regularity(int d, int i) {
    auto key = std::make_pair(d, i);
    auto it = reg_cache_.find(key);
    if (it != reg_cache_.end()) return it->second;
    Regularity res;
    Morphism K = R_.realize(kappa(d, i));
    std::vector<int> ones(d, 1);
    Morphism con = multi_merge(i, ones) * K * multi_split(i, ones);
    Expansion e = R_.normalize(con);
    Q fact(factorial(d));
    res.ok = true;
    res.X = Expansion{e.src, e.tgt, {}};
    for (auto& [mu, c] : e.c) {
        Q q = c / fact;
        if (!is_integer(q)) {
            res.ok = false;
            res.witness = mu;
            res.coefficient = c;
            break;
        }
        res.X.c[mu] = q;
    }
    if (!res.ok) res.X.c.clear();
    return reg_cache_[key] = res;
}

std::vector<DCM> Cyclotomic::basis(const Word& src, const Word& tgt) const {
    return enumerate_truncated(A_, reduced(src), reduced(tgt), D_.level());
}

Expansion Cyclotomic::thick_reduce(const Morphism& f) {
    std::map<int, int> tot;
    for (auto& s : f.src) tot[s.c] += s.x;
    for (auto& [i, D] : tot)
        for (int d = 1; d <= D; ++d) {
            auto r = regularity(d, i);
            if (!r.ok)
                throw Error(Err::NotRegular, "datum not regular at d = " + std::to_string(d) + ", i = " + A_.idem_names[i] +
                                                 " (coefficient " + qstr(r.coefficient) + " not divisible by " +
                                                 std::to_string(factorial(d)) + ")");
        }
    auto sc = thin_colors(f.src);
    auto key = std::make_pair(f.src, f.tgt);
    auto& B = bases_[key];
    if (!B) {
        B = std::make_unique<Basis>();
        B->mus = basis(f.src, f.tgt);
        for (size_t k = 0; k < B->mus.size(); ++k) B->S.insert(thin_reduce_vec(R_.exp_eta(B->mus[k]), sc), (int)k);
    }
    Expansion e{f.src, f.tgt, {}};
    auto sol = B->S.solve(thin_reduce_vec(R_.engine().explode(f), sc));
    if (!sol) throw Error(Err::InternalLimit, "reduced morphism outside the span of the cyclotomic basis");
    for (auto& [k, c] : *sol)
        if (c != 0) e.c[B->mus[k]] = c;
    return e;
}

Q absolute_length_sum(int d, const Q& x) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    Q s = 0;
    do {
        std::vector<bool> seen(d);
        int cycles = 0;
        for (int a = 0; a < d; ++a)
            if (!seen[a]) {
                ++cycles;
                for (int b = a; !seen[b]; b = p[b]) seen[b] = true;
            }
        Q term = 1;
        for (int k = 0; k < cycles; ++k) term *= x;  // x^{d − u(σ)}, u(σ) = d − #cycles
        s += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return s;
}

}  // namespace fw
