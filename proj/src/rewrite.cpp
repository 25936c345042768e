#include "fw/rewrite.hpp"

namespace fw {

// Rows keep their smallest key as pivot; eliminating pivot p only touches keys > p.
bool SpanSolver::reduce(TVec& v, std::map<int, Q>& combo, bool stop_at_free) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto pv = pivot_.find(it->first);
        if (pv == pivot_.end()) {
            if (stop_at_free) return false;
            ++it;
            continue;
        }
        TTerm key = it->first;
        const TVec& row = rows_[pv->second];
        Q c = it->second / row.at(key);
        tadd(v, row, -c);
        for (auto& [k, x] : combo_[pv->second]) {
            Q& slot = combo[k];
            slot += c * x;
            if (slot == 0) combo.erase(k);
        }
        it = v.upper_bound(key);
    }
    return v.empty();
}

void SpanSolver::insert(TVec v, int idx) {
    std::map<int, Q> combo;
    reduce(v, combo, true);
    if (v.empty()) throw Error(Err::InternalLimit, "basis images are linearly dependent");
    // combo expresses the eliminated part; the stored row is v = orig - Σ combo
    std::map<int, Q> rc{{idx, Q(1)}};
    for (auto& [k, x] : combo) rc[k] -= x;
    pivot_[v.begin()->first] = (int)rows_.size();
    rows_.push_back(std::move(v));
    combo_.push_back(std::move(rc));
}

std::optional<std::map<int, Q>> SpanSolver::solve(TVec v) const {
    std::map<int, Q> combo;
    if (!reduce(v, combo, true)) return std::nullopt;
    return combo;
}

Rewriter::Rewriter(const Algebra& A) : A_(A), E_(A) {}

const TVec& Rewriter::exp_eta(const DCM& mu) {
    auto it = eta_cache_.find(mu);
    if (it != eta_cache_.end()) return it->second;
    return eta_cache_[mu] = E_.explode(eta(A_, mu));
}

Rewriter::Basis& Rewriter::basis_for(const Word& src, const Word& tgt, int deg) {
    auto key = std::make_tuple(src, tgt, deg);
    auto it = bases_.find(key);
    if (it != bases_.end()) return *it->second;
    auto B = std::make_unique<Basis>();
    B->mus = enumerate_basis(A_, src, tgt, deg);
    for (size_t k = 0; k < B->mus.size(); ++k) B->S.insert(exp_eta(B->mus[k]), (int)k);
    return *(bases_[key] = std::move(B));
}

Expansion Rewriter::normalize(const Morphism& f) {
    Expansion e{f.src, f.tgt, {}};
    if (f.zero()) return e;
    TVec v = E_.explode(f);
    if (v.empty()) return e;
    if (is_thin(f.src) && is_thin(f.tgt)) {
        auto sc = thin_colors(f.src), tc = thin_colors(f.tgt);
        for (auto& [T, c] : v) e.c[E_.to_dcm(T, sc, tc)] = c;
        return e;
    }
    Basis& B = basis_for(f.src, f.tgt, f.max_degree());
    auto sol = B.S.solve(v);
    if (!sol) throw Error(Err::InternalLimit, "exploded morphism outside the span of the basis images");
    for (auto& [k, c] : *sol)
        if (c != 0) e.c[B.mus[k]] = c;
    return e;
}

bool Rewriter::equal(const Morphism& f, const Morphism& g) {
    if (f.src != g.src || f.tgt != g.tgt) throw Error(Err::BoundaryMismatch, "equal: boundaries differ");
    return normalize(f - g).c.empty();
}

Morphism Rewriter::realize(const Expansion& e) {
    Morphism r(e.src, e.tgt);
    for (auto& [mu, c] : e.c) r += eta(A_, mu) * c;
    return r;
}

Expansion unit_expansion(const DCM& mu) { return Expansion{mu.src, mu.tgt, {{mu, Q(1)}}}; }

bool integral(const Expansion& e) {
    for (auto& [mu, c] : e.c)
        if (!is_integer(c)) return false;
    return true;
}

}  // namespace fw
