// Normal forms for thin morphisms: w ∘ (coupons) ∘ (dots), the affine wreath product picture.
#pragma once

#include <map>
#include <vector>

#include "fw/web.hpp"

namespace fw {

// Source strand q carries t[q] dots, then coupon b[q] above, then is routed to target position w[q].
struct TTerm {
    std::vector<int> w, t, b;
    bool operator<(const TTerm& o) const {
        if (w != o.w) return w < o.w;
        if (t != o.t) return t < o.t;
        return b < o.b;
    }
    bool operator==(const TTerm& o) const { return w == o.w && t == o.t && b == o.b; }
    int degree() const;
};

using TVec = std::map<TTerm, Q>;

void tadd(TVec& v, const TTerm& k, const Q& c);
void tadd(TVec& v, const TVec& o, const Q& c = 1);

struct ThinMor {
    std::vector<int> src, tgt;  // colors
    TVec v;
};

class ThinEngine {
public:
    explicit ThinEngine(const Algebra& A) : A_(A) {}
    const Algebra& algebra() const { return A_; }

    TTerm id_term(const std::vector<int>& colors) const;
    // Σ over the Young subgroup of the block structure of w
    TVec symmetrizer(const Word& w) const;

    // operations on top of a vector; colors at the top are read off the terms
    TVec permute(const TVec& v, const std::vector<int>& pi) const;  // new position of old top position p is pi[p]
    TVec coupon(const TVec& v, int p, const Elem& f) const;
    TVec dot(const TVec& v, int p) const;
    TVec compose(const TVec& a, const TVec& b) const;  // a ∘ b

    // exp(D) for a thick morphism, as a thin vector between exploded words
    TVec explode(const Morphism& f) const;

    TTerm from_dcm(const DCM& mu) const;  // thin matrices only
    DCM to_dcm(const TTerm& t, const std::vector<int>& src, const std::vector<int>& tgt) const;

    std::vector<int> top_colors(const TTerm& t) const;

private:
    const Algebra& A_;
    mutable std::map<std::pair<TTerm, int>, TVec> dot_cache_;
    void dot_term(const TTerm& T, int p, const Q& c, TVec& out) const;
    void coupon_term(const TTerm& T, int p, int f, const Q& c, TVec& out) const;
    void apply_slice(TVec& R, const Word& w, const Slice& sl) const;
};

}  // namespace fw
