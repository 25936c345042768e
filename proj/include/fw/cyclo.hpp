// Cyclotomic quotients: data, dot polynomials, thin and thick reduction, regularity.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fw/rewrite.hpp"

namespace fw {

struct CycDatum {
    std::vector<int> L;
    std::vector<std::vector<Elem>> c;  // c[i][k] ∈ (iAi)_0
    int level() const;
};

Report validate_datum(const Algebra& A, const CycDatum& D);

// e -> coefficient a_e with f_i = Σ_e coupon(a_e) ∘ dot^e
using DotPoly = std::map<int, Elem>;
DotPoly expand_f(const Algebra& A, const CycDatum& D, int i);
Morphism dot_poly_morphism(const Algebra& A, int i, const DotPoly& p);

// pure-idempotent data: L = (1,…,1), c_{i,k} = γ_{i,k} i^∨
CycDatum pure_idempotent_datum(const Algebra& A, const std::vector<std::vector<long>>& gamma);

struct Regularity {
    bool ok = false;
    Expansion X;                 // on success: the quotient by d!
    std::optional<DCM> witness;  // on failure
    Q coefficient;               // the non-divisible coefficient
};

class Cyclotomic {
public:
    Cyclotomic(const Algebra& A, CycDatum D);  // throws InvalidParams on an invalid datum
    const CycDatum& datum() const { return D_; }
    Rewriter& rewriter() { return R_; }
    int level() const { return D_.level(); }

    // thin vectors between colour words
    TVec thin_reduce_vec(const TVec& v, const std::vector<int>& src_colors);
    Expansion thin_reduce(const Morphism& f);  // thin src and tgt
    Expansion kappa(int d, int i);
    Regularity regularity(int d, int i);
    Expansion thick_reduce(const Morphism& f);  // throws NotRegular
    std::vector<DCM> basis(const Word& src, const Word& tgt) const;

private:
    const Algebra& A_;
    CycDatum D_;
    Rewriter R_;
    std::map<std::pair<std::vector<int>, int>, TVec> g_cache_;
    std::map<std::pair<int, int>, Regularity> reg_cache_;
    struct Basis {
        std::vector<DCM> mus;
        SpanSolver S;
    };
    std::map<std::pair<Word, Word>, std::unique_ptr<Basis>> bases_;
    const TVec& reducer(const std::vector<int>& colors, int q);
};

// Σ_{σ ∈ S_d} x^{d − u(σ)}, u the absolute length, by brute force over permutations
Q absolute_length_sum(int d, const Q& x);

}  // namespace fw
