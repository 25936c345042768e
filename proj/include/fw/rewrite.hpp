// Normalization to the decorated double coset basis and relation checking.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "fw/thin.hpp"

namespace fw {

struct Expansion {
    Word src, tgt;
    std::map<DCM, Q> c;
    bool operator==(const Expansion& o) const { return src == o.src && tgt == o.tgt && c == o.c; }
};

// Exact linear solver against a fixed list of thin vectors.
class SpanSolver {
public:
    void insert(TVec v, int idx);  // throws InternalLimit on dependence
    // coefficients with Σ c_k vec_k = v, or nullopt if v is outside the span
    std::optional<std::map<int, Q>> solve(TVec v) const;
    int rank() const { return (int)rows_.size(); }

private:
    std::map<TTerm, int> pivot_;
    std::vector<TVec> rows_;
    std::vector<std::map<int, Q>> combo_;
    bool reduce(TVec& v, std::map<int, Q>& combo, bool stop_at_free) const;
};

class Rewriter {
public:
    explicit Rewriter(const Algebra& A);
    const Algebra& algebra() const { return A_; }
    ThinEngine& engine() { return E_; }

    Expansion normalize(const Morphism& f);
    bool equal(const Morphism& f, const Morphism& g);
    Morphism realize(const Expansion& e);  // Σ c η_μ
    const TVec& exp_eta(const DCM& mu);

private:
    const Algebra& A_;
    ThinEngine E_;
    std::map<DCM, TVec> eta_cache_;
    struct Basis {
        std::vector<DCM> mus;
        SpanSolver S;
    };
    std::map<std::tuple<Word, Word, int>, std::unique_ptr<Basis>> bases_;
    Basis& basis_for(const Word& src, const Word& tgt, int deg);
};

Expansion unit_expansion(const DCM& mu);
bool integral(const Expansion& e);

// ---------------------------------------------------------------- relation suite

struct RelInstance {
    std::string name;
    Morphism lhs, rhs;
};

struct Caps {
    int thick = 2;     // thickness cap for the generic relations
    int tele = 2;      // teleporter coupon-transport cap
    int blowup = 3;    // blow-up teleporter cap
    int green = 3;     // ‖x‖ cap for the Green product rule
    int colors = 2;    // number of idempotents used
    int coupons = 3;   // number of sampled basis labels per block
};

std::vector<RelInstance> relation_instances(const Algebra& A, const Caps& caps);

struct SuiteResult {
    int checked = 0;
    std::vector<std::string> failures;
    std::map<std::string, int> per_relation;
};

SuiteResult verify_relation_suite(Rewriter& R, const std::vector<RelInstance>& inst);

}  // namespace fw
