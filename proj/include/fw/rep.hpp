// The defining representation: gl_n(A)-modules, symmetric powers, Casimirs, the generic Verma module.
#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "fw/core.hpp"
#include "fw/rewrite.hpp"

namespace fw {

// E^f_{r,s}; rows/columns are 0-based internally.
struct GlGen {
    int r = 0, s = 0, b = 0;
    auto operator<=>(const GlGen&) const = default;
};
// graded commutator [E^b_{r,s}, E^c_{r',s'}] as a list of (r, s, element)
std::vector<std::tuple<int, int, Elem>> gl_bracket(const Algebra& A, const GlGen& g, const GlGen& h);

using Key = std::vector<int>;
using KVec = std::map<Key, Q>;
void kadd(KVec& v, const Key& k, const Q& c);

// Right gl_n(A)-supermodule with a homogeneous basis indexed by keys.
class Module {
public:
    Module(const Algebra& A, int n) : A_(A), n_(n) {}
    virtual ~Module() = default;
    const Algebra& algebra() const { return A_; }
    int n() const { return n_; }
    virtual std::string name() const = 0;
    virtual int parity(const Key& k) const = 0;
    // out += c · (k · E^b_{r,s})
    virtual void act(const Key& k, const GlGen& g, const Q& c, KVec& out) const = 0;
    virtual bool finite() const { return true; }
    virtual std::vector<Key> basis() const = 0;
    virtual std::string key_str(const Key& k) const;
    void act_elem(const Key& k, int r, int s, const Elem& f, const Q& c, KVec& out) const;

protected:
    const Algebra& A_;
    int n_;
};

class TrivialModule : public Module {
public:
    using Module::Module;
    std::string name() const override { return "trivial"; }
    int parity(const Key&) const override { return 0; }
    void act(const Key&, const GlGen&, const Q&, KVec&) const override {}
    std::vector<Key> basis() const override { return {Key{}}; }
    std::string key_str(const Key&) const override { return "1"; }
};

// V = A^n as row vectors; key {t, b} is v_t^b.
class NaturalModule : public Module {
public:
    using Module::Module;
    std::string name() const override { return "V"; }
    int parity(const Key& k) const override { return A_.basis[k[1]].parity; }
    void act(const Key& k, const GlGen& g, const Q& c, KVec& out) const override;
    std::vector<Key> basis() const override;
    std::string key_str(const Key& k) const override;
};

class TensorModule : public Module {
public:
    TensorModule(std::shared_ptr<Module> a, std::shared_ptr<Module> b)
        : Module(a->algebra(), a->n()), a_(std::move(a)), b_(std::move(b)) {}
    std::string name() const override { return a_->name() + "⊗" + b_->name(); }
    int parity(const Key& k) const override;
    void act(const Key& k, const GlGen& g, const Q& c, KVec& out) const override;
    bool finite() const override { return a_->finite() && b_->finite(); }
    std::vector<Key> basis() const override;
    std::string key_str(const Key& k) const override;

private:
    std::pair<Key, Key> unpack(const Key& k) const;
    static Key pack(const Key& a, const Key& b);
    std::shared_ptr<Module> a_, b_;
};

// U(h) ⊗_{U(b)} U(gl_n(A)) with PBW basis X ⊗ Y: X ordered in h_k^b by (k, b),
// Y ordered in the strictly lower E^b_{p,q} by (p, q, b).
class VermaModule : public Module {
public:
    using HMono = std::vector<std::array<int, 2>>;
    using LMono = std::vector<std::array<int, 3>>;
    using VV = std::map<std::pair<HMono, LMono>, Q>;

    using Module::Module;
    std::string name() const override { return "Verma"; }
    int parity(const Key& k) const override;
    void act(const Key& k, const GlGen& g, const Q& c, KVec& out) const override;
    bool finite() const override { return false; }
    std::vector<Key> basis() const override;  // throws
    std::string key_str(const Key& k) const override;

    static Key encode(const HMono& x, const LMono& y);
    static std::pair<HMono, LMono> decode(const Key& k);
    void apply(const HMono& x, const LMono& y, const GlGen& g, const Q& c, VV& out) const;
    void h_mul(const HMono& x, int k, int a, const Q& c, std::map<HMono, Q>& out) const;
    void l_mul(const LMono& y, const std::array<int, 3>& e, const Q& c, std::map<LMono, Q>& out) const;
};

std::shared_ptr<Module> make_module(const Algebra& A, int n, const std::string& kind);  // trivial | V | VV | verma

// ---------------------------------------------------------------- symmetric powers

// Monomial v_{t1}^{b1} ⋯ v_{tx}^{bx}, factors sorted by (t, b); odd factors at most once.
using Mono = std::vector<std::pair<int, int>>;
int mono_parity(const Algebra& A, const Mono& m);
Q sort_mono(const Algebra& A, Mono& m);  // returns the reordering sign, 0 if it vanishes
std::vector<Mono> sym_basis(const Algebra& A, int i, int x, int n);
void sym_act(const Algebra& A, const Mono& m, const GlGen& g, const Q& c, std::map<Mono, Q>& out);
// product of factors given as elements: Π v_{t_u}^{e_u}
void mono_product(const Algebra& A, const std::vector<std::pair<int, Elem>>& fs, const Q& c, std::map<Mono, Q>& out);
std::string mono_str(const Algebra& A, const Mono& m);

// Basis vector of M ⊗ S^{x1}V ⊗ ⋯.
struct State {
    Key m;
    std::vector<Mono> w;
    auto operator<=>(const State&) const = default;
};
using SVec = std::map<State, Q>;
void sadd(SVec& v, const State& s, const Q& c);
std::string state_str(const Module& M, const State& s);

struct Matrix {
    std::vector<State> rows, cols;
    std::map<std::pair<int, int>, Q> e;  // (row, col) -> entry
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

class Rep {
public:
    Rep(const Algebra& A, int n, std::shared_ptr<Module> M) : A_(A), n_(n), M_(std::move(M)) {}
    const Module& module() const { return *M_; }
    int n() const { return n_; }

    std::vector<State> basis(const Word& w) const;
    // (m ⊗ w_0 ⊗ ⋯ ⊗ w_{q-1}) · E^b_{r,s}, the first q tensor factors acting as a module
    void prefix_act(const State& s, int q, const GlGen& g, const Q& c, SVec& out) const;
    void prefix_act_elem(const State& s, int q, int r, int t, const Elem& f, const Q& c, SVec& out) const;
    // full action on the whole tensor product
    void act(const State& s, const GlGen& g, const Q& c, SVec& out) const;

    // thick Casimir C^{i^(k)} on factor p, the prefix acting as the module
    void casimir(const State& s, int p, const Q& c, SVec& out) const;
    void apply_gen(const State& s, int p, const Gen& g, const Q& c, SVec& out) const;
    SVec apply_slice(const Slice& sl, const SVec& v) const;
    SVec apply(const Diagram& d, const SVec& v) const;
    SVec apply(const Morphism& f, const SVec& v) const;
    Matrix evaluate(const Morphism& f) const;  // finite modules only
    std::map<int, Key> parity_reps() const;   // one module basis key per parity

private:
    const Algebra& A_;
    int n_;
    std::shared_ptr<Module> M_;
};

bool has_dots(const Morphism& f);
Matrix to_matrix(const std::vector<State>& rows, const std::vector<State>& cols, const std::vector<SVec>& images);
std::string matrix_json(const Module& M, const Matrix& m);

// good ordered partitions of {0..k-1}: each permutation cut into its least-last blocks
std::vector<std::vector<std::vector<int>>> good_partitions(int k);

// ---------------------------------------------------------------- checks

// bracket relation (v·g)·h − (−1)^{ḡh̄}(v·h)·g = v·[g,h] on the given vectors
Report check_bracket(const Rep& R, const Word& w, int max_vectors = -1);
// thick Casimir: recursion and module-homomorphism property on M ⊗ S^k_iV
Report check_thick_casimir(const Rep& R, int i, int k);
// naturality of the thin Casimir along the twist of V⊗V and a left multiplication on V
Report check_casimir_naturality(const Algebra& A, int n, int i);

struct RankReport {
    int rank = 0, expected = 0;
    bool full() const { return rank == expected; }
};
RankReport independence_check(const Algebra& A, const Word& src, const Word& tgt, int max_degree, int n);
int rank_of(const std::vector<SVec>& vs);

// relation suite as matrix identities; instances whose source has more than max_columns basis vectors are skipped
struct RepSuiteResult {
    int checked = 0, skipped = 0;
    std::vector<std::string> failures;
};
RepSuiteResult verify_relations_rep(const Rep& R, const std::vector<RelInstance>& inst, long max_columns = 4000);

}  // namespace fw
