// Exact scalars, error kinds, and locally unital Frobenius superalgebras.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fw {

using Q = mpq_class;

enum class Err {
    NonUnimodularGram,
    InvalidParams,
    NotGreatPair,
    BoundaryMismatch,
    InvalidMatrix,
    InternalLimit,
    InsufficientN,
    NotDivisible,
    NotRegular,
    ParseError,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
    Err kind;
    Error(Err k, const std::string& msg);
};

struct ParseError : Error {
    int line, col;
    std::string expected;
    ParseError(int l, int c, std::string exp);
};

bool is_integer(const Q& q);
std::string qstr(const Q& q);  // "p/q" or "p"
Q parse_q(const std::string& s);
long factorial(int n);
Q binomial(const Q& top, int k);  // generalized: top*(top-1)*.../k!

// Sparse element: basis id -> coefficient.
using Elem = std::map<int, Q>;

void add_to(Elem& a, const Elem& b, const Q& s = 1);
Elem scaled(const Elem& a, const Q& s);

struct BasisElt {
    std::string name;
    int parity = 0;
    int src = 0, tgt = 0;  // idempotent indices; element lies in tgt·A·src
    bool in_sub = false;
};

class Algebra {
public:
    std::string label;
    std::vector<std::string> idem_names;
    std::vector<int> idem_basis;  // idempotent index -> basis id
    std::vector<BasisElt> basis;
    mutable int great_cache = -1;

    // construction
    int add_idempotent(const std::string& name);
    int add_basis(const std::string& name, int parity, int src, int tgt, bool in_sub);
    void set_product(int a, int b, const Elem& c);  // idempotent products are implicit
    void set_trace(int b, const Q& v);
    void set_nakayama(int b, const Elem& e);  // default: identity
    void finalize(bool frobenius = true);     // computes ψ^{-1} and dual basis; throws NonUnimodularGram

    // queries
    int dim() const { return (int)basis.size(); }
    int num_idem() const { return (int)idem_names.size(); }
    int find_basis(const std::string& name) const;  // -1 if absent
    int find_idem(const std::string& name) const;
    bool is_idem(int b) const { return basis[b].src == basis[b].tgt && idem_basis[basis[b].src] == b; }
    const std::vector<int>& block(int tgt, int src) const { return blocks_[tgt][src]; }
    int parity(const Elem& e) const;  // parity of a homogeneous element (0 for zero)

    Elem unit(int b) const { return Elem{{b, Q(1)}}; }
    Elem mul_basis(int a, int b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Q tr(const Elem& a) const;
    Q tr_basis(int b) const { return trace_[b]; }
    Elem psi(const Elem& a) const;
    Elem psi_inv(const Elem& a) const;
    Elem nakayama_power(const Elem& a, int t) const;  // ψ^{-t}
    const Elem& dual(int b) const { return dual_[b]; }
    Elem dual(const Elem& a) const;

    // Casimir pairs (b, b^∨) over b in the block target j, source i
    std::vector<std::pair<Elem, Elem>> casimir(int i, int j) const;

    bool elem_in_sub(const Elem& e) const;
    std::string elem_str(const Elem& e) const;

private:
    std::map<std::pair<int, int>, Elem> mult_;
    std::vector<Q> trace_;
    std::vector<Elem> nak_, nakinv_, dual_;
    std::vector<std::vector<std::vector<int>>> blocks_;
};

// Builtin constructors.  aopt selects the subalgebra: "all", "even", "unit", "half", "sq", "upper".
Algebra make_ground();
Algebra make_truncated_poly(int m, const std::string& aopt);
Algebra make_clifford(int t, const std::string& aopt);
Algebra make_grassmann(int t, const std::string& aopt);
Algebra make_zigzag(int nverts, const std::vector<std::pair<int, int>>& edges,
                    const std::map<std::pair<int, int>, int>& eps);
Algebra make_zigzag_A(int n);
Algebra make_trivial_extension(const Algebra& c);  // 𝔞 = C_0
Algebra make_path_A2(bool odd_arrow);
Algebra make_laurent_path(int lo, int hi, const std::string& aopt);

// Verification reports
struct CheckItem {
    std::string name;
    bool ok;
    std::string detail;
};
struct Report {
    std::vector<CheckItem> items;
    bool ok() const;
    void add(const std::string& name, bool ok, const std::string& detail = "");
};

Report check_frobenius(const Algebra& A);  // axioms, dual basis and Casimir identities
Report check_great_pair(const Algebra& A);

}  // namespace fw
