#include "fw/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace fw {

const char* err_name(Err e) {
    switch (e) {
        case Err::NonUnimodularGram: return "NonUnimodularGram";
        case Err::InvalidParams: return "InvalidParams";
        case Err::NotGreatPair: return "NotGreatPair";
        case Err::BoundaryMismatch: return "BoundaryMismatch";
        case Err::InvalidMatrix: return "InvalidMatrix";
        case Err::InternalLimit: return "InternalLimit";
        case Err::InsufficientN: return "InsufficientN";
        case Err::NotDivisible: return "NotDivisible";
        case Err::NotRegular: return "NotRegular";
        case Err::ParseError: return "ParseError";
    }
    return "?";
}

Error::Error(Err k, const std::string& msg) : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k) {}

ParseError::ParseError(int l, int c, std::string exp)
    : Error(Err::ParseError, "line " + std::to_string(l) + ", col " + std::to_string(c) + ": expected " + exp),
      line(l), col(c), expected(std::move(exp)) {}

bool is_integer(const Q& q) { return q.get_den() == 1; }

std::string qstr(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_q(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw Error(Err::InvalidParams, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

long factorial(int n) {
    long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Q binomial(const Q& top, int k) {
    Q r = 1;
    for (int a = 0; a < k; ++a) r *= (top - a);
    return r / Q(factorial(k));
}

void add_to(Elem& a, const Elem& b, const Q& s) {
    for (auto& [k, v] : b) {
        Q& t = a[k];
        t += s * v;
        if (t == 0) a.erase(k);
    }
}

Elem scaled(const Elem& a, const Q& s) {
    Elem r;
    if (s == 0) return r;
    for (auto& [k, v] : a) r[k] = v * s;
    return r;
}

// ---------------------------------------------------------------- Algebra

int Algebra::add_idempotent(const std::string& name) {
    int k = (int)idem_names.size();
    idem_names.push_back(name);
    int b = (int)basis.size();
    basis.push_back({name, 0, k, k, true});
    idem_basis.push_back(b);
    return k;
}

int Algebra::add_basis(const std::string& name, int parity, int src, int tgt, bool in_sub) {
    basis.push_back({name, parity & 1, src, tgt, in_sub});
    return (int)basis.size() - 1;
}

void Algebra::set_product(int a, int b, const Elem& c) {
    if (c.empty())
        mult_.erase({a, b});
    else
        mult_[{a, b}] = c;
}

void Algebra::set_trace(int b, const Q& v) {
    if ((int)trace_.size() < dim()) trace_.resize(dim());
    trace_[b] = v;
}

void Algebra::set_nakayama(int b, const Elem& e) {
    if ((int)nak_.size() < dim()) nak_.resize(dim());
    nak_[b] = e;
}

int Algebra::find_basis(const std::string& name) const {
    for (int b = 0; b < dim(); ++b)
        if (basis[b].name == name) return b;
    return -1;
}

int Algebra::find_idem(const std::string& name) const {
    for (int k = 0; k < num_idem(); ++k)
        if (idem_names[k] == name) return k;
    return -1;
}

int Algebra::parity(const Elem& e) const {
    for (auto& [k, v] : e) return basis[k].parity;
    return 0;
}

Elem Algebra::mul_basis(int a, int b) const {
    const auto& A = basis[a];
    const auto& B = basis[b];
    if (A.src != B.tgt) return {};
    if (is_idem(a)) return unit(b);
    if (is_idem(b)) return unit(a);
    auto it = mult_.find({a, b});
    if (it == mult_.end()) return {};
    return it->second;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) add_to(r, mul_basis(i, j), x * y);
    return r;
}

Q Algebra::tr(const Elem& a) const {
    Q r = 0;
    for (auto& [k, v] : a) r += v * trace_[k];
    return r;
}

Elem Algebra::psi(const Elem& a) const {
    Elem r;
    for (auto& [k, v] : a) add_to(r, nak_[k], v);
    return r;
}

Elem Algebra::psi_inv(const Elem& a) const {
    Elem r;
    for (auto& [k, v] : a) add_to(r, nakinv_[k], v);
    return r;
}

Elem Algebra::nakayama_power(const Elem& a, int t) const {
    Elem r = a;
    for (int s = 0; s < t; ++s) r = psi_inv(r);
    for (int s = 0; s > t; --s) r = psi(r);
    return r;
}

Elem Algebra::dual(const Elem& a) const {
    Elem r;
    for (auto& [k, v] : a) add_to(r, dual_[k], v);
    return r;
}

std::vector<std::pair<Elem, Elem>> Algebra::casimir(int i, int j) const {
    std::vector<std::pair<Elem, Elem>> out;
    for (int b : block(j, i)) out.push_back({unit(b), dual_[b]});
    return out;
}

bool Algebra::elem_in_sub(const Elem& e) const {
    for (auto& [k, v] : e)
        if (!basis[k].in_sub) return false;
    return true;
}

std::string Algebra::elem_str(const Elem& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : e) {
        Q c = v;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        if (c != 1) os << qstr(c) << "*";
        os << basis[k].name;
        first = false;
    }
    return os.str();
}

// Solve a square system over Q by Gauss-Jordan; returns nullopt if singular.
static std::optional<std::vector<std::vector<Q>>> invert(std::vector<std::vector<Q>> m) {
    int n = (int)m.size();
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Q d = m[c][c];
        for (int k = 0; k < n; ++k) {
            m[c][k] /= d;
            inv[c][k] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Q f = m[r][c];
            for (int k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

void Algebra::finalize(bool frobenius) {
    int n = dim(), I = num_idem();
    trace_.resize(n);
    nak_.resize(n);
    for (int b = 0; b < n; ++b)
        if (nak_[b].empty()) nak_[b] = unit(b);
    blocks_.assign(I, std::vector<std::vector<int>>(I));
    for (int b = 0; b < n; ++b) blocks_[basis[b].tgt][basis[b].src].push_back(b);

    if (!frobenius) {
        nakinv_ = nak_;
        dual_.assign(n, {});
        return;
    }
    // ψ^{-1}: invert ψ block by block (ψ preserves blocks)
    nakinv_.assign(n, {});
    for (int j = 0; j < I; ++j)
        for (int i = 0; i < I; ++i) {
            auto& B = blocks_[j][i];
            int m = (int)B.size();
            if (!m) continue;
            std::vector<std::vector<Q>> P(m, std::vector<Q>(m, Q(0)));
            for (int c = 0; c < m; ++c)
                for (int r = 0; r < m; ++r) {
                    auto it = nak_[B[c]].find(B[r]);
                    if (it != nak_[B[c]].end()) P[r][c] = it->second;
                }
            auto inv = invert(P);
            if (!inv) throw Error(Err::InvalidParams, "Nakayama map not invertible");
            for (int c = 0; c < m; ++c)
                for (int r = 0; r < m; ++r)
                    if ((*inv)[r][c] != 0) nakinv_[B[c]][B[r]] = (*inv)[r][c];
        }

    // dual basis: for b in jB_i, b^∨ = Σ_{d in iB_j} X_{b,d} d with tr(b^∨ c) = δ_{b,c}
    dual_.assign(n, {});
    for (int j = 0; j < I; ++j)
        for (int i = 0; i < I; ++i) {
            auto& B = blocks_[j][i];
            auto& D = blocks_[i][j];
            if (B.empty() && D.empty()) continue;
            if (B.size() != D.size())
                throw Error(Err::NonUnimodularGram, "block sizes differ for " + idem_names[j] + "," + idem_names[i]);
            int m = (int)B.size();
            // M[d][c] = tr(d c)
            std::vector<std::vector<Q>> M(m, std::vector<Q>(m, Q(0)));
            for (int a = 0; a < m; ++a)
                for (int c = 0; c < m; ++c) M[a][c] = tr(mul_basis(D[a], B[c]));
            auto inv = invert(M);
            if (!inv) throw Error(Err::NonUnimodularGram, "singular Gram block");
            // X = M^{-1}: Σ_d X[b][d] M[d][c] = δ
            for (int bi = 0; bi < m; ++bi)
                for (int d = 0; d < m; ++d) {
                    const Q& x = (*inv)[bi][d];
                    if (x == 0) continue;
                    if (!is_integer(x)) throw Error(Err::NonUnimodularGram, "non-integral dual of " + basis[B[bi]].name);
                    dual_[B[bi]][D[d]] = x;
                }
        }
}

// ---------------------------------------------------------------- reports

bool Report::ok() const {
    for (auto& c : items)
        if (!c.ok) return false;
    return true;
}

void Report::add(const std::string& name, bool ok, const std::string& detail) { items.push_back({name, ok, detail}); }

// ---------------------------------------------------------------- builtins

Algebra make_ground() {
    Algebra A;
    A.label = "ground";
    A.add_idempotent("i");
    A.set_trace(0, 1);
    A.finalize();
    return A;
}

// x^t, t < m; aopt: "all" or "sq" (span of even powers, m even)
Algebra make_truncated_poly(int m, const std::string& aopt) {
    if (m < 1) throw Error(Err::InvalidParams, "truncated_poly needs m >= 1");
    if (aopt != "all" && aopt != "sq" && aopt != "unit")
        throw Error(Err::InvalidParams, "truncated_poly subalgebra must be all|sq|unit");
    Algebra A;
    A.label = "truncated_poly(" + std::to_string(m) + "," + aopt + ")";
    A.add_idempotent("i");
    for (int t = 1; t < m; ++t) {
        std::string nm = t == 1 ? "x" : "x" + std::to_string(t);
        A.add_basis(nm, 0, 0, 0, aopt == "all" || (aopt == "sq" && t % 2 == 0));
    }
    for (int a = 1; a < m; ++a)
        for (int b = 1; a + b < m; ++b) A.set_product(a, b, A.unit(a + b));
    A.set_trace(m - 1, 1);
    A.finalize();
    return A;
}

// Subsets of [0,t) as bitmasks in degree-then-lex order; 0 first.
static std::vector<unsigned> subsets_by_degree(int t) {
    std::vector<unsigned> s;
    for (unsigned m = 0; m < (1u << t); ++m) s.push_back(m);
    std::stable_sort(s.begin(), s.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        for (int k = 0; k < 32; ++k) {
            bool x = a >> k & 1, y = b >> k & 1;
            if (x != y) return x;
        }
        return false;
    });
    return s;
}

// product of monomials in an exterior/Clifford algebra on generators g_0..g_{t-1}
// returns (sign, mask) ; sq = value of g^2 (1 for Clifford, 0 for Grassmann)
static std::pair<int, unsigned> mono_mul(unsigned a, unsigned b, int sq) {
    int sign = 1;
    // move each generator of b leftward past the higher generators of a
    for (int k = 0; k < 32; ++k) {
        if (!(b >> k & 1)) continue;
        int higher = __builtin_popcount(a & ~((2u << k) - 1));
        if (higher & 1) sign = -sign;
        if (a >> k & 1) {
            if (!sq) return {0, 0};
            a &= ~(1u << k);
        } else
            a |= 1u << k;
    }
    return {sign, a};
}

static Algebra make_exterior_like(int t, int sq, const std::string& prefix, const std::string& aopt, unsigned trmask,
                                  const std::string& label) {
    Algebra A;
    A.label = label;
    A.add_idempotent("1");
    auto subs = subsets_by_degree(t);
    std::map<unsigned, int> id;
    id[0] = 0;
    for (unsigned m : subs) {
        if (!m) continue;
        std::string nm;
        for (int k = 0; k < t; ++k)
            if (m >> k & 1) nm += prefix + std::to_string(k + 1);
        int deg = __builtin_popcount(m);
        bool sub = false;
        if (deg % 2 == 0) {
            if (aopt == "even") sub = true;
            if (aopt == "half" && deg >= t / 2) sub = true;
        }
        id[m] = A.add_basis(nm, deg & 1, 0, 0, sub);
    }
    for (unsigned a : subs)
        for (unsigned b : subs) {
            if (!a || !b) continue;
            auto [s, c] = mono_mul(a, b, sq);
            if (s) A.set_product(id[a], id[b], Elem{{id[c], Q(s)}});
        }
    A.set_trace(id[trmask], 1);
    // Clifford: parity twist.  Grassmann: the top-degree trace is already supersymmetric, ψ = id.
    if (sq)
        for (unsigned m : subs) {
            int b = id[m];
            A.set_nakayama(b, Elem{{b, Q(A.basis[b].parity ? -1 : 1)}});
        }
    A.finalize();
    return A;
}

Algebra make_clifford(int t, const std::string& aopt) {
    if (t < 1 || t > 6) throw Error(Err::InvalidParams, "clifford needs 1 <= t <= 6");
    if (aopt != "unit" && aopt != "even") throw Error(Err::InvalidParams, "clifford subalgebra must be unit|even");
    return make_exterior_like(t, 1, "c", aopt, 0, "clifford(" + std::to_string(t) + "," + aopt + ")");
}

Algebra make_grassmann(int t, const std::string& aopt) {
    if (t < 2 || t % 2 || t > 6) throw Error(Err::InvalidParams, "grassmann needs even rank 2..6");
    if (aopt != "unit" && aopt != "even" && aopt != "half")
        throw Error(Err::InvalidParams, "grassmann subalgebra must be unit|even|half");
    return make_exterior_like(t, 0, "x", aopt, (1u << t) - 1, "grassmann(" + std::to_string(t) + "," + aopt + ")");
}

Algebra make_zigzag(int nv, const std::vector<std::pair<int, int>>& edges, const std::map<std::pair<int, int>, int>& eps) {
    if (nv < 1) throw Error(Err::InvalidParams, "zigzag needs a vertex");
    // connectivity
    std::vector<int> comp(nv);
    for (int v = 0; v < nv; ++v) comp[v] = v;
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    std::set<std::pair<int, int>> E;
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= nv || b >= nv) throw Error(Err::InvalidParams, "bad zigzag edge");
        if (E.count({a, b})) throw Error(Err::InvalidParams, "repeated zigzag edge");
        E.insert({a, b});
        E.insert({b, a});
        comp[find(a)] = find(b);
    }
    for (int v = 0; v < nv; ++v)
        if (find(v) != find(0)) throw Error(Err::InvalidParams, "zigzag graph disconnected");
    if (nv == 1) throw Error(Err::InvalidParams, "zigzag needs an edge");
    auto ep = [&](int a, int b) {
        auto it = eps.find({a, b});
        return it == eps.end() ? 1 : it->second;
    };
    Algebra A;
    A.label = "zigzag";
    for (int v = 0; v < nv; ++v) A.add_idempotent("e" + std::to_string(v + 1));
    std::vector<int> c(nv);
    std::map<std::pair<int, int>, int> a;  // (j,i) -> a_{ji} in jAi
    for (int v = 0; v < nv; ++v) c[v] = A.add_basis("c" + std::to_string(v + 1), 0, v, v, false);
    for (auto [x, y] : E)
        if (x < y) {
            a[{y, x}] = A.add_basis("a" + std::to_string(y + 1) + std::to_string(x + 1), 1, x, y, false);
            a[{x, y}] = A.add_basis("a" + std::to_string(x + 1) + std::to_string(y + 1), 1, y, x, false);
        }
    // a_{kj} a_{ji} = δ_{ik} ε_{ji} c_i
    for (auto& [ji, b1] : a)
        for (auto& [kj, b2] : a)
            if (kj.second == ji.first && kj.first == ji.second)
                A.set_product(b2, b1, Elem{{c[ji.second], Q(ep(ji.first, ji.second))}});
    for (int v = 0; v < nv; ++v) A.set_trace(c[v], 1);
    for (auto& [ji, b] : a) A.set_nakayama(b, Elem{{b, Q(-ep(ji.second, ji.first) * ep(ji.first, ji.second))}});
    A.finalize();
    return A;
}

Algebra make_zigzag_A(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    auto A = make_zigzag(n, e, {});
    A.label = "zigzag(A" + std::to_string(n) + ")";
    return A;
}

// Path algebra of 1 -> 2 with one arrow a in 2C1 (not Frobenius; input to the trivial extension).
Algebra make_path_A2(bool odd_arrow) {
    Algebra C;
    C.label = odd_arrow ? "path(A2,odd)" : "path(A2)";
    C.add_idempotent("e1");
    C.add_idempotent("e2");
    C.add_basis("a", odd_arrow ? 1 : 0, 0, 1, !odd_arrow);
    C.finalize(false);
    return C;
}

// E(C) = C* ⊕ C with (α,a)(β,b) = (α·b + a·β, ab), tr(α,a) = Σ α(i), ψ = id.
Algebra make_trivial_extension(const Algebra& C) {
    Algebra E;
    E.label = "trivial_extension(" + C.label + ")";
    for (auto& nm : C.idem_names) E.add_idempotent(nm);
    int n = C.dim();
    std::vector<int> plain(n), star(n);
    for (int b = 0; b < n; ++b) {
        if (C.is_idem(b)) {
            plain[b] = E.idem_basis[C.basis[b].src];
            continue;
        }
        auto& B = C.basis[b];
        plain[b] = E.add_basis(B.name, B.parity, B.src, B.tgt, B.parity == 0);
    }
    for (int b = 0; b < n; ++b) {
        auto& B = C.basis[b];
        star[b] = E.add_basis(B.name + "*", B.parity, B.tgt, B.src, false);
    }
    auto coeff = [&](const Elem& e, int c) {
        auto it = e.find(c);
        return it == e.end() ? Q(0) : it->second;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!C.is_idem(a) && !C.is_idem(b)) {
                Elem r;
                for (auto& [k, v] : C.mul_basis(a, b)) r[plain[k]] = v;
                E.set_product(plain[a], plain[b], r);
            }
            // c*·b : coefficient of d* is coeff_c(b d)
            {
                Elem r;
                for (int d = 0; d < n; ++d) {
                    Q v = coeff(C.mul_basis(b, d), a);
                    if (v != 0) r[star[d]] = v;
                }
                if (!C.is_idem(b)) E.set_product(star[a], plain[b], r);
            }
            // a·c* (here a plays f, b plays c): coefficient of d* is (−1)^{ā c̄ + ā d̄} coeff_c(d a)
            {
                Elem r;
                for (int d = 0; d < n; ++d) {
                    Q v = coeff(C.mul_basis(d, a), b);
                    if (v == 0) continue;
                    int s = C.basis[a].parity * (C.basis[b].parity + C.basis[d].parity);
                    r[star[d]] = (s & 1) ? -v : v;
                }
                if (!C.is_idem(a)) E.set_product(plain[a], star[b], r);
            }
        }
    for (int k = 0; k < C.num_idem(); ++k) E.set_trace(star[C.idem_basis[k]], 1);
    E.finalize();
    return E;
}

// Objects lo..hi, T_{b,a} in bAa of parity b-a.  aopt: "even" or "upper" (even and b >= a).
Algebra make_laurent_path(int lo, int hi, const std::string& aopt) {
    if (lo > hi || hi - lo > 8) throw Error(Err::InvalidParams, "laurent_path range must be nonempty and small");
    if (aopt != "even" && aopt != "upper") throw Error(Err::InvalidParams, "laurent_path subalgebra must be even|upper");
    Algebra A;
    A.label = "laurent_path[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    int N = hi - lo + 1;
    auto nm = [&](int v) { return std::to_string(v); };
    for (int v = lo; v <= hi; ++v) A.add_idempotent("T" + nm(v) + "_" + nm(v));
    std::vector<std::vector<int>> T(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) T[a][a] = A.idem_basis[a];
    for (int b = 0; b < N; ++b)
        for (int a = 0; a < N; ++a) {
            if (a == b) continue;
            int par = std::abs(b - a) & 1;
            bool sub = !par && (aopt == "even" || b > a);
            T[b][a] = A.add_basis("T" + nm(b + lo) + "_" + nm(a + lo), par, a, b, sub);
        }
    for (int c = 0; c < N; ++c)
        for (int b = 0; b < N; ++b)
            for (int a = 0; a < N; ++a)
                if (a != b && b != c) A.set_product(T[c][b], T[b][a], A.unit(T[c][a]));
    for (int a = 0; a < N; ++a) A.set_trace(T[a][a], 1);
    // ψ must be the parity automorphism for the super trace identity to hold on odd paths
    for (int b = 0; b < N; ++b)
        for (int a = 0; a < N; ++a) A.set_nakayama(T[b][a], Elem{{T[b][a], Q((std::abs(b - a) & 1) ? -1 : 1)}});
    A.finalize();
    return A;
}

}  // namespace fw
