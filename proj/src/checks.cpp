// Frobenius and great-pair verification on every homogeneous basis instance.
#include <sstream>

#include "fw/core.hpp"

namespace fw {

namespace {

using Tensor = std::map<std::pair<int, int>, Q>;

void tadd(Tensor& t, const Elem& a, const Elem& b, const Q& s) {
    for (auto& [x, u] : a)
        for (auto& [y, v] : b) {
            Q& c = t[{x, y}];
            c += s * u * v;
            if (c == 0) t.erase({x, y});
        }
}

// (f⊗g)(x⊗y) = (-1)^{ḡx̄} fx ⊗ gy
Tensor tmul(const Algebra& A, const Tensor& l, const Tensor& r) {
    Tensor out;
    for (auto& [fg, u] : l)
        for (auto& [xy, v] : r) {
            int s = A.basis[fg.second].parity * A.basis[xy.first].parity;
            tadd(out, A.mul_basis(fg.first, xy.first), A.mul_basis(fg.second, xy.second), s ? Q(-u * v) : Q(u * v));
        }
    return out;
}

Tensor casimir_tensor(const Algebra& A, int i, int j) {
    Tensor t;
    for (int b : A.block(j, i)) tadd(t, A.unit(b), A.dual(b), 1);
    return t;
}

Tensor pure(const Elem& a, const Elem& b) {
    Tensor t;
    tadd(t, a, b, 1);
    return t;
}

std::string nm(const Algebra& A, int b) { return A.basis[b].name; }

}  // namespace

Report check_frobenius(const Algebra& A) {
    Report R;
    int n = A.dim(), I = A.num_idem();
    std::string bad;
    auto note = [&](const std::string& s) {
        if (bad.empty()) bad = s;
    };

    // associativity and block structure
    bad.clear();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Elem ab = A.mul_basis(a, b);
            for (auto& [k, v] : ab) {
                auto& K = A.basis[k];
                if (K.tgt != A.basis[a].tgt || K.src != A.basis[b].src ||
                    K.parity != ((A.basis[a].parity + A.basis[b].parity) & 1))
                    note(nm(A, a) + "*" + nm(A, b));
            }
            for (int c = 0; c < n; ++c)
                if (A.mul(ab, A.unit(c)) != A.mul(A.unit(a), A.mul_basis(b, c)))
                    note(nm(A, a) + "," + nm(A, b) + "," + nm(A, c));
        }
    R.add("associative, graded, block-respecting product", bad.empty(), bad);

    // ψ: even, block-preserving, multiplicative, fixes I
    bad.clear();
    for (int a = 0; a < n; ++a) {
        Elem p = A.psi(A.unit(a));
        for (auto& [k, v] : p)
            if (A.basis[k].parity != A.basis[a].parity || A.basis[k].src != A.basis[a].src ||
                A.basis[k].tgt != A.basis[a].tgt)
                note("psi(" + nm(A, a) + ")");
        if (A.is_idem(a) && p != A.unit(a)) note("psi moves " + nm(A, a));
        if (A.psi_inv(p) != A.unit(a)) note("psi^-1 psi(" + nm(A, a) + ")");
        for (int b = 0; b < n; ++b)
            if (A.psi(A.mul_basis(a, b)) != A.mul(p, A.psi(A.unit(b)))) note("psi(" + nm(A, a) + nm(A, b) + ")");
    }
    R.add("Nakayama map is an even automorphism fixing I", bad.empty(), bad);

    // trace supported on diagonal blocks, even
    bad.clear();
    for (int b = 0; b < n; ++b)
        if (A.tr_basis(b) != 0 && (A.basis[b].src != A.basis[b].tgt || A.basis[b].parity)) note(nm(A, b));
    R.add("trace vanishes off diagonal blocks and on odd part", bad.empty(), bad);

    // tr(fg) = (-1)^{f̄ḡ} tr(g ψ(f))
    bad.clear();
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            Q l = A.tr(A.mul_basis(f, g));
            Q r = A.tr(A.mul(A.unit(g), A.psi(A.unit(f))));
            if (A.basis[f].parity && A.basis[g].parity) r = -r;
            if (l != r) note(nm(A, f) + "," + nm(A, g));
        }
    R.add("trace twisted symmetry tr(fg) = ±tr(g psi(f))", bad.empty(), bad);

    // b^∨ ∈ iAj, tr(b^∨ c) = δ
    bad.clear();
    for (int b = 0; b < n; ++b) {
        for (auto& [k, v] : A.dual(b))
            if (A.basis[k].src != A.basis[b].tgt || A.basis[k].tgt != A.basis[b].src ||
                A.basis[k].parity != A.basis[b].parity)
                note(nm(A, b));
        for (int c : A.block(A.basis[b].tgt, A.basis[b].src))
            if (A.tr(A.mul(A.dual(b), A.unit(c))) != (b == c ? 1 : 0)) note(nm(A, b) + "," + nm(A, c));
    }
    R.add("dual basis lies in the opposite block and pairs to delta", bad.empty(), bad);

    // tr(b^∨) = [b ∈ I]
    bad.clear();
    for (int b = 0; b < n; ++b)
        if (A.tr(A.dual(b)) != (A.is_idem(b) ? 1 : 0)) note(nm(A, b));
    R.add("tr(b^dual) = [b in I]", bad.empty(), bad);

    // tr(((-1)^b̄ ψ^{-1}(b)) c^∨) = δ_{b,c}
    bad.clear();
    for (int b = 0; b < n; ++b) {
        Elem y = scaled(A.psi_inv(A.unit(b)), A.basis[b].parity ? -1 : 1);
        for (int c : A.block(A.basis[b].tgt, A.basis[b].src))
            if (A.tr(A.mul(y, A.dual(c))) != (b == c ? 1 : 0)) note(nm(A, b) + "," + nm(A, c));
    }
    R.add("double dual equals signed inverse Nakayama", bad.empty(), bad);

    // tr(ψ(b^∨) ψ(c)) = δ
    bad.clear();
    for (int b = 0; b < n; ++b)
        for (int c : A.block(A.basis[b].tgt, A.basis[b].src))
            if (A.tr(A.mul(A.psi(A.dual(b)), A.psi(A.unit(c)))) != (b == c ? 1 : 0)) note(nm(A, b) + "," + nm(A, c));
    R.add("Nakayama map commutes with duals", bad.empty(), bad);

    // τ(Σ_{jB_i} b⊗b^∨) = Σ_{iB_j} ψ^{-1}(b)⊗b^∨
    bad.clear();
    for (int i = 0; i < I; ++i)
        for (int j = 0; j < I; ++j) {
            Tensor l, r;
            for (int b : A.block(j, i))
                for (auto& [k, v] : A.dual(b)) {
                    Q s = (A.basis[b].parity && A.basis[k].parity) ? Q(-v) : v;
                    Q& c = l[{k, b}];
                    c += s;
                    if (c == 0) l.erase({k, b});
                }
            for (int b : A.block(i, j)) tadd(r, A.psi_inv(A.unit(b)), A.dual(b), 1);
            if (l != r) note(A.idem_names[i] + "," + A.idem_names[j]);
        }
    R.add("signed flip of Casimir", bad.empty(), bad);

    // transport, both identities, on every homogeneous basis pair (f, g)
    bad.clear();
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            int k = A.basis[f].tgt, j = A.basis[f].src, l = A.basis[g].tgt, i = A.basis[g].src;
            int sg = A.basis[f].parity && A.basis[g].parity ? -1 : 1;
            Tensor lhs = tmul(A, pure(A.unit(f), A.unit(g)), casimir_tensor(A, i, j));
            Tensor rhs = tmul(A, casimir_tensor(A, l, k), pure(A.psi(A.unit(g)), A.unit(f)));
            for (auto& [key, v] : rhs) v *= sg;
            if (lhs != rhs) note("transport " + nm(A, f) + "," + nm(A, g));
            Tensor Pl, Pr;
            for (int b : A.block(i, j)) tadd(Pl, A.psi_inv(A.unit(b)), A.dual(b), 1);
            for (int b : A.block(l, k)) tadd(Pr, A.psi_inv(A.unit(b)), A.dual(b), 1);
            Tensor lhs2 = tmul(A, pure(A.unit(g), A.unit(f)), Pl);
            Tensor rhs2 = tmul(A, Pr, pure(A.unit(f), A.psi(A.unit(g))));
            for (auto& [key, v] : rhs2) v *= sg;
            if (lhs2 != rhs2) note("transportrev " + nm(A, f) + "," + nm(A, g));
        }
    R.add("Casimir transport identities", bad.empty(), bad);
    return R;
}

Report check_great_pair(const Algebra& A) {
    Report R;
    int n = A.dim();
    std::string bad;
    auto note = [&](const std::string& s) {
        if (bad.empty()) bad = s;
    };
    for (int k = 0; k < A.num_idem(); ++k)
        if (!A.basis[A.idem_basis[k]].in_sub) note(A.idem_names[k]);
    for (int b = 0; b < n; ++b)
        if (A.basis[b].in_sub && A.basis[b].parity) note(nm(A, b) + " odd");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (A.basis[a].in_sub && A.basis[b].in_sub && !A.elem_in_sub(A.mul_basis(a, b)))
                note(nm(A, a) + "*" + nm(A, b) + " leaves subalgebra");
    R.add("good pair: subalgebra basis contains I, is even and closed", bad.empty(), bad);

    Report F = check_frobenius(A);
    bad.clear();
    for (auto& c : F.items)
        if (!c.ok) note(c.name + " (" + c.detail + ")");
    R.add("Frobenius superalgebra axioms", bad.empty(), bad);

    bad.clear();
    for (int b = 0; b < n; ++b)
        if (A.basis[b].in_sub && !A.elem_in_sub(A.psi(A.unit(b)))) note(nm(A, b));
    R.add("Nakayama map preserves subalgebra", bad.empty(), bad);

    bad.clear();
    for (int b = 0; b < n; ++b)
        if (!A.basis[b].parity && !A.basis[b].in_sub && !A.elem_in_sub(A.dual(b))) note(nm(A, b));
    R.add("great: duals of even non-subalgebra basis elements lie in subalgebra", bad.empty(), bad);
    return R;
}

}  // namespace fw
