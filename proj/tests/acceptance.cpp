// One line per acceptance criterion; exits non-zero if any fails.
// FROBWEB_ACCEPT_REP: ';'-separated builtin names for the matrix side of criterion 3.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "builtins.hpp"
#include "fw/cyclo.hpp"
#include "fw/io.hpp"
#include "fw/rep.hpp"
#include "oracles.hpp"

using namespace fw;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::vector<std::string> problems;
    void need(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            problems.push_back(what);
        }
    }
};

int failures = 0;

void run(int n, const std::function<void(Outcome&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " — " << o.detail.str();
    std::cout.precision(1);
    std::cout << " [" << std::fixed << secs << "s]\n";
    std::cout.unsetf(std::ios::fixed);
    for (size_t k = 0; k < o.problems.size() && k < 10; ++k) std::cout << "    " << o.problems[k] << "\n";
    if (!o.ok) ++failures;
    std::cout.flush();
}

CycDatum datum(const Algebra& A, std::vector<int> L, std::vector<std::vector<std::string>> c) {
    CycDatum D;
    D.L = std::move(L);
    for (auto& row : c) {
        D.c.emplace_back();
        for (auto& s : row) D.c.back().push_back(parse_element(A, s));
    }
    return D;
}

bool dots_below(const Expansion& e, int ell) {
    for (auto& [mu, c] : e.c)
        for (auto& row : mu.e)
            for (auto& cell : row)
                for (auto& [tb, m] : cell)
                    if (tb.first >= ell) return false;
    return true;
}

std::vector<std::string> rep_algebras() {
    const char* env = std::getenv("FROBWEB_ACCEPT_REP");
    std::string s = env ? env : "ground;Cl1 even;Cl1 unit;zigzag A2;trivial extension A2";
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string x; std::getline(ss, x, ';');) out.push_back(x);
    return out;
}

}  // namespace

int main() {
    auto builtins = all_builtins();

    run(1, [&](Outcome& o) {
        int items = 0;
        for (auto& [name, A] : builtins) {
            Report r = check_frobenius(A);
            items += (int)r.items.size();
            for (auto& it : r.items) o.need(it.ok, name + ": " + it.name + " " + it.detail);
        }
        o.detail << builtins.size() << " builtin algebras, " << items << " exact checks";
    });

    run(2, [&](Outcome& o) {
        auto great = [](const Algebra& A) { return check_great_pair(A).ok(); };
        for (int t = 1; t <= 3; ++t) {
            o.need(great(make_clifford(t, "unit")) == (t <= 1), "Cl_" + std::to_string(t) + " with k1");
            o.need(great(make_clifford(t, "even")), "Cl_" + std::to_string(t) + " with even part");
        }
        o.need(!great(make_grassmann(4, "unit")), "Grassmann 4 with k1 should not be great");
        for (int t : {2, 4}) {
            o.need(great(make_grassmann(t, "even")), "Grassmann even part");
            o.need(great(make_grassmann(t, "half")), "Grassmann half degree");
        }
        o.need(great(make_zigzag_A(2)) && great(make_zigzag_A(3)), "zigzag with idempotents");
        o.detail << "Cl_t/k1 great iff t<=1 (t<=3); Cl_t/even great; Grassmann 4 k1 not great, even/half great; zigzag A2,A3 great"
                 << " (Grassmann 2 with k1 is great: " << (great(make_grassmann(2, "unit")) ? "yes" : "no") << ")";
    });

    run(3, [&](Outcome& o) {
        int checked = 0;
        std::map<std::string, int> per;
        for (auto& [name, A] : builtins) {
            Rewriter R(A);
            auto res = verify_relation_suite(R, relation_instances(A, Caps{}));
            checked += res.checked;
            for (auto& [k, v] : res.per_relation) per[k] += v;
            for (auto& f : res.failures) o.need(false, "(a) " + name + ": " + f);
        }
        o.detail << "(a) normalize: " << checked << " instances, " << per.size() << " relation families on "
                 << builtins.size() << " algebras; ";
        int rchecked = 0, rskipped = 0, used = 0;
        auto names = rep_algebras();
        for (auto& [name, A] : builtins) {
            if (std::find(names.begin(), names.end(), name) == names.end()) continue;
            ++used;
            auto inst = relation_instances(A, Caps{});
            for (int n : {1, 2})
                for (std::string m : {"trivial", "V"}) {
                    Rep R(A, n, make_module(A, n, m));
                    auto res = verify_relations_rep(R, inst, 20000);
                    rchecked += res.checked;
                    rskipped += res.skipped;
                    for (auto& f : res.failures)
                        o.need(false, "(b) " + name + " n=" + std::to_string(n) + " " + m + ": " + f);
                }
        }
        o.need(rskipped == 0, "(b) skipped instances: " + std::to_string(rskipped));
        o.detail << "(b) matrices n in {1,2}, M in {trivial,V}: " << rchecked << " instances on " << used
                 << " algebras, " << rskipped << " skipped";
    });

    run(4, [&](Outcome& o) {
        struct Case {
            Algebra A;
            std::string src, tgt;
            int D, n;
        };
        std::vector<Case> C = {
            {make_ground(), "i^1 i^1", "i^1 i^1", 1, 2},
            {make_ground(), "i^1 i^1", "i^1 i^1", 2, 2},
            {make_ground(), "i^2", "i^2", 2, 2},
            {make_ground(), "i^2", "i^1 i^1", 2, 2},
            {make_ground(), "i^1 i^1 i^1", "i^1 i^1 i^1", 1, 3},
            {make_ground(), "i^2 i^1", "i^1 i^2", 1, 3},
            {make_clifford(1, "even"), "1^1 1^1", "1^1 1^1", 1, 2},
            {make_clifford(1, "even"), "1^2", "1^2", 2, 2},
            {make_clifford(1, "unit"), "1^2", "1^2", 1, 2},
            {make_zigzag_A(2), "e1^1 e2^1", "e2^1 e1^1", 1, 2},
            {make_zigzag_A(2), "e1^1 e1^1", "e1^1 e1^1", 1, 2},
            {make_zigzag_A(2), "e1^2", "e1^2", 1, 2},
            {make_zigzag_A(2), "e1^2 e2^1", "e2^1 e1^2", 1, 3},
            {make_truncated_poly(4, "sq"), "i^2", "i^2", 1, 2},
            {make_grassmann(2, "half"), "1^2", "1^1 1^1", 1, 2},
            {make_trivial_extension(make_path_A2(false)), "e1^1 e2^1", "e1^1 e2^1", 1, 2},
            {make_laurent_path(-1, 1, "even"), "T0_0^1 T1_1^1", "T1_1^1 T0_0^1", 1, 2},
            {make_zigzag_A(3), "e1^1 e2^1", "e2^1 e3^1", 2, 2},
        };
        int total = 0;
        for (auto& c : C) {
            Word s = parse_word(c.A, c.src), t = parse_word(c.A, c.tgt);
            std::string tag = c.A.label + " " + c.src + " -> " + c.tgt + " dots<=" + std::to_string(c.D);
            RankReport r = independence_check(c.A, s, t, c.D, c.n);
            o.need(r.full(), tag + ": rank " + std::to_string(r.rank) + "/" + std::to_string(r.expected));
            o.need(r.expected == oracle::count_matrices(c.A, s, t, c.D, c.D), tag + ": count differs from oracle");
            Rewriter R(c.A);
            for (auto& mu : enumerate_basis(c.A, s, t, c.D)) {
                Expansion e = R.normalize(eta(c.A, mu));
                o.need(e == unit_expansion(mu), tag + ": normalize(eta) != unit");
                o.need(R.normalize(R.realize(e)) == e, tag + ": normalize not idempotent");
            }
            total += r.expected;
        }
        Algebra k = make_ground();
        Word w = parse_word(k, "i^1 i^1");
        long long dim6 = (long long)enumerate_basis(k, w, w, 1).size();
        o.need(dim6 == 6 && oracle::affine_hecke_dim(2, 1) == 6, "ground d=2 dots<=1 dimension");
        o.detail << C.size() << " cases full rank (" << total << " basis vectors), normalize(eta)=unit and idempotent; ground d=2 dots<=1: "
                 << dim6 << " = 2!*C(3,2)";
    });

    run(5, [&](Outcome& o) {
        int n = 0;
        for (Algebra A : {make_ground(), make_clifford(1, "even"), make_zigzag_A(2)})
            for (std::string m : {"trivial", "V"}) {
                Rep R(A, 2, make_module(A, 2, m));
                for (int i = 0; i < A.num_idem(); ++i)
                    for (int kk = 1; kk <= 3; ++kk) {
                        Report r = check_thick_casimir(R, i, kk);
                        for (auto& it : r.items) {
                            ++n;
                            o.need(it.ok, A.label + " " + m + " k=" + std::to_string(kk) + ": " + it.name + " " + it.detail);
                        }
                    }
            }
        o.detail << n << " recursion/homomorphism identities, n=2, k<=3, ground/Cl1/zigzag A2, trivial and V";
    });

    run(6, [&](Outcome& o) {
        Algebra k = make_ground();
        Cyclotomic C(k, pure_idempotent_datum(k, {{0, 0}}));
        Word w{{0, 1}, {0, 1}};
        long long cnt = (long long)C.basis(w, w).size();
        o.need(cnt == 4 * 2, "|M(ii,ii)| = l^d d!");
        o.need(cnt == oracle::cyclotomic_hecke_dim(2, 2), "|M(ii,ii)| = dim of the level-2 cyclotomic Hecke algebra");
        int reduced = 0;
        for (auto& mu : enumerate_basis(k, w, w, 4)) {
            Morphism f = eta(k, mu);
            Expansion e = C.thin_reduce(f);
            o.need(dots_below(e, 2), "support has a dot power >= l");
            o.need(C.thin_reduce(C.rewriter().realize(e)) == e, "thin_reduce not idempotent");
            ++reduced;
        }
        Algebra Z = make_zigzag_A(2);
        int zc = 0;
        for (auto dat : {datum(Z, {1}, {{"0*e1"}, {"0*e2"}}), datum(Z, {1}, {{"2*c1"}, {"c2"}})}) {
            Cyclotomic CZ(Z, dat);
            for (auto [s, t] : std::vector<std::pair<std::string, std::string>>{
                     {"e1^1 e2^1", "e2^1 e1^1"}, {"e1^1 e1^1", "e1^1 e1^1"}, {"e1^1 e2^1 e1^1", "e1^1 e1^1 e2^1"}}) {
                Word a = parse_word(Z, s), b = parse_word(Z, t);
                o.need((long long)CZ.basis(a, b).size() == oracle::count_matrices(Z, a, b, 0, 0), "zigzag level-1 count " + s);
                ++zc;
            }
        }
        o.detail << "ground l=2 d=2: |M| = " << cnt << " = l^d*d! = sum over bipartitions of (f^lambda)^2; thin_reduce idempotent, dots < l on "
                 << reduced << " inputs; zigzag level-1 counts match on " << zc
                 << " boundaries (the value 16 stated for the ground case is inconsistent with l^d*d! and is not asserted)";
    });

    run(7, [&](Outcome& o) {
        int nX = 0;
        Algebra Z = make_zigzag_A(2);
        for (long gamma : {-2, -1, 1, 2, 3})
            for (std::vector<long> gs : {std::vector<long>{gamma}, std::vector<long>{gamma, 1}}) {
                std::vector<std::vector<long>> g(2, gs);
                Cyclotomic C(Z, pure_idempotent_datum(Z, g));
                long gsum = 0;
                for (long x : gs) gsum += x;
                for (int i = 0; i < 2; ++i)
                    for (int d = 1; d <= 3; ++d) {
                        Regularity r = C.regularity(d, i);
                        std::string tag = "gamma=" + std::to_string(gamma) + " level " + std::to_string(gs.size()) +
                                          " i=" + std::to_string(i) + " d=" + std::to_string(d);
                        o.need(r.ok, tag + " not regular");
                        if (!r.ok) continue;
                        if (gs.size() > 1) continue;
                        // X = C(γ+d−1, d) · merge ∘ (i^∨)^{⊗d} ∘ split
                        std::vector<int> ones(d, 1);
                        Morphism inner = identity({});
                        for (int u = 0; u < d; ++u) inner = tensor(inner, m_coupon(Z, i, i, Z.dual(Z.idem_basis[i]), 1));
                        Morphism Y = multi_merge(i, ones) * inner * multi_split(i, ones);
                        Q b = oracle::qchoose(Q(gsum + d - 1), d);
                        o.need(C.rewriter().equal(C.rewriter().realize(r.X), Y * b), tag + " X differs from closed form");
                        ++nX;
                    }
            }
        int nb = 0;
        for (int d = 1; d <= 5; ++d)
            for (int x = -4; x <= 4; ++x) {
                Q lhs = absolute_length_sum(d, Q(x));
                o.need(lhs == oracle::qchoose(Q(x + d - 1), d) * Q((long)oracle::fact(d)), "binomial identity d=" + std::to_string(d));
                o.need(lhs == oracle::cycle_sum(d, Q(x)), "cycle-count oracle d=" + std::to_string(d));
                ++nb;
            }
        Algebra T = make_truncated_poly(4, "sq");
        Cyclotomic CT(T, datum(T, {1}, {{"x"}}));
        Regularity r = CT.regularity(2, 0);
        o.need(!r.ok && r.witness.has_value() && !is_integer(r.coefficient / 2), "truncated poly d=2 should fail with a witness");
        o.detail << "(a) " << nX << " closed forms matched, level-2 data regular; (b) " << nb << " (d,x) pairs, d<=5; (c) x^4/(1,x^2), c=x, d=2 fails";
        if (r.witness) o.detail << " with witness " << dcm_json(T, *r.witness).dump() << " coefficient " << qstr(r.coefficient) << " not divisible by 2";
    });

    run(8, [&](Outcome& o) {
        struct Case {
            std::string tag;
            Algebra A;
            std::function<CycDatum(const Algebra&)> D;
            std::string src, tgt;
        };
        std::vector<Case> C = {
            {"zigzag pure (1,2)", make_zigzag_A(2), [](const Algebra& A) { return pure_idempotent_datum(A, {{1, 2}, {1, 2}}); }, "e1^2 e2^1", "e2^1 e1^2"},
            {"zigzag pure (1)", make_zigzag_A(2), [](const Algebra& A) { return pure_idempotent_datum(A, {{1}, {1}}); }, "e1^2", "e1^2"},
            {"zigzag pure (2)", make_zigzag_A(2), [](const Algebra& A) { return pure_idempotent_datum(A, {{2}, {-1}}); }, "e1^2 e2^1", "e1^1 e2^1 e1^1"},
            {"ground (2)", make_ground(), [](const Algebra& A) { return pure_idempotent_datum(A, {{2}}); }, "i^3", "i^3"},
            {"ground (0,1)", make_ground(), [](const Algebra& A) { return pure_idempotent_datum(A, {{0, 1}}); }, "i^2 i^1", "i^1 i^2"},
            {"Cl1 L=2, c=3", make_clifford(1, "even"), [](const Algebra& A) { return datum(A, {2}, {{"3"}}); }, "1^2", "1^2"},
            {"x^4 pure (1)", make_truncated_poly(4, "sq"), [](const Algebra& A) { return pure_idempotent_datum(A, {{1}}); }, "i^2", "i^1 i^1"},
            {"zigzag level 1, c=0", make_zigzag_A(2), [](const Algebra& A) { return datum(A, {1}, {{"0*e1"}, {"0*e2"}}); }, "e1^2 e2^1", "e2^1 e1^2"},
        };
        int nb = 0;
        for (auto& c : C) {
            Cyclotomic Cy(c.A, c.D(c.A));
            Rewriter& R = Cy.rewriter();
            Word s = parse_word(c.A, c.src), t = parse_word(c.A, c.tgt);
            for (auto& mu : Cy.basis(s, t)) {
                o.need(Cy.thick_reduce(R.realize(unit_expansion(mu))) == unit_expansion(mu), c.tag + ": not unit on basis");
                ++nb;
            }
            int ell = Cy.level();
            for (auto& mu : enumerate_basis(c.A, s, t, ell + 1)) {
                Expansion e = Cy.thick_reduce(eta(c.A, mu));
                o.need(Cy.thick_reduce(R.realize(e)) == e, c.tag + ": not idempotent");
            }
        }
        // level one with c = 0: the quotient is the finite web category
        Algebra Z = make_zigzag_A(2);
        Cyclotomic L1(Z, datum(Z, {1}, {{"0*e1"}, {"0*e2"}}));
        Rewriter RZ(Z);
        int agree = 0;
        for (auto [s0, t0] : std::vector<std::pair<std::string, std::string>>{{"e1^2 e2^1", "e2^1 e1^2"}, {"e1^2", "e1^1 e1^1"}, {"e1^1 e2^1", "e2^1 e1^1"}}) {
            Word s = parse_word(Z, s0), t = parse_word(Z, t0);
            o.need(L1.basis(s, t) == enumerate_basis(Z, s, t, 0), "level-1 basis differs from the dot-free basis");
            auto B = enumerate_basis(Z, s, t, 0);
            for (size_t a = 0; a < B.size(); ++a) {
                Morphism f = eta(Z, B[a]) * Q((long)a + 1) + eta(Z, B[(a * 7 + 3) % B.size()]);
                o.need(L1.thick_reduce(f) == RZ.normalize(f), "level-1 reduction differs from normalization");
                ++agree;
            }
        }
        o.detail << C.size() << " regular cases, unit on " << nb << " basis vectors and idempotent; level-1 c=0 agrees with finite normalization on "
                 << agree << " morphisms";
    });

    std::cout << (failures ? "acceptance: FAIL" : "acceptance: all criteria pass") << std::endl;
    return failures ? 1 : 0;
}
