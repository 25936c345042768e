#include <doctest.h>

#include "builtins.hpp"
#include "fw/io.hpp"
#include "fw/rep.hpp"
#include "oracles.hpp"

using namespace fw;

TEST_CASE("natural module: v_t^b · E^f_{r,s} = δ_{tr} v_s^{bf}") {
    Algebra Z = make_zigzag_A(2);
    NaturalModule V(Z, 3);
    for (auto& k : V.basis())
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s)
                for (int f = 0; f < Z.dim(); ++f) {
                    KVec out;
                    V.act(k, GlGen{r, s, f}, 1, out);
                    KVec want;
                    if (k[0] == r)
                        for (auto& [b, c] : Z.mul(Z.unit(k[1]), Z.unit(f))) want[{s, b}] += c;
                    std::erase_if(want, [](auto& p) { return p.second == 0; });
                    CHECK(out == want);
                }
}

TEST_CASE("bracket relation on modules") {
    for (Algebra A : {make_ground(), make_clifford(1, "even"), make_zigzag_A(2)}) {
        CAPTURE(A.label);
        for (std::string m : {"trivial", "V"}) {
            Rep R(A, 2, make_module(A, 2, m));
            Word w{{0, 2}};
            CHECK(check_bracket(R, w).ok());
        }
    }
}

TEST_CASE("merge after split on a thick strand is 2") {
    Algebra k = make_ground();
    Rep R(k, 2, make_module(k, 2, "trivial"));
    Matrix a = R.evaluate(m_merge(0, 1, 1) * m_split(0, 1, 1));
    Matrix b = R.evaluate(identity({{0, 2}}) * Q(2));
    CHECK(a == b);
    CHECK(a.rows.size() == 3);  // S^2 of a 2-dimensional space
    CHECK_FALSE(a == R.evaluate(identity({{0, 2}})));
}

TEST_CASE("the thin Casimir on V ⊗ V is the flip for the ground field") {
    Algebra k = make_ground();
    int n = 3;
    Rep R(k, n, make_module(k, n, "V"));
    Matrix m = R.evaluate(m_dot(0, 1));
    REQUIRE(m.cols.size() == (size_t)(n * n));
    for (size_t c = 0; c < m.cols.size(); ++c) {
        int a = m.cols[c].m[0], b = m.cols[c].w[0][0].first;
        for (size_t r = 0; r < m.rows.size(); ++r) {
            int a2 = m.rows[r].m[0], b2 = m.rows[r].w[0][0].first;
            Q want = (a2 == b && b2 == a) ? 1 : 0;
            auto it = m.e.find({(int)r, (int)c});
            CHECK((it == m.e.end() ? Q(0) : it->second) == want);
        }
    }
}

TEST_CASE("good partitions and thick Casimirs") {
    for (int k = 1; k <= 4; ++k) CHECK((long long)good_partitions(k).size() == oracle::fact(k));
    for (Algebra A : {make_ground(), make_clifford(1, "even")}) {
        CAPTURE(A.label);
        for (std::string m : {"trivial", "V"}) {
            Rep R(A, 2, make_module(A, 2, m));
            for (int k = 1; k <= 2; ++k) CHECK(check_thick_casimir(R, 0, k).ok());
        }
    }
    CHECK(check_casimir_naturality(make_zigzag_A(2), 2, 0).ok());
}

TEST_CASE("relation suite in the representation, ground field") {
    Algebra k = make_ground();
    auto inst = relation_instances(k, Caps{});
    for (int n : {1, 2})
        for (std::string m : {"trivial", "V"}) {
            CAPTURE(n);
            CAPTURE(m);
            Rep R(k, n, make_module(k, n, m));
            auto res = verify_relations_rep(R, inst, 20000);
            CHECK(res.checked > 0);
            CHECK(res.failures.empty());
        }
}

TEST_CASE("false relations give different matrices") {
    Algebra C = make_clifford(1, "even");
    Rep R(C, 2, make_module(C, 2, "V"));
    std::vector<RelInstance> bad;
    for (auto& I : relation_instances(C, Caps{})) {
        if (I.lhs.src.size() > 2 || width(I.lhs.src) > 2) continue;
        if (R.evaluate(I.lhs).e.empty()) continue;
        bad.push_back({I.name, I.lhs * Q(2), I.rhs});
        if (bad.size() >= 20) break;
    }
    REQUIRE(!bad.empty());
    auto res = verify_relations_rep(R, bad, 20000);
    CHECK(res.failures.size() == bad.size());
}

TEST_CASE("linear independence via the generic Verma module") {
    Algebra k = make_ground();
    Word w = parse_word(k, "i^1 i^1");
    RankReport r = independence_check(k, w, w, 1, 2);
    CHECK(r.expected == 6);
    CHECK(r.full());
    CHECK_THROWS_AS(independence_check(k, w, w, 1, 1), Error);
    try {
        independence_check(k, w, w, 1, 1);
    } catch (const Error& e) {
        CHECK(e.kind == Err::InsufficientN);
    }
    Algebra Z = make_zigzag_A(2);
    RankReport z = independence_check(Z, parse_word(Z, "e1^1 e2^1"), parse_word(Z, "e2^1 e1^1"), 1, 2);
    CHECK(z.full());
    CHECK(z.expected == oracle::count_matrices(Z, parse_word(Z, "e1^1 e2^1"), parse_word(Z, "e2^1 e1^1"), 1, 1));
}
