// Independent brute-force oracles for the tests.  Nothing here calls the enumeration,
// normalization or cyclotomic code of the library.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "fw/web.hpp"

namespace oracle {

using fw::Algebra;
using fw::Q;
using fw::Word;

// Number of restricted compositions filling every cell, counted by degree with generating
// functions: even labels are unbounded, odd labels used at most once.
// Counts matrices of total degree <= D with at most tmax dots per label.
inline long long count_matrices(const Algebra& A, const Word& src0, const Word& tgt0, int D, int tmax) {
    Word src, tgt;
    for (auto& s : src0)
        if (s.x) src.push_back(s);
    for (auto& s : tgt0)
        if (s.x) tgt.push_back(s);
    size_t R = src.size(), C = tgt.size();
    int N = 0;
    for (auto& s : src) N += s.x;
    // series[r][s][n][d]
    using Series = std::vector<std::vector<long long>>;
    auto cell = [&](int i, int j) {
        Series S(N + 1, std::vector<long long>(D + 1, 0));
        S[0][0] = 1;
        for (int b = 0; b < A.dim(); ++b) {
            if (A.basis[b].src != i || A.basis[b].tgt != j) continue;
            for (int t = 0; t <= std::min(tmax, D); ++t) {
                if (A.basis[b].parity) {
                    for (int n = N; n >= 1; --n)
                        for (int d = D; d >= t; --d) S[n][d] += S[n - 1][d - t];
                } else {
                    for (int n = 1; n <= N; ++n)
                        for (int d = t; d <= D; ++d) S[n][d] += S[n - 1][d - t];
                }
            }
        }
        return S;
    };
    std::vector<std::vector<Series>> ser(R, std::vector<Series>(C));
    for (size_t r = 0; r < R; ++r)
        for (size_t s = 0; s < C; ++s) ser[r][s] = cell(src[r].c, tgt[s].c);

    std::vector<int> colleft(C);
    for (size_t s = 0; s < C; ++s) colleft[s] = tgt[s].x;
    long long total = 0;
    // poly = degree distribution of the cells chosen so far
    std::function<void(size_t, size_t, int, std::vector<long long>)> go = [&](size_t r, size_t s, int rowleft,
                                                                              std::vector<long long> poly) {
        if (r == R) {
            for (int c : colleft)
                if (c) return;
            for (auto v : poly) total += v;
            return;
        }
        if (s == C) {
            if (rowleft) return;
            go(r + 1, 0, r + 1 < R ? src[r + 1].x : 0, poly);
            return;
        }
        for (int k = 0; k <= std::min(rowleft, colleft[s]); ++k) {
            auto& S = ser[r][s][k];
            std::vector<long long> np(D + 1, 0);
            for (int a = 0; a <= D; ++a)
                if (poly[a])
                    for (int b = 0; a + b <= D; ++b) np[a + b] += poly[a] * S[b];
            colleft[s] -= k;
            go(r, s + 1, rowleft - k, np);
            colleft[s] += k;
        }
    };
    std::vector<long long> one(D + 1, 0);
    one[0] = 1;
    if (R == 0) return C == 0 ? 1 : 0;
    go(0, 0, src[0].x, one);
    return total;
}

inline long long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }
inline long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// degree <= D part of Z[x_1..x_d] ⋊ S_d
inline long long affine_hecke_dim(int d, int D) { return fact(d) * choose(D + d, d); }

// partitions of n
inline void partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

// number of standard tableaux, hook length formula
inline long long syt(const std::vector<int>& la) {
    int n = std::accumulate(la.begin(), la.end(), 0);
    long long hooks = 1;
    for (size_t r = 0; r < la.size(); ++r)
        for (int c = 0; c < la[r]; ++c) {
            int arm = la[r] - c - 1, leg = 0;
            for (size_t r2 = r + 1; r2 < la.size() && la[r2] > c; ++r2) ++leg;
            hooks *= arm + leg + 1;
        }
    return fact(n) / hooks;
}

// Σ over ℓ-multipartitions λ of d of (dim S^λ)², dim S^λ = d!/Π|λ_k|! · Π f^{λ_k}
inline long long cyclotomic_hecke_dim(int ell, int d) {
    long long total = 0;
    std::vector<int> sizes(ell, 0);
    std::function<void(int, int)> comp = [&](int k, int left) {
        if (k == ell - 1) {
            sizes[k] = left;
            // all choices of partitions of each size
            std::vector<std::vector<std::vector<int>>> P(ell);
            for (int a = 0; a < ell; ++a) {
                std::vector<int> cur;
                partitions(sizes[a], sizes[a], cur, P[a]);
            }
            std::function<void(int, long long)> pick = [&](int a, long long dim) {
                if (a == ell) {
                    total += dim * dim;
                    return;
                }
                for (auto& la : P[a]) pick(a + 1, dim * syt(la));
            };
            long long multinom = fact(d);
            for (int s : sizes) multinom /= fact(s);
            pick(0, multinom);
            return;
        }
        for (int s = 0; s <= left; ++s) {
            sizes[k] = s;
            comp(k + 1, left - s);
        }
    };
    comp(0, d);
    return total;
}

// Σ_{σ ∈ S_d} x^{#cycles(σ)}, straight from the cycle decomposition
inline Q cycle_sum(int d, const Q& x) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    Q s = 0;
    do {
        std::vector<char> seen(d, 0);
        Q term = 1;
        for (int a = 0; a < d; ++a) {
            if (seen[a]) continue;
            term *= x;
            for (int b = a; !seen[b]; b = p[b]) seen[b] = 1;
        }
        s += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return s;
}

// generalized binomial C(x, k) over Q
inline Q qchoose(const Q& x, int k) {
    Q r = 1;
    for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
    return r;
}

// rank over Q of dense rows
inline int rank(std::vector<std::vector<Q>> M) {
    int r = 0, rows = (int)M.size(), cols = rows ? (int)M[0].size() : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && M[i][c] != 0) {
                Q f = M[i][c] / M[r][c];
                for (int k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
            }
        ++r;
    }
    return r;
}

}  // namespace oracle
