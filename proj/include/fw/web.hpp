// Objects, generators, diagrams and morphisms of the affine web category.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fw/core.hpp"

namespace fw {

struct Strand {
    int c = 0;  // idempotent index
    int x = 0;  // thickness
    bool operator<(const Strand& o) const { return c != o.c ? c < o.c : x < o.x; }
    bool operator==(const Strand& o) const { return c == o.c && x == o.x; }
};
using Word = std::vector<Strand>;

Word reduced(const Word& w);  // drops thickness-0 entries
int width(const Word& w);
std::vector<int> thin_colors(const Word& w);  // exploded word
bool is_thin(const Word& w);

enum class GK { Split, Merge, Cross, Coupon, Dot };

// Split(i,x,y): i^(x+y) -> i^(x) i^(y);  Merge: reverse;  Cross(i,x,j,y): i^(x) j^(y) -> j^(y) i^(x)
// Coupon: i^(x) -> j^(x) labelled f in jAi;  Dot(i,x) on i^(x)
struct Gen {
    GK k = GK::Dot;
    int i = 0, j = 0, x = 0, y = 0;
    Elem f;
    Word src() const;
    Word tgt() const;
    bool operator<(const Gen& o) const;
    bool operator==(const Gen& o) const;
};

struct Slice {
    int pos = 0;  // index in the current word of the first consumed strand
    Gen g;
    bool operator<(const Slice& o) const { return pos != o.pos ? pos < o.pos : g < o.g; }
    bool operator==(const Slice& o) const { return pos == o.pos && g == o.g; }
};

// Read bottom to top; one non-identity generator per slice.
struct Diagram {
    Word src;
    std::vector<Slice> s;
    Word tgt() const;
    int affine_degree() const;
    bool operator<(const Diagram& o) const;
    bool operator==(const Diagram& o) const { return src == o.src && s == o.s; }
};

struct Morphism {
    Word src, tgt;
    std::map<Diagram, Q> t;

    Morphism() = default;
    Morphism(Word s, Word g) : src(std::move(s)), tgt(std::move(g)) {}

    bool zero() const { return t.empty(); }
    int max_degree() const;
    void add(const Diagram& d, const Q& c);
    Morphism& operator+=(const Morphism& o);
    Morphism& operator-=(const Morphism& o);
    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism operator*(const Q& c) const;
};

Morphism identity(const Word& w);
Morphism compose(const Morphism& f, const Morphism& g);  // f ∘ g
Morphism tensor(const Morphism& f, const Morphism& g);   // left above right
Morphism operator*(const Morphism& f, const Morphism& g);  // compose

Morphism m_split(int i, int x, int y);
Morphism m_merge(int i, int x, int y);
Morphism m_cross(int i, int x, int j, int y);
Morphism m_coupon(const Algebra& A, int i, int j, const Elem& f, int z);  // f in jAi
Morphism m_coupon(const Algebra& A, int b, int z);                        // basis element
Morphism m_dot(int i, int z, int times = 1);
Morphism m_id(int i, int x);
Morphism multi_split(int i, const std::vector<int>& parts);
Morphism multi_merge(int i, const std::vector<int>& parts);
// place f at strand position pos inside the word w (f.src must match)
Morphism embed(const Word& left, const Morphism& f, const Word& right);

// Y: full split of every strand; Z: full merge.
Morphism full_split(const Word& w);
Morphism full_merge(const Word& w);
Morphism explode(const Morphism& f);
Morphism contract(const Morphism& f, const Word& src, const Word& tgt);  // f between exploded words

// [f] on thickness m: coupon if m = 1 or f in 𝔞, otherwise split-to-thin / decorate / merge.
Morphism boxed(const Algebra& A, int i, int j, const Elem& f, int m);

// Teleporter: src (i^(x), ctx, j^(x)) -> tgt (j^(x), ctx, i^(x)).
Morphism teleporter(const Algebra& A, int i, int j, int x, const Word& ctx = {}, bool twisted = false);

bool is_great(const Algebra& A);

// ---------------------------------------------------------------- double coset matrices

using PComp = std::map<std::pair<int, int>, int>;  // (t, b) -> multiplicity

struct DCM {
    Word src, tgt;
    std::vector<std::vector<PComp>> e;  // e[r][s]
    int degree() const;
    bool operator<(const DCM& o) const;
    bool operator==(const DCM& o) const { return src == o.src && tgt == o.tgt && e == o.e; }
};

void validate(const Algebra& A, const DCM& m);  // throws InvalidMatrix
Morphism eta(const Algebra& A, const DCM& m);
DCM cabling(const Algebra& A, const DCM& m);
std::vector<DCM> enumerate_basis(const Algebra& A, const Word& src, const Word& tgt, int max_degree);
// all t < ell, no degree cap
std::vector<DCM> enumerate_truncated(const Algebra& A, const Word& src, const Word& tgt, int ell);
// the ⋖ sort used by the enumerations
void sort_basis(std::vector<DCM>& v);

std::string word_str(const Algebra& A, const Word& w);

}  // namespace fw
