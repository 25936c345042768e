#include "fw/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fw {

// ---------------------------------------------------------------- lexer

namespace {

struct Tok {
    enum K { Name, Num, Str, Sym, End } k = End;
    std::string s;
    int line = 1, col = 1;
};

std::vector<Tok> lex(const std::string& t) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    size_t p = 0;
    auto adv = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++p) {
            if (t[p] == '\n') ++line, col = 1;
            else ++col;
        }
    };
    while (p < t.size()) {
        unsigned char ch = t[p];
        if (std::isspace(ch)) { adv(1); continue; }
        if (ch == '#') {
            while (p < t.size() && t[p] != '\n') adv(1);
            continue;
        }
        Tok k;
        k.line = line, k.col = col;
        if (std::isalpha(ch) || ch == '_') {
            size_t q = p;
            while (q < t.size() && (std::isalnum((unsigned char)t[q]) || t[q] == '_' || t[q] == '\'')) ++q;
            k.k = Tok::Name, k.s = t.substr(p, q - p);
            adv(q - p);
        } else if (std::isdigit(ch)) {
            size_t q = p;
            while (q < t.size() && std::isdigit((unsigned char)t[q])) ++q;
            k.k = Tok::Num, k.s = t.substr(p, q - p);
            adv(q - p);
        } else if (ch == '"') {
            size_t q = p + 1;
            while (q < t.size() && t[q] != '"' && t[q] != '\n') ++q;
            if (q >= t.size() || t[q] != '"') throw ParseError(line, col, "closing '\"'");
            k.k = Tok::Str, k.s = t.substr(p + 1, q - p - 1);
            adv(q + 1 - p);
        } else if (t.compare(p, 3, "(+)") == 0) {
            k.k = Tok::Sym, k.s = "(+)";
            adv(3);
        } else if (t.compare(p, 2, "->") == 0) {
            k.k = Tok::Sym, k.s = "->";
            adv(2);
        } else if (std::string("()[]{},;:^*/+-=").find((char)ch) != std::string::npos) {
            k.k = Tok::Sym, k.s = std::string(1, (char)ch);
            adv(1);
        } else {
            throw ParseError(line, col, "a token");
        }
        out.push_back(k);
    }
    Tok e;
    e.line = line, e.col = col;
    out.push_back(e);
    return out;
}

bool plain_name(const std::string& s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum((unsigned char)c) || c == '_' || c == '\'')) return false;
    return true;
}

std::string quoted(const std::string& s) { return plain_name(s) ? s : "\"" + s + "\""; }

struct Val {
    bool scalar = true;
    Q q = 0;
    Morphism m;
};

class Parser {
public:
    Parser(const Algebra& A, const std::string& text) : A_(A), t_(lex(text)) {}

    Morphism expression() {
        Val v = expr();
        expect_end();
        if (v.scalar) {
            Morphism m = identity({});
            return m * v.q;
        }
        return v.m;
    }
    Word word_only() {
        Word w = word();
        expect_end();
        return w;
    }
    Elem element_only() {
        Elem e = element();
        expect_end();
        return e;
    }

private:
    const Algebra& A_;
    std::vector<Tok> t_;
    size_t p_ = 0;

    const Tok& cur() const { return t_[p_]; }
    const Tok& peek(int k = 1) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    bool is(const std::string& s) const { return cur().k == Tok::Sym && cur().s == s; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(cur().line, cur().col, what); }
    void expect(const std::string& s) {
        if (!is(s)) fail("'" + s + "'");
        ++p_;
    }
    void expect_end() {
        if (cur().k != Tok::End) fail("end of input");
    }
    bool name_like(const Tok& k) const { return k.k == Tok::Name || k.k == Tok::Num || k.k == Tok::Str; }
    std::string name(const std::string& what) {
        if (!name_like(cur())) fail(what);
        return t_[p_++].s;
    }
    int integer(const std::string& what) {
        if (cur().k != Tok::Num) fail(what);
        return std::stoi(t_[p_++].s);
    }
    int color() {
        const Tok& k = cur();
        int i = A_.find_idem(name("idempotent name"));
        if (i < 0) throw ParseError(k.line, k.col, "idempotent name");
        return i;
    }
    int basis_name() {
        const Tok& k = cur();
        int b = A_.find_basis(name("basis element name"));
        if (b < 0) throw ParseError(k.line, k.col, "basis element name");
        return b;
    }
    Q rational() {
        Q q(t_[p_++].s);
        if (is("/")) {
            ++p_;
            if (cur().k != Tok::Num) fail("denominator");
            Q d(t_[p_++].s);
            if (d == 0) fail("nonzero denominator");
            q /= d;
        }
        return q;
    }

    bool object_ahead() const { return name_like(cur()) && peek().k == Tok::Sym && peek().s == "^"; }
    Word word() {
        Word w;
        while (object_ahead()) {
            int c = color();
            expect("^");
            int x;
            if (is("(")) {
                ++p_;
                x = integer("thickness");
                expect(")");
            } else {
                x = integer("thickness");
            }
            w.push_back({c, x});
        }
        return w;
    }

    // element := ['-'] eterm (('+'|'-') eterm)*
    Elem element() {
        Elem e;
        Q sign = 1;
        if (is("-")) ++p_, sign = -1;
        while (true) {
            Q c = sign;
            if (cur().k == Tok::Num && (A_.find_basis(cur().s) < 0 || (peek().k == Tok::Sym && (peek().s == "*" || peek().s == "/")))) {
                c *= rational();
                if (is("*")) {
                    ++p_;
                    add_to(e, A_.unit(basis_name()), c);
                } else {
                    if (A_.num_idem() != 1) fail("basis element name (bare scalars need a single idempotent)");
                    add_to(e, A_.unit(A_.idem_basis[0]), c);
                }
            } else {
                add_to(e, A_.unit(basis_name()), c);
            }
            if (is("+")) ++p_, sign = 1;
            else if (is("-")) ++p_, sign = -1;
            else break;
        }
        return e;
    }

    static Val mor(Morphism m) {
        Val v;
        v.scalar = false;
        v.m = std::move(m);
        return v;
    }

    // expr := term (('+'|'-') term)*
    Val expr() {
        Val a = term();
        while (is("+") || is("-")) {
            Q s = is("-") ? -1 : 1;
            Tok at = cur();
            ++p_;
            Val b = term();
            if (a.scalar && b.scalar) {
                a.q += s * b.q;
            } else if (!a.scalar && !b.scalar) {
                if (a.m.src != b.m.src || a.m.tgt != b.m.tgt)
                    throw Error(Err::BoundaryMismatch, "summands at line " + std::to_string(at.line) + ", col " +
                                                           std::to_string(at.col) + " have different boundaries");
                a.m += b.m * s;
            } else {
                throw ParseError(at.line, at.col, "summands of the same kind (scalar or morphism)");
            }
        }
        return a;
    }
    // term := ['-'] tensor ('*' tensor)*  — vertical composition, right to left
    Val term() {
        Q sign = 1;
        if (is("-")) ++p_, sign = -1;
        Val a = tensor();
        while (is("*")) {
            Tok at = cur();
            ++p_;
            Val b = tensor();
            if (a.scalar && b.scalar) a.q *= b.q;
            else if (a.scalar) a = mor(b.m * a.q);
            else if (b.scalar) a.m = a.m * b.q;
            else {
                if (a.m.src != b.m.tgt)
                    throw Error(Err::BoundaryMismatch, "composition at line " + std::to_string(at.line) + ", col " +
                                                           std::to_string(at.col) + ": " + word_text(A_, b.m.tgt) +
                                                           " vs " + word_text(A_, a.m.src));
                a.m = compose(a.m, b.m);
            }
        }
        if (a.scalar) a.q *= sign;
        else a.m = a.m * sign;
        return a;
    }
    // tensor := atom ('(+)' atom)*
    Val tensor() {
        Val a = atom();
        while (is("(+)")) {
            ++p_;
            Val b = atom();
            if (a.scalar && b.scalar) a.q *= b.q;
            else if (a.scalar) a = mor(b.m * a.q);
            else if (b.scalar) a.m = a.m * b.q;
            else a.m = tensor_of(a.m, b.m);
        }
        return a;
    }
    static Morphism tensor_of(const Morphism& f, const Morphism& g) { return fw::tensor(f, g); }

    Val atom() {
        if (cur().k == Tok::Num && !object_ahead()) {
            Val v;
            v.q = rational();
            return v;
        }
        if (is("(")) {
            ++p_;
            Val v = expr();
            expect(")");
            return v;
        }
        if (object_ahead()) return mor(identity(word()));
        if (cur().k == Tok::Name) {
            std::string n = cur().s;
            if (n == "eta" && peek().k == Tok::Sym && peek().s == "{") return mor(eta_literal());
            if (peek().k == Tok::Sym && peek().s == "(") return mor(constructor());
        }
        fail("a scalar, an object i^(x), a constructor, eta{...} or '('");
    }

    Morphism constructor() {
        Tok at = cur();
        std::string n = t_[p_++].s;
        expect("(");
        Morphism r;
        if (n == "split" || n == "merge") {
            int i = color();
            expect(",");
            int x = integer("thickness");
            expect(",");
            int y = integer("thickness");
            r = n == "split" ? m_split(i, x, y) : m_merge(i, x, y);
        } else if (n == "cross") {
            int i = color();
            expect(",");
            int x = integer("thickness");
            if (is(";") || is(",")) ++p_;
            else fail("';'");
            int j = color();
            expect(",");
            int y = integer("thickness");
            r = m_cross(i, x, j, y);
        } else if (n == "coupon") {
            Elem f;
            if (is("[")) {
                ++p_;
                f = element();
                expect("]");
            } else {
                f = A_.unit(basis_name());
            }
            expect(",");
            int z = integer("thickness");
            if (f.empty()) throw Error(Err::InvalidParams, "coupon label is zero");
            int i = A_.basis[f.begin()->first].src, j = A_.basis[f.begin()->first].tgt;
            for (auto& [b, c] : f)
                if (A_.basis[b].src != i || A_.basis[b].tgt != j)
                    throw Error(Err::InvalidParams, "coupon label " + element_text(A_, f) + " is not in a single block");
            r = m_coupon(A_, i, j, f, z);
        } else if (n == "dot") {
            int i = color();
            expect(",");
            int z = integer("thickness");
            int k = 1;
            if (is(",")) {
                ++p_;
                k = integer("dot count");
            }
            r = m_dot(i, z, k);
        } else if (n == "tele" || n == "ttele") {
            int i = color();
            expect(",");
            int j = color();
            expect(",");
            int x = integer("thickness");
            Word ctx;
            if (is(";")) {
                ++p_;
                ctx = word();
            }
            r = teleporter(A_, i, j, x, ctx, n == "ttele");
        } else if (n == "id") {
            r = identity(word());
        } else if (n == "zero") {
            Word a = word();
            expect("->");
            r = Morphism(a, word());
        } else {
            throw ParseError(at.line, at.col, "one of split, merge, cross, coupon, dot, tele, ttele, id, zero, eta");
        }
        expect(")");
        return r;
    }

    // eta{ SRC -> TGT : (r,s) = m*(t,b) + ... ; ... }
    Morphism eta_literal() {
        ++p_;
        expect("{");
        DCM mu;
        mu.src = word();
        expect("->");
        mu.tgt = word();
        mu.e.assign(mu.src.size(), std::vector<PComp>(mu.tgt.size()));
        expect(":");
        while (is("(")) {
            ++p_;
            int r = integer("row index");
            expect(",");
            int s = integer("column index");
            expect(")");
            if (r < 1 || r > (int)mu.src.size() || s < 1 || s > (int)mu.tgt.size()) fail("an index inside the matrix");
            expect("=");
            while (true) {
                int m = 1;
                if (cur().k == Tok::Num) {
                    m = integer("multiplicity");
                    expect("*");
                }
                expect("(");
                int t = integer("dot count");
                expect(",");
                int b = basis_name();
                expect(")");
                mu.e[r - 1][s - 1][{t, b}] += m;
                if (!is("+")) break;
                ++p_;
            }
            if (!is(";")) break;
            ++p_;
        }
        expect("}");
        return eta(A_, mu);
    }
};

}  // namespace

Elem parse_element(const Algebra& A, const std::string& text) { return Parser(A, text).element_only(); }
Word parse_word(const Algebra& A, const std::string& text) { return Parser(A, text).word_only(); }
Morphism parse_expression(const Algebra& A, const std::string& text) { return Parser(A, text).expression(); }

std::string element_text(const Algebra& A, const Elem& e) {
    if (e.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [b, v] : e) {
        Q c = v;
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        if (c < 0) c = -c;
        if (c != 1) s += qstr(c) + "*";
        s += quoted(A.basis[b].name);
        first = false;
    }
    return s;
}

std::string word_text(const Algebra& A, const Word& w) {
    std::string s;
    for (auto& st : w) {
        if (!s.empty()) s += " ";
        s += quoted(A.idem_names[st.c]) + "^(" + std::to_string(st.x) + ")";
    }
    return s;
}

static std::string gen_text(const Algebra& A, const Gen& g) {
    auto c = [&](int i) { return quoted(A.idem_names[i]); };
    auto n = [](int x) { return std::to_string(x); };
    switch (g.k) {
        case GK::Split: return "split(" + c(g.i) + "," + n(g.x) + "," + n(g.y) + ")";
        case GK::Merge: return "merge(" + c(g.i) + "," + n(g.x) + "," + n(g.y) + ")";
        case GK::Cross: return "cross(" + c(g.i) + "," + n(g.x) + ";" + c(g.j) + "," + n(g.y) + ")";
        case GK::Dot: return "dot(" + c(g.i) + "," + n(g.x) + ")";
        case GK::Coupon:
            if (g.f.size() == 1 && g.f.begin()->second == 1) return "coupon(" + quoted(A.basis[g.f.begin()->first].name) + "," + n(g.x) + ")";
            return "coupon([" + element_text(A, g.f) + "]," + n(g.x) + ")";
    }
    return "";
}

static std::string diagram_text(const Algebra& A, const Diagram& d) {
    if (d.s.empty()) return d.src.empty() ? "id()" : word_text(A, d.src);
    Word cur = d.src;
    std::vector<std::string> layers;
    for (auto& sl : d.s) {
        Word gs = sl.g.src(), gt = sl.g.tgt();
        Word left(cur.begin(), cur.begin() + sl.pos), right(cur.begin() + sl.pos + gs.size(), cur.end());
        std::string t;
        if (!left.empty()) t += word_text(A, left) + " (+) ";
        t += gen_text(A, sl.g);
        if (!right.empty()) t += " (+) " + word_text(A, right);
        layers.push_back(t);
        Word nxt = left;
        nxt.insert(nxt.end(), gt.begin(), gt.end());
        nxt.insert(nxt.end(), right.begin(), right.end());
        cur = nxt;
    }
    std::string s;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) s += (s.empty() ? "" : " * ") + *it;
    return s;
}

std::string print_morphism(const Algebra& A, const Morphism& f) {
    if (f.zero()) return "zero(" + word_text(A, f.src) + " -> " + word_text(A, f.tgt) + ")";
    std::string s;
    for (auto& [d, v] : f.t) {
        Q c = v;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        if (c < 0) c = -c;
        if (c != 1) s += qstr(c) + " * ";
        s += diagram_text(A, d);
    }
    return s;
}

std::string dcm_text(const Algebra& A, const DCM& mu) {
    std::string s = "eta{" + word_text(A, mu.src) + " -> " + word_text(A, mu.tgt) + " :";
    bool first = true;
    for (size_t r = 0; r < mu.e.size(); ++r)
        for (size_t c = 0; c < mu.e[r].size(); ++c) {
            if (mu.e[r][c].empty()) continue;
            s += first ? " " : "; ";
            first = false;
            s += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = ";
            bool f2 = true;
            for (auto& [tb, m] : mu.e[r][c]) {
                if (!f2) s += " + ";
                f2 = false;
                if (m != 1) s += std::to_string(m) + "*";
                s += "(" + std::to_string(tb.first) + "," + quoted(A.basis[tb.second].name) + ")";
            }
        }
    return s + "}";
}

json dcm_json(const Algebra& A, const DCM& mu) {
    json e = json::object();
    for (size_t r = 0; r < mu.e.size(); ++r)
        for (size_t c = 0; c < mu.e[r].size(); ++c) {
            if (mu.e[r][c].empty()) continue;
            json cell = json::object();
            for (auto& [tb, m] : mu.e[r][c]) cell[std::to_string(tb.first) + "," + A.basis[tb.second].name] = m;
            e[std::to_string(r + 1) + "," + std::to_string(c + 1)] = cell;
        }
    return json{{"src", word_text(A, mu.src)}, {"tgt", word_text(A, mu.tgt)}, {"entries", e}};
}

json expansion_json(const Algebra& A, const Expansion& e) {
    json terms = json::array();
    for (auto& [mu, c] : e.c) terms.push_back(json{{"coeff", qstr(c)}, {"mu", dcm_json(A, mu)}, {"eta", dcm_text(A, mu)}});
    return json{{"src", word_text(A, e.src)}, {"tgt", word_text(A, e.tgt)}, {"terms", terms}};
}

std::string expansion_text(const Algebra& A, const Expansion& e) {
    if (e.c.empty()) return "0\n";
    std::string s;
    for (auto& [mu, c] : e.c) s += qstr(c) + "  " + dcm_text(A, mu) + "\n";
    return s;
}

json report_json(const Report& r) {
    json items = json::array();
    for (auto& it : r.items) items.push_back(json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
    return json{{"ok", r.ok()}, {"items", items}};
}

// ---------------------------------------------------------------- algebra files

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Err::InvalidParams, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static Q json_q(const json& v) {
    if (v.is_number_integer()) return Q(v.get<long>());
    if (v.is_string()) return parse_q(v.get<std::string>());
    throw Error(Err::InvalidParams, "expected an integer or a \"p/q\" string, got " + v.dump());
}

static Algebra build_table(const json& j) {
    Algebra A;
    A.label = j.value("label", std::string("custom"));
    for (auto& n : j.at("idempotents")) A.add_idempotent(n.get<std::string>());
    auto idem = [&](const json& v) {
        int i = A.find_idem(v.get<std::string>());
        if (i < 0) throw Error(Err::InvalidParams, "unknown idempotent " + v.dump());
        return i;
    };
    json bj = j.value("basis", json::array()), pj = j.value("products", json::array());
    for (auto& b : bj)
        A.add_basis(b.at("name").get<std::string>(), b.value("parity", 0), idem(b.at("src")), idem(b.at("tgt")),
                    b.value("sub", false));
    auto bid = [&](const json& v) {
        int b = A.find_basis(v.get<std::string>());
        if (b < 0) throw Error(Err::InvalidParams, "unknown basis element " + v.dump());
        return b;
    };
    for (auto& p : pj) {
        if (!p.is_array() || p.size() != 3) throw Error(Err::InvalidParams, "product entries are [a, b, element]");
        A.set_product(bid(p[0]), bid(p[1]), parse_element(A, p[2].get<std::string>()));
    }
    for (auto& [k, v] : j.at("trace").items()) A.set_trace(bid(json(k)), json_q(v));
    json nak = j.value("nakayama", json::object());
    for (auto& [k, v] : nak.items())
        A.set_nakayama(bid(json(k)), parse_element(A, v.get<std::string>()));
    A.finalize(j.value("frobenius", true));
    return A;
}

Algebra build_algebra(const json& j) {
    std::string kind = j.value("kind", std::string("table"));
    if (kind == "table") return build_table(j);
    if (kind == "ground") return make_ground();
    if (kind == "truncated_poly") return make_truncated_poly(j.at("m").get<int>(), j.value("a", std::string("all")));
    if (kind == "clifford") return make_clifford(j.at("t").get<int>(), j.value("a", std::string("even")));
    if (kind == "grassmann") return make_grassmann(j.at("t").get<int>(), j.value("a", std::string("even")));
    if (kind == "zigzag_A") return make_zigzag_A(j.at("n").get<int>());
    if (kind == "zigzag") {
        std::vector<std::pair<int, int>> edges;
        for (auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
        std::map<std::pair<int, int>, int> eps;
        json ej = j.value("eps", json::object());
        for (auto& [k, v] : ej.items()) {
            auto c = k.find(',');
            if (c == std::string::npos) throw Error(Err::InvalidParams, "eps keys are \"j,i\"");
            eps[{std::stoi(k.substr(0, c)) - 1, std::stoi(k.substr(c + 1)) - 1}] = v.get<int>();
        }
        return make_zigzag(j.at("vertices").get<int>(), edges, eps);
    }
    if (kind == "path_A2") return make_path_A2(j.value("odd_arrow", false));
    if (kind == "trivial_extension") return make_trivial_extension(build_algebra(j.at("base")));
    if (kind == "laurent_path")
        return make_laurent_path(j.at("lo").get<int>(), j.at("hi").get<int>(), j.value("a", std::string("even")));
    throw Error(Err::InvalidParams, "unknown algebra kind " + kind);
}

AlgebraSpec load_algebra(const json& j) {
    AlgebraSpec s;
    s.A = std::make_shared<Algebra>(build_algebra(j));
    if (j.contains("cyclotomic")) {
        const Algebra& A = *s.A;
        auto& c = j.at("cyclotomic");
        CycDatum D;
        for (auto& L : c.at("L")) D.L.push_back(L.get<int>());
        D.c.assign(A.num_idem(), std::vector<Elem>(D.L.size()));
        json cj = c.value("c", json::object());
        for (auto& [k, v] : cj.items()) {
            auto comma = k.rfind(',');
            if (comma == std::string::npos) throw Error(Err::InvalidParams, "cyclotomic keys are \"i,k\"");
            int i = A.find_idem(k.substr(0, comma));
            int kk = std::stoi(k.substr(comma + 1));
            if (i < 0 || kk < 1 || kk > (int)D.L.size()) throw Error(Err::InvalidParams, "bad cyclotomic key " + k);
            D.c[i][kk - 1] = parse_element(A, v.get<std::string>());
        }
        s.cyc = D;
    }
    return s;
}

AlgebraSpec load_algebra_file(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error(Err::InvalidParams, path + ": " + e.what());
    }
    return load_algebra(j);
}

}  // namespace fw
