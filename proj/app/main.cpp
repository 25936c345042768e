// frobweb: command-line front end.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "fw/io.hpp"

using namespace fw;

namespace {

enum Exit { OK = 0, FALSE_ = 1, USAGE = 2, PRECONDITION = 3 };

struct Ctx {
    std::string algebra_path;
    bool pretty = false;
    AlgebraSpec spec;
    const Algebra& A() const { return *spec.A; }
};

// error raised while reading user input: exit 2 rather than 3
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string input_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_text_file(arg);
    return arg;
}

Morphism read_morphism(const Ctx& c, const std::string& arg) { return parse_expression(c.A(), input_text(arg)); }

void emit(const Ctx& c, const json& j, const std::string& human) {
    if (c.pretty) std::cout << human;
    else std::cout << j.dump() << "\n";
}

std::string report_text(const Report& r) {
    std::string s;
    for (auto& it : r.items) s += std::string(it.ok ? "ok    " : "FAIL  ") + it.name + (it.detail.empty() ? "" : "  " + it.detail) + "\n";
    return s;
}

Cyclotomic make_cyclotomic(const Ctx& c) {
    if (!c.spec.cyc) throw InputError("the algebra file has no \"cyclotomic\" datum");
    return Cyclotomic(c.A(), *c.spec.cyc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in affine Frobenius web categories"};
    app.require_subcommand(1);
    Ctx ctx;
    auto common = [&](CLI::App* s) {
        s->add_option("--algebra", ctx.algebra_path, "algebra spec file (JSON)")->required();
        s->add_flag("--pretty", ctx.pretty, "human-readable output");
    };
    std::function<int()> run;

    auto* chk = app.add_subcommand("check-algebra", "Frobenius axioms, great-pair test, cyclotomic datum");
    common(chk);
    bool require_great = false;
    chk->add_flag("--require-great", require_great, "exit 1 if the pair is not great");
    chk->callback([&] {
        run = [&] {
            Report fr = check_frobenius(ctx.A()), gr = check_great_pair(ctx.A());
            json j{{"label", ctx.A().label}, {"dim", ctx.A().dim()}, {"frobenius", report_json(fr)}, {"great", gr.ok()},
                   {"great_report", report_json(gr)}};
            std::string h = "algebra " + ctx.A().label + ", rank " + std::to_string(ctx.A().dim()) + "\n" + report_text(fr) +
                            "great pair: " + (gr.ok() ? "yes" : "no") + "\n";
            bool ok = fr.ok() && (!require_great || gr.ok());
            if (ctx.spec.cyc) {
                Report cr = validate_datum(ctx.A(), *ctx.spec.cyc);
                j["cyclotomic"] = report_json(cr);
                h += "cyclotomic datum (level " + std::to_string(ctx.spec.cyc->level()) + "):\n" + report_text(cr);
                ok = ok && cr.ok();
            }
            emit(ctx, j, h);
            return ok ? OK : FALSE_;
        };
    });

    std::string in1, in2;
    auto* norm = app.add_subcommand("normalize", "expand a morphism in the double coset basis");
    common(norm);
    norm->add_option("input", in1, "expression or file")->required();
    norm->callback([&] {
        run = [&] {
            Morphism f = read_morphism(ctx, in1);
            Rewriter R(ctx.A());
            Expansion e = R.normalize(f);
            emit(ctx, expansion_json(ctx.A(), e), expansion_text(ctx.A(), e));
            return OK;
        };
    });

    auto* eq = app.add_subcommand("equal", "decide equality of two morphisms");
    common(eq);
    eq->add_option("lhs", in1, "expression or file")->required();
    eq->add_option("rhs", in2, "expression or file")->required();
    eq->callback([&] {
        run = [&] {
            Morphism f = read_morphism(ctx, in1), g = read_morphism(ctx, in2);
            bool same = f.src == g.src && f.tgt == g.tgt;
            if (same) {
                Rewriter R(ctx.A());
                same = R.equal(f, g);
            }
            emit(ctx, json{{"equal", same}}, same ? "equal\n" : "not equal\n");
            return same ? OK : FALSE_;
        };
    });

    std::string src_s, tgt_s;
    int max_dots = 0;
    bool cyclo_flag = false;
    auto* dim = app.add_subcommand("dim", "count basis morphisms between two objects");
    common(dim);
    dim->add_option("--src", src_s, "source object, e.g. \"i^(2) j^(1)\"")->required();
    dim->add_option("--tgt", tgt_s, "target object")->required();
    dim->add_option("--max-dots", max_dots, "affine degree cap");
    dim->add_flag("--cyclotomic", cyclo_flag, "count the cyclotomic basis (fewer than ℓ dots per strand)");
    dim->callback([&] {
        run = [&] {
            Word s = parse_word(ctx.A(), src_s), t = parse_word(ctx.A(), tgt_s);
            size_t n;
            if (cyclo_flag) {
                if (!ctx.spec.cyc) throw InputError("the algebra file has no \"cyclotomic\" datum");
                n = enumerate_truncated(ctx.A(), s, t, ctx.spec.cyc->level()).size();
            } else {
                n = enumerate_basis(ctx.A(), s, t, max_dots).size();
            }
            emit(ctx, json(n), std::to_string(n) + "\n");
            return OK;
        };
    });

    int n_rank = 2;
    std::string module_kind = "V";
    auto* rm = app.add_subcommand("rep-matrix", "matrix of a morphism in the defining representation");
    common(rm);
    rm->add_option("input", in1, "expression or file")->required();
    rm->add_option("--n", n_rank, "rank n of gl_n(A)");
    rm->add_option("--module", module_kind, "trivial | V | VV");
    rm->callback([&] {
        run = [&] {
            Morphism f = read_morphism(ctx, in1);
            Rep R(ctx.A(), n_rank, make_module(ctx.A(), n_rank, module_kind));
            Matrix m = R.evaluate(f);
            std::string h = std::to_string(m.rows.size()) + " x " + std::to_string(m.cols.size()) + ", " +
                            std::to_string(m.e.size()) + " nonzero entries\n";
            for (auto& [rc, v] : m.e)
                h += "  " + state_str(R.module(), m.rows[rc.first]) + " <- " + state_str(R.module(), m.cols[rc.second]) +
                     " : " + qstr(v) + "\n";
            if (ctx.pretty) std::cout << h;
            else std::cout << matrix_json(R.module(), m) << "\n";
            return OK;
        };
    });

    long max_columns = 20000;
    auto* rv = app.add_subcommand("rep-verify", "relations and Casimir identities as matrix identities");
    common(rv);
    rv->add_option("--n", n_rank, "rank n of gl_n(A)");
    rv->add_option("--module", module_kind, "trivial | V | VV");
    rv->add_option("--max-columns", max_columns, "skip relation instances with larger source spaces");
    rv->callback([&] {
        run = [&] {
            const Algebra& A = ctx.A();
            Rep R(A, n_rank, make_module(A, n_rank, module_kind));
            auto res = verify_relations_rep(R, relation_instances(A, Caps{}), max_columns);
            Report extra;
            for (int i = 0; i < A.num_idem(); ++i) {
                for (auto& it : check_bracket(R, {{i, 2}}, 6).items) extra.items.push_back(it);
                for (int k = 1; k <= 3; ++k)
                    for (auto& it : check_thick_casimir(R, i, k).items) extra.items.push_back(it);
                for (auto& it : check_casimir_naturality(A, n_rank, i).items) extra.items.push_back(it);
            }
            bool ok = res.failures.empty() && extra.ok();
            json j{{"checked", res.checked}, {"skipped", res.skipped}, {"failures", res.failures},
                   {"casimir", report_json(extra)}, {"ok", ok}};
            std::string h = "relations: " + std::to_string(res.checked) + " checked, " + std::to_string(res.skipped) +
                            " skipped, " + std::to_string(res.failures.size()) + " failed\n";
            for (auto& f : res.failures) h += "  FAIL " + f + "\n";
            h += report_text(extra);
            emit(ctx, j, h);
            return ok ? OK : FALSE_;
        };
    });

    auto* ind = app.add_subcommand("independence", "rank of the basis images on the generic Verma module");
    common(ind);
    ind->add_option("--src", src_s, "source object")->required();
    ind->add_option("--tgt", tgt_s, "target object")->required();
    ind->add_option("--max-dots", max_dots, "affine degree cap");
    ind->add_option("--n", n_rank, "rank n (at least the exploded width)");
    ind->callback([&] {
        run = [&] {
            Word s = parse_word(ctx.A(), src_s), t = parse_word(ctx.A(), tgt_s);
            RankReport r = independence_check(ctx.A(), s, t, max_dots, n_rank);
            emit(ctx, json{{"rank", r.rank}, {"expected", r.expected}, {"full", r.full()}},
                 "rank " + std::to_string(r.rank) + " / " + std::to_string(r.expected) + (r.full() ? " (full)\n" : "\n"));
            return r.full() ? OK : FALSE_;
        };
    });

    bool thin_only = false;
    auto* cr = app.add_subcommand("cyclo-reduce", "normal form in the cyclotomic quotient");
    common(cr);
    cr->add_option("input", in1, "expression or file")->required();
    cr->add_flag("--thin", thin_only, "thin quotient only (thin boundary objects)");
    cr->callback([&] {
        run = [&] {
            Cyclotomic C = make_cyclotomic(ctx);
            Morphism f = read_morphism(ctx, in1);
            Expansion e = thin_only ? C.thin_reduce(f) : C.thick_reduce(f);
            emit(ctx, expansion_json(ctx.A(), e), expansion_text(ctx.A(), e));
            return OK;
        };
    });

    int d_reg = 2;
    std::string color_s;
    auto* creg = app.add_subcommand("cyclo-regularity", "test divisibility of the contracted κ-sum by d!");
    common(creg);
    creg->add_option("--d", d_reg, "thickness d")->required();
    creg->add_option("--i", color_s, "idempotent name")->required();
    creg->callback([&] {
        run = [&] {
            int i = ctx.A().find_idem(color_s);
            if (i < 0) throw InputError("unknown idempotent " + color_s);
            if (d_reg < 1) throw InputError("--d must be positive");
            Cyclotomic C = make_cyclotomic(ctx);
            Regularity r = C.regularity(d_reg, i);
            json j{{"d", d_reg}, {"i", color_s}, {"regular", r.ok}};
            std::string h;
            if (r.ok) {
                j["X"] = expansion_json(ctx.A(), r.X);
                h = "regular at d = " + std::to_string(d_reg) + "; X =\n" + expansion_text(ctx.A(), r.X);
            } else {
                j["witness"] = dcm_json(ctx.A(), *r.witness);
                j["coefficient"] = qstr(r.coefficient);
                j["divisor"] = factorial(d_reg);
                h = "NotDivisible: coefficient " + qstr(r.coefficient) + " of " + dcm_text(ctx.A(), *r.witness) +
                    " is not divisible by " + std::to_string(factorial(d_reg)) + "\n";
            }
            emit(ctx, j, h);
            return r.ok ? OK : FALSE_;
        };
    });

    Caps caps;
    auto* vs = app.add_subcommand("verify-suite", "check every relation instance by normalization");
    common(vs);
    vs->add_option("--thick", caps.thick, "thickness cap");
    vs->add_option("--tele", caps.tele, "teleporter cap");
    vs->add_option("--blowup", caps.blowup, "blow-up teleporter cap");
    vs->add_option("--green", caps.green, "Green product rule cap");
    vs->add_option("--colors", caps.colors, "number of idempotents used");
    vs->add_option("--coupons", caps.coupons, "sampled labels per block");
    vs->callback([&] {
        run = [&] {
            Rewriter R(ctx.A());
            auto res = verify_relation_suite(R, relation_instances(ctx.A(), caps));
            json per = json::object();
            for (auto& [k, v] : res.per_relation) per[k] = v;
            json j{{"checked", res.checked}, {"failures", res.failures}, {"per_relation", per}, {"ok", res.failures.empty()}};
            std::string h = std::to_string(res.checked) + " instances, " + std::to_string(res.failures.size()) + " failed\n";
            for (auto& [k, v] : res.per_relation) h += "  " + k + ": " + std::to_string(v) + "\n";
            for (auto& f : res.failures) h += "  FAIL " + f + "\n";
            emit(ctx, j, h);
            return res.failures.empty() ? OK : FALSE_;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return USAGE;
    }

    auto fail = [](const std::string& kind, const std::string& msg, int code, json extra = json::object()) {
        extra["error"] = kind;
        extra["message"] = msg;
        std::cerr << extra.dump() << "\n";
        return code;
    };
    try {
        ctx.spec = load_algebra_file(ctx.algebra_path);
    } catch (const ParseError& e) {
        return fail("ParseError", e.what(), USAGE, json{{"line", e.line}, {"col", e.col}, {"expected", e.expected}});
    } catch (const Error& e) {
        return fail(err_name(e.kind), e.what(), e.kind == Err::NonUnimodularGram ? PRECONDITION : USAGE);
    } catch (const std::exception& e) {
        return fail("InvalidSpec", e.what(), USAGE);
    }
    try {
        return run();
    } catch (const ParseError& e) {
        return fail("ParseError", e.what(), USAGE, json{{"line", e.line}, {"col", e.col}, {"expected", e.expected}});
    } catch (const InputError& e) {
        return fail("Usage", e.what(), USAGE);
    } catch (const Error& e) {
        return fail(err_name(e.kind), e.what(), PRECONDITION);
    }
}
