#include <sph/pairspec.hpp>
#include <sph/embeddings.hpp>
#include <sph/genericity.hpp>

#include <cctype>
#include <set>

namespace sph {

namespace {

struct Token {
    enum Kind { ident, number, sym, end } kind = end;
    std::string text;
    std::size_t line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0, line = 1, col = 1;
    Token cur;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(cur.line) + ", column " +
                         std::to_string(cur.col) + ": " + msg);
    }

    void advance() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) {
            if (src[pos] == '\n') { ++line; col = 1; } else ++col;
            ++pos;
        }
        cur = Token{Token::end, "", line, col};
        if (pos == src.size()) return;
        char c = src[pos];
        if (std::isalpha((unsigned char)c)) {
            std::string t;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
                t += src[pos++];
                ++col;
            }
            if (pos < src.size() && src[pos] == '*') { t += src[pos++]; ++col; }
            cur.kind = Token::ident;
            cur.text = t;
        } else if (std::isdigit((unsigned char)c)) {
            std::string t;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
                t += src[pos++];
                ++col;
            }
            cur.kind = Token::number;
            cur.text = t;
        } else if (std::string("=;(),@+").find(c) != std::string::npos) {
            cur.kind = Token::sym;
            cur.text = std::string(1, c);
            ++pos;
            ++col;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    bool at_sym(const std::string& s) const { return cur.kind == Token::sym && cur.text == s; }

    void expect_sym(const std::string& s) {
        if (!at_sym(s)) fail("expected '" + s + "'");
        advance();
    }

    std::string expect_ident(const std::string& what) {
        if (cur.kind != Token::ident) fail("expected " + what);
        std::string t = cur.text;
        advance();
        return t;
    }
};

const std::set<std::string> kEmbNames = {
    "block", "tensor", "realify", "quaternionify", "diag", "spin",
    "der_oct", "center", "split", "dual", "unitary", "fix", "flip",
};

const std::set<std::string> kBareHeads = {"u1", "gl1", "center", "g2", "g2_split"};

std::vector<std::string> parse_args(Lexer& lx) {
    std::vector<std::string> args;
    lx.expect_sym("(");
    while (true) {
        if (lx.cur.kind == Token::number || lx.cur.kind == Token::ident) {
            args.push_back(lx.cur.text);
            lx.advance();
        } else {
            lx.fail("expected argument");
        }
        if (lx.at_sym(",")) { lx.advance(); continue; }
        break;
    }
    lx.expect_sym(")");
    return args;
}

HTerm parse_term(Lexer& lx) {
    HTerm t;
    t.head = lx.expect_ident("factor name");
    if (lx.at_sym("(")) t.args = parse_args(lx);
    if (t.args.empty() && !kBareHeads.count(t.head))
        lx.fail("factor " + t.head + " needs parameters");
    if (lx.at_sym("@")) {
        lx.advance();
        EmbTag e;
        e.name = lx.expect_ident("embedding tag");
        if (!kEmbNames.count(e.name)) lx.fail("unknown embedding tag " + e.name);
        if (lx.at_sym("(")) {
            for (const std::string& a : parse_args(lx)) {
                for (char c : a)
                    if (!std::isdigit((unsigned char)c)) lx.fail("embedding tag takes integers");
                e.args.push_back(std::stol(a));
            }
        }
        t.emb = std::move(e);
    }
    return t;
}

long int_arg(const std::string& head, const std::vector<std::string>& args, std::size_t i) {
    for (char c : args[i])
        if (!std::isdigit((unsigned char)c))
            throw ArityError(head + ": parameter " + args[i] + " is not an integer");
    return std::stol(args[i]);
}

bool letter_tail(const std::vector<std::string>& args, char l) {
    return args.size() == 2 && args[1].size() == 1 && args[1][0] == l;
}

// factors whose algebra is zero-dimensional drop out of recipes silently
bool trivial_factor(const FormFamily& f) {
    long total = 0;
    for (int p : f.params) total += p;
    switch (f.tag) {
        case FamilyTag::su:
        case FamilyTag::su_compact:
        case FamilyTag::sl_R:
        case FamilyTag::sl_H:
        case FamilyTag::complex_sl: return total <= 1;
        case FamilyTag::so:
        case FamilyTag::so_compact:
        case FamilyTag::complex_so: return total <= 1;
        case FamilyTag::sp_R:
        case FamilyTag::sp_pq:
        case FamilyTag::sp_compact:
        case FamilyTag::complex_sp: return total == 0;
        default: return false;
    }
}

bool doubled_ambient(FamilyTag t) {
    return t == FamilyTag::sl_H || t == FamilyTag::so_star || t == FamilyTag::sp_pq;
}

} // namespace

FormFamily parse_family(const std::string& head, const std::vector<std::string>& args) {
    auto ints = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw ArityError(head + ": wrong number of parameters");
        std::vector<int> v;
        for (std::size_t i = 0; i < args.size(); ++i) v.push_back(int(int_arg(head, args, i)));
        return v;
    };
    if (head == "su") {
        if (args.size() == 1) return {FamilyTag::su_compact, ints(1, 1)};
        return {FamilyTag::su, ints(2, 2)};
    }
    if (head == "su_c") return {FamilyTag::su_compact, ints(1, 1)};
    if (head == "sl") {
        if (letter_tail(args, 'R')) return {FamilyTag::sl_R, {int(int_arg(head, args, 0))}};
        if (letter_tail(args, 'H')) return {FamilyTag::sl_H, {int(int_arg(head, args, 0))}};
        if (letter_tail(args, 'C')) return {FamilyTag::complex_sl, {int(int_arg(head, args, 0))}};
        throw ArityError("sl needs (n,R), (n,H) or (n,C)");
    }
    if (head == "sl_R") return {FamilyTag::sl_R, ints(1, 1)};
    if (head == "sl_H") return {FamilyTag::sl_H, ints(1, 1)};
    if (head == "sl_C") return {FamilyTag::complex_sl, ints(1, 1)};
    if (head == "so") {
        if (letter_tail(args, 'C')) return {FamilyTag::complex_so, {int(int_arg(head, args, 0))}};
        if (args.size() == 1) return {FamilyTag::so_compact, ints(1, 1)};
        return {FamilyTag::so, ints(2, 2)};
    }
    if (head == "so_c") return {FamilyTag::so_compact, ints(1, 1)};
    if (head == "so_C") return {FamilyTag::complex_so, ints(1, 1)};
    if (head == "so*" || head == "so_star") return {FamilyTag::so_star, ints(1, 1)};
    if (head == "sp") {
        if (letter_tail(args, 'R')) return {FamilyTag::sp_R, {int(int_arg(head, args, 0))}};
        if (letter_tail(args, 'C')) return {FamilyTag::complex_sp, {int(int_arg(head, args, 0))}};
        if (args.size() == 1) return {FamilyTag::sp_compact, ints(1, 1)};
        return {FamilyTag::sp_pq, ints(2, 2)};
    }
    if (head == "sp_R") return {FamilyTag::sp_R, ints(1, 1)};
    if (head == "sp_c") return {FamilyTag::sp_compact, ints(1, 1)};
    if (head == "sp_C") return {FamilyTag::complex_sp, ints(1, 1)};
    throw UnknownFamily(head);
}

PairSpec parse_spec(const std::string& text) {
    Lexer lx(text);
    PairSpec s;
    s.raw_text = text;
    if (lx.expect_ident("'g'") != "g") lx.fail("spec must start with 'g'");
    lx.expect_sym("=");
    s.g_head = lx.expect_ident("algebra name");
    s.g_args = parse_args(lx);
    parse_family(s.g_head, s.g_args);  // validates the head
    if (lx.cur.kind == Token::end) return s;
    lx.expect_sym(";");
    if (lx.expect_ident("'h'") != "h") lx.fail("expected 'h'");
    lx.expect_sym("=");
    while (true) {
        HTerm t = parse_term(lx);
        if (!kBareHeads.count(t.head) && t.head != "u" && t.head != "spin")
            parse_family(t.head, t.args);
        s.h_terms.push_back(std::move(t));
        if (lx.at_sym("+")) { lx.advance(); continue; }
        break;
    }
    if (lx.cur.kind != Token::end) lx.fail("trailing input");
    return s;
}

std::string print_spec(const PairSpec& s) {
    auto alg = [](const std::string& head, const std::vector<std::string>& args) {
        std::string out = head;
        if (!args.empty()) {
            out += "(";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) out += ",";
                out += args[i];
            }
            out += ")";
        }
        return out;
    };
    std::string out = "g = " + alg(s.g_head, s.g_args);
    if (s.h_terms.empty()) return out;
    out += "; h = ";
    for (std::size_t i = 0; i < s.h_terms.size(); ++i) {
        if (i) out += " + ";
        const HTerm& t = s.h_terms[i];
        out += alg(t.head, t.args);
        if (t.emb) {
            out += "@" + t.emb->name;
            if (!t.emb->args.empty()) {
                out += "(";
                for (std::size_t k = 0; k < t.emb->args.size(); ++k) {
                    if (k) out += ",";
                    out += std::to_string(t.emb->args[k]);
                }
                out += ")";
            }
        }
    }
    return out;
}

BuiltPair build_pair(const PairSpec& s) {
    RealForm g = construct(parse_family(s.g_head, s.g_args));
    if (s.h_terms.empty()) {
        Subalg h{g.alg, Subspace::full(g.dim()), "g"};
        std::size_t r = g.real_rank();
        return {std::move(g), std::move(h), r};
    }

    std::vector<CenterKind> centers;
    std::vector<const HTerm*> base;
    for (const HTerm& t : s.h_terms) {
        if (t.head == "u1") centers.push_back(CenterKind::u1);
        else if (t.head == "gl1") centers.push_back(CenterKind::gl1);
        else if (t.head == "center") centers.push_back(CenterKind::full);
        else base.push_back(&t);
    }
    if (base.empty()) throw BadTarget("recipe has no non-central factor");

    std::optional<Subalg> h;
    std::optional<std::size_t> rank;
    std::string ename = base[0]->emb ? base[0]->emb->name : "";

    bool all_split = true;
    for (const HTerm* t : base)
        if (!t->emb || t->emb->name != "split") all_split = false;

    if (base.size() == 1 && ename == "diag") {
        std::size_t copies = base[0]->emb->args.empty() ? 2 : base[0]->emb->args[0];
        h = diagonal_embed(g, parse_family(base[0]->head, base[0]->args), copies);
    } else if (base.size() == 1 && ename == "dual") {
        h = gl_dual_embed(g, parse_family(base[0]->head, base[0]->args));
    } else if (base.size() == 1 && ename == "unitary") {
        if ((base[0]->head != "u" && base[0]->head != "su") || base[0]->args.size() != 2)
            throw BadTarget("unitary embedding expects u(p,q) or su(p,q)");
        h = unitary_centralizer(g, int_arg("u", base[0]->args, 0),
                                int_arg("u", base[0]->args, 1), base[0]->head == "u");
    } else if (base.size() == 1 && ename == "fix") {
        h = complex_symplectic_in_sp(g);
    } else if (base.size() == 1 && base[0]->head == "spin" &&
               g.family.tag == FamilyTag::complex_so) {
        h = complexified_spin(g, int_arg("spin", base[0]->args, 0));
        if (ename == "flip") {
            // opposite class under the special orthogonal group: conjugate by
            // a determinant -1 form isometry (swap of one hyperbolic pair)
            std::size_t r = g.split_pairs;
            Mat w = Mat::identity(g.alg->ambient_size());
            w(0, 0) = GaussRational(0);
            w(r, r) = GaussRational(0);
            w(0, r) = GaussRational(1);
            w(r, 0) = GaussRational(1);
            h->coords = ad_conjugate(*g.alg, w, w, h->coords);
            h->provenance += " flipped";
        }
    } else if (base.size() == 1 && (base[0]->head == "g2" || base[0]->head == "g2_split") &&
               g.family.tag == FamilyTag::complex_so) {
        h = complexified_g2(g);
    } else if (all_split) {
        std::vector<FormFamily> fams;
        for (const HTerm* t : base) {
            FormFamily f = parse_family(t->head, t->args);
            if (!trivial_factor(f)) fams.push_back(std::move(f));
        }
        h = split_block_embed(g, fams);
    } else {
        EmbeddingContext ctx = make_context(g);
        std::vector<FormFamily> tensor;
        for (const HTerm* t : base) {
            std::string e = t->emb ? t->emb->name : "block";
            if (t->head == "spin") {
                int p = int(int_arg("spin", t->args, 0));
                int q = t->args.size() > 1 ? int(int_arg("spin", t->args, 1)) : 0;
                add_spin(ctx, p, q);
                continue;
            }
            if (t->head == "g2" || t->head == "g2_split") {
                add_octonion_derivations(ctx, t->head == "g2_split");
                continue;
            }
            FormFamily f = parse_family(t->head, t->args);
            if (trivial_factor(f)) continue;
            if (e == "block") add_block(ctx, f);
            else if (e == "realify") {
                if (doubled_ambient(g.family.tag)) add_diag_double(ctx, f);
                else add_realify(ctx, f);
            } else if (e == "quaternionify") add_diag_double(ctx, f);
            else if (e == "tensor") tensor.push_back(std::move(f));
            else if (e == "der_oct") add_octonion_derivations(ctx, false);
            else throw BadTarget("embedding tag " + e + " cannot combine with other factors");
        }
        if (!tensor.empty()) {
            if (tensor.size() != 2) throw BadTarget("tensor embedding needs exactly two factors");
            add_tensor(ctx, tensor[0], tensor[1]);
        }
        h = finish(ctx);
        if (ctx.rank_known) rank = ctx.h_rank;
    }

    for (CenterKind k : centers) {
        h = center_piece(g, *h, k);
        if (rank) {
            if (k == CenterKind::gl1) ++*rank;
            else if (k == CenterKind::full) rank.reset();
        }
    }
    return {std::move(g), std::move(*h), rank};
}

RepData parse_rep(const std::string& text) {
    Lexer lx(text);
    std::string name = lx.expect_ident("representation name");
    std::vector<std::string> args;
    if (lx.at_sym("(")) args = parse_args(lx);
    if (lx.cur.kind != Token::end) lx.fail("trailing input");

    auto family = [&]() {
        if (args.empty()) throw ArityError(name + " needs a group argument");
        std::vector<std::string> tail(args.begin() + 1, args.end());
        // the group argument reads as head(params...) flattened into args
        return parse_family(args[0], tail);
    };
    if (name == "std" || name == "adjoint" || name == "sym2" || name == "sym3" ||
        name == "wedge2" || name == "wedge3") {
        // group written inline: std(sl,4,C) etc; also accept a nested form
        FormFamily f = family();
        if (name == "std") return standard_rep(f);
        if (name == "adjoint") return adjoint_rep(f);
        if (name == "sym2") return sym_power_rep(f, 2);
        if (name == "sym3") return sym_power_rep(f, 3);
        if (name == "wedge2") return wedge_power_rep(f, 2);
        return wedge_power_rep(f, 3);
    }
    if (name == "wedge0") {
        if (args.size() != 2) throw ArityError("wedge0 needs (k,n)");
        return wedge_primitive_rep(unsigned(int_arg(name, args, 1)),
                                   unsigned(int_arg(name, args, 0)));
    }
    if (name == "spin") {
        if (args.size() != 1) throw ArityError("spin needs one argument");
        return spin_rep_c(unsigned(int_arg(name, args, 0)));
    }
    if (name == "g2") return g2_rep_c();
    throw UnknownFamily("representation " + name);
}

} // namespace sph
