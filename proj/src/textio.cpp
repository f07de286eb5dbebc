#include "depthlab/textio.hpp"

#include <algorithm>
#include <sstream>

namespace depthlab {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (at_ >= text_.size()) {
            tok_.kind = Tok::End;
            tok_.text.clear();
            return;
        }
        const char c = text_[at_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = at_;
            while (at_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_'))
                bump();
            tok_.kind = Tok::Ident;
            tok_.text = text_.substr(start, at_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = at_;
            while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_])))
                bump();
            tok_.kind = Tok::Int;
            tok_.text = text_.substr(start, at_ - start);
            tok_.value = std::stoll(tok_.text);
            return;
        }
        tok_.kind = Tok::Punct;
        tok_.text = std::string(1, c);
        bump();
    }

    void skip_ws() {
        while (at_ < text_.size()) {
            const char c = text_[at_];
            if (c == '#') {
                while (at_ < text_.size() && text_[at_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[at_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++at_;
    }

    const std::string& text_;
    std::size_t at_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

bool lex_peek_punct(const Lexer& lex, const char* p) {
    return lex.peek().kind == Tok::Punct && lex.peek().text == p;
}

void lex_var_factor(Lexer& lex, const PolyRing& S, std::vector<std::uint32_t>& exps) {
    if (lex.peek().kind != Tok::Ident) lex.fail("expected variable");
    const Token v = lex.take();
    std::size_t idx = S.nvars();
    for (std::size_t i = 0; i < S.nvars(); ++i)
        if (S.var_names()[i] == v.text) idx = i;
    if (idx == S.nvars()) throw ParseError("unknown variable '" + v.text + "'", v.line, v.col);
    std::uint32_t e = 1;
    if (lex_peek_punct(lex, "^")) {
        lex.take();
        if (lex.peek().kind != Tok::Int) lex.fail("expected exponent");
        e = static_cast<std::uint32_t>(lex.take().value);
    }
    exps[idx] += e;
}

Polynomial lex_term(Lexer& lex, const PolyRing& S, bool negate) {
    std::int64_t coeff = 1;
    std::vector<std::uint32_t> exps(S.nvars(), 0);
    if (lex.peek().kind == Tok::Int) {
        coeff = lex.take().value;
        if (lex_peek_punct(lex, "*")) {
            lex.take();
            lex_var_factor(lex, S, exps);
        } else {
            return S.constant(negate ? -coeff : coeff);
        }
    } else {
        lex_var_factor(lex, S, exps);
    }
    while (lex_peek_punct(lex, "*")) {
        lex.take();
        lex_var_factor(lex, S, exps);
    }
    return S.monomial(S.coeff(negate ? -coeff : coeff), S.mono_make(exps));
}

Polynomial lex_poly(Lexer& lex, const PolyRing& S) {
    Polynomial acc = S.zero();
    bool neg = false;
    if (lex_peek_punct(lex, "-")) {
        lex.take();
        neg = true;
    }
    acc = S.add(acc, lex_term(lex, S, neg));
    while (lex_peek_punct(lex, "+") || lex_peek_punct(lex, "-")) {
        const bool minus = lex.take().text == "-";
        acc = S.add(acc, lex_term(lex, S, minus));
    }
    return acc;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SessionDescription parse() {
        SessionDescription out;
        while (lex_.peek().kind != Tok::End) {
            const Token t = expect_ident();
            if (t.text == "ring") {
                out.rings.push_back(parse_ring());
            } else if (t.text == "module") {
                out.modules.push_back(parse_module(out));
            } else if (t.text == "instance") {
                out.instances.push_back(parse_instance(out));
            } else {
                throw ParseError("expected 'ring', 'module', or 'instance', got '" + t.text +
                                     "'",
                                 t.line, t.col);
            }
        }
        return out;
    }

private:
    Token expect_ident() {
        if (lex_.peek().kind != Tok::Ident) lex_.fail("expected identifier");
        return lex_.take();
    }

    void expect_punct(const char* p) {
        if (lex_.peek().kind != Tok::Punct || lex_.peek().text != p)
            lex_.fail(std::string("expected '") + p + "'");
        lex_.take();
    }

    bool peek_punct(const char* p) {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }

    std::int64_t expect_int() {
        bool neg = false;
        if (peek_punct("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Tok::Int) lex_.fail("expected integer");
        const std::int64_t v = lex_.take().value;
        return neg ? -v : v;
    }

    std::vector<std::int64_t> int_list_until_semi() {
        std::vector<std::int64_t> out;
        if (peek_punct(";")) return out;
        out.push_back(expect_int());
        while (peek_punct(",")) {
            lex_.take();
            out.push_back(expect_int());
        }
        return out;
    }

    RingDesc parse_ring() {
        RingDesc rd;
        rd.name = expect_ident().text;
        expect_punct("{");
        PolyRingPtr poly;
        while (!peek_punct("}")) {
            const Token fld = expect_ident();
            expect_punct("=");
            if (fld.text == "p") {
                rd.p = static_cast<std::uint32_t>(expect_int());
            } else if (fld.text == "vars") {
                do {
                    VarDecl vd;
                    vd.name = expect_ident().text;
                    if (peek_punct(":")) {
                        lex_.take();
                        vd.weight = expect_int();
                    }
                    rd.vars.push_back(vd);
                } while (peek_punct(",") && (lex_.take(), true));
            } else if (fld.text == "order") {
                rd.order = expect_ident().text;
                if (rd.order != "grevlex" && rd.order != "grlex")
                    throw ParseError("order must be grevlex or grlex", fld.line, fld.col);
            } else if (fld.text == "ideal") {
                if (!poly) poly = make_poly_ring(rd, fld);
                if (!peek_punct(";")) {
                    rd.ideal.push_back(parse_poly(*poly));
                    while (peek_punct(",")) {
                        lex_.take();
                        rd.ideal.push_back(parse_poly(*poly));
                    }
                }
            } else {
                throw ParseError("unknown ring field '" + fld.text + "'", fld.line, fld.col);
            }
            expect_punct(";");
        }
        expect_punct("}");
        if (!poly) poly = make_poly_ring(rd, lex_.peek());
        try {
            rd.ring = GradedRing::make(poly, rd.ideal);
        } catch (const StructuralError& e) {
            throw ParseError(std::string("ring '") + rd.name + "': " + e.what(),
                             lex_.peek().line, lex_.peek().col);
        }
        return rd;
    }

    PolyRingPtr make_poly_ring(const RingDesc& rd, const Token& at) {
        if (rd.vars.empty())
            throw ParseError("ring needs vars before the ideal", at.line, at.col);
        std::vector<std::string> names;
        std::vector<std::int64_t> weights;
        for (const auto& v : rd.vars) {
            names.push_back(v.name);
            weights.push_back(v.weight);
        }
        const OrderKind ord =
            rd.order == "grlex" ? OrderKind::WeightedGrlex : OrderKind::WeightedGrevlex;
        try {
            return std::make_shared<const PolyRing>(rd.p, names, weights, ord);
        } catch (const StructuralError& e) {
            throw ParseError(e.what(), at.line, at.col);
        }
    }

    ModuleDesc parse_module(const SessionDescription& ctx) {
        ModuleDesc md;
        md.name = expect_ident().text;
        const Token over = expect_ident();
        if (over.text != "over") throw ParseError("expected 'over'", over.line, over.col);
        md.ring_name = expect_ident().text;
        const RingDesc& rd = find_ring(ctx, md.ring_name);
        expect_punct("{");
        while (!peek_punct("}")) {
            const Token fld = expect_ident();
            expect_punct("=");
            if (fld.text == "gens") {
                md.gen_twists = int_list_until_semi();
            } else if (fld.text == "rels") {
                md.rels = parse_columns(rd, md.gen_twists.size());
            } else {
                throw ParseError("unknown module field '" + fld.text + "'", fld.line, fld.col);
            }
            expect_punct(";");
        }
        expect_punct("}");
        return md;
    }

    std::vector<ModuleVector> parse_columns(const RingDesc& rd, std::size_t rank) {
        std::vector<ModuleVector> cols;
        if (peek_punct(";")) return cols;
        cols.push_back(parse_column(rd, rank));
        while (peek_punct(",")) {
            lex_.take();
            cols.push_back(parse_column(rd, rank));
        }
        return cols;
    }

    ModuleVector parse_column(const RingDesc& rd, std::size_t rank) {
        const Token open = lex_.peek();
        expect_punct("[");
        std::vector<Polynomial> comps;
        if (!peek_punct("]")) {
            comps.push_back(parse_poly(rd.ring->poly()));
            while (peek_punct(";")) {
                lex_.take();
                comps.push_back(parse_poly(rd.ring->poly()));
            }
        }
        expect_punct("]");
        if (rank != SIZE_MAX && comps.size() != rank)
            throw ParseError("column has " + std::to_string(comps.size()) + " entries, need " +
                                 std::to_string(rank),
                             open.line, open.col);
        return ModuleVector(std::move(comps));
    }

    InstanceDesc parse_instance(const SessionDescription& ctx) {
        InstanceDesc inst;
        inst.name = expect_ident().text;
        const Token over = expect_ident();
        if (over.text != "over") throw ParseError("expected 'over'", over.line, over.col);
        inst.ring_name = expect_ident().text;
        const RingDesc& rd = find_ring(ctx, inst.ring_name);
        expect_punct("{");
        while (!peek_punct("}")) {
            const Token fld = expect_ident();
            if (fld.text == "step") {
                inst.steps.push_back(parse_step(rd));
                continue;
            }
            expect_punct("=");
            if (fld.text == "check") {
                inst.check = expect_ident().text;
            } else if (fld.text == "M") {
                inst.m_name = expect_ident().text;
            } else if (fld.text == "N") {
                inst.n_name = expect_ident().text;
            } else if (fld.text == "bound") {
                inst.bound = expect_int();
            } else if (fld.text == "mode") {
                inst.mode = expect_ident().text;
            } else if (fld.text == "domain") {
                inst.domain_asserted = expect_ident().text == "true";
            } else if (fld.text == "max_r") {
                inst.budgets.max_r = expect_int();
            } else if (fld.text == "max_n") {
                inst.budgets.max_n = expect_int();
            } else if (fld.text == "max_ab") {
                inst.budgets.max_ab = expect_int();
            } else if (fld.text == "pd_bound") {
                inst.budgets.pd_bound = expect_int();
            } else if (fld.text == "class_budget") {
                inst.budgets.class_budget = expect_int();
            } else {
                throw ParseError("unknown instance field '" + fld.text + "'", fld.line,
                                 fld.col);
            }
            expect_punct(";");
        }
        expect_punct("}");
        return inst;
    }

    StepDesc parse_step(const RingDesc& rd) {
        StepDesc st;
        expect_punct("{");
        while (!peek_punct("}")) {
            const Token fld = expect_ident();
            expect_punct("=");
            if (fld.text == "n") {
                st.n = expect_int();
            } else if (fld.text == "left_twists") {
                st.left_twists = int_list_until_semi();
            } else if (fld.text == "right_twists") {
                st.right_twists = int_list_until_semi();
            } else if (fld.text == "middle_gens") {
                st.middle_gens = int_list_until_semi();
            } else if (fld.text == "middle_rels") {
                st.middle_rels = parse_columns(rd, st.middle_gens.size());
            } else if (fld.text == "left") {
                st.left_cols = parse_columns(rd, st.middle_gens.size());
            } else if (fld.text == "right") {
                st.right_cols = parse_columns(rd, SIZE_MAX); // checked at build
            } else {
                throw ParseError("unknown step field '" + fld.text + "'", fld.line, fld.col);
            }
            expect_punct(";");
        }
        expect_punct("}");
        return st;
    }

    const RingDesc& find_ring(const SessionDescription& ctx, const std::string& name) {
        for (const auto& r : ctx.rings)
            if (r.name == name) return r;
        lex_.fail("unknown ring '" + name + "'");
    }

    Polynomial parse_poly(const PolyRing& S) { return lex_poly(lex_, S); }

    Lexer lex_;
};

} // namespace

const RingDesc& SessionDescription::ring(const std::string& name) const {
    for (const auto& r : rings)
        if (r.name == name) return r;
    throw StructuralError("unknown ring '" + name + "'");
}

const ModuleDesc& SessionDescription::module(const std::string& name) const {
    for (const auto& m : modules)
        if (m.name == name) return m;
    throw StructuralError("unknown module '" + name + "'");
}

bool SessionDescription::has_module(const std::string& name) const {
    for (const auto& m : modules)
        if (m.name == name) return true;
    return false;
}

const InstanceDesc& SessionDescription::instance(const std::string& name) const {
    for (const auto& i : instances)
        if (i.name == name) return i;
    throw StructuralError("unknown instance '" + name + "'");
}

PresentedModule SessionDescription::materialize(const ModuleDesc& md) const {
    const RingDesc& rd = ring(md.ring_name);
    return PresentedModule(rd.ring, FreeModule{md.gen_twists}, md.rels);
}

ReducingSequence SessionDescription::materialize_certificate(const InstanceDesc& inst) const {
    const RingDesc& rd = ring(inst.ring_name);
    ReducingSequence seq;
    seq.modules.push_back(minimal_presentation(materialize(module(inst.m_name))));
    for (const auto& sd : inst.steps) {
        ReducingStep st;
        st.n = sd.n;
        st.left_twists = sd.left_twists;
        st.right_twists = sd.right_twists;
        st.left_cols = sd.left_cols;
        st.right_cols = sd.right_cols;
        seq.steps.push_back(st);
        seq.modules.push_back(
            PresentedModule(rd.ring, FreeModule{sd.middle_gens}, sd.middle_rels));
    }
    return seq;
}

SessionDescription parse_session(const std::string& text) {
    Parser p(text);
    return p.parse();
}

Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
    Lexer lex(text);
    Polynomial f = lex_poly(lex, ring);
    if (lex.peek().kind != Tok::End) lex.fail("trailing input after polynomial");
    return f;
}

std::string format_polynomial(const Polynomial& f, const PolyRing& ring) {
    return ring.format(f);
}

namespace {

void emit_poly_list(std::ostringstream& os, const std::vector<Polynomial>& polys,
                    const PolyRing& S) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) os << ", ";
        os << S.format(polys[i]);
    }
}

void emit_columns(std::ostringstream& os, const std::vector<ModuleVector>& cols,
                  const PolyRing& S) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < cols[i].rank(); ++j) {
            if (j) os << "; ";
            os << S.format(cols[i][j]);
        }
        os << "]";
    }
}

void emit_ints(std::ostringstream& os, const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
}

} // namespace

std::string serialize_session(const SessionDescription& desc) {
    std::ostringstream os;
    for (const auto& rd : desc.rings) {
        const PolyRing& S = rd.ring->poly();
        os << "ring " << rd.name << " {\n";
        os << "  p = " << rd.p << ";\n";
        os << "  vars = ";
        for (std::size_t i = 0; i < rd.vars.size(); ++i) {
            if (i) os << ", ";
            os << rd.vars[i].name << ":" << rd.vars[i].weight;
        }
        os << ";\n";
        os << "  order = " << rd.order << ";\n";
        os << "  ideal = ";
        emit_poly_list(os, rd.ideal, S);
        os << ";\n}\n\n";
    }
    for (const auto& md : desc.modules) {
        const PolyRing& S = desc.ring(md.ring_name).ring->poly();
        os << "module " << md.name << " over " << md.ring_name << " {\n";
        os << "  gens = ";
        emit_ints(os, md.gen_twists);
        os << ";\n  rels = ";
        emit_columns(os, md.rels, S);
        os << ";\n}\n\n";
    }
    for (const auto& inst : desc.instances) {
        const PolyRing& S = desc.ring(inst.ring_name).ring->poly();
        os << "instance " << inst.name << " over " << inst.ring_name << " {\n";
        os << "  check = " << inst.check << ";\n";
        if (!inst.m_name.empty()) os << "  M = " << inst.m_name << ";\n";
        if (!inst.n_name.empty()) os << "  N = " << inst.n_name << ";\n";
        os << "  bound = " << inst.bound << ";\n";
        os << "  mode = " << inst.mode << ";\n";
        if (inst.domain_asserted) os << "  domain = true;\n";
        os << "  max_r = " << inst.budgets.max_r << ";\n";
        os << "  max_n = " << inst.budgets.max_n << ";\n";
        os << "  max_ab = " << inst.budgets.max_ab << ";\n";
        os << "  pd_bound = " << inst.budgets.pd_bound << ";\n";
        os << "  class_budget = " << inst.budgets.class_budget << ";\n";
        for (const auto& st : inst.steps) {
            os << "  step {\n";
            os << "    n = " << st.n << ";\n";
            os << "    left_twists = ";
            emit_ints(os, st.left_twists);
            os << ";\n    right_twists = ";
            emit_ints(os, st.right_twists);
            os << ";\n    middle_gens = ";
            emit_ints(os, st.middle_gens);
            os << ";\n    middle_rels = ";
            emit_columns(os, st.middle_rels, S);
            os << ";\n    left = ";
            emit_columns(os, st.left_cols, S);
            os << ";\n    right = ";
            emit_columns(os, st.right_cols, S);
            os << ";\n  }\n";
        }
        os << "}\n\n";
    }
    return os.str();
}

} // namespace depthlab
