#include "ghom/fixture.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ghom {

std::string ExpectedValue::str() const {
    switch (kind) {
    case Unknown: return "unknown";
    case NegInf: return "-inf";
    case PosInf: return "+inf";
    case Int: return std::to_string(n);
    case List: {
        std::string s = "[";
        for (size_t i = 0; i < list.size(); ++i)
            s += (i ? "," : "") + std::to_string(list[i]);
        return s + "]";
    }
    }
    return "";
}

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End };
    Kind kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    Lexer(const std::string& src, std::string where) : s_(src), where_(std::move(where)) {
        advance();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected, const Token& got) const {
        std::ostringstream m;
        m << where_ << ":" << got.line << ":" << got.col << ": expected " << expected
          << ", got ";
        if (got.kind == Token::End) m << "end of input";
        else m << "'" << got.text << "'";
        throw FixtureError(m.str(), got.line, got.col);
    }

    [[noreturn]] void fail_at(const Token& at, const std::string& msg) const {
        std::ostringstream m;
        m << where_ << ":" << at.line << ":" << at.col << ": " << msg;
        throw FixtureError(m.str(), at.line, at.col);
    }

    std::string expect_punct(const std::string& p) {
        if (tok_.kind != Token::Punct || tok_.text != p) fail("'" + p + "'", tok_);
        return take().text;
    }

    std::string expect_ident(const std::string& what) {
        if (tok_.kind != Token::Ident) fail(what, tok_);
        return take().text;
    }

    std::string expect_keyword(const std::string& kw) {
        if (tok_.kind != Token::Ident || tok_.text != kw) fail("'" + kw + "'", tok_);
        return take().text;
    }

    int64_t expect_number(const std::string& what) {
        if (tok_.kind != Token::Number) fail(what, tok_);
        return std::stoll(take().text);
    }

    bool at_punct(const std::string& p) const {
        return tok_.kind == Token::Punct && tok_.text == p;
    }
    bool at_ident(const std::string& w) const {
        return tok_.kind == Token::Ident && tok_.text == w;
    }
    bool done() const { return tok_.kind == Token::End; }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') { ++pos_; ++line_; col_ = 1; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++pos_; ++col_; continue; }
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) { tok_.kind = Token::End; tok_.text.clear(); return; }
        char c = s_[pos_];
        if (isalpha((unsigned char)c) || c == '_') {
            size_t b = pos_;
            while (pos_ < s_.size() && (isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, s_.substr(b, pos_ - b), line_, col_};
            col_ += int(pos_ - b);
            return;
        }
        if (isdigit((unsigned char)c)) {
            size_t b = pos_;
            while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
            tok_ = {Token::Number, s_.substr(b, pos_ - b), line_, col_};
            col_ += int(pos_ - b);
            return;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            tok_ = {Token::Punct, "->", line_, col_};
            pos_ += 2;
            col_ += 2;
            return;
        }
        static const std::string single = ";=()[],:/^*+-.";
        if (single.find(c) != std::string::npos) {
            tok_ = {Token::Punct, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
            return;
        }
        std::ostringstream m;
        m << where_ << ":" << line_ << ":" << col_ << ": stray character '" << c << "'";
        throw FixtureError(m.str(), line_, col_);
    }

    const std::string& s_;
    std::string where_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const std::string& where) : lex_(text, where) {}

    Fixture run(const std::string& display_name) {
        fx_.name = display_name;
        while (!lex_.done()) statement();
        return std::move(fx_);
    }

private:
    void statement() {
        const Token kw = lex_.peek();
        if (kw.kind != Token::Ident)
            lex_.fail("a statement keyword (ring, map, module, prime_test, localize, expect)", kw);
        if (kw.text == "ring") ring_stmt();
        else if (kw.text == "map") map_stmt();
        else if (kw.text == "module") module_stmt();
        else if (kw.text == "prime_test") prime_test_stmt();
        else if (kw.text == "localize") localize_stmt();
        else if (kw.text == "expect") expect_stmt();
        else lex_.fail("a statement keyword (ring, map, module, prime_test, localize, expect)", kw);
    }

    void check_fresh(const std::string& name, const Token& at) {
        if (fx_.rings.count(name) || fx_.maps.count(name) || fx_.modules.count(name))
            lex_.fail_at(at, "name '" + name + "' is already declared");
    }

    // ring NAME = FIELD[v1,...,vn] / (g1,...,gk);
    void ring_stmt() {
        lex_.take();
        const Token name_tok = lex_.peek();
        std::string name = lex_.expect_ident("a ring name");
        check_fresh(name, name_tok);
        lex_.expect_punct("=");
        Field f = field_spec();
        lex_.expect_punct("[");
        std::vector<std::string> vars;
        vars.push_back(lex_.expect_ident("a variable name"));
        while (lex_.at_punct(",")) {
            lex_.take();
            vars.push_back(lex_.expect_ident("a variable name"));
        }
        lex_.expect_punct("]");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    lex_.fail_at(name_tok, "ring " + name + ": variable '" + vars[i] +
                                               "' appears twice");
        std::vector<int> weights(vars.size(), 1);
        GradedRing plain(f, vars, weights, OrderKind::DegRevLex, {});
        std::vector<Polynomial> defining;
        if (lex_.at_punct("/")) {
            lex_.take();
            lex_.expect_punct("(");
            int idx = 1;
            while (true) {
                const Token at = lex_.peek();
                Polynomial g = polynomial(plain);
                if (g.is_zero())
                    lex_.fail_at(at, "ring " + name + ": defining generator " +
                                         std::to_string(idx) + " is zero");
                if (!g.is_homogeneous())
                    lex_.fail_at(at, "ring " + name + ": defining generator " +
                                         std::to_string(idx) + " is inhomogeneous");
                defining.push_back(g);
                ++idx;
                if (lex_.at_punct(",")) { lex_.take(); continue; }
                break;
            }
            lex_.expect_punct(")");
        }
        lex_.expect_punct(";");
        try {
            fx_.rings.emplace(name, GradedRing(f, vars, weights, OrderKind::DegRevLex, defining));
        } catch (const std::exception& e) {
            lex_.fail_at(name_tok, "ring " + name + ": " + e.what());
        }
        fx_.ring_order.push_back(name);
    }

    Field field_spec() {
        const Token t = lex_.peek();
        std::string w = lex_.expect_ident("a field (QQ or GF(p))");
        if (w == "QQ") return field_rationals();
        if (w == "GF") {
            lex_.expect_punct("(");
            int64_t p = lex_.expect_number("a prime");
            lex_.expect_punct(")");
            try {
                return field_prime((uint32_t)p);
            } catch (const std::exception& e) {
                lex_.fail_at(t, e.what());
            }
        }
        lex_.fail("a field (QQ or GF(p))", t);
    }

    const GradedRing& named_ring(const std::string& context) {
        const Token t = lex_.peek();
        std::string name = lex_.expect_ident("a ring name");
        auto it = fx_.rings.find(name);
        if (it == fx_.rings.end())
            lex_.fail_at(t, context + ": ring '" + name + "' is not declared");
        last_ring_name_ = name;
        return it->second;
    }

    // map NAME : R -> S = [f1,...,fn];
    void map_stmt() {
        lex_.take();
        const Token name_tok = lex_.peek();
        std::string name = lex_.expect_ident("a map name");
        check_fresh(name, name_tok);
        lex_.expect_punct(":");
        const GradedRing& src = named_ring("map " + name);
        std::string src_name = last_ring_name_;
        lex_.expect_punct("->");
        const GradedRing& tgt = named_ring("map " + name);
        std::string tgt_name = last_ring_name_;
        lex_.expect_punct("=");
        lex_.expect_punct("[");
        std::vector<Polynomial> images;
        if (!lex_.at_punct("]")) {
            images.push_back(polynomial(tgt));
            while (lex_.at_punct(",")) {
                lex_.take();
                images.push_back(polynomial(tgt));
            }
        }
        lex_.expect_punct("]");
        lex_.expect_punct(";");
        if ((int)images.size() != src.nvars())
            lex_.fail_at(name_tok, "map " + name + ": " + std::to_string(images.size()) +
                                       " images for " + std::to_string(src.nvars()) +
                                       " variables");
        bool ident = src.same(tgt);
        for (int i = 0; ident && i < src.nvars(); ++i)
            ident = images[i] == src.var(i);
        try {
            RingMap m = ident ? RingMap::identity(src) : RingMap(src, tgt, images);
            fx_.maps.emplace(name, m);
        } catch (const std::exception& e) {
            lex_.fail_at(name_tok, "map " + name + ": " + e.what());
        }
        fx_.map_order.push_back(name);
        fx_.map_rings[name] = {src_name, tgt_name};
    }

    // module NAME over RING = coker [[...],[...]] degrees [...];
    void module_stmt() {
        lex_.take();
        const Token name_tok = lex_.peek();
        std::string name = lex_.expect_ident("a module name");
        check_fresh(name, name_tok);
        lex_.expect_keyword("over");
        const GradedRing& R = named_ring("module " + name);
        std::string ring_name = last_ring_name_;
        lex_.expect_punct("=");
        lex_.expect_keyword("coker");
        lex_.expect_punct("[");
        std::vector<std::vector<Polynomial>> rows;
        while (lex_.at_punct("[")) {
            lex_.take();
            std::vector<Polynomial> row;
            if (!lex_.at_punct("]")) {
                row.push_back(polynomial(R));
                while (lex_.at_punct(",")) {
                    lex_.take();
                    row.push_back(polynomial(R));
                }
            }
            lex_.expect_punct("]");
            rows.push_back(std::move(row));
            if (lex_.at_punct(",")) { lex_.take(); continue; }
            break;
        }
        lex_.expect_punct("]");
        std::vector<int64_t> degrees;
        bool have_degrees = false;
        if (lex_.at_ident("degrees")) {
            lex_.take();
            lex_.expect_punct("[");
            if (!lex_.at_punct("]")) {
                degrees.push_back(signed_number());
                while (lex_.at_punct(",")) {
                    lex_.take();
                    degrees.push_back(signed_number());
                }
            }
            lex_.expect_punct("]");
            have_degrees = true;
        }
        lex_.expect_punct(";");

        size_t ngens = have_degrees ? degrees.size() : (rows.empty() ? 0 : rows[0].size());
        if (!have_degrees) degrees.assign(ngens, 0);
        if (ngens == 0)
            lex_.fail_at(name_tok, "module " + name + ": no generators (give a degrees clause)");
        for (size_t j = 0; j < rows.size(); ++j)
            if (rows[j].size() != ngens)
                lex_.fail_at(name_tok, "module " + name + ": relation " + std::to_string(j + 1) +
                                           " has " + std::to_string(rows[j].size()) +
                                           " entries for " + std::to_string(ngens) +
                                           " generators");

        // each relation must be homogeneous as an element of the graded free
        // module; its degree is read off any nonzero entry
        std::vector<int64_t> col_degs;
        for (size_t j = 0; j < rows.size(); ++j) {
            int64_t cd = 0;
            bool seen = false;
            for (size_t i = 0; i < ngens; ++i) {
                const Polynomial& e = rows[j][i];
                if (e.is_zero()) continue;
                if (!e.is_homogeneous())
                    lex_.fail_at(name_tok, "module " + name + ": relation " +
                                               std::to_string(j + 1) + " has an inhomogeneous entry");
                int64_t d = e.degree() + degrees[i];
                if (seen && d != cd)
                    lex_.fail_at(name_tok, "module " + name + ": relation " +
                                               std::to_string(j + 1) + " is inhomogeneous");
                cd = d;
                seen = true;
            }
            col_degs.push_back(seen ? cd : 0);
        }
        try {
            GradedMatrix rel(R, degrees, col_degs);
            for (size_t j = 0; j < rows.size(); ++j)
                for (size_t i = 0; i < ngens; ++i)
                    if (!rows[j][i].is_zero()) rel.set_entry((int)i, (int)j, rows[j][i]);
            fx_.modules.emplace(name, FPModule::cokernel(std::move(rel)));
        } catch (const std::exception& e) {
            lex_.fail_at(name_tok, "module " + name + ": " + e.what());
        }
        fx_.module_order.push_back(name);
        fx_.module_ring[name] = ring_name;
    }

    // prime_test NAME = matlis_trunc(RING, t);
    void prime_test_stmt() {
        lex_.take();
        const Token name_tok = lex_.peek();
        std::string name = lex_.expect_ident("a prime_test name");
        lex_.expect_punct("=");
        lex_.expect_keyword("matlis_trunc");
        lex_.expect_punct("(");
        named_ring("prime_test " + name);
        std::string ring_name = last_ring_name_;
        lex_.expect_punct(",");
        const Token lev_tok = lex_.peek();
        int64_t level = lex_.expect_number("a truncation level");
        if (level < 1)
            lex_.fail_at(lev_tok, "prime_test " + name + ": level must be at least 1");
        lex_.expect_punct(")");
        lex_.expect_punct(";");
        fx_.prime_tests.push_back({name, ring_name, (int)level});
    }

    // localize NAME = (RING, MODULE, MAP);
    void localize_stmt() {
        lex_.take();
        const Token name_tok = lex_.peek();
        std::string name = lex_.expect_ident("a localization name");
        lex_.expect_punct("=");
        lex_.expect_punct("(");
        const GradedRing& Rp = named_ring("localize " + name);
        std::string ring_name = last_ring_name_;
        lex_.expect_punct(",");
        const Token mod_tok = lex_.peek();
        std::string mod_name = lex_.expect_ident("a module name");
        lex_.expect_punct(",");
        const Token map_tok = lex_.peek();
        std::string map_name = lex_.expect_ident("a map name");
        lex_.expect_punct(")");
        lex_.expect_punct(";");
        auto mit = fx_.modules.find(mod_name);
        if (mit == fx_.modules.end())
            lex_.fail_at(mod_tok, "localize " + name + ": module '" + mod_name +
                                      "' is not declared");
        auto pit = fx_.maps.find(map_name);
        if (pit == fx_.maps.end())
            lex_.fail_at(map_tok, "localize " + name + ": map '" + map_name +
                                      "' is not declared");
        if (fx_.module_ring[mod_name] != ring_name)
            lex_.fail_at(name_tok, "localize " + name + ": module '" + mod_name +
                                       "' does not live over ring '" + ring_name + "'");
        if (!pit->second.target().same(Rp))
            lex_.fail_at(name_tok, "localize " + name + ": map '" + map_name +
                                       "' does not land in ring '" + ring_name + "'");
        fx_.localizations.push_back({name, ring_name, mod_name, map_name});
    }

    // expect PROP(TARGET) = VALUE via ORACLE;
    void expect_stmt() {
        lex_.take();
        const Token prop_tok = lex_.peek();
        std::string prop = lex_.expect_ident("an invariant name (depth, betti, gdim, gfd)");
        if (prop != "depth" && prop != "betti" && prop != "gdim" && prop != "gfd")
            lex_.fail_at(prop_tok, "expect: unknown invariant '" + prop + "'");
        lex_.expect_punct("(");
        const Token tgt_tok = lex_.peek();
        std::string target = lex_.expect_ident("a declared name or 'global'");
        if (target != "global" && !fx_.modules.count(target) && !fx_.rings.count(target))
            lex_.fail_at(tgt_tok, "expect " + prop + "(" + target + "): '" + target +
                                      "' is not declared");
        lex_.expect_punct(")");
        lex_.expect_punct("=");
        ExpectedValue v = expected_value();
        lex_.expect_keyword("via");
        const Token oracle_tok = lex_.peek();
        std::string oracle = lex_.expect_ident("an oracle name");
        if (oracle != "dense_ranks" && oracle != "closed_form" && oracle != "direct")
            lex_.fail_at(oracle_tok, "expect " + prop + "(" + target + "): unknown oracle '" +
                                         oracle + "'");
        lex_.expect_punct(";");
        fx_.expects.push_back({prop, target, v, oracle});
    }

    ExpectedValue expected_value() {
        if (lex_.at_ident("unknown")) { lex_.take(); return ExpectedValue::unknown(); }
        if (lex_.at_punct("+")) {
            lex_.take();
            lex_.expect_keyword("inf");
            return ExpectedValue::pos_inf();
        }
        if (lex_.at_punct("-") ) {
            Token save = lex_.peek();
            lex_.take();
            if (lex_.at_ident("inf")) { lex_.take(); return ExpectedValue::neg_inf(); }
            if (lex_.peek().kind == Token::Number)
                return ExpectedValue::of(-lex_.expect_number("an integer"));
            lex_.fail("'inf' or an integer", save);
        }
        if (lex_.at_punct("[")) {
            lex_.take();
            std::vector<int64_t> v;
            if (!lex_.at_punct("]")) {
                v.push_back(signed_number());
                while (lex_.at_punct(",")) {
                    lex_.take();
                    v.push_back(signed_number());
                }
            }
            lex_.expect_punct("]");
            return ExpectedValue::of_list(std::move(v));
        }
        return ExpectedValue::of(lex_.expect_number("an expected value"));
    }

    int64_t signed_number() {
        bool neg = false;
        if (lex_.at_punct("-")) { lex_.take(); neg = true; }
        int64_t v = lex_.expect_number("an integer");
        return neg ? -v : v;
    }

    /* poly := ['-'] term (('+'|'-') term)* ; term := coefficient ['*' powers]
       | powers ; powers := var['^'e] ('*' var['^'e])* .  Coefficients are
       integers, or integer fractions over QQ. */
    Polynomial polynomial(const GradedRing& R) {
        std::vector<Term> terms;
        bool neg = false;
        if (lex_.at_punct("-")) { lex_.take(); neg = true; }
        terms.push_back(poly_term(R, neg));
        while (lex_.at_punct("+") || lex_.at_punct("-")) {
            bool minus = lex_.take().text == "-";
            terms.push_back(poly_term(R, minus));
        }
        std::vector<Term> nonzero;
        for (auto& t : terms)
            if (!t.coeff.is_zero()) nonzero.push_back(std::move(t));
        return p_from_terms(std::move(nonzero), R.order());
    }

    Term poly_term(const GradedRing& R, bool negate) {
        Scalar c = Scalar::one(R.field());
        bool have_coeff = false;
        if (lex_.peek().kind == Token::Number) {
            int64_t num = lex_.expect_number("a coefficient");
            if (lex_.at_punct("/")) {
                lex_.take();
                const Token den_tok = lex_.peek();
                int64_t den = lex_.expect_number("a denominator");
                if (den == 0) lex_.fail_at(den_tok, "zero denominator");
                c = Scalar::of_rational(R.field(), Rational(num) / Rational(den));
            } else {
                c = Scalar::of_int(R.field(), num);
            }
            have_coeff = true;
            if (lex_.at_punct("*")) lex_.take();
            else {
                if (negate) c = -c;
                return {Monomial(std::vector<int>(R.nvars(), 0), R.weights()), c};
            }
        }
        std::vector<int> exps(R.nvars(), 0);
        while (true) {
            const Token vt = lex_.peek();
            std::string v = lex_.expect_ident("a variable name");
            int vi = -1;
            for (int i = 0; i < R.nvars(); ++i)
                if (R.var_names()[i] == v) { vi = i; break; }
            if (vi < 0) lex_.fail_at(vt, "unknown variable '" + v + "'");
            int e = 1;
            if (lex_.at_punct("^")) {
                lex_.take();
                const Token et = lex_.peek();
                int64_t raw = lex_.expect_number("an exponent");
                if (raw < 1) lex_.fail_at(et, "exponents must be positive");
                e = (int)raw;
            }
            exps[vi] += e;
            if (lex_.at_punct("*") ) {
                // a '*' may precede either another variable or nothing else;
                // numbers cannot follow a variable product
                lex_.take();
                continue;
            }
            break;
        }
        (void)have_coeff;
        if (negate) c = -c;
        return {Monomial(exps, R.weights()), c};
    }

    Lexer lex_;
    Fixture fx_;
    std::string last_ring_name_;
};

} // namespace

Fixture parse_fixture_text(const std::string& text, const std::string& display_name) {
    Parser p(text, display_name);
    return p.run(display_name);
}

Fixture parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FixtureError("cannot open fixture file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = std::filesystem::path(path).stem().string();
    Parser p(buf.str(), stem + ".gfd");
    Fixture f = p.run(stem);
    f.source_path = path;
    return f;
}

const GradedRing& Fixture::ring(const std::string& n) const {
    auto it = rings.find(n);
    if (it == rings.end())
        throw FixtureError("fixture " + name + ": ring '" + n + "' is not declared", 0, 0);
    return it->second;
}

const RingMap& Fixture::map(const std::string& n) const {
    auto it = maps.find(n);
    if (it == maps.end())
        throw FixtureError("fixture " + name + ": map '" + n + "' is not declared", 0, 0);
    return it->second;
}

const FPModule& Fixture::module(const std::string& n) const {
    auto it = modules.find(n);
    if (it == modules.end())
        throw FixtureError("fixture " + name + ": module '" + n + "' is not declared", 0, 0);
    return it->second;
}

std::string Fixture::default_module() const {
    if (modules.count("N")) return "N";
    if (modules.size() == 1) return modules.begin()->first;
    throw FixtureError("fixture " + name +
                           ": no default module (name one 'N' or pass --module)",
                       0, 0);
}

RingMap Fixture::structure_map(const std::string& module_name) const {
    const FPModule& M = module(module_name);
    const GradedRing& R = M.ring();
    auto fits = [&](const std::string& mn) { return maps.at(mn).target().same(R); };
    if (maps.count("phi") && fits("phi")) return maps.at("phi");
    for (const std::string& mn : map_order)
        if (fits(mn)) return maps.at(mn);
    return RingMap::identity(R);
}

ModuleHandle Fixture::subject(const std::string& module_name) const {
    std::string mn = module_name.empty() ? default_module() : module_name;
    return restrict_scalars(structure_map(mn), module(mn));
}

int Fixture::matlis_level(const std::string& ring_name, int fallback) const {
    int best = 0;
    for (const auto& pt : prime_tests)
        if (pt.ring == ring_name && (best == 0 || pt.level < best)) best = pt.level;
    return best ? best : fallback;
}

namespace {

std::string poly_text(const Polynomial& p, const GradedRing& R) {
    return p.str(R.var_names());
}

} // namespace

std::string print_fixture(const Fixture& f) {
    std::ostringstream out;
    for (const std::string& rn : f.ring_order) {
        const GradedRing& R = f.rings.at(rn);
        out << "ring " << rn << " = " << R.field().str() << "[";
        for (int i = 0; i < R.nvars(); ++i) out << (i ? "," : "") << R.var_names()[i];
        out << "]";
        if (!R.defining_gens().empty()) {
            out << " / (";
            const auto& gens = R.defining_gens();
            for (size_t i = 0; i < gens.size(); ++i)
                out << (i ? ", " : "") << poly_text(gens[i], R);
            out << ")";
        }
        out << ";\n";
    }
    for (const std::string& mn : f.map_order) {
        const RingMap& m = f.maps.at(mn);
        const auto& [src, tgt] = f.map_rings.at(mn);
        out << "map " << mn << " : " << src << " -> " << tgt << " = [";
        for (size_t i = 0; i < m.images().size(); ++i)
            out << (i ? ", " : "") << poly_text(m.images()[i], m.target());
        out << "];\n";
    }
    for (const std::string& mn : f.module_order) {
        const FPModule& M = f.modules.at(mn);
        const GradedRing& R = M.ring();
        out << "module " << mn << " over " << f.module_ring.at(mn) << " = coker [";
        const GradedMatrix& rel = M.relations();
        for (int j = 0; j < rel.ncols(); ++j) {
            out << (j ? "," : "") << "[";
            for (int i = 0; i < rel.nrows(); ++i)
                out << (i ? ", " : "") << poly_text(rel.entry(i, j), R);
            out << "]";
        }
        out << "] degrees [";
        for (size_t i = 0; i < M.gen_degrees().size(); ++i)
            out << (i ? "," : "") << M.gen_degrees()[i];
        out << "];\n";
    }
    for (const auto& pt : f.prime_tests)
        out << "prime_test " << pt.name << " = matlis_trunc(" << pt.ring << ", " << pt.level
            << ");\n";
    for (const auto& lc : f.localizations)
        out << "localize " << lc.name << " = (" << lc.ring << ", " << lc.module << ", "
            << lc.map << ");\n";
    for (const auto& ex : f.expects)
        out << "expect " << ex.prop << "(" << ex.target << ") = " << ex.value.str() << " via "
            << ex.oracle << ";\n";
    return out.str();
}

std::vector<std::string> list_fixture_files(const std::string& dir) {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(dir, ec))
        if (e.path().extension() == ".gfd") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ghom
