#include <cctype>

#include "lndcert/catalog.hpp"
#include "lndcert/model.hpp"

namespace lndcert {

namespace {

struct Token {
    enum class Type { Ident, Number, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.col, msg); }

private:
    void advance() {
        skip_ws();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.type = Token::Type::End;
            cur_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                step();
            cur_.type = Token::Type::Ident;
            cur_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) step();
            cur_.type = Token::Type::Number;
            cur_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            step();
            step();
            cur_.type = Token::Type::Punct;
            cur_.text = "->";
            return;
        }
        static const std::string punct = "{}():;,=+-*/^|";
        if (punct.find(c) != std::string::npos) {
            step();
            cur_.type = Token::Type::Punct;
            cur_.text = std::string(1, c);
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) step();
            if (pos_ < src_.size() && src_[pos_] == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') step();
                continue;
            }
            break;
        }
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

/// Expression grammar over a fixed table, producing rational functions:
///   expr   := term { (+|-) term }
///   term   := factor { (*|/) factor }
///   factor := - factor | base [ ^ NUMBER ]
///   base   := NUMBER | IDENT | ( expr )
class ExprParser {
public:
    ExprParser(Lexer& lex, const VarTablePtr& table) : lex_(lex), table_(table) {}

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (is_punct("+")) {
                lex_.take();
                acc += term();
            } else if (is_punct("-")) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

private:
    bool is_punct(const char* p) const {
        return lex_.peek().type == Token::Type::Punct && lex_.peek().text == p;
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            if (is_punct("*")) {
                lex_.take();
                acc *= factor();
            } else if (is_punct("/")) {
                Token slash = lex_.take();
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError(slash.line, slash.col, "division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        if (is_punct("-")) {
            lex_.take();
            return -factor();
        }
        if (is_punct("+")) {
            lex_.take();
            return factor();
        }
        RatFunc b = base();
        if (is_punct("^")) {
            Token caret = lex_.take();
            if (lex_.peek().type != Token::Type::Number)
                throw ParseError(caret.line, caret.col, "expected integer exponent after '^'");
            Token e = lex_.take();
            long exp = std::stol(e.text);
            b = b.pow(static_cast<int>(exp));
        }
        return b;
    }

    RatFunc base() {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Number) {
            Token n = lex_.take();
            return RatFunc::constant(table_, Rat::from_string(n.text));
        }
        if (t.type == Token::Type::Ident) {
            Token id = lex_.take();
            auto idx = table_->index_of(id.text);
            if (!idx) throw ParseError(id.line, id.col, "unknown variable '" + id.text + "'");
            return RatFunc(Poly::variable(table_, *idx));
        }
        if (is_punct("(")) {
            lex_.take();
            RatFunc inner = expr();
            if (!is_punct(")")) lex_.fail("expected ')'");
            lex_.take();
            return inner;
        }
        throw ParseError(t.line, t.col, "expected expression");
    }

    Lexer& lex_;
    const VarTablePtr& table_;
};

class ModelParser {
public:
    explicit ModelParser(const std::string& text) : lex_(text) {}

    Model parse() {
        while (lex_.peek().type != Token::Type::End) {
            Token head = expect_ident("declaration");
            if (head.text == "vars") {
                parse_vars(head);
            } else if (head.text == "algebra") {
                parse_algebra(head);
            } else if (head.text == "derivation") {
                parse_derivation(head);
            } else if (head.text == "check") {
                parse_check(head);
            } else if (head.text == "use") {
                parse_use(head);
            } else {
                throw ParseError(head.line, head.col, "unknown declaration '" + head.text + "'");
            }
        }
        if (!model_.table) throw ParseError(1, 1, "model has no vars block");
        validate();
        return std::move(model_);
    }

private:
    Lexer lex_;
    Model model_;
    int check_ordinal_ = 0;

    bool is_punct(const char* p) const {
        return lex_.peek().type == Token::Type::Punct && lex_.peek().text == p;
    }

    void expect_punct(const char* p) {
        if (!is_punct(p)) lex_.fail(std::string("expected '") + p + "'");
        lex_.take();
    }

    Token expect_ident(const char* what) {
        if (lex_.peek().type != Token::Type::Ident)
            lex_.fail(std::string("expected ") + what);
        return lex_.take();
    }

    int expect_int() {
        bool neg = false;
        if (is_punct("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().type != Token::Type::Number) lex_.fail("expected integer");
        Token n = lex_.take();
        int v = std::stoi(n.text);
        return neg ? -v : v;
    }

    std::vector<std::string> parse_namelist() {
        std::vector<std::string> names;
        if (is_punct(";")) return names;
        names.push_back(expect_ident("name").text);
        while (is_punct(",")) {
            lex_.take();
            names.push_back(expect_ident("name").text);
        }
        return names;
    }

    void require_table(const Token& at) {
        if (!model_.table)
            throw ParseError(at.line, at.col, "vars block must come before this declaration");
    }

    RatFunc parse_expr() {
        ExprParser p(lex_, model_.table);
        return p.expr();
    }

    Poly parse_poly_expr() {
        const Token at = lex_.peek();
        RatFunc f = parse_expr();
        if (!f.is_poly()) throw ParseError(at.line, at.col, "expected a polynomial expression");
        return f.as_poly();
    }

    std::vector<Poly> parse_exprlist() {
        std::vector<Poly> ps;
        if (is_punct(";")) return ps;
        ps.push_back(parse_poly_expr());
        while (is_punct(",")) {
            lex_.take();
            ps.push_back(parse_poly_expr());
        }
        return ps;
    }

    void parse_vars(const Token& head) {
        if (model_.table) throw ParseError(head.line, head.col, "duplicate vars block");
        expect_punct("{");
        std::vector<std::string> params, mains;
        bool saw_main = false;
        while (!is_punct("}")) {
            Token key = expect_ident("'params' or 'main'");
            expect_punct(":");
            if (key.text == "params") {
                params = parse_namelist();
            } else if (key.text == "main") {
                mains = parse_namelist();
                saw_main = true;
            } else {
                throw ParseError(key.line, key.col, "unknown vars field '" + key.text + "'");
            }
            expect_punct(";");
        }
        expect_punct("}");
        if (!saw_main || mains.empty()) throw ParseError(head.line, head.col, "vars: no main variables");
        try {
            model_.table = VarTable::make(std::move(params), std::move(mains));
        } catch (const Error& e) {
            throw ParseError(head.line, head.col, e.what());
        }
    }

    void parse_algebra(const Token& head) {
        require_table(head);
        Token name = expect_ident("algebra name");
        check_fresh_name(name);
        expect_punct("{");
        std::vector<Poly> gens;
        while (!is_punct("}")) {
            Token key = expect_ident("'gens'");
            if (key.text != "gens") throw ParseError(key.line, key.col, "unknown algebra field");
            expect_punct(":");
            gens = parse_exprlist();
            expect_punct(";");
        }
        expect_punct("}");
        try {
            model_.algebras.emplace_back(model_.table, std::move(gens), name.text);
        } catch (const Error& e) {
            throw ParseError(name.line, name.col, e.what());
        }
    }

    void parse_derivation(const Token& head) {
        require_table(head);
        Token name = expect_ident("derivation name");
        check_fresh_name(name);
        expect_punct("{");
        std::vector<Poly> images(model_.table->size(), Poly::zero(model_.table));
        std::vector<bool> seen(model_.table->size(), false);
        while (!is_punct("}")) {
            Token var = expect_ident("variable");
            auto idx = model_.table->index_of(var.text);
            if (!idx) throw ParseError(var.line, var.col, "unknown variable '" + var.text + "'");
            if (seen[*idx]) throw ParseError(var.line, var.col, "duplicate image for '" + var.text + "'");
            seen[*idx] = true;
            expect_punct("->");
            images[*idx] = parse_poly_expr();
            expect_punct(";");
        }
        expect_punct("}");
        model_.derivations.emplace_back(model_.table, std::move(images), name.text);
    }

    void parse_use(const Token& head) {
        Token entry = expect_ident("catalog entry name");
        std::optional<int> arg;
        if (is_punct("(")) {
            lex_.take();
            Token key = expect_ident("argument name");
            if (key.text != "m") throw ParseError(key.line, key.col, "unknown argument '" + key.text + "'");
            expect_punct("=");
            arg = expect_int();
            expect_punct(")");
        }
        expect_punct(";");
        std::optional<CatalogEntry> found;
        try {
            if (entry.text == "counterexample") {
                found = build_counterexample(arg.value_or(1));
            } else if (entry.text == "xytxty") {
                found = build_xytxty();
            }
        } catch (const Error& e) {
            throw ParseError(entry.line, entry.col, e.what());
        }
        if (!found)
            throw ParseError(entry.line, entry.col, "unknown catalog entry '" + entry.text + "'");
        if (model_.table)
            throw ParseError(head.line, head.col, "use must come before any vars block");
        model_.table = found->model.table;
        model_.algebras = std::move(found->model.algebras);
        model_.derivations = std::move(found->model.derivations);
        for (ModelCheck& c : found->model.checks) model_.checks.push_back(std::move(c));
        check_ordinal_ = static_cast<int>(model_.checks.size());
    }

    void check_fresh_name(const Token& name) {
        if (model_.find_algebra(name.text) || model_.find_derivation(name.text))
            throw ParseError(name.line, name.col, "duplicate name '" + name.text + "'");
    }

    BaseValuation parse_valuation() {
        Token kind = expect_ident("valuation kind");
        auto param_arg = [&]() {
            expect_punct("(");
            Token p = expect_ident("parameter name");
            auto idx = model_.table->index_of(p.text);
            if (!idx || !model_.table->is_param(*idx))
                throw ParseError(p.line, p.col, "'" + p.text + "' is not a parameter variable");
            return *idx;
        };
        if (kind.text == "trivial") return BaseValuation::trivial();
        if (kind.text == "order_at_infinity") {
            std::size_t p = param_arg();
            expect_punct(")");
            return BaseValuation::order_at_infinity(p);
        }
        if (kind.text == "order_at_value") {
            std::size_t p = param_arg();
            expect_punct(",");
            Token at = lex_.peek();
            RatFunc c = parse_expr();
            if (!c.is_poly() || !c.as_poly().is_constant())
                throw ParseError(at.line, at.col, "expected a rational constant");
            expect_punct(")");
            return BaseValuation::order_at_value(p, c.as_poly().constant_value());
        }
        if (kind.text == "order_at_irreducible") {
            expect_punct("(");
            Token at = lex_.peek();
            Poly p = parse_poly_expr();
            expect_punct(")");
            try {
                return BaseValuation::order_at_irreducible(std::move(p));
            } catch (const Error& e) {
                throw ParseError(at.line, at.col, e.what());
            }
        }
        throw ParseError(kind.line, kind.col, "unknown valuation '" + kind.text + "'");
    }

    LexValue parse_lex_value() {
        LexValue v;
        expect_punct("(");
        if (!is_punct("|")) {
            v.main.push_back(expect_int());
            while (is_punct(",")) {
                lex_.take();
                v.main.push_back(expect_int());
            }
        }
        expect_punct("|");
        v.base = expect_int();
        expect_punct(")");
        return v;
    }

    ModelCheck::Level parse_level() {
        ModelCheck::Level level;
        expect_punct("{");
        while (!is_punct("}")) {
            Token key = expect_ident("level field");
            expect_punct(":");
            if (key.text == "gens") {
                level.gens = parse_exprlist();
            } else if (key.text == "derivations") {
                level.derivations = parse_namelist();
            } else if (key.text == "witness") {
                level.witness = parse_poly_expr();
            } else {
                throw ParseError(key.line, key.col, "unknown level field '" + key.text + "'");
            }
            expect_punct(";");
        }
        expect_punct("}");
        return level;
    }

    void parse_check(const Token& head) {
        require_table(head);
        Token kind_tok = expect_ident("check kind");
        auto kind = ModelCheck::kind_from_name(kind_tok.text);
        if (!kind) throw ParseError(kind_tok.line, kind_tok.col, "unknown check kind '" + kind_tok.text + "'");
        ModelCheck c;
        c.kind = *kind;
        ++check_ordinal_;
        if (lex_.peek().type == Token::Type::Ident) {
            c.name = lex_.take().text;
        } else {
            c.name = ModelCheck::kind_name(c.kind) + "_" + std::to_string(check_ordinal_);
        }
        for (const ModelCheck& other : model_.checks) {
            if (other.name == c.name)
                throw ParseError(kind_tok.line, kind_tok.col, "duplicate check name '" + c.name + "'");
        }
        expect_punct("{");
        while (!is_punct("}")) {
            Token key = expect_ident("check field");
            if (key.text == "level") {
                c.levels.push_back(parse_level());
                continue;
            }
            expect_punct(":");
            if (key.text == "algebra") {
                c.algebra = expect_ident("algebra name").text;
            } else if (key.text == "derivation") {
                c.derivations.push_back(expect_ident("derivation name").text);
            } else if (key.text == "derivations") {
                c.derivations = parse_namelist();
            } else if (key.text == "degree") {
                c.degree = expect_int();
            } else if (key.text == "word_length") {
                c.word_length = expect_int();
            } else if (key.text == "iter_bound") {
                c.iter_bound = expect_int();
            } else if (key.text == "cap") {
                c.cap = expect_int();
            } else if (key.text == "find") {
                Token v = expect_ident("'true' or 'false'");
                if (v.text == "true") c.find = true;
                else if (v.text == "false") c.find = false;
                else throw ParseError(v.line, v.col, "expected 'true' or 'false'");
            } else if (key.text == "elements") {
                c.elements = parse_exprlist();
            } else if (key.text == "expect_det") {
                c.expect_det = parse_poly_expr();
            } else if (key.text == "max_index") {
                c.max_index = expect_int();
            } else if (key.text == "expect_dim") {
                c.expect_dim = expect_int();
            } else if (key.text == "expect_contains") {
                c.expect_contains = parse_exprlist();
            } else if (key.text == "only_vars") {
                c.only_vars = parse_namelist();
            } else if (key.text == "expect_basis") {
                c.expect_basis = parse_exprlist();
            } else if (key.text == "target") {
                c.target = parse_expr();
            } else if (key.text == "valuation") {
                c.valuation = parse_valuation();
            } else if (key.text == "expect_value") {
                c.expect_value = parse_lex_value();
            } else if (key.text == "weights") {
                if (!is_punct(";")) {
                    for (;;) {
                        Token var = expect_ident("variable");
                        if (!model_.table->index_of(var.text))
                            throw ParseError(var.line, var.col, "unknown variable '" + var.text + "'");
                        expect_punct("=");
                        c.weights.emplace_back(var.text, expect_int());
                        if (!is_punct(",")) break;
                        lex_.take();
                    }
                }
            } else if (key.text == "expect_index") {
                c.expect_index = expect_int();
            } else if (key.text == "expect") {
                c.expect = expect_ident("expected outcome").text;
            } else {
                throw ParseError(key.line, key.col, "unknown check field '" + key.text + "'");
            }
            expect_punct(";");
        }
        expect_punct("}");
        model_.checks.push_back(std::move(c));
    }

    void validate() {
        for (const ModelCheck& c : model_.checks) {
            if (!c.algebra.empty() && !model_.find_algebra(c.algebra))
                throw ParseError(1, 1, "check '" + c.name + "': unknown algebra '" + c.algebra + "'");
            for (const std::string& d : c.derivations) {
                if (!model_.find_derivation(d))
                    throw ParseError(1, 1, "check '" + c.name + "': unknown derivation '" + d + "'");
            }
            for (const ModelCheck::Level& level : c.levels) {
                for (const std::string& d : level.derivations) {
                    if (!model_.find_derivation(d))
                        throw ParseError(1, 1, "check '" + c.name + "': unknown derivation '" + d + "'");
                }
            }
        }
    }
};

}  // namespace

Model parse_model(const std::string& text) {
    ModelParser parser(text);
    return parser.parse();
}

RatFunc parse_ratfunc(const std::string& text, const VarTablePtr& table) {
    Lexer lex(text);
    ExprParser p(lex, table);
    RatFunc f = p.expr();
    if (lex.peek().type != Token::Type::End) lex.fail("trailing input after expression");
    return f;
}

Poly parse_poly(const std::string& text, const VarTablePtr& table) {
    RatFunc f = parse_ratfunc(text, table);
    if (!f.is_poly()) throw Error("parse_poly: expression is not a polynomial");
    return f.as_poly();
}

}  // namespace lndcert
