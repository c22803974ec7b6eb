#include "gustl/parser.hpp"

#include <utility>

namespace gustl {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Program run() {
        Program p;
        p.pos = peek().pos;
        parse_decls(p.pre_decls);
        expect_word("process");
        p.name = expect_ident();
        expect_symbol("(");
        p.control_port = expect_ident();
        if (accept_symbol(",")) p.dimension_const = expect_ident();
        expect_symbol(")");
        if (accept_word("state")) {
            p.states.push_back(expect_ident());
            while (accept_symbol(",")) p.states.push_back(expect_ident());
        }
        if (accept_word("port")) {
            p.ports.push_back(expect_ident());
            while (accept_symbol(",")) p.ports.push_back(expect_ident());
        }
        parse_decls(p.post_decls);
        expect_word("start");
        p.init = statement_list();
        while (at_word("on")) p.guarded.push_back(guarded_state());
        expect_word("stop");
        if (peek().kind != TokenKind::EndOfInput)
            error("text after the closing stop");
        return p;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        if (i >= toks_.size()) i = toks_.size() - 1;
        return toks_[i];
    }

    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void error(const std::string& expected) const {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::EndOfInput
                                ? std::string("end of input")
                                : "'" + t.text + "'";
        throw CompileError({"E-PARSE", "expected " + expected + ", found " + found, t.pos});
    }

    bool at_word(std::string_view w) const { return peek().is_word(w); }
    bool at_symbol(std::string_view s) const { return peek().is_symbol(s); }

    bool accept_word(std::string_view w) {
        if (!at_word(w)) return false;
        advance();
        return true;
    }
    bool accept_symbol(std::string_view s) {
        if (!at_symbol(s)) return false;
        advance();
        return true;
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) error("'" + std::string(w) + "'");
    }
    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s)) error("'" + std::string(s) + "'");
    }
    std::string expect_ident() {
        if (peek().kind != TokenKind::Identifier) error("identifier");
        return advance().text;
    }

    ExprPtr make_expr(SourcePos pos, auto&& node) {
        auto e = std::make_unique<Expr>();
        e->pos = pos;
        e->node = std::forward<decltype(node)>(node);
        return e;
    }

    // ---- declarations ----

    void parse_decls(std::vector<Decl>& out) {
        for (;;) {
            if (at_word("const")) {
                out.push_back(const_def());
            } else if (at_word("word")) {
                out.push_back(words_decl());
            } else if (at_word("procedure") || at_word("function")) {
                out.push_back(sub_decl());
            } else {
                return;
            }
        }
    }

    ConstDef const_def() {
        ConstDef def;
        def.pos = peek().pos;
        expect_word("const");
        def.name = expect_ident();
        if (accept_symbol("[")) {
            def.is_array = true;
            if (!at_symbol("]")) def.size = expression();
            expect_symbol("]");
            expect_symbol("=");
            def.segments.push_back(const_segment());
            while (accept_symbol(",")) def.segments.push_back(const_segment());
        } else {
            expect_symbol("=");
            def.value = expression();
        }
        return def;
    }

    ConstSegment const_segment() {
        ConstSegment seg;
        seg.pos = peek().pos;
        if (peek().kind == TokenKind::String) {
            seg.is_string = true;
            seg.words = advance().words;
        } else {
            seg.value = expression();
        }
        return seg;
    }

    WordsDecl words_decl() {
        WordsDecl decl;
        decl.pos = peek().pos;
        expect_word("word");
        do {
            WordDeclItem item;
            item.pos = peek().pos;
            item.name = expect_ident();
            if (accept_symbol("[")) {
                item.size = expression();
                expect_symbol("]");
            }
            decl.items.push_back(std::move(item));
        } while (accept_symbol(","));
        return decl;
    }

    SubDecl sub_decl() {
        SubDecl sub;
        sub.pos = peek().pos;
        sub.is_function = at_word("function");
        advance();
        sub.name = expect_ident();
        expect_symbol("(");
        if (!at_symbol(")")) {
            sub.formals.push_back(formal_param());
            while (accept_symbol(",")) sub.formals.push_back(formal_param());
        }
        expect_symbol(")");
        while (at_word("word")) sub.locals.push_back(words_decl());
        expect_word("do");
        sub.body = statement_list();
        expect_word("return");
        if (sub.is_function) sub.return_value = expression();
        return sub;
    }

    FormalParam formal_param() {
        FormalParam f;
        f.pos = peek().pos;
        if (accept_word("const")) {
            f.kind = FormalKind::ConstArray;
            f.name = expect_ident();
            expect_symbol("[");
            if (!at_symbol("]")) f.size = expression();
            expect_symbol("]");
        } else if (accept_word("port")) {
            f.kind = FormalKind::Port;
            f.name = expect_ident();
        } else {
            f.name = expect_ident();
            if (accept_symbol("[")) {
                f.kind = FormalKind::Array;
                if (!at_symbol("]")) f.size = expression();
                expect_symbol("]");
            } else {
                f.kind = FormalKind::Word;
            }
        }
        return f;
    }

    // ---- guarded states ----

    GuardedState guarded_state() {
        GuardedState gs;
        gs.pos = peek().pos;
        expect_word("on");
        gs.states.push_back(expect_ident());
        while (accept_symbol(",")) gs.states.push_back(expect_ident());
        if (accept_symbol("\\")) gs.guard = guard();
        expect_symbol(":");
        gs.body = statement_list();
        return gs;
    }

    Guard guard() {
        Guard g;
        g.pos = peek().pos;
        if (accept_word("after")) {
            g.kind = GuardKind::After;
            g.after = expression();
            return g;
        }
        g.port = expect_ident();
        if (accept_symbol("!")) {
            g.kind = GuardKind::TransmitReady;
            return g;
        }
        expect_symbol("?");
        if (accept_word("end")) {
            g.kind = GuardKind::ReceiveEnd;
            return g;
        }
        g.kind = GuardKind::Receive;
        g.target.is_end = false;
        g.target.var = variable();
        return g;
    }

    // ---- statements ----

    bool at_statement_start() const {
        const Token& t = peek();
        if (t.kind == TokenKind::Identifier) return true;
        return t.is_word("if") || t.is_word("while") || t.is_word("repeat") ||
               t.is_word("next") || t.is_word("asm");
    }

    StmtList statement_list() {
        StmtList list;
        while (at_statement_start()) list.push_back(statement());
        return list;
    }

    Stmt statement() {
        Stmt s;
        s.pos = peek().pos;
        if (at_word("if")) {
            s.node = conditional();
        } else if (at_word("while") || at_word("repeat")) {
            s.node = repetition();
        } else if (accept_word("next")) {
            s.node = TransitionStmt{expect_ident()};
        } else if (at_word("asm")) {
            s.node = inline_asm();
        } else {
            s.node = ident_statement();
        }
        return s;
    }

    IfStmt conditional() {
        IfStmt stmt;
        expect_word("if");
        IfArm first;
        first.condition = expression();
        expect_word("then");
        first.body = statement_list();
        stmt.arms.push_back(std::move(first));
        while (accept_word("elseif")) {
            IfArm arm;
            arm.condition = expression();
            expect_word("then");
            arm.body = statement_list();
            stmt.arms.push_back(std::move(arm));
        }
        if (accept_word("else")) stmt.else_body = statement_list();
        expect_word("done");
        return stmt;
    }

    RepeatStmt repetition() {
        RepeatStmt stmt;
        if (accept_word("while")) stmt.while_cond = expression();
        expect_word("repeat");
        stmt.count = expression();
        expect_word("times");
        stmt.body = statement_list();
        if (!accept_word("done")) {
            expect_word("until");
            stmt.until_cond = expression();
        }
        return stmt;
    }

    AsmStmt inline_asm() {
        AsmStmt stmt;
        stmt.pos = peek().pos;
        expect_word("asm");
        stmt.items.push_back(single_asm());
        while (accept_symbol(",")) stmt.items.push_back(single_asm());
        return stmt;
    }

    AsmItem single_asm() {
        AsmItem item;
        if (at_symbol("(")) {
            item.is_expr = true;
            advance();
            item.value = expression();
            expect_symbol(")");
            return item;
        }
        SourcePos pos = peek().pos;
        std::optional<UnaryOp> op;
        if (accept_symbol("-")) op = UnaryOp::Minus;
        else if (accept_symbol("~")) op = UnaryOp::Complement;
        else if (accept_word("not")) op = UnaryOp::Not;
        ExprPtr c = constant();
        if (op) item.value = make_expr(pos, UnaryExpr{*op, std::move(c)});
        else item.value = std::move(c);
        return item;
    }

    // assignment, transmission or procedure call, all starting with an identifier
    std::variant<IfStmt, RepeatStmt, TransitionStmt, AssignStmt, TransmitStmt, CallStmt, AsmStmt>
    ident_statement() {
        SourcePos pos = peek().pos;
        std::string name = expect_ident();
        if (accept_symbol("!")) {
            TransmitStmt t;
            t.port = std::move(name);
            if (accept_word("end")) t.kind = TransmitKind::End;
            else if (accept_word("pause")) t.kind = TransmitKind::Pause;
            else {
                t.kind = TransmitKind::Value;
                t.value = expression();
            }
            return t;
        }
        if (accept_symbol("(")) {
            CallStmt c;
            c.name = std::move(name);
            c.args = actual_params();
            return c;
        }
        AssignStmt a;
        a.target.name = std::move(name);
        a.target.pos = pos;
        if (accept_symbol("[")) {
            a.target.index = expression();
            expect_symbol("]");
        }
        expect_symbol(":=");
        if (at_word("asm")) a.asm_value = inline_asm();
        else a.value = expression();
        return a;
    }

    std::vector<ExprPtr> actual_params() {
        std::vector<ExprPtr> args;
        if (!at_symbol(")")) {
            args.push_back(expression());
            while (accept_symbol(",")) args.push_back(expression());
        }
        expect_symbol(")");
        return args;
    }

    VarRef variable() {
        VarRef v;
        v.pos = peek().pos;
        v.name = expect_ident();
        if (accept_symbol("[")) {
            v.index = expression();
            expect_symbol("]");
        }
        return v;
    }

    // ---- expressions ----

    ExprPtr expression() {
        ExprPtr lhs = simple_expr();
        SourcePos pos = peek().pos;
        BinOp op;
        bool allow_sign = false;
        if (at_symbol("=")) op = BinOp::Eq;
        else if (at_symbol("<>")) op = BinOp::Ne;
        else if (at_symbol("<")) { op = BinOp::Lt; allow_sign = true; }
        else if (at_symbol(">")) { op = BinOp::Gt; allow_sign = true; }
        else if (at_symbol("<=")) { op = BinOp::Le; allow_sign = true; }
        else if (at_symbol(">=")) { op = BinOp::Ge; allow_sign = true; }
        else return lhs;
        advance();
        bool is_signed = allow_sign && accept_symbol("$");
        ExprPtr rhs = simple_expr();
        return make_expr(pos, BinaryExpr{op, is_signed, std::move(lhs), std::move(rhs)});
    }

    ExprPtr simple_expr() {
        ExprPtr lhs = term();
        for (;;) {
            SourcePos pos = peek().pos;
            BinOp op;
            if (at_symbol("+")) op = BinOp::Add;
            else if (at_symbol("-")) op = BinOp::Sub;
            else if (at_symbol("|")) op = BinOp::BitOr;
            else if (at_symbol("^")) op = BinOp::BitXor;
            else if (at_word("or")) op = BinOp::Or;
            else return lhs;
            advance();
            ExprPtr rhs = term();
            lhs = make_expr(pos, BinaryExpr{op, false, std::move(lhs), std::move(rhs)});
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            SourcePos pos = peek().pos;
            BinOp op;
            bool allow_sign = false;
            if (at_symbol("*")) op = BinOp::Mul;
            else if (at_symbol("&")) op = BinOp::BitAnd;
            else if (at_word("and")) op = BinOp::And;
            else if (at_symbol("<<")) op = BinOp::Shl;
            else if (at_symbol("/")) { op = BinOp::Div; allow_sign = true; }
            else if (at_symbol("%")) { op = BinOp::Mod; allow_sign = true; }
            else if (at_symbol(">>")) { op = BinOp::Shr; allow_sign = true; }
            else return lhs;
            advance();
            bool is_signed = allow_sign && accept_symbol("$");
            ExprPtr rhs = factor();
            lhs = make_expr(pos, BinaryExpr{op, is_signed, std::move(lhs), std::move(rhs)});
        }
    }

    ExprPtr factor() {
        SourcePos pos = peek().pos;
        if (accept_symbol("-")) return make_expr(pos, UnaryExpr{UnaryOp::Minus, factor_base()});
        if (accept_symbol("~")) return make_expr(pos, UnaryExpr{UnaryOp::Complement, factor_base()});
        if (accept_word("not")) return make_expr(pos, UnaryExpr{UnaryOp::Not, factor_base()});
        return factor_base();
    }

    ExprPtr factor_base() {
        SourcePos pos = peek().pos;
        const Token& t = peek();
        if (t.kind == TokenKind::Number) {
            advance();
            return make_expr(pos, NumberExpr{t.value});
        }
        if (at_symbol("#")) {
            advance();
            return make_expr(pos, SizeOfExpr{expect_ident()});
        }
        if (accept_word("now")) return make_expr(pos, NowExpr{});
        if (accept_symbol("(")) {
            ExprPtr e = expression();
            expect_symbol(")");
            return e;
        }
        if (t.kind == TokenKind::Identifier) {
            std::string name = expect_ident();
            if (accept_symbol("(")) {
                CallExpr call;
                call.name = std::move(name);
                call.args = actual_params();
                return make_expr(pos, std::move(call));
            }
            if (accept_symbol("?")) {
                ReceiveExpr recv;
                recv.port = std::move(name);
                if (accept_word("end")) recv.target.is_end = true;
                else recv.target.var = variable();
                return make_expr(pos, std::move(recv));
            }
            if (accept_symbol("[")) {
                IndexExpr idx;
                idx.name = std::move(name);
                idx.index = expression();
                expect_symbol("]");
                return make_expr(pos, std::move(idx));
            }
            return make_expr(pos, NameExpr{std::move(name)});
        }
        error("a factor");
    }

    // constant ::= number | char | "#" ident | ident | ident "[" expr "]"
    ExprPtr constant() {
        SourcePos pos = peek().pos;
        const Token& t = peek();
        if (t.kind == TokenKind::Number) {
            advance();
            return make_expr(pos, NumberExpr{t.value});
        }
        if (at_symbol("#")) {
            advance();
            return make_expr(pos, SizeOfExpr{expect_ident()});
        }
        if (t.kind == TokenKind::Identifier) {
            std::string name = expect_ident();
            if (accept_symbol("[")) {
                IndexExpr idx;
                idx.name = std::move(name);
                idx.index = expression();
                expect_symbol("]");
                return make_expr(pos, std::move(idx));
            }
            return make_expr(pos, NameExpr{std::move(name)});
        }
        error("a constant");
    }

    const std::vector<Token>& toks_;
    size_t pos_ = 0;
};

} // namespace

Program parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

} // namespace gustl
