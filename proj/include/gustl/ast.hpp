#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gustl/diag.hpp"

namespace gustl {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class UnaryOp { Minus, Complement, Not };

enum class BinOp {
    Add, Sub, BitOr, BitXor, Or,          // simple expression level
    Mul, BitAnd, And, Shl, Div, Mod, Shr, // term level
    Eq, Ne, Lt, Gt, Le, Ge,               // relational level
};

// A storable location: a single word, an array element, or a port.
struct VarRef {
    std::string name;
    ExprPtr index; // null unless an array element
    SourcePos pos;
};

// Reception target: a variable or the end token.
struct ReceiveTarget {
    bool is_end = false;
    VarRef var; // valid when !is_end
};

struct NumberExpr { uint32_t value = 0; };
struct NameExpr { std::string name; };
struct IndexExpr { std::string name; ExprPtr index; };
struct SizeOfExpr { std::string name; };
struct NowExpr {};
struct CallExpr {
    std::string name;
    std::vector<ExprPtr> args;
};
struct ReceiveExpr {
    std::string port;
    ReceiveTarget target;
};
struct UnaryExpr { UnaryOp op; ExprPtr operand; };
struct BinaryExpr {
    BinOp op;
    bool is_signed = false; // the $ marker on the operator
    ExprPtr lhs, rhs;
};

struct Expr {
    std::variant<NumberExpr, NameExpr, IndexExpr, SizeOfExpr, NowExpr,
                 CallExpr, ReceiveExpr, UnaryExpr, BinaryExpr>
        node;
    SourcePos pos;
};

struct Stmt;
using StmtList = std::vector<Stmt>;

// One element of an inline asm list: either a compile-time constant
// emitted verbatim as a code word, or a parenthesized expression that
// leaves its result on the data stack.
struct AsmItem {
    bool is_expr = false;
    ExprPtr value; // for constants: the (possibly unary-wrapped) constant
};

struct AsmStmt {
    std::vector<AsmItem> items;
    SourcePos pos;
};

struct IfArm {
    ExprPtr condition;
    StmtList body;
};
struct IfStmt {
    std::vector<IfArm> arms; // first arm is the `if`, the rest `elseif`
    std::optional<StmtList> else_body;
};
struct RepeatStmt {
    ExprPtr while_cond; // optional
    ExprPtr count;
    StmtList body;
    ExprPtr until_cond; // optional; body ends in `done` when null
};
struct TransitionStmt { std::string state; };
struct AssignStmt {
    VarRef target;
    ExprPtr value;                // either value or asm is set
    std::optional<AsmStmt> asm_value;
};
enum class TransmitKind { Value, End, Pause };
struct TransmitStmt {
    std::string port;
    TransmitKind kind = TransmitKind::Value;
    ExprPtr value; // for Value
};
struct CallStmt {
    std::string name;
    std::vector<ExprPtr> args;
};

struct Stmt {
    std::variant<IfStmt, RepeatStmt, TransitionStmt, AssignStmt,
                 TransmitStmt, CallStmt, AsmStmt>
        node;
    SourcePos pos;
};

// ---- declarations ----

// One segment of a constant array initializer: an expression or a string.
struct ConstSegment {
    bool is_string = false;
    ExprPtr value;                // when !is_string
    std::vector<uint32_t> words;  // when is_string
    SourcePos pos;
};

struct ConstDef {
    bool is_array = false;
    std::string name;
    ExprPtr size;                    // optional explicit array size
    ExprPtr value;                   // scalar value
    std::vector<ConstSegment> segments; // array initializer
    SourcePos pos;
};

struct WordDeclItem {
    std::string name;
    ExprPtr size; // null for a scalar
    SourcePos pos;
};
struct WordsDecl {
    std::vector<WordDeclItem> items;
    SourcePos pos;
};

enum class FormalKind { Word, Array, ConstArray, Port };
struct FormalParam {
    FormalKind kind = FormalKind::Word;
    std::string name;
    ExprPtr size; // optional declared size for array kinds
    SourcePos pos;
};

struct SubDecl {
    bool is_function = false;
    std::string name;
    std::vector<FormalParam> formals;
    std::vector<WordsDecl> locals;
    StmtList body;
    ExprPtr return_value; // functions only
    SourcePos pos;
};

using Decl = std::variant<ConstDef, WordsDecl, SubDecl>;

// ---- guarded states ----

enum class GuardKind { None, TransmitReady, Receive, ReceiveEnd, After };
struct Guard {
    GuardKind kind = GuardKind::None;
    std::string port;      // TransmitReady / Receive / ReceiveEnd
    ReceiveTarget target;  // Receive
    ExprPtr after;         // After
    SourcePos pos;
};

struct GuardedState {
    std::vector<std::string> states;
    Guard guard; // kind None when the guard is absent
    StmtList body;
    SourcePos pos;
};

struct Program {
    std::vector<Decl> pre_decls;
    std::string name;
    std::string control_port;
    std::optional<std::string> dimension_const;
    std::vector<std::string> states;
    std::vector<std::string> ports;
    std::vector<Decl> post_decls;
    StmtList init;
    std::vector<GuardedState> guarded;
    SourcePos pos;
};

} // namespace gustl
