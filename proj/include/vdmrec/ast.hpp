#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vdmrec/source.hpp"

namespace vdmrec {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

enum class TypeKind {
    Nat,
    Int,
    Bool,
    Set,     // args[0] = element
    Map,     // args[0] = domain, args[1] = range
    Product, // args = components, arity >= 2
    TypeVar, // @A in polymorphic signatures
    Any,     // element type of {} / {|->}; unifies with anything
};

struct VdmType {
    TypeKind kind = TypeKind::Any;
    std::vector<VdmType> args;
    std::string var_name; // TypeVar only

    static VdmType nat() { return {TypeKind::Nat, {}, {}}; }
    static VdmType integer() { return {TypeKind::Int, {}, {}}; }
    static VdmType boolean() { return {TypeKind::Bool, {}, {}}; }
    static VdmType any() { return {TypeKind::Any, {}, {}}; }
    static VdmType set_of(VdmType t) { return {TypeKind::Set, {std::move(t)}, {}}; }
    static VdmType map_of(VdmType d, VdmType r) {
        return {TypeKind::Map, {std::move(d), std::move(r)}, {}};
    }
    static VdmType product(std::vector<VdmType> parts) {
        return {TypeKind::Product, std::move(parts), {}};
    }
    static VdmType type_var(std::string name) {
        return {TypeKind::TypeVar, {}, std::move(name)};
    }

    bool is_numeric() const { return kind == TypeKind::Nat || kind == TypeKind::Int; }
};

bool operator==(const VdmType& a, const VdmType& b);
inline bool operator!=(const VdmType& a, const VdmType& b) { return !(a == b); }

// VDM concrete syntax, e.g. "set of nat", "map nat to nat".
std::string type_to_string(const VdmType& t);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class ExprKind {
    IntLit,
    BoolLit,
    Var,
    Tuple,    // kids = components (mk_(..) and (a, b) both land here)
    Binary,   // kids = {lhs, rhs}
    Unary,    // kids = {operand}
    If,       // kids = {cond, then, else}
    Let,      // name; kids = {value, body}
    LetInSet, // name; kids = {set, body}
    SetEnum,  // kids = elements ({} when empty)
    SetComp,  // kids[0] = element, kids[1] = filter or null; binds
    MapEnum,  // kids = {d1, r1, d2, r2, ...} ({|->} when empty)
    MapApply, // kids = {map, argument}; produced by the typechecker
    Apply,    // name; kids = arguments; type_args for f[T,...](...)
    DomOf,    // kids = {map}
    CardOf,   // kids = {set}
    Forall,   // kids[0] = body; binds
    IsType,   // kids = {operand}; is_type
};

enum class BinOp {
    Add, Sub, Mul,
    Eq, Neq, Lt, Le, Gt, Ge,
    And, Or, Imp,
    Union, InSet, AntiRestrict, // s <-: m
};

enum class UnOp { Minus, Not };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// One comprehension/forall binder: `x : T` or `x in set e`.
struct Bind {
    std::string name;
    bool in_set = false;
    VdmType type;   // type bind
    ExprPtr set;    // in-set bind
};

struct Expr {
    ExprKind kind;
    Position pos;
    int id = 0; // unique within a module; assigned by the parser

    BigInt int_val;
    bool bool_val = false;
    std::string name;
    BinOp op = BinOp::Add;
    UnOp uop = UnOp::Minus;
    std::vector<ExprPtr> kids;
    std::vector<Bind> binds;
    std::vector<VdmType> type_args;
    VdmType is_type;

    // Filled by the typechecker.
    VdmType type;

    ExprPtr clone() const;
};

// Builders used by analysis/synthesis/po_gen when assembling derived
// expressions. Positions default to the first child's.
ExprPtr mk_int(BigInt v);
ExprPtr mk_bool(bool v);
ExprPtr mk_var(std::string name);
ExprPtr mk_binary(BinOp op, ExprPtr l, ExprPtr r);
ExprPtr mk_unary(UnOp op, ExprPtr e);
ExprPtr mk_tuple(std::vector<ExprPtr> parts);
ExprPtr mk_apply(std::string name, std::vector<ExprPtr> args);
ExprPtr mk_forall(std::vector<Bind> binds, ExprPtr body);

// Conjunction of `parts` (true literal when empty).
ExprPtr mk_conj(std::vector<ExprPtr> parts);

// Structural equality, ignoring positions, node ids and inferred types.
bool expr_equal(const Expr& a, const Expr& b);

// Replaces free occurrences of `name` by clones of `replacement`.
ExprPtr substitute(const Expr& e, const std::string& name, const Expr& replacement);

// VDM concrete syntax. Output re-parses to a structurally equal tree.
std::string expr_to_string(const Expr& e);

// ---------------------------------------------------------------------------
// Functions and modules
// ---------------------------------------------------------------------------

struct Param {
    std::string name;
    VdmType type;
};

struct MeasureClause {
    enum class Kind { Absent, NotYetSpecified, Expression };
    Kind kind = Kind::Absent;
    ExprPtr expr; // Expression only
};

struct AnnotationSet {
    ExprPtr isa_measure;                      // @IsaMeasure(E)
    ExprPtr witness;                          // @Witness(f(args))
    std::optional<std::vector<std::string>> isa_mutual_rec; // @IsaMutualRec({a,b})
    std::vector<ExprPtr> lemmas;              // @Lemma(E), may repeat
};

struct FunctionDef {
    std::string name;
    Position pos;
    std::vector<std::string> type_params; // @A, @B; non-empty = oracle builtin only
    std::vector<Param> params;
    VdmType result;
    ExprPtr pre;  // may be null
    ExprPtr body;
    MeasureClause measure;
    AnnotationSet annotations;

    bool polymorphic() const { return !type_params.empty(); }
};

struct SourceModule {
    std::string name;
    std::vector<FunctionDef> functions;
    std::vector<Diagnostic> diagnostics;

    const FunctionDef* find(const std::string& fn) const;
};

// Renders a whole module back to VDM source (round-trip testing).
std::string module_to_string(const SourceModule& m);

} // namespace vdmrec
