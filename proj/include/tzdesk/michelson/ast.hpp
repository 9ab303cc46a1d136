#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tzdesk/error.hpp"
#include "tzdesk/util.hpp"

namespace tzdesk::michelson {

enum class TyTag {
    Int,
    Nat,
    Mutez,
    String,
    Timestamp,
    Bool,
    Unit,
    Address,
    KeyHash,
    Operation,
    Pair,
    Or,
    Option,
    Map,
    List,
    Contract,
};

struct Ty {
    TyTag tag = TyTag::Unit;
    std::vector<Ty> args; // pair/or/map: 2, option/list/contract: 1

    Ty() = default;
    explicit Ty(TyTag t) : tag(t) {}
    Ty(TyTag t, std::vector<Ty> a) : tag(t), args(std::move(a)) {}

    bool operator==(const Ty& o) const { return tag == o.tag && args == o.args; }

    static Ty int_() { return Ty(TyTag::Int); }
    static Ty nat() { return Ty(TyTag::Nat); }
    static Ty mutez() { return Ty(TyTag::Mutez); }
    static Ty string_() { return Ty(TyTag::String); }
    static Ty timestamp() { return Ty(TyTag::Timestamp); }
    static Ty bool_() { return Ty(TyTag::Bool); }
    static Ty unit() { return Ty(TyTag::Unit); }
    static Ty address() { return Ty(TyTag::Address); }
    static Ty key_hash() { return Ty(TyTag::KeyHash); }
    static Ty operation() { return Ty(TyTag::Operation); }
    static Ty pair(Ty a, Ty b) { return Ty(TyTag::Pair, {std::move(a), std::move(b)}); }
    static Ty or_(Ty l, Ty r) { return Ty(TyTag::Or, {std::move(l), std::move(r)}); }
    static Ty option(Ty t) { return Ty(TyTag::Option, {std::move(t)}); }
    static Ty map(Ty k, Ty v) { return Ty(TyTag::Map, {std::move(k), std::move(v)}); }
    static Ty list(Ty t) { return Ty(TyTag::List, {std::move(t)}); }
    static Ty contract(Ty t) { return Ty(TyTag::Contract, {std::move(t)}); }
};

inline const char* ty_tag_name(TyTag t)
{
    switch (t) {
        case TyTag::Int: return "int";
        case TyTag::Nat: return "nat";
        case TyTag::Mutez: return "mutez";
        case TyTag::String: return "string";
        case TyTag::Timestamp: return "timestamp";
        case TyTag::Bool: return "bool";
        case TyTag::Unit: return "unit";
        case TyTag::Address: return "address";
        case TyTag::KeyHash: return "key_hash";
        case TyTag::Operation: return "operation";
        case TyTag::Pair: return "pair";
        case TyTag::Or: return "or";
        case TyTag::Option: return "option";
        case TyTag::Map: return "map";
        case TyTag::List: return "list";
        case TyTag::Contract: return "contract";
    }
    return "?";
}

inline bool is_comparable(const Ty& t)
{
    switch (t.tag) {
        case TyTag::Int:
        case TyTag::Nat:
        case TyTag::Mutez:
        case TyTag::String:
        case TyTag::Timestamp:
        case TyTag::Address:
        case TyTag::KeyHash:
        case TyTag::Bool:
            return true;
        default:
            return false;
    }
}

inline bool contains_tag(const Ty& t, TyTag tag)
{
    if (t.tag == tag)
        return true;
    for (const auto& a : t.args)
        if (contains_tag(a, tag))
            return true;
    return false;
}

// Untyped data literal as written in source (`--init`, `--arg`, PUSH
// arguments). Strings double as timestamps and addresses until checked
// against a type.
struct Literal {
    enum class Kind { Int, String, Unit, True, False, None, Pair, Left, Right, Some, Seq, Map };

    Kind kind = Kind::Unit;
    BigInt num;
    std::string str;
    std::vector<Literal> children;           // Pair: 2, Left/Right/Some: 1, Seq: n
    std::vector<std::pair<Literal, Literal>> entries; // Map: Elt key value, source order

    bool operator==(const Literal& o) const
    {
        return kind == o.kind && num == o.num && str == o.str && children == o.children && entries == o.entries;
    }

    static Literal int_(BigInt v)
    {
        Literal l;
        l.kind = Kind::Int;
        l.num = std::move(v);
        return l;
    }
    static Literal string_(std::string s)
    {
        Literal l;
        l.kind = Kind::String;
        l.str = std::move(s);
        return l;
    }
    static Literal unit() { return with_kind(Kind::Unit); }
    static Literal true_() { return with_kind(Kind::True); }
    static Literal false_() { return with_kind(Kind::False); }
    static Literal none() { return with_kind(Kind::None); }
    static Literal pair(Literal a, Literal b)
    {
        Literal l = with_kind(Kind::Pair);
        l.children.push_back(std::move(a));
        l.children.push_back(std::move(b));
        return l;
    }
    static Literal left(Literal a)
    {
        Literal l = with_kind(Kind::Left);
        l.children.push_back(std::move(a));
        return l;
    }
    static Literal right(Literal a)
    {
        Literal l = with_kind(Kind::Right);
        l.children.push_back(std::move(a));
        return l;
    }
    static Literal some(Literal a)
    {
        Literal l = with_kind(Kind::Some);
        l.children.push_back(std::move(a));
        return l;
    }
    static Literal seq(std::vector<Literal> items)
    {
        Literal l = with_kind(Kind::Seq);
        l.children = std::move(items);
        return l;
    }
    static Literal map(std::vector<std::pair<Literal, Literal>> es)
    {
        Literal l = with_kind(Kind::Map);
        l.entries = std::move(es);
        return l;
    }

private:
    static Literal with_kind(Kind k)
    {
        Literal l;
        l.kind = k;
        return l;
    }
};

// One primitive application. Opcode resolution happens at typechecking;
// until then instructions keep their source spelling, which lets the macro
// expander rewrite them and keeps error positions exact.
struct Instr {
    std::string prim;
    std::vector<Ty> ty_args;
    std::vector<Literal> lit_args;
    std::vector<std::vector<Instr>> seq_args;
    int line = 0;
    int col = 0;

    bool operator==(const Instr& o) const
    {
        return prim == o.prim && ty_args == o.ty_args && lit_args == o.lit_args && seq_args == o.seq_args;
    }
};

using InstrSeq = std::vector<Instr>;

struct RawProgram {
    Ty parameter;
    Ty storage;
    InstrSeq code;

    bool operator==(const RawProgram& o) const
    {
        return parameter == o.parameter && storage == o.storage && code == o.code;
    }
};

} // namespace tzdesk::michelson
