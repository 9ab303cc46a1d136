#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tzdesk::michelson {

enum class Op {
    Push,
    Drop,
    Dup,
    Swap,
    Dip,
    Pair,
    Car,
    Cdr,
    Unit,
    Some,
    None,
    Left,
    Right,
    Cons,
    Nil,
    EmptyMap,
    Get,
    Update,
    Mem,
    Add,
    Sub,
    Mul,
    Compare,
    Eq,
    Neq,
    Lt,
    Gt,
    Le,
    Ge,
    If,
    IfNone,
    IfLeft,
    And,
    Or,
    Not,
    Amount,
    Balance,
    Sender,
    Source,
    Self,
    Now,
    Address,
    Contract,
    TransferTokens,
    ImplicitAccount,
    Failwith,
    Loop,
};

inline const std::unordered_map<std::string, Op>& core_opcode_table()
{
    static const std::unordered_map<std::string, Op> table = {
        {"PUSH", Op::Push},
        {"DROP", Op::Drop},
        {"DUP", Op::Dup},
        {"SWAP", Op::Swap},
        {"DIP", Op::Dip},
        {"PAIR", Op::Pair},
        {"CAR", Op::Car},
        {"CDR", Op::Cdr},
        {"UNIT", Op::Unit},
        {"SOME", Op::Some},
        {"NONE", Op::None},
        {"LEFT", Op::Left},
        {"RIGHT", Op::Right},
        {"CONS", Op::Cons},
        {"NIL", Op::Nil},
        {"EMPTY_MAP", Op::EmptyMap},
        {"GET", Op::Get},
        {"UPDATE", Op::Update},
        {"MEM", Op::Mem},
        {"ADD", Op::Add},
        {"SUB", Op::Sub},
        {"MUL", Op::Mul},
        {"COMPARE", Op::Compare},
        {"EQ", Op::Eq},
        {"NEQ", Op::Neq},
        {"LT", Op::Lt},
        {"GT", Op::Gt},
        {"LE", Op::Le},
        {"GE", Op::Ge},
        {"IF", Op::If},
        {"IF_NONE", Op::IfNone},
        {"IF_LEFT", Op::IfLeft},
        {"AND", Op::And},
        {"OR", Op::Or},
        {"NOT", Op::Not},
        {"AMOUNT", Op::Amount},
        {"BALANCE", Op::Balance},
        {"SENDER", Op::Sender},
        {"SOURCE", Op::Source},
        {"SELF", Op::Self},
        {"NOW", Op::Now},
        {"ADDRESS", Op::Address},
        {"CONTRACT", Op::Contract},
        {"TRANSFER_TOKENS", Op::TransferTokens},
        {"IMPLICIT_ACCOUNT", Op::ImplicitAccount},
        {"FAILWITH", Op::Failwith},
        {"LOOP", Op::Loop},
    };
    return table;
}

inline std::optional<Op> core_opcode_of(std::string_view prim)
{
    const auto& t = core_opcode_table();
    auto it = t.find(std::string(prim));
    if (it == t.end())
        return std::nullopt;
    return it->second;
}

inline bool is_core_prim(std::string_view prim)
{
    return core_opcode_of(prim).has_value();
}

} // namespace tzdesk::michelson
