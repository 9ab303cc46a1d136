#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tzdesk {

// Every failure the library reports carries one of these kinds so callers
// (tests, RPC error bodies, the CLI) can match on it without string parsing.
enum class ErrorKind {
    // michelson-syntax
    SyntaxError,
    DuplicateSection,
    MissingSection,
    UnknownMacro,
    UnorderedMapLiteral,
    // michelson-typecheck
    StackUnderflow,
    TypeMismatch,
    BranchMismatch,
    IllegalOperationTy,
    BadFinalStack,
    // michelson-vm
    GasExhausted,
    ScriptFailed,
    MutezOverflow,
    // ledger-context
    BalanceTooLow,
    UnknownDelegate,
    // protocol
    CounterInThePast,
    CounterInTheFuture,
    InvalidSignature,
    UnrevealedKey,
    GasLimitTooHigh,
    StorageLimitTooHigh,
    StorageLimitExceeded,
    WrongBakerForSlot,
    InvalidEndorsement,
    OperationError,
    InvalidEvidence,
    AlreadyDenounced,
    ActivationRejected,
    // consensus-sim
    NoRolls,
    EmptySet,
    ConfigError,
    // node-rpc
    BindError,
    ValidationError,
    DecodeError,
    FeeTooLow,
    // client-cli
    DuplicateAlias,
    UnknownAlias,
    Timeout,
    Reorged,
    TypecheckError,
    BurnCapExceeded,
    AssertionFailure,
    // never expected to surface; indicates a bug (e.g. typechecked code
    // hitting a malformed stack at runtime)
    Internal,
};

inline std::string_view error_kind_name(ErrorKind k)
{
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::DuplicateSection: return "DuplicateSection";
        case ErrorKind::MissingSection: return "MissingSection";
        case ErrorKind::UnknownMacro: return "UnknownMacro";
        case ErrorKind::UnorderedMapLiteral: return "UnorderedMapLiteral";
        case ErrorKind::StackUnderflow: return "StackUnderflow";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::BranchMismatch: return "BranchMismatch";
        case ErrorKind::IllegalOperationTy: return "IllegalOperationTy";
        case ErrorKind::BadFinalStack: return "BadFinalStack";
        case ErrorKind::GasExhausted: return "GasExhausted";
        case ErrorKind::ScriptFailed: return "ScriptFailed";
        case ErrorKind::MutezOverflow: return "MutezOverflow";
        case ErrorKind::BalanceTooLow: return "BalanceTooLow";
        case ErrorKind::UnknownDelegate: return "UnknownDelegate";
        case ErrorKind::CounterInThePast: return "CounterInThePast";
        case ErrorKind::CounterInTheFuture: return "CounterInTheFuture";
        case ErrorKind::InvalidSignature: return "InvalidSignature";
        case ErrorKind::UnrevealedKey: return "UnrevealedKey";
        case ErrorKind::GasLimitTooHigh: return "GasLimitTooHigh";
        case ErrorKind::StorageLimitTooHigh: return "StorageLimitTooHigh";
        case ErrorKind::StorageLimitExceeded: return "StorageLimitExceeded";
        case ErrorKind::WrongBakerForSlot: return "WrongBakerForSlot";
        case ErrorKind::InvalidEndorsement: return "InvalidEndorsement";
        case ErrorKind::OperationError: return "OperationError";
        case ErrorKind::InvalidEvidence: return "InvalidEvidence";
        case ErrorKind::AlreadyDenounced: return "AlreadyDenounced";
        case ErrorKind::ActivationRejected: return "ActivationRejected";
        case ErrorKind::NoRolls: return "NoRolls";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::BindError: return "BindError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::DecodeError: return "DecodeError";
        case ErrorKind::FeeTooLow: return "FeeTooLow";
        case ErrorKind::DuplicateAlias: return "DuplicateAlias";
        case ErrorKind::UnknownAlias: return "UnknownAlias";
        case ErrorKind::Timeout: return "Timeout";
        case ErrorKind::Reorged: return "Reorged";
        case ErrorKind::TypecheckError: return "TypecheckError";
        case ErrorKind::BurnCapExceeded: return "BurnCapExceeded";
        case ErrorKind::AssertionFailure: return "AssertionFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg)
{
    throw Error(kind, msg);
}

} // namespace tzdesk
