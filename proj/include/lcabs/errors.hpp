/*
 * errors.hpp - exception types shared across the lcabs library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace lcabs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Trimming removed every initial state; the machine has no infinite behavior.
struct EmptyAfterTrim : Error {
    EmptyAfterTrim() : Error("machine is empty after trimming") {}
};

struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("machines have different alphabets") {}
};

struct DepthBudgetExceeded : Error {
    explicit DepthBudgetExceeded(std::size_t budget)
        : Error("path enumeration exceeded node budget of " + std::to_string(budget)) {}
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& token)
        : Error("unknown symbol: " + token) {}
};

struct UnknownState : Error {
    explicit UnknownState(const std::string& id)
        : Error("unknown state: " + id) {}
};

struct EmptyWindows : Error {
    EmptyWindows() : Error("window set has no initial windows") {}
};

/// Quantizer validation reported diagnostics; compilation refused.
struct Blocking : Error {
    explicit Blocking(const std::string& what) : Error("blocking quantizer: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// Two routes that must agree by construction disagreed.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what)
        : Error("internal inconsistency: " + what) {}
};

}  // namespace lcabs
