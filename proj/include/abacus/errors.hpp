#pragma once

#include <stdexcept>
#include <string>

namespace abacus {

// Malformed input: unparsable text, bad (d,e), wrong matrix dimensions.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates an operation's stated precondition,
// e.g. a non-e-regular partition fed to the Mullineux pipeline.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A proved invariant failed at runtime. Indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_valid(bool ok, const std::string& msg) {
    if (!ok) throw validation_error(msg);
}

inline void require_pre(bool ok, const std::string& msg) {
    if (!ok) throw precondition_error(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace abacus
