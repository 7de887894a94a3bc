#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Failure categories surfaced by the library. Each maps to a stable name so
// reports and tests can match on it without parsing messages.
enum class errc {
    order_overflow,
    malformed_expr,
    syntax_error,
    not_idempotent,
    not_an_ideal,
    size_guard,
    degenerate_ring,
    domain_mismatch,
    no_identity,
    precondition_failed,
    witness_not_found,
    classification_contradiction,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace ringlab
