#pragma once

#include <stdexcept>
#include <string>

namespace gq {

/// Error carrying a stable kind tag (e.g. "CapExceeded", "GQAxiomFails")
/// that reports and tests can match on.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t cap, const std::string& detail)
        : Error("CapExceeded", "cap " + std::to_string(cap) + " exceeded; " + detail), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

} // namespace gq
