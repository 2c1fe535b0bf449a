#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Violated value-range or argument-domain requirement (n = 0, p not prime, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Hypotheses of an identity not met (distinct from a bad value).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Loaded data failed re-verification.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// The iteration budget ran out before a composite split; names the survivor.
class incomplete_factorization : public std::runtime_error {
public:
    explicit incomplete_factorization(const std::string& composite_decimal)
        : std::runtime_error("incomplete factorization: unfactored composite " + composite_decimal),
          composite_(composite_decimal) {}
    const std::string& composite() const { return composite_; }

private:
    std::string composite_;
};

} // namespace gk
