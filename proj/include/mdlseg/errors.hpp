#pragma once

#include <stdexcept>
#include <string>

namespace mdlseg {

// Input file could not be interpreted. Carries the source location so the
// CLI can point at the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column,
               const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          source_(std::move(source)), line_(line), column_(column) {}

    ParseError(std::string source, const std::string& message)
        : std::runtime_error(source + ": " + message),
          source_(std::move(source)), line_(0), column_(0) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace mdlseg
