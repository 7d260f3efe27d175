#pragma once

#include <stdexcept>
#include <string>

namespace ismkit {

// Raised when an input document cannot be read as the expected format:
// malformed CSV rows, illegal relation symbols, broken JSON, and so on.
// Messages carry enough location detail (row/column/field) to fix the file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// Raised when a document parses cleanly but breaks a domain rule:
// unknown factor ids, mismatched matrix dimensions, inconsistent catalogs.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace ismkit
