#pragma once

#include <stdexcept>
#include <string>

namespace qrm {

// Malformed input: bad ranges, mismatched dimensions, unparsable syntax.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input outside the mathematical domain of an operation,
// e.g. an invalid code triple or a generator set in no hierarchy band.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qrm
