#pragma once

#include <stdexcept>
#include <string>

namespace graphtrials {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph document; carries the offending 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The assertion does not hold on the graph, so no witness exists.
class NoEvidence : public Error {
public:
    using Error::Error;
};

/// Sparsification was asked for on a graph that is not k-connected.
class NotKConnected : public NoEvidence {
public:
    using NoEvidence::NoEvidence;
};

/// An exact search ran out of its node budget.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was called on an instance above its size gate.
class OracleLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Certificate or evidence document does not follow the schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// No extraction rule recognised the layout.
class UnrecognizedGist : public Error {
public:
    using Error::Error;
};

class MutationInapplicable : public Error {
public:
    using Error::Error;
};

}  // namespace graphtrials
