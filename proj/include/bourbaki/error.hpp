#ifndef BOURBAKI_ERROR_HPP
#define BOURBAKI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bourbaki {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

// Malformed linear assembly. `index` is 1-based into the sign sequence.
class LinearParseError : public Error {
public:
    LinearParseError(std::size_t index, const std::string& what)
        : Error("at sign " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Surface syntax error with 1-based line/column.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ExpansionError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A required bound (infimum / supremum) does not exist in the ordered set.
class StructureError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace bourbaki

#endif // BOURBAKI_ERROR_HPP
