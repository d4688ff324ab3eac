#pragma once

#include <stdexcept>
#include <string>

namespace splitgame {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class VocabularyMismatchError : public Error {
public:
    using Error::Error;
};

class OutOfUniverseError : public Error {
public:
    using Error::Error;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

class WidthExceededError : public Error {
public:
    using Error::Error;
};

class UnboundVariableError : public Error {
public:
    using Error::Error;
};

class NotBinaryError : public Error {
public:
    using Error::Error;
};

class EmptySeedError : public Error {
public:
    using Error::Error;
};

class NotSubstructureError : public Error {
public:
    using Error::Error;
};

class NotChainError : public Error {
public:
    using Error::Error;
};

class InvalidPositionError : public Error {
public:
    using Error::Error;
};

class NoDistinguisherError : public Error {
public:
    using Error::Error;
};

class UnknownSuiteError : public Error {
public:
    using Error::Error;
};

class NotEquivalenceError : public Error {
public:
    using Error::Error;
};

// Parse-time errors carry a source location.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::string origin, int line, int column)
        : Error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                ": syntax error: " + what),
          origin_(std::move(origin)), line_(line), column_(column) {}

    const std::string& origin() const { return origin_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string origin_;
    int line_ = 0;
    int column_ = 0;
};

class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& what) : Error(what) {}
    SemanticError(const std::string& what, std::string origin, int line, int column)
        : Error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                ": " + what),
          origin_(std::move(origin)), line_(line), column_(column) {}

    const std::string& origin() const { return origin_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string origin_;
    int line_ = 0;
    int column_ = 0;
};

} // namespace splitgame
