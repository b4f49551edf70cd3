#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycleq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownSymbol : public Error {
public:
    UnknownSymbol(std::size_t position, char symbol)
        : Error("unknown symbol '" + std::string(1, symbol) + "' at position " +
                std::to_string(position)),
          position_(position), symbol_(symbol) {}

    std::size_t position() const noexcept { return position_; }
    char symbol() const noexcept { return symbol_; }

private:
    std::size_t position_;
    char symbol_;
};

class NotBinary : public Error {
public:
    NotBinary() : Error("operation requires the binary alphabet {0,1}") {}
};

class EmptyWord : public Error {
public:
    EmptyWord() : Error("operation requires a non-empty word") {}
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("words are over different alphabets") {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& what) : Error("length mismatch: " + what) {}
};

class LetterOutsideDelta : public Error {
public:
    LetterOutsideDelta(std::size_t gap, char symbol)
        : Error("inserted letter '" + std::string(1, symbol) + "' at gap " + std::to_string(gap) +
                " is not in the insertion set") {}
};

class InconsistentRecord : public Error {
public:
    explicit InconsistentRecord(const std::string& what)
        : Error("inconsistent deletion record: " + what) {}
};

class HasConstantColumn : public Error {
public:
    explicit HasConstantColumn(std::size_t column)
        : Error("column " + std::to_string(column) + " is constant") {}
};

class NotTwoRows : public Error {
public:
    NotTwoRows() : Error("operation requires exactly two rows") {}
};

class WeightMismatch : public Error {
public:
    WeightMismatch(std::size_t w1, std::size_t w2)
        : Error("Hamming weights differ (" + std::to_string(w1) + " vs " + std::to_string(w2) +
                "); two binary words are cyclically equalizable iff their weights are equal"),
          first_(w1), second_(w2) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Internal invariant breach inside the slot algorithm. Never caused by valid input.
class ConsistencyAssertionFailed : public Error {
public:
    explicit ConsistencyAssertionFailed(const std::string& what)
        : Error("internal consistency assertion failed: " + what) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t states)
        : Error("search state cap exceeded after " + std::to_string(states) + " states"),
          states_(states) {}

    std::size_t states() const noexcept { return states_; }

private:
    std::size_t states_;
};

class FaceUpCard : public Error {
public:
    explicit FaceUpCard(std::size_t position)
        : Error("card at position " + std::to_string(position) + " is face up") {}
};

class ArityMismatch : public Error {
public:
    ArityMismatch(std::size_t expected, std::size_t got)
        : Error("arity mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

}  // namespace cycleq
