// Letters, words, word matrices and cyclic equality.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycleq/errors.hpp"

namespace cycleq {

/// Index of a letter in its alphabet.
using Letter = std::uint8_t;

/// Ordered finite set of letters. A letter is identified by its index; each
/// letter has a distinct single-character display symbol.
class Alphabet {
public:
    /// Throws FormatError on an empty symbol set or duplicate symbols.
    explicit Alphabet(std::string symbols);

    static Alphabet binary() { return Alphabet("01"); }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool is_binary() const noexcept { return symbols_ == "01"; }

    char symbol(Letter letter) const { return symbols_.at(letter); }
    std::optional<Letter> index_of(char symbol) const noexcept;
    const std::string& symbols() const noexcept { return symbols_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

class Word {
public:
    Word() : alphabet_(Alphabet::binary()) {}
    Word(Alphabet alphabet, std::vector<Letter> letters);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// Display string, one symbol per letter.
    std::string str() const;

    /// Word starting at letter `shift`: (a_shift, a_shift+1, ..., a_shift-1).
    Word rotated(std::size_t shift) const;

    bool operator==(const Word& other) const {
        return alphabet_ == other.alphabet_ && letters_ == other.letters_;
    }
    std::strong_ordering operator<=>(const Word& other) const {
        return letters_ <=> other.letters_;
    }

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// Parses a display string. Throws UnknownSymbol for characters outside the alphabet.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Number of 1-letters. Throws NotBinary unless the alphabet is {0,1}.
std::size_t hamming_weight(const Word& w);

/// Renders a binary word with card faces (0 = club, 1 = heart).
std::string card_string(const Word& w);

/// k words of equal length n, viewed as a k x n matrix.
class WordMatrix {
public:
    /// Throws LengthMismatch on unequal row lengths, AlphabetMismatch on mixed
    /// alphabets and Error on an empty row set.
    explicit WordMatrix(std::vector<Word> rows);

    const std::vector<Word>& rows() const noexcept { return rows_; }
    const Word& row(std::size_t i) const { return rows_.at(i); }
    std::size_t height() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return rows_.front().size(); }
    const Alphabet& alphabet() const noexcept { return rows_.front().alphabet(); }

    /// Column j as the k-vector (a_{1,j}, ..., a_{k,j}).
    std::vector<Letter> column(std::size_t j) const;
    bool is_constant_column(std::size_t j, Letter c) const;

    /// Rotates every row by the same shift.
    WordMatrix rotated(std::size_t shift) const;

    bool operator==(const WordMatrix&) const = default;

private:
    std::vector<Word> rows_;
};

struct CyclicMatch {
    bool equal = false;
    /// Smallest shift with w2[j] = w1[(j + shift) mod n]; meaningful only when equal.
    std::size_t shift = 0;
};

/// Doubling-and-search cyclic equality. Unequal lengths or alphabets are not equal.
CyclicMatch cyclically_equal(const Word& w1, const Word& w2);

/// True iff every pair of rows is cyclically equal. Checks each row against
/// row 0, which suffices because cyclic equality is an equivalence relation.
bool all_cyclically_equal(const WordMatrix& m);

/// Number of distinct rotations of w, i.e. its smallest period. Throws EmptyWord.
std::size_t rotation_class_size(const Word& w);

/// Start index of the lexicographically least rotation (Booth's algorithm).
/// Works for any totally ordered element type.
template <class T>
std::size_t least_rotation(std::span<const T> s) {
    const std::size_t n = s.size();
    if (n == 0) {
        return 0;
    }
    std::vector<std::ptrdiff_t> failure(2 * n, -1);
    std::size_t k = 0;
    // (k + i + 1) with i == -1 wraps to k in unsigned arithmetic.
    const auto at = [&](std::size_t k0, std::ptrdiff_t i) -> const T& {
        return s[(k0 + static_cast<std::size_t>(i) + 1) % n];
    };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const T& sj = s[j % n];
        std::ptrdiff_t i = failure[j - k - 1];
        while (i != -1 && !(sj == at(k, i))) {
            if (sj < at(k, i)) {
                k = j - static_cast<std::size_t>(i) - 1;
            }
            i = failure[static_cast<std::size_t>(i)];
        }
        if (!(sj == at(k, i))) {
            if (sj < s[k % n]) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    return k % n;
}

/// Lexicographically least rotation of w.
Word canonical_rotation(const Word& w);

namespace detail {

/// First offset t < n such that haystack(w1 w1)[t..t+n) == w2, or nullopt.
std::optional<std::size_t> find_rotation(std::span<const Letter> w1, std::span<const Letter> w2);

}  // namespace detail

}  // namespace cycleq
