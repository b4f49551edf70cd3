#include "cycleq/word.hpp"

#include <algorithm>
#include <functional>

namespace cycleq {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw FormatError("alphabet must contain at least one letter");
    }
    if (symbols_.size() > 255) {
        throw FormatError("alphabet too large");
    }
    std::string sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw FormatError("alphabet symbols must be distinct: \"" + symbols_ + "\"");
    }
}

std::optional<Letter> Alphabet::index_of(char symbol) const noexcept {
    const auto pos = symbols_.find(symbol);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return static_cast<Letter>(pos);
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] >= alphabet_.size()) {
            throw Error("letter index " + std::to_string(letters_[i]) + " at position " +
                        std::to_string(i) + " outside alphabet");
        }
    }
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
        out.push_back(alphabet_.symbol(l));
    }
    return out;
}

Word Word::rotated(std::size_t shift) const {
    std::vector<Letter> out(letters_);
    if (!out.empty()) {
        std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                    out.end());
    }
    return Word(alphabet_, std::move(out));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto idx = alphabet.index_of(text[i]);
        if (!idx) {
            throw UnknownSymbol(i, text[i]);
        }
        letters.push_back(*idx);
    }
    return Word(alphabet, std::move(letters));
}

std::size_t hamming_weight(const Word& w) {
    if (!w.alphabet().is_binary()) {
        throw NotBinary();
    }
    return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), Letter{1}));
}

std::string card_string(const Word& w) {
    if (!w.alphabet().is_binary()) {
        throw NotBinary();
    }
    std::string out;
    for (Letter l : w.letters()) {
        out += l == 0 ? "♣" : "♥";
    }
    return out;
}

WordMatrix::WordMatrix(std::vector<Word> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw Error("word matrix needs at least one row");
    }
    for (const Word& r : rows_) {
        if (r.size() != rows_.front().size()) {
            throw LengthMismatch("matrix rows have different lengths");
        }
        if (!(r.alphabet() == rows_.front().alphabet())) {
            throw AlphabetMismatch();
        }
    }
}

std::vector<Letter> WordMatrix::column(std::size_t j) const {
    std::vector<Letter> col;
    col.reserve(rows_.size());
    for (const Word& r : rows_) {
        col.push_back(r[j]);
    }
    return col;
}

bool WordMatrix::is_constant_column(std::size_t j, Letter c) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Word& r) { return r[j] == c; });
}

WordMatrix WordMatrix::rotated(std::size_t shift) const {
    std::vector<Word> out;
    out.reserve(rows_.size());
    for (const Word& r : rows_) {
        out.push_back(r.rotated(shift));
    }
    return WordMatrix(std::move(out));
}

namespace detail {

std::optional<std::size_t> find_rotation(std::span<const Letter> w1, std::span<const Letter> w2) {
    if (w1.size() != w2.size()) {
        return std::nullopt;
    }
    const std::size_t n = w1.size();
    if (n == 0) {
        return 0;
    }
    // Drop the last letter of the doubled word so every match starts below n.
    std::vector<Letter> doubled;
    doubled.reserve(2 * n - 1);
    doubled.insert(doubled.end(), w1.begin(), w1.end());
    doubled.insert(doubled.end(), w1.begin(), w1.end() - 1);
    const std::boyer_moore_searcher searcher(w2.begin(), w2.end());
    const auto it = std::search(doubled.begin(), doubled.end(), searcher);
    if (it == doubled.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - doubled.begin());
}

}  // namespace detail

CyclicMatch cyclically_equal(const Word& w1, const Word& w2) {
    if (!(w1.alphabet() == w2.alphabet())) {
        return {};
    }
    const auto shift = detail::find_rotation(w1.letters(), w2.letters());
    if (!shift) {
        return {};
    }
    return {true, *shift};
}

bool all_cyclically_equal(const WordMatrix& m) {
    const Word& first = m.row(0);
    return std::all_of(m.rows().begin() + 1, m.rows().end(),
                       [&](const Word& r) { return cyclically_equal(first, r).equal; });
}

std::size_t rotation_class_size(const Word& w) {
    if (w.empty()) {
        throw EmptyWord();
    }
    const auto letters = w.letters();
    // The smallest t in [1, n] with w == rotation by t is the period.
    std::vector<Letter> doubled(letters.begin(), letters.end());
    doubled.insert(doubled.end(), letters.begin(), letters.end());
    const std::boyer_moore_searcher searcher(letters.begin(), letters.end());
    const auto it = std::search(doubled.begin() + 1, doubled.end(), searcher);
    return static_cast<std::size_t>(it - doubled.begin());
}

Word canonical_rotation(const Word& w) {
    return w.rotated(least_rotation<Letter>(w.letters()));
}

}  // namespace cycleq
