// Simultaneous insertion schedules, constant-column deletion and the lifting
// construction that carries an equalizing schedule back through deletions.

#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cycleq/word.hpp"

namespace cycleq {

/// Non-empty subset of an alphabet's letters, kept sorted.
class Delta {
public:
    /// Throws Error if `letters` is empty.
    explicit Delta(std::vector<Letter> letters);

    /// Every letter of the alphabet.
    static Delta full(const Alphabet& alphabet);

    /// Parses display symbols, e.g. "01". Throws UnknownSymbol / Error.
    static Delta parse(std::string_view symbols, const Alphabet& alphabet);

    bool contains(Letter l) const noexcept;
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Delta united(const Delta& other) const;
    std::string str(const Alphabet& alphabet) const;

    bool operator==(const Delta&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Words u_0 .. u_n inserted into every row of an n-column matrix: row
/// a_0 a_1 .. a_{n-1} becomes u_0 a_0 u_1 a_1 .. u_{n-1} a_{n-1} u_n.
/// Gap g sits before letter g; gap n is after the last letter.
class InsertionSchedule {
public:
    InsertionSchedule(std::size_t base_length, Delta delta);

    std::size_t base_length() const noexcept { return gaps_.size() - 1; }
    const Delta& delta() const noexcept { return delta_; }
    const std::vector<Letter>& gap(std::size_t g) const { return gaps_.at(g); }
    const std::vector<std::vector<Letter>>& gaps() const noexcept { return gaps_; }

    /// Appends letters to gap g. Throws LetterOutsideDelta / Error on bad gap.
    void insert(std::size_t g, std::span<const Letter> letters);
    void insert(std::size_t g, Letter letter, std::size_t count = 1);

    std::size_t total_inserted() const noexcept;
    std::size_t result_length() const noexcept { return base_length() + total_inserted(); }
    bool empty() const noexcept { return total_inserted() == 0; }

    /// u_0 is empty.
    bool is_normal() const noexcept { return gaps_.front().empty(); }

    /// Moves u_0 behind u_n. Cyclic equality of the result rows is unchanged.
    InsertionSchedule normalized() const;

    bool operator==(const InsertionSchedule&) const = default;

private:
    Delta delta_;
    std::vector<std::vector<Letter>> gaps_;
};

/// Deleted columns of one letter: counts[g] columns sat at gap g of the reduced matrix.
struct DeletionStage {
    Letter letter = 0;
    std::vector<std::size_t> counts;
    /// Longest cyclic run of deleted columns, i.e. max(counts[1..n-1], counts[0] + counts[n]).
    std::size_t nu = 0;

    std::size_t reduced_length() const noexcept { return counts.size() - 1; }
    std::size_t deleted() const noexcept;
    std::size_t original_length() const noexcept { return reduced_length() + deleted(); }
};

/// Deletion stages in the order they were applied to the original matrix.
struct DeletionRecord {
    std::vector<DeletionStage> stages;

    /// Rebuilds the original matrix from the fully reduced one.
    /// Throws InconsistentRecord if stage shapes do not chain.
    WordMatrix replay(const WordMatrix& reduced) const;

    /// Throws InconsistentRecord unless stage i's original length equals stage
    /// i-1's reduced length for every i.
    void check_chain() const;
};

/// Applies s to every row. Throws LengthMismatch or LetterOutsideDelta.
WordMatrix apply_schedule(const WordMatrix& m, const InsertionSchedule& s);

/// Removes every column equal to (c,...,c).
std::pair<WordMatrix, DeletionStage> delete_constant_columns(const WordMatrix& m, Letter c);

/// Applies constant-column deletion once per letter in `order`.
std::pair<WordMatrix, DeletionRecord> reduce(const WordMatrix& m, std::span<const Letter> order);

/// Follows every letter of every row with c^mu.
WordMatrix interleave_constant(const WordMatrix& m, Letter c, std::size_t mu);

/// Carries a schedule for the fully reduced matrix back to the original one.
///
/// Stages are undone last-deleted-first. For a stage deleting letter c with
/// run bound nu, every column b of the current blueprint becomes b c^nu; the
/// stage's deleted columns are then placed inside that padding, and the unused
/// padding stays as inserted c-columns. Leading deleted columns are served by
/// rotating trailing padding to the front, which keeps rows cyclically equal.
///
/// If the reduced matrix has no columns the original rows were identical and
/// the empty schedule is returned. Throws InconsistentRecord when the schedule
/// and record do not fit together.
InsertionSchedule lift_schedule(const InsertionSchedule& reduced_schedule,
                                const DeletionRecord& record);

/// True iff apply_schedule(m, s) has pairwise cyclically equal rows.
bool verify_schedule(const WordMatrix& m, const InsertionSchedule& s);

}  // namespace cycleq
