// Constructive equalization of two equal-weight binary words.
//
// Pipeline: delete constant columns letter by letter, rotate the reduced
// complementary pair into alternating run form, repair slot consistency with
// constant-column insertions, then lift the schedule back to the original pair.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycleq/insertion.hpp"

namespace cycleq {

/// Row 0 = 1^{runs[0]} 0^{runs[1]} ... 0^{runs[2N-1]}, row 1 its complement,
/// after rotating the reduced matrix left by `rotation_offset` columns.
struct RunForm {
    std::vector<std::size_t> runs;
    std::size_t rotation_offset = 0;

    std::size_t pairs() const noexcept { return runs.size() / 2; }
};

/// Block shape of a pair under repair. Block i is nu[i] inserted constant
/// columns of letter (i even ? 1 : 0) followed by mu[i] complementary columns
/// whose row-0 letter is (i even ? 1 : 0).
struct AdmissiblePair {
    std::vector<std::size_t> nu;
    std::vector<std::size_t> mu;

    std::size_t blocks() const noexcept { return mu.size(); }
    WordMatrix words() const;
    std::size_t length() const noexcept;
};

struct SlotState {
    AdmissiblePair pair;
    /// Highest slot j such that slots 0..j all satisfy the consistency equation.
    std::optional<std::size_t> consistent_upto;
};

/// Throws NotTwoRows, NotBinary, HasConstantColumn, WeightMismatch, EmptyWord.
RunForm to_run_form(const WordMatrix& m);

/// Fresh state with every nu = 0 and mu = runs.
SlotState initial_state(const RunForm& form);

/// True iff nu[i] + mu[i] == mu[i+1] + nu[i+2] (indices mod 2N).
bool slot_consistent(const AdmissiblePair& pair, std::size_t slot);

/// Highest j with slots 0..j consistent, or nullopt if slot 0 is not.
std::optional<std::size_t> consistent_prefix(const AdmissiblePair& pair);

/// Throws ConsistencyAssertionFailed if some mu is 0 or the rows' weights differ.
void check_admissible(const AdmissiblePair& pair);

SlotState fix_slot0(SlotState state);

/// Requires consistency up to slot j-1, 1 <= j <= 2N-3.
SlotState fix_slot(SlotState state, std::size_t j);

struct ReducedEqualization {
    /// Addresses the gaps of the unrotated reduced matrix; may carry a
    /// non-empty u_0 so that `equalized` keeps the run-form column order.
    InsertionSchedule schedule;
    WordMatrix equalized;
};

/// Slot algorithm on a reduced pair (every column (10) or (01)).
ReducedEqualization equalize_reduced(const WordMatrix& m);

enum class DeletionOrder { ones_first, zeros_first, minimize };

/// "10" = delete 1-columns first, "01" = 0-columns first, "min" = try both.
DeletionOrder parse_deletion_order(const std::string& text);
std::string to_string(DeletionOrder order);

struct EqualizeResult {
    InsertionSchedule schedule;
    WordMatrix equalized;
    std::size_t final_length = 0;
    /// "10" or "01"; empty when the words were identical.
    std::string deletion_order;
    /// Reduced pair and its equalization, kept for auditing.
    std::optional<WordMatrix> reduced;
    std::optional<WordMatrix> reduced_equalized;
};

/// Equalizes two binary words of equal length and weight.
/// Throws WeightMismatch, LengthMismatch, NotBinary.
EqualizeResult equalize_two_binary(const Word& w1, const Word& w2,
                                   DeletionOrder order = DeletionOrder::minimize);

}  // namespace cycleq
