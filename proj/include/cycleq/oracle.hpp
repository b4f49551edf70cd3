// Bounded breadth-first search for equalizing insertion schedules.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycleq/insertion.hpp"

namespace cycleq {

enum class Dedup {
    off,
    exact,
    /// Keys states on the least simultaneous rotation of all rows.
    rotation_canonical,
};

struct SearchConfig {
    Delta delta;
    /// Maximum number of inserted columns. The search is exhaustive up to it.
    std::size_t max_extra = 0;
    Dedup dedup = Dedup::exact;
    /// Throws BudgetExceeded once this many states were generated.
    std::optional<std::size_t> state_cap = 10'000'000;
    /// Reject up front when rows have different letter counts. Inserting
    /// constant columns never changes the differences, and cyclically equal
    /// words have equal counts, so this never changes the verdict.
    bool prune_letter_counts = true;
};

struct SearchOutcome {
    bool found = false;
    std::optional<InsertionSchedule> schedule;
    /// Number of states generated, including the root.
    std::size_t explored = 0;
    std::size_t bound = 0;
    /// Inserted columns in the returned schedule.
    std::size_t depth = 0;
};

/// Rows of a search state; all rows have equal length.
using Rows = std::vector<std::vector<Letter>>;

struct SearchGoal {
    std::function<bool(const Rows&)> satisfied;
    /// Checked on the root only. Must be a property that no sequence of
    /// constant-column insertions can turn from false to true.
    std::function<bool(const Rows&)> feasible;
};

/// Goal: all rows pairwise cyclically equal.
SearchGoal all_equal_goal(bool prune_letter_counts);

/// Breadth-first over insertion depth. Depth d holds every way of adding one
/// constant column (letter in delta, gap 1..current length) to a depth d-1
/// state, expanded in order gap, then letter. Returns the first goal state,
/// hence a minimum-depth schedule; schedules are in normal form.
SearchOutcome search(const WordMatrix& m, const SearchConfig& cfg, const SearchGoal& goal);

SearchOutcome search_equalizable(const WordMatrix& m, const SearchConfig& cfg);

/// Same as search_equalizable with exact dedup: the returned schedule has
/// the fewest inserted letters among all schedules within the bound.
SearchOutcome search_min_schedule(const WordMatrix& m, const Delta& delta, std::size_t max_extra);

Dedup parse_dedup(const std::string& text);

}  // namespace cycleq
