#include "cycleq/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace cycleq {

namespace {

struct Step {
    std::size_t parent = 0;  // index in the previous layer
    std::uint32_t gap = 0;
    Letter letter = 0;
};

struct State {
    std::vector<Letter> cells;  // rows concatenated, row-major
    std::size_t origin = 0;     // index into this layer's step list
};

Rows to_rows(const std::vector<Letter>& cells, std::size_t k) {
    const std::size_t len = cells.size() / k;
    Rows rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        rows[i].assign(cells.begin() + static_cast<std::ptrdiff_t>(i * len),
                       cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * len));
    }
    return rows;
}

std::string exact_key(const std::vector<Letter>& cells) {
    return std::string(cells.begin(), cells.end());
}

std::string canonical_key(const std::vector<Letter>& cells, std::size_t k) {
    const std::size_t len = cells.size() / k;
    std::vector<std::string> columns(len, std::string(k, '\0'));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            columns[j][i] = static_cast<char>(cells[i * len + j]);
        }
    }
    const std::size_t r = least_rotation<std::string>(columns);
    std::string key;
    key.reserve(cells.size());
    for (std::size_t j = 0; j < len; ++j) {
        key += columns[(j + r) % len];
    }
    return key;
}

std::vector<Letter> insert_column(const std::vector<Letter>& cells, std::size_t k,
                                  std::size_t gap, Letter letter) {
    const std::size_t len = cells.size() / k;
    std::vector<Letter> out;
    out.reserve(cells.size() + k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = cells.begin() + static_cast<std::ptrdiff_t>(i * len);
        out.insert(out.end(), row, row + static_cast<std::ptrdiff_t>(gap));
        out.push_back(letter);
        out.insert(out.end(), row + static_cast<std::ptrdiff_t>(gap),
                   row + static_cast<std::ptrdiff_t>(len));
    }
    return out;
}

InsertionSchedule rebuild_schedule(std::size_t n, const Delta& delta,
                                   const std::vector<std::vector<Step>>& layers,
                                   std::size_t depth, std::size_t origin) {
    std::vector<Step> path;
    for (std::size_t d = depth; d > 0; --d) {
        const Step& s = layers[d][origin];
        path.push_back(s);
        origin = s.parent;
    }
    std::reverse(path.begin(), path.end());

    // -1 - letter marks an inserted column; non-negative values are original columns.
    std::vector<std::ptrdiff_t> tags(n);
    for (std::size_t j = 0; j < n; ++j) {
        tags[j] = static_cast<std::ptrdiff_t>(j);
    }
    for (const Step& s : path) {
        tags.insert(tags.begin() + s.gap, -1 - static_cast<std::ptrdiff_t>(s.letter));
    }
    InsertionSchedule schedule(n, delta);
    std::size_t gap = 0;
    for (std::ptrdiff_t t : tags) {
        if (t >= 0) {
            gap = static_cast<std::size_t>(t) + 1;
        } else {
            schedule.insert(gap, static_cast<Letter>(-1 - t));
        }
    }
    return schedule;
}

bool equal_letter_counts(const Rows& rows) {
    std::vector<std::size_t> first(256, 0);
    for (Letter l : rows.front()) {
        ++first[l];
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::vector<std::size_t> counts(256, 0);
        for (Letter l : rows[i]) {
            ++counts[l];
        }
        if (counts != first) {
            return false;
        }
    }
    return true;
}

}  // namespace

SearchGoal all_equal_goal(bool prune_letter_counts) {
    SearchGoal goal;
    goal.satisfied = [](const Rows& rows) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!detail::find_rotation(rows.front(), rows[i])) {
                return false;
            }
        }
        return true;
    };
    if (prune_letter_counts) {
        goal.feasible = equal_letter_counts;
    }
    return goal;
}

SearchOutcome search(const WordMatrix& m, const SearchConfig& cfg, const SearchGoal& goal) {
    for (Letter l : cfg.delta.letters()) {
        if (l >= m.alphabet().size()) {
            throw Error("insertion letter outside the alphabet");
        }
    }
    const std::size_t k = m.height();
    const std::size_t n = m.width();

    SearchOutcome outcome;
    outcome.bound = cfg.max_extra;

    std::vector<Letter> root;
    root.reserve(k * n);
    for (const Word& r : m.rows()) {
        root.insert(root.end(), r.letters().begin(), r.letters().end());
    }
    outcome.explored = 1;
    {
        const Rows rows = to_rows(root, k);
        if (goal.feasible && !goal.feasible(rows)) {
            return outcome;
        }
        if (goal.satisfied(rows)) {
            outcome.found = true;
            outcome.schedule = InsertionSchedule(n, cfg.delta);
            return outcome;
        }
    }
    if (n == 0) {
        // No gap is available in normal form; an empty word cannot grow.
        return outcome;
    }

    std::vector<std::vector<Step>> layers(1, std::vector<Step>(1));
    std::vector<State> frontier{State{std::move(root), 0}};

    for (std::size_t depth = 1; depth <= cfg.max_extra; ++depth) {
        std::vector<Step> steps;
        std::vector<State> next;
        std::unordered_set<std::string> seen;
        const std::size_t len = n + depth - 1;

        for (std::size_t p = 0; p < frontier.size(); ++p) {
            for (std::size_t gap = 1; gap <= len; ++gap) {
                for (Letter letter : cfg.delta.letters()) {
                    std::vector<Letter> cells = insert_column(frontier[p].cells, k, gap, letter);
                    if (cfg.dedup != Dedup::off) {
                        std::string key = cfg.dedup == Dedup::exact ? exact_key(cells)
                                                                    : canonical_key(cells, k);
                        if (!seen.insert(std::move(key)).second) {
                            continue;
                        }
                    }
                    ++outcome.explored;
                    if (cfg.state_cap && outcome.explored > *cfg.state_cap) {
                        throw BudgetExceeded(outcome.explored);
                    }
                    steps.push_back(Step{p, static_cast<std::uint32_t>(gap), letter});
                    if (goal.satisfied(to_rows(cells, k))) {
                        layers.push_back(std::move(steps));
                        outcome.found = true;
                        outcome.depth = depth;
                        outcome.schedule = rebuild_schedule(n, cfg.delta, layers, depth,
                                                            layers[depth].size() - 1);
                        return outcome;
                    }
                    next.push_back(State{std::move(cells), steps.size() - 1});
                }
            }
        }
        // Frontier parents are addressed by their position in this layer.
        std::vector<Step> ordered(next.size());
        for (std::size_t i = 0; i < next.size(); ++i) {
            ordered[i] = steps[next[i].origin];
            next[i].origin = i;
        }
        layers.push_back(std::move(ordered));
        frontier = std::move(next);
        if (frontier.empty()) {
            break;
        }
    }
    return outcome;
}

SearchOutcome search_equalizable(const WordMatrix& m, const SearchConfig& cfg) {
    return search(m, cfg, all_equal_goal(cfg.prune_letter_counts));
}

SearchOutcome search_min_schedule(const WordMatrix& m, const Delta& delta, std::size_t max_extra) {
    SearchConfig cfg{delta, max_extra};
    return search_equalizable(m, cfg);
}

Dedup parse_dedup(const std::string& text) {
    if (text == "off") {
        return Dedup::off;
    }
    if (text == "exact") {
        return Dedup::exact;
    }
    if (text == "canonical" || text == "rotation-canonical") {
        return Dedup::rotation_canonical;
    }
    throw FormatError("dedup must be off, exact or canonical");
}

}  // namespace cycleq
