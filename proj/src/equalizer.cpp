#include "cycleq/equalizer.hpp"

#include <algorithm>
#include <numeric>

namespace cycleq {

namespace {

Letter block_letter(std::size_t i) { return i % 2 == 0 ? Letter{1} : Letter{0}; }

void require_binary_pair(const WordMatrix& m) {
    if (m.height() != 2) {
        throw NotTwoRows();
    }
    if (!m.alphabet().is_binary()) {
        throw NotBinary();
    }
}

}  // namespace

WordMatrix AdmissiblePair::words() const {
    std::vector<Letter> top;
    std::vector<Letter> bottom;
    for (std::size_t i = 0; i < blocks(); ++i) {
        const Letter x = block_letter(i);
        top.insert(top.end(), nu[i] + mu[i], x);
        bottom.insert(bottom.end(), nu[i], x);
        bottom.insert(bottom.end(), mu[i], static_cast<Letter>(1 - x));
    }
    const Alphabet binary = Alphabet::binary();
    return WordMatrix({Word(binary, std::move(top)), Word(binary, std::move(bottom))});
}

std::size_t AdmissiblePair::length() const noexcept {
    return std::accumulate(nu.begin(), nu.end(), std::size_t{0}) +
           std::accumulate(mu.begin(), mu.end(), std::size_t{0});
}

RunForm to_run_form(const WordMatrix& m) {
    require_binary_pair(m);
    const std::size_t n = m.width();
    if (n == 0) {
        throw EmptyWord();
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (m.row(0)[j] == m.row(1)[j]) {
            throw HasConstantColumn(j);
        }
    }
    const std::size_t w1 = hamming_weight(m.row(0));
    const std::size_t w2 = hamming_weight(m.row(1));
    if (w1 != w2) {
        throw WeightMismatch(w1, w2);
    }

    // Equal weights on complementary rows force both letters to occur in row 0.
    const Word& top = m.row(0);
    std::size_t offset = 0;
    while (!(top[offset] == 1 && top[(offset + n - 1) % n] == 0)) {
        ++offset;
    }
    const Word rotated = top.rotated(offset);

    RunForm form;
    form.rotation_offset = offset;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == 0 || rotated[j] != rotated[j - 1]) {
            form.runs.push_back(0);
        }
        ++form.runs.back();
    }
    return form;
}

SlotState initial_state(const RunForm& form) {
    SlotState state;
    state.pair.mu = form.runs;
    state.pair.nu.assign(form.runs.size(), 0);
    state.consistent_upto = consistent_prefix(state.pair);
    return state;
}

bool slot_consistent(const AdmissiblePair& pair, std::size_t slot) {
    const std::size_t b = pair.blocks();
    return pair.nu[slot % b] + pair.mu[slot % b] ==
           pair.mu[(slot + 1) % b] + pair.nu[(slot + 2) % b];
}

std::optional<std::size_t> consistent_prefix(const AdmissiblePair& pair) {
    std::optional<std::size_t> upto;
    for (std::size_t j = 0; j < pair.blocks() && slot_consistent(pair, j); ++j) {
        upto = j;
    }
    return upto;
}

void check_admissible(const AdmissiblePair& pair) {
    if (pair.nu.size() != pair.mu.size() || pair.blocks() == 0 || pair.blocks() % 2 != 0) {
        throw ConsistencyAssertionFailed("block arrays malformed");
    }
    if (std::any_of(pair.mu.begin(), pair.mu.end(), [](std::size_t x) { return x == 0; })) {
        throw ConsistencyAssertionFailed("complementary block of length 0");
    }
    // Constant blocks add equally to both rows, so weights agree iff the
    // complementary blocks balance.
    std::size_t even = 0;
    std::size_t odd = 0;
    for (std::size_t i = 0; i < pair.blocks(); ++i) {
        (i % 2 == 0 ? even : odd) += pair.mu[i];
    }
    if (even != odd) {
        throw ConsistencyAssertionFailed("row weights differ");
    }
}

namespace {

void check_upto(const SlotState& state, std::size_t j) {
    check_admissible(state.pair);
    for (std::size_t i = 0; i <= j; ++i) {
        if (!slot_consistent(state.pair, i)) {
            throw ConsistencyAssertionFailed("slot " + std::to_string(i) +
                                             " inconsistent after repairing slot " +
                                             std::to_string(j));
        }
    }
}

}  // namespace

SlotState fix_slot0(SlotState state) {
    auto& [nu, mu] = state.pair;
    check_admissible(state.pair);
    const std::size_t b = state.pair.blocks();
    if (mu[0] > mu[1]) {
        nu[2 % b] += mu[0] - mu[1];
    } else if (mu[0] < mu[1]) {
        nu[0] += mu[1] - mu[0];
    }
    check_upto(state, 0);
    state.consistent_upto = consistent_prefix(state.pair);
    return state;
}

SlotState fix_slot(SlotState state, std::size_t j) {
    auto& [nu, mu] = state.pair;
    const std::size_t b = state.pair.blocks();
    if (j < 1 || j + 3 > b) {
        throw ConsistencyAssertionFailed("slot " + std::to_string(j) + " outside 1.." +
                                         std::to_string(b) + "-3");
    }
    check_upto(state, j - 1);

    const auto lhs = static_cast<std::ptrdiff_t>(nu[j] + mu[j]);
    const auto rhs = static_cast<std::ptrdiff_t>(mu[j + 1] + nu[j + 2]);
    const std::ptrdiff_t k0 = lhs - rhs;
    const auto k = static_cast<std::size_t>(k0 < 0 ? -k0 : k0);
    if (k0 > 0) {
        nu[j + 2] += k;
    } else if (k0 < 0) {
        for (std::size_t i = j % 2; i <= j; i += 2) {
            nu[i] += k;
        }
    }
    check_upto(state, j);
    state.consistent_upto = consistent_prefix(state.pair);
    return state;
}

ReducedEqualization equalize_reduced(const WordMatrix& m) {
    const RunForm form = to_run_form(m);
    const std::size_t n = m.width();
    const std::size_t blocks = form.runs.size();

    SlotState state = fix_slot0(initial_state(form));
    if (form.pairs() >= 2) {
        for (std::size_t j = 1; j + 3 <= blocks; ++j) {
            state = fix_slot(std::move(state), j);
        }
    }
    // Consistency through slot 2N-3 must carry over to every slot.
    for (std::size_t j = 0; j < blocks; ++j) {
        if (!slot_consistent(state.pair, j)) {
            throw ConsistencyAssertionFailed("slot " + std::to_string(j) +
                                             " inconsistent after the final repair");
        }
    }

    InsertionSchedule schedule(n, Delta({0, 1}));
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < blocks; ++i) {
        if (state.pair.nu[i] > 0) {
            std::size_t g = run_start + form.rotation_offset;
            if (g > n) {
                g -= n;
            }
            schedule.insert(g, block_letter(i), state.pair.nu[i]);
        }
        run_start += form.runs[i];
    }

    WordMatrix equalized = apply_schedule(m, schedule);
    if (form.rotation_offset == 0 && !(equalized == state.pair.words())) {
        throw ConsistencyAssertionFailed("schedule does not reproduce the repaired pair");
    }
    if (!all_cyclically_equal(equalized)) {
        throw ConsistencyAssertionFailed("repaired pair is not cyclically equal");
    }
    return {std::move(schedule), std::move(equalized)};
}

DeletionOrder parse_deletion_order(const std::string& text) {
    if (text == "10") {
        return DeletionOrder::ones_first;
    }
    if (text == "01") {
        return DeletionOrder::zeros_first;
    }
    if (text == "min" || text == "minimize") {
        return DeletionOrder::minimize;
    }
    throw FormatError("deletion order must be 10, 01 or min, got \"" + text + "\"");
}

std::string to_string(DeletionOrder order) {
    switch (order) {
        case DeletionOrder::ones_first:
            return "10";
        case DeletionOrder::zeros_first:
            return "01";
        case DeletionOrder::minimize:
            return "min";
    }
    return "min";
}

namespace {

EqualizeResult equalize_with_order(const WordMatrix& m, DeletionOrder order) {
    const std::vector<Letter> letters =
        order == DeletionOrder::ones_first ? std::vector<Letter>{1, 0} : std::vector<Letter>{0, 1};
    auto [reduced, record] = reduce(m, letters);
    ReducedEqualization eq = equalize_reduced(reduced);
    InsertionSchedule lifted = lift_schedule(eq.schedule, record).normalized();
    WordMatrix equalized = apply_schedule(m, lifted);
    if (!all_cyclically_equal(equalized)) {
        throw ConsistencyAssertionFailed("lifted schedule does not equalize the original pair");
    }
    const std::size_t length = equalized.width();
    return EqualizeResult{std::move(lifted), std::move(equalized), length, to_string(order),
                          std::move(reduced), std::move(eq.equalized)};
}

}  // namespace

EqualizeResult equalize_two_binary(const Word& w1, const Word& w2, DeletionOrder order) {
    if (!w1.alphabet().is_binary() || !w2.alphabet().is_binary()) {
        throw NotBinary();
    }
    if (w1.size() != w2.size()) {
        throw LengthMismatch("words of length " + std::to_string(w1.size()) + " and " +
                             std::to_string(w2.size()));
    }
    const std::size_t wt1 = hamming_weight(w1);
    const std::size_t wt2 = hamming_weight(w2);
    if (wt1 != wt2) {
        throw WeightMismatch(wt1, wt2);
    }
    const WordMatrix m({w1, w2});
    if (w1 == w2) {
        return EqualizeResult{InsertionSchedule(w1.size(), Delta({0, 1})), m, w1.size(), "",
                              std::nullopt, std::nullopt};
    }
    if (order != DeletionOrder::minimize) {
        return equalize_with_order(m, order);
    }
    EqualizeResult best = equalize_with_order(m, DeletionOrder::ones_first);
    EqualizeResult other = equalize_with_order(m, DeletionOrder::zeros_first);
    if (other.final_length < best.final_length) {
        return other;
    }
    return best;
}

}  // namespace cycleq
