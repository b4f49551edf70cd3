#include "cycleq/insertion.hpp"

#include <algorithm>
#include <numeric>

namespace cycleq {

Delta::Delta(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw Error("insertion letter set must be non-empty");
    }
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

Delta Delta::full(const Alphabet& alphabet) {
    std::vector<Letter> all(alphabet.size());
    std::iota(all.begin(), all.end(), Letter{0});
    return Delta(std::move(all));
}

Delta Delta::parse(std::string_view symbols, const Alphabet& alphabet) {
    const Word w = parse_word(symbols, alphabet);
    return Delta(std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

bool Delta::contains(Letter l) const noexcept {
    return std::binary_search(letters_.begin(), letters_.end(), l);
}

Delta Delta::united(const Delta& other) const {
    std::vector<Letter> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return Delta(std::move(all));
}

std::string Delta::str(const Alphabet& alphabet) const {
    std::string out;
    for (Letter l : letters_) {
        out.push_back(alphabet.symbol(l));
    }
    return out;
}

InsertionSchedule::InsertionSchedule(std::size_t base_length, Delta delta)
    : delta_(std::move(delta)), gaps_(base_length + 1) {}

void InsertionSchedule::insert(std::size_t g, std::span<const Letter> letters) {
    if (g >= gaps_.size()) {
        throw Error("gap " + std::to_string(g) + " out of range [0, " +
                    std::to_string(base_length()) + "]");
    }
    for (Letter l : letters) {
        if (!delta_.contains(l)) {
            throw LetterOutsideDelta(g, static_cast<char>('0' + l));
        }
    }
    gaps_[g].insert(gaps_[g].end(), letters.begin(), letters.end());
}

void InsertionSchedule::insert(std::size_t g, Letter letter, std::size_t count) {
    const std::vector<Letter> run(count, letter);
    insert(g, run);
}

std::size_t InsertionSchedule::total_inserted() const noexcept {
    std::size_t total = 0;
    for (const auto& u : gaps_) {
        total += u.size();
    }
    return total;
}

InsertionSchedule InsertionSchedule::normalized() const {
    InsertionSchedule out = *this;
    auto& last = out.gaps_.back();
    last.insert(last.end(), out.gaps_.front().begin(), out.gaps_.front().end());
    if (out.gaps_.size() > 1) {
        out.gaps_.front().clear();
    }
    return out;
}

std::size_t DeletionStage::deleted() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

void DeletionRecord::check_chain() const {
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i].counts.empty()) {
            throw InconsistentRecord("stage " + std::to_string(i) + " has no gap counts");
        }
        if (i > 0 && stages[i].original_length() != stages[i - 1].reduced_length()) {
            throw InconsistentRecord("stage " + std::to_string(i) + " expects " +
                                     std::to_string(stages[i].original_length()) +
                                     " columns but stage " + std::to_string(i - 1) + " left " +
                                     std::to_string(stages[i - 1].reduced_length()));
        }
    }
}

namespace {

// Inserts counts[g] copies of column (c,...,c) at each gap g.
WordMatrix reinsert(const WordMatrix& m, const DeletionStage& stage) {
    if (stage.reduced_length() != m.width()) {
        throw InconsistentRecord("stage expects " + std::to_string(stage.reduced_length()) +
                                 " reduced columns, matrix has " + std::to_string(m.width()));
    }
    std::vector<Word> rows;
    rows.reserve(m.height());
    for (const Word& r : m.rows()) {
        std::vector<Letter> out;
        out.reserve(stage.original_length());
        for (std::size_t g = 0; g <= r.size(); ++g) {
            out.insert(out.end(), stage.counts[g], stage.letter);
            if (g < r.size()) {
                out.push_back(r[g]);
            }
        }
        rows.emplace_back(r.alphabet(), std::move(out));
    }
    return WordMatrix(std::move(rows));
}

std::size_t cyclic_run_bound(const std::vector<std::size_t>& counts) {
    const std::size_t n = counts.size() - 1;
    if (n == 0) {
        return counts[0];
    }
    std::size_t nu = counts[0] + counts[n];
    for (std::size_t g = 1; g < n; ++g) {
        nu = std::max(nu, counts[g]);
    }
    return nu;
}

}  // namespace

WordMatrix DeletionRecord::replay(const WordMatrix& reduced) const {
    check_chain();
    WordMatrix m = reduced;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        m = reinsert(m, *it);
    }
    return m;
}

WordMatrix apply_schedule(const WordMatrix& m, const InsertionSchedule& s) {
    if (s.base_length() != m.width()) {
        throw LengthMismatch("schedule base length " + std::to_string(s.base_length()) +
                             " vs matrix width " + std::to_string(m.width()));
    }
    for (std::size_t g = 0; g <= s.base_length(); ++g) {
        for (Letter l : s.gap(g)) {
            if (!s.delta().contains(l) || l >= m.alphabet().size()) {
                throw LetterOutsideDelta(
                    g, l < m.alphabet().size() ? m.alphabet().symbol(l) : '?');
            }
        }
    }
    std::vector<Word> rows;
    rows.reserve(m.height());
    for (const Word& r : m.rows()) {
        std::vector<Letter> out;
        out.reserve(s.result_length());
        for (std::size_t g = 0; g <= r.size(); ++g) {
            out.insert(out.end(), s.gap(g).begin(), s.gap(g).end());
            if (g < r.size()) {
                out.push_back(r[g]);
            }
        }
        rows.emplace_back(r.alphabet(), std::move(out));
    }
    return WordMatrix(std::move(rows));
}

std::pair<WordMatrix, DeletionStage> delete_constant_columns(const WordMatrix& m, Letter c) {
    DeletionStage stage;
    stage.letter = c;
    stage.counts.push_back(0);
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < m.width(); ++j) {
        if (m.is_constant_column(j, c)) {
            ++stage.counts.back();
        } else {
            kept.push_back(j);
            stage.counts.push_back(0);
        }
    }
    stage.nu = cyclic_run_bound(stage.counts);

    std::vector<Word> rows;
    rows.reserve(m.height());
    for (const Word& r : m.rows()) {
        std::vector<Letter> out;
        out.reserve(kept.size());
        for (std::size_t j : kept) {
            out.push_back(r[j]);
        }
        rows.emplace_back(r.alphabet(), std::move(out));
    }
    return {WordMatrix(std::move(rows)), std::move(stage)};
}

std::pair<WordMatrix, DeletionRecord> reduce(const WordMatrix& m, std::span<const Letter> order) {
    WordMatrix current = m;
    DeletionRecord record;
    for (Letter c : order) {
        auto [next, stage] = delete_constant_columns(current, c);
        current = std::move(next);
        record.stages.push_back(std::move(stage));
    }
    return {std::move(current), std::move(record)};
}

WordMatrix interleave_constant(const WordMatrix& m, Letter c, std::size_t mu) {
    std::vector<Word> rows;
    rows.reserve(m.height());
    for (const Word& r : m.rows()) {
        std::vector<Letter> out;
        out.reserve(r.size() * (mu + 1));
        for (Letter a : r.letters()) {
            out.push_back(a);
            out.insert(out.end(), mu, c);
        }
        rows.emplace_back(r.alphabet(), std::move(out));
    }
    return WordMatrix(std::move(rows));
}

namespace {

// One column of a lifted blueprint: either an image of a base column or an
// inserted constant column.
struct Cell {
    bool base = false;
    std::size_t index = 0;
    Letter letter = 0;
};

std::vector<Cell> cells_of(const InsertionSchedule& s) {
    std::vector<Cell> cells;
    cells.reserve(s.result_length());
    for (std::size_t g = 0; g <= s.base_length(); ++g) {
        for (Letter l : s.gap(g)) {
            cells.push_back({false, 0, l});
        }
        if (g < s.base_length()) {
            cells.push_back({true, g, 0});
        }
    }
    return cells;
}

std::vector<Cell> undo_stage(const std::vector<Cell>& cells, const DeletionStage& stage,
                             std::size_t stage_index) {
    const std::size_t nq = stage.reduced_length();
    const std::size_t nu = stage.nu;
    const auto fail = [&](const std::string& what) {
        return InconsistentRecord("stage " + std::to_string(stage_index) + ": " + what);
    };
    if (nu < cyclic_run_bound(stage.counts)) {
        throw fail("run bound " + std::to_string(nu) + " below the longest deleted run");
    }

    // Where each reduced column and each gap's deleted columns sit in the
    // pre-deletion matrix.
    std::vector<std::size_t> kept_at(nq);
    std::vector<std::size_t> deleted_from(nq + 1);
    std::size_t pos = 0;
    for (std::size_t g = 0; g <= nq; ++g) {
        deleted_from[g] = pos;
        pos += stage.counts[g];
        if (g < nq) {
            kept_at[g] = pos++;
        }
    }

    std::vector<Cell> out;
    out.reserve(cells.size() * (nu + 1));
    std::vector<std::size_t> placed(nq, 0);
    std::size_t seen = 0;
    for (const Cell& cell : cells) {
        if (cell.base) {
            if (cell.index >= nq || cell.index != seen) {
                throw fail("blueprint base columns out of order");
            }
            placed[seen++] = out.size();
            out.push_back({true, kept_at[cell.index], 0});
        } else {
            out.push_back(cell);
        }
        out.insert(out.end(), nu, Cell{false, 0, stage.letter});
    }
    if (seen != nq) {
        throw fail("blueprint has " + std::to_string(seen) + " base columns, stage expects " +
                   std::to_string(nq));
    }
    if (nq == 0) {
        throw fail("nothing left after deletion");
    }

    // Deleted columns between two kept ones go into the padding of the left one.
    for (std::size_t g = 1; g <= nq; ++g) {
        for (std::size_t t = 0; t < stage.counts[g]; ++t) {
            out[placed[g - 1] + 1 + t] = Cell{true, deleted_from[g] + t, 0};
        }
    }
    // Leading deleted columns take the tail of the final padding run.
    const std::size_t lead = stage.counts[0];
    if (lead > 0) {
        for (std::size_t t = out.size() - lead; t < out.size(); ++t) {
            if (out[t].base || out[t].letter != stage.letter) {
                throw fail("no free padding for leading deleted columns");
            }
        }
        out.resize(out.size() - lead);
        std::vector<Cell> front(lead);
        for (std::size_t t = 0; t < lead; ++t) {
            front[t] = Cell{true, deleted_from[0] + t, 0};
        }
        out.insert(out.begin(), front.begin(), front.end());
    }
    return out;
}

}  // namespace

InsertionSchedule lift_schedule(const InsertionSchedule& reduced_schedule,
                                const DeletionRecord& record) {
    record.check_chain();
    if (record.stages.empty()) {
        return reduced_schedule;
    }
    if (reduced_schedule.base_length() != record.stages.back().reduced_length()) {
        throw InconsistentRecord("schedule base length " +
                                 std::to_string(reduced_schedule.base_length()) +
                                 " does not match reduced length " +
                                 std::to_string(record.stages.back().reduced_length()));
    }

    Delta delta = reduced_schedule.delta();
    for (const DeletionStage& stage : record.stages) {
        delta = delta.united(Delta({stage.letter}));
    }
    const std::size_t original_length = record.stages.front().original_length();

    if (reduced_schedule.base_length() == 0) {
        // Every column was constant, so all rows are already identical.
        return InsertionSchedule(original_length, delta);
    }

    std::vector<Cell> cells = cells_of(reduced_schedule);
    for (std::size_t i = record.stages.size(); i-- > 0;) {
        cells = undo_stage(cells, record.stages[i], i);
    }

    InsertionSchedule lifted(original_length, delta);
    std::size_t gap = 0;
    for (const Cell& cell : cells) {
        if (cell.base) {
            if (cell.index != gap) {
                throw InconsistentRecord("lifted base columns out of order");
            }
            ++gap;
        } else {
            lifted.insert(gap, cell.letter);
        }
    }
    if (gap != original_length) {
        throw InconsistentRecord("lifted blueprint misses original columns");
    }
    return lifted;
}

bool verify_schedule(const WordMatrix& m, const InsertionSchedule& s) {
    return all_cyclically_equal(apply_schedule(m, s));
}

}  // namespace cycleq
