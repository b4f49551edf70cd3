#include "cycleq/cards.hpp"

#include <algorithm>
#include <cstdlib>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

namespace cycleq {

CardSequence CardSequence::face_down(Word cards) {
    std::vector<Face> faces(cards.size(), Face::down);
    return CardSequence{std::move(cards), std::move(faces)};
}

std::string CardSequence::render(bool card_faces) const {
    std::string out;
    for (std::size_t i = 0; i < cards.size(); ++i) {
        if (faces[i] == Face::down) {
            out += '?';
        } else if (card_faces) {
            out += cards[i] == 0 ? "♣" : "♥";
        } else {
            out += cards.alphabet().symbol(cards[i]);
        }
    }
    return out;
}

CutSource seeded_cut_source(std::uint64_t seed) {
    return [gen = std::mt19937_64(seed)](std::size_t n) mutable -> std::size_t {
        const auto range = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - range) % range;
        std::uint64_t x = gen();
        while (x < threshold) {
            x = gen();
        }
        return static_cast<std::size_t>(x % range);
    };
}

CutSource fixed_cut_source(std::size_t r) {
    return [r](std::size_t n) { return r % n; };
}

CardSequence random_cut(const CardSequence& seq, const CutSource& rng) {
    if (seq.cards.empty()) {
        throw EmptyWord();
    }
    for (std::size_t i = 0; i < seq.faces.size(); ++i) {
        if (seq.faces[i] == Face::up) {
            throw FaceUpCard(i);
        }
    }
    const std::size_t r = rng(seq.cards.size()) % seq.cards.size();
    return CardSequence::face_down(seq.cards.rotated(r));
}

namespace {

Word binary_word(std::vector<Letter> letters) {
    return Word(Alphabet::binary(), std::move(letters));
}

}  // namespace

TrickResult five_card_trick(bool a, bool b, const CutSource& rng) {
    TrickResult result;
    auto& trace = result.trace;
    const auto A = static_cast<Letter>(a);
    const auto B = static_cast<Letter>(b);

    CardSequence seq = CardSequence::face_down(binary_word({A, static_cast<Letter>(1 - A), B,
                                                            static_cast<Letter>(1 - B)}));
    trace.steps.push_back({"commit a, b", seq.render()});

    seq = CardSequence::face_down(binary_word({static_cast<Letter>(1 - A), A, B,
                                               static_cast<Letter>(1 - B)}));
    trace.steps.push_back({"swap the cards of a", seq.render()});

    seq = CardSequence::face_down(binary_word({static_cast<Letter>(1 - A), A, 1, B,
                                               static_cast<Letter>(1 - B)}));
    trace.steps.push_back({"insert a heart in the center", seq.render()});

    seq = random_cut(seq, rng);
    trace.steps.push_back({"random cut", seq.render()});

    std::fill(seq.faces.begin(), seq.faces.end(), Face::up);
    trace.steps.push_back({"open all cards", seq.render()});

    trace.opened = seq.cards;
    const Word right_case = binary_word({0, 1, 1, 1, 0});
    result.output = cyclically_equal(right_case, seq.cards).equal ? 1 : 0;
    trace.output = result.output;
    return result;
}

TrickResult five_card_trick(bool a, bool b, std::uint64_t seed) {
    TrickResult result = five_card_trick(a, b, seeded_cut_source(seed));
    result.trace.seed = seed;
    return result;
}

Distribution open_distribution(const Word& s) {
    const std::size_t period = rotation_class_size(s);
    Distribution dist;
    for (std::size_t r = 0; r < period; ++r) {
        dist.emplace(s.rotated(r), Probability(1, static_cast<std::int64_t>(period)));
    }
    return dist;
}

ErasureResult erase_check(const std::vector<Word>& words, const SearchConfig& cfg) {
    const WordMatrix m(words);
    ErasureResult result;
    result.search = search_equalizable(m, cfg);
    if (!result.search.found) {
        return result;
    }
    result.found = true;
    result.schedule = result.search.schedule;
    const WordMatrix laid_out = apply_schedule(m, *result.schedule);
    result.distribution = open_distribution(laid_out.row(0));
    for (const Word& s : laid_out.rows()) {
        if (open_distribution(s) != result.distribution) {
            throw Error("opened distributions differ for cyclically equal words");
        }
    }
    return result;
}

BooleanFunction BooleanFunction::and_of(std::size_t n) {
    BooleanFunction f{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
    f.table.back() = 1;
    return f;
}

BooleanFunction BooleanFunction::xor_of(std::size_t n) {
    BooleanFunction f{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
    for (std::size_t x = 0; x < f.table.size(); ++x) {
        f.table[x] = static_cast<std::uint8_t>(std::popcount(x) % 2);
    }
    return f;
}

BooleanFunction BooleanFunction::equality(std::size_t n) {
    BooleanFunction f{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
    f.table.front() = 1;
    f.table.back() = 1;
    return f;
}

BooleanFunction BooleanFunction::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string name = spec.substr(0, colon);
        const std::string arity_text = spec.substr(colon + 1);
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(arity_text, &used);
            if (used != arity_text.size()) {
                throw FormatError("bad arity");
            }
        } catch (const std::logic_error&) {
            throw FormatError("bad arity in function spec \"" + spec + "\"");
        }
        if (n < 1 || n > 16) {
            throw FormatError("function arity must be in 1..16");
        }
        if (name == "and") {
            return and_of(n);
        }
        if (name == "xor") {
            return xor_of(n);
        }
        if (name == "eq") {
            return equality(n);
        }
        throw FormatError("unknown function \"" + name + "\" (expected and, xor or eq)");
    }
    const std::size_t size = spec.size();
    if (size < 2 || (size & (size - 1)) != 0 ||
        spec.find_first_not_of("01") != std::string::npos) {
        throw FormatError("truth table must be a 0/1 string of length 2^n, n >= 1");
    }
    BooleanFunction f;
    f.arity = static_cast<std::size_t>(std::countr_zero(size));
    for (char c : spec) {
        f.table.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return f;
}

ClassCounts count_nb(const BooleanFunction& f) {
    ClassCounts c;
    for (auto v : f.table) {
        (v == 0 ? c.zeros : c.ones) += 1;
    }
    return c;
}

std::size_t card_lower_bound(const BooleanFunction& f) {
    const ClassCounts c = count_nb(f);
    return std::max(c.zeros, c.ones);
}

ScfoProtocol ScfoProtocol::five_card_trick() {
    ScfoProtocol p;
    p.n = 2;
    p.perm = {1, 0, 2, 3};
    p.schedule = InsertionSchedule(4, Delta({0, 1}));
    p.schedule.insert(2, Letter{1});
    p.z0 = binary_word({1, 0, 1, 0, 1});
    p.z1 = binary_word({0, 1, 1, 1, 0});
    return p;
}

Word commitment_word(std::size_t n, std::size_t x) {
    std::vector<Letter> letters;
    letters.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto bit = static_cast<Letter>((x >> i) & 1U);
        letters.push_back(bit);
        letters.push_back(static_cast<Letter>(1 - bit));
    }
    return binary_word(std::move(letters));
}

namespace {

bool is_permutation_of(const std::vector<std::size_t>& perm, std::size_t m) {
    if (perm.size() != m) {
        return false;
    }
    std::vector<bool> seen(m, false);
    for (std::size_t v : perm) {
        if (v >= m || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Word permuted(const Word& w, const std::vector<std::size_t>& perm) {
    std::vector<Letter> out;
    out.reserve(perm.size());
    for (std::size_t src : perm) {
        out.push_back(w[src]);
    }
    return binary_word(std::move(out));
}

}  // namespace

Word scfo_build_s(const ScfoProtocol& p, std::size_t x) {
    if (!is_permutation_of(p.perm, 2 * p.n)) {
        throw FormatError("perm is not a permutation of 0.." + std::to_string(2 * p.n - 1));
    }
    const Word y = permuted(commitment_word(p.n, x), p.perm);
    return apply_schedule(WordMatrix({y}), p.schedule).row(0);
}

Word scfo_build_s(const ScfoProtocol& p, const std::vector<int>& bits) {
    if (bits.size() != p.n) {
        throw ArityMismatch(p.n, bits.size());
    }
    std::size_t x = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw FormatError("input bits must be 0 or 1");
        }
        x |= static_cast<std::size_t>(bits[i]) << i;
    }
    return scfo_build_s(p, x);
}

ScfoVerdict scfo_verify(const ScfoProtocol& p, const BooleanFunction& f) {
    if (p.n != f.arity) {
        throw ArityMismatch(f.arity, p.n);
    }
    ScfoVerdict verdict;
    if (!is_permutation_of(p.perm, 2 * p.n) || p.schedule.base_length() != 2 * p.n) {
        verdict.violation =
            ScfoViolation{ViolationKind::bad_protocol, std::nullopt,
                          "perm or schedule does not match 2n = " + std::to_string(2 * p.n)};
        return verdict;
    }
    if (cyclically_equal(p.z0, p.z1).equal) {
        verdict.violation = ScfoViolation{ViolationKind::z_words_cyclically_equal, std::nullopt,
                                          "z0 and z1 are cyclically equal"};
        return verdict;
    }
    const std::size_t inputs = std::size_t{1} << p.n;
    std::size_t cards = 0;
    for (std::size_t x = 0; x < inputs; ++x) {
        const Word s = scfo_build_s(p, x);
        cards = s.size();
        const Word& z = f(x) == 0 ? p.z0 : p.z1;
        if (!cyclically_equal(s, z).equal) {
            verdict.violation = ScfoViolation{
                ViolationKind::mismatch, x,
                "s(x) = " + s.str() + " is not cyclically equal to z" + std::to_string(f(x))};
            return verdict;
        }
    }
    verdict.ok = true;
    verdict.card_count = cards;
    if (cards < card_lower_bound(f)) {
        throw ConsistencyAssertionFailed("verified protocol uses " + std::to_string(cards) +
                                         " cards, below the lower bound " +
                                         std::to_string(card_lower_bound(f)));
    }
    return verdict;
}

std::vector<std::size_t> unrank_permutation(std::size_t m, std::uint64_t rank) {
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::uint64_t> fact(m + 1, 1);
    for (std::size_t i = 1; i <= m; ++i) {
        fact[i] = fact[i - 1] * i;
    }
    std::vector<std::size_t> perm;
    perm.reserve(m);
    for (std::size_t i = m; i > 0; --i) {
        const std::uint64_t idx = rank / fact[i - 1];
        rank %= fact[i - 1];
        perm.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return perm;
}

std::size_t default_threads() {
    if (const char* env = std::getenv("CYCLEQUAL_THREADS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::logic_error&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct PermOutcome {
    bool found = false;
    bool capped = false;
    std::optional<InsertionSchedule> schedule;
};

// Rows s(x) for every input x under one permutation, grouped by output class.
PermOutcome search_permutation(const BooleanFunction& f, const std::vector<std::size_t>& perm,
                               const ScfoSearchConfig& cfg) {
    const std::size_t n = f.arity;
    const std::size_t inputs = std::size_t{1} << n;
    std::vector<Word> rows;
    rows.reserve(inputs);
    for (std::size_t x = 0; x < inputs; ++x) {
        rows.push_back(permuted(commitment_word(n, x), perm));
    }
    std::vector<std::size_t> zero_class;
    std::vector<std::size_t> one_class;
    for (std::size_t x = 0; x < inputs; ++x) {
        (f(x) == 0 ? zero_class : one_class).push_back(x);
    }

    const auto class_equal = [](const Rows& r, const std::vector<std::size_t>& cls) {
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (!detail::find_rotation(r[cls.front()], r[cls[i]])) {
                return false;
            }
        }
        return true;
    };
    SearchGoal goal;
    goal.satisfied = [&](const Rows& r) {
        if (!class_equal(r, zero_class) || !class_equal(r, one_class)) {
            return false;
        }
        if (zero_class.empty() || one_class.empty()) {
            return true;
        }
        return !detail::find_rotation(r[zero_class.front()], r[one_class.front()]);
    };

    SearchConfig sc{Delta({0, 1}), cfg.max_cards - 2 * n};
    sc.state_cap = cfg.state_cap_per_perm;
    sc.prune_letter_counts = false;
    PermOutcome out;
    try {
        const SearchOutcome o = search(WordMatrix(std::move(rows)), sc, goal);
        out.found = o.found;
        out.schedule = o.schedule;
    } catch (const BudgetExceeded&) {
        out.capped = true;
    }
    return out;
}

ScfoProtocol build_protocol(const BooleanFunction& f, std::vector<std::size_t> perm,
                            InsertionSchedule schedule) {
    ScfoProtocol p;
    p.n = f.arity;
    p.perm = std::move(perm);
    p.schedule = std::move(schedule);
    const std::size_t inputs = std::size_t{1} << p.n;
    std::optional<Word> reps[2];
    for (std::size_t x = 0; x < inputs; ++x) {
        if (!reps[f(x)]) {
            reps[f(x)] = scfo_build_s(p, x);
        }
    }
    const std::size_t len = p.schedule.result_length();
    // A constant function leaves one class empty; any word of another weight works.
    for (auto& rep : reps) {
        if (!rep) {
            rep = binary_word(std::vector<Letter>(len, 0));
        }
    }
    p.z0 = *reps[0];
    p.z1 = *reps[1];
    return p;
}

struct Chunk {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t done = 0;  // ranks completed from lo
    std::vector<std::uint64_t> hits;
    std::vector<std::uint64_t> capped;
};

}  // namespace

ScfoSearchResult scfo_search(const BooleanFunction& f, const ScfoSearchConfig& cfg) {
    const std::size_t m = 2 * f.arity;
    if (f.arity == 0 || m > 20) {
        throw Error("scfo_search supports arities 1..10");
    }
    if (cfg.max_cards < m) {
        throw Error("max_cards must be at least 2n = " + std::to_string(m));
    }
    ScfoSearchResult result;
    result.total = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        result.total *= i;
    }
    const std::uint64_t start = std::min(cfg.start_rank, result.total);

    constexpr std::uint64_t chunk_size = 32;
    std::vector<Chunk> chunks;
    for (std::uint64_t lo = start; lo < result.total; lo += chunk_size) {
        Chunk chunk;
        chunk.lo = lo;
        chunk.hi = std::min(lo + chunk_size, result.total);
        chunks.push_back(std::move(chunk));
    }

    std::atomic<std::size_t> next_chunk{0};
    // Lowest chunk index with a hit; later chunks need not be examined.
    std::atomic<std::size_t> best_chunk{chunks.size()};

    const auto worker = [&] {
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= chunks.size() || (!cfg.exhaustive && c > best_chunk.load())) {
                return;
            }
            Chunk& chunk = chunks[c];
            std::vector<std::size_t> perm = unrank_permutation(m, chunk.lo);
            for (std::uint64_t r = chunk.lo; r < chunk.hi; ++r) {
                if (cfg.stop && cfg.stop->load()) {
                    return;
                }
                const PermOutcome o = search_permutation(f, perm, cfg);
                if (o.found) {
                    chunk.hits.push_back(r);
                }
                if (o.capped) {
                    chunk.capped.push_back(r);
                }
                ++chunk.done;
                if (o.found && !cfg.exhaustive) {
                    std::size_t cur = best_chunk.load();
                    while (c < cur && !best_chunk.compare_exchange_weak(cur, c)) {
                    }
                    break;
                }
                std::next_permutation(perm.begin(), perm.end());
            }
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, cfg.threads ? cfg.threads : default_threads());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    // Ordered reduction over the contiguous completed prefix.
    result.next_rank = start;
    std::optional<std::uint64_t> first;
    for (const Chunk& chunk : chunks) {
        const std::uint64_t reached = chunk.lo + chunk.done;
        for (std::uint64_t r : chunk.hits) {
            if (!first) {
                first = r;
            }
            ++result.solutions;
        }
        result.capped += chunk.capped.size();
        result.next_rank = reached;
        if (first && !cfg.exhaustive) {
            result.next_rank = *first + 1;
            break;
        }
        if (reached < chunk.hi) {
            break;
        }
    }
    result.examined = result.next_rank - start;
    result.interrupted = cfg.stop && cfg.stop->load() && result.next_rank < result.total &&
                         !(first && !cfg.exhaustive);
    if (first) {
        result.first_rank = *first;
        const std::vector<std::size_t> perm = unrank_permutation(m, *first);
        const PermOutcome o = search_permutation(f, perm, cfg);
        result.protocol = build_protocol(f, perm, *o.schedule);
    }
    return result;
}

}  // namespace cycleq
