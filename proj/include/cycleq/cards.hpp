// Card-based protocols built on cyclic equality: random cuts, the five-card
// trick, information erasure and single-cut full-open (SCFO) protocols.

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cycleq/oracle.hpp"

namespace cycleq {

enum class Face { down, up };

struct CardSequence {
    Word cards;  // over {0 = club, 1 = heart}
    std::vector<Face> faces;

    static CardSequence face_down(Word cards);
    /// Cards with '?' for face-down positions.
    std::string render(bool card_faces = false) const;
};

/// Returns the cut amount r in [0, n) for a sequence of n cards.
using CutSource = std::function<std::size_t(std::size_t n)>;

/// Uniform cuts from a seeded 64-bit Mersenne Twister. Rejection sampling keeps
/// the mapping identical on every platform.
CutSource seeded_cut_source(std::uint64_t seed);

/// Always cuts by r (mod n). For exhaustive enumeration.
CutSource fixed_cut_source(std::size_t r);

/// (c_0..c_{n-1}) -> (c_r..c_{r+n-1}). Throws FaceUpCard or EmptyWord.
CardSequence random_cut(const CardSequence& seq, const CutSource& rng);

struct TraceStep {
    std::string operation;
    std::string sequence;
};

struct ProtocolTrace {
    std::vector<TraceStep> steps;
    std::optional<std::uint64_t> seed;
    Word opened;
    int output = 0;
};

struct TrickResult {
    int output = 0;
    ProtocolTrace trace;
};

/// Five-card AND: lay out (not a, a, 1, b, not b), cut, open all. Output 1 iff
/// the opened word is a rotation of 01110.
TrickResult five_card_trick(bool a, bool b, const CutSource& rng);
TrickResult five_card_trick(bool a, bool b, std::uint64_t seed);

using Probability = boost::rational<std::int64_t>;
using Distribution = std::map<Word, Probability>;

/// Exact distribution of the opened word after one random cut of s.
/// Throws EmptyWord.
Distribution open_distribution(const Word& s);

struct ErasureResult {
    bool found = false;
    std::optional<InsertionSchedule> schedule;
    /// Shared by every s(x) when found.
    Distribution distribution;
    SearchOutcome search;
};

/// Searches an insertion after which a random cut hides which word of S was
/// laid out. Throws Error on a differing distribution (never expected).
ErasureResult erase_check(const std::vector<Word>& words, const SearchConfig& cfg);

struct BooleanFunction {
    std::size_t arity = 0;
    /// table[x] with x_1 as the least significant bit of x.
    std::vector<std::uint8_t> table;

    /// "and:2", "xor:3", "eq:4", or a truth-table bitstring of length 2^n, LSB-first in x.
    static BooleanFunction parse(const std::string& spec);
    static BooleanFunction and_of(std::size_t n);
    static BooleanFunction xor_of(std::size_t n);
    static BooleanFunction equality(std::size_t n);

    int operator()(std::size_t x) const { return table.at(x); }
};

struct ClassCounts {
    std::size_t zeros = 0;
    std::size_t ones = 0;
};

ClassCounts count_nb(const BooleanFunction& f);

/// max(N_0, N_1): cards needed by any SCFO protocol for f.
std::size_t card_lower_bound(const BooleanFunction& f);

struct ScfoProtocol {
    std::size_t n = 0;
    /// y_i = (x_1, not x_1, ..., x_n, not x_n)[perm[i]].
    std::vector<std::size_t> perm;
    InsertionSchedule schedule{0, Delta({0, 1})};
    Word z0;
    Word z1;

    /// Five-card trick: perm (1,0,2,3), one heart after the second card.
    static ScfoProtocol five_card_trick();
};

/// The 2n-letter commitment word (x_1, not x_1, ..., x_n, not x_n) for input index x.
Word commitment_word(std::size_t n, std::size_t x);

/// Permuted commitments with the schedule applied. Throws ArityMismatch.
Word scfo_build_s(const ScfoProtocol& p, std::size_t x);
Word scfo_build_s(const ScfoProtocol& p, const std::vector<int>& bits);

enum class ViolationKind { z_words_cyclically_equal, mismatch, bad_protocol };

struct ScfoViolation {
    ViolationKind kind = ViolationKind::mismatch;
    std::optional<std::size_t> input;
    std::string detail;
};

struct ScfoVerdict {
    bool ok = false;
    std::size_t card_count = 0;
    std::optional<ScfoViolation> violation;
};

/// Checks z0 and z1 are not cyclically equal and s(x) ~ z_{f(x)} for every x.
/// Throws ArityMismatch if p.n != f.arity.
ScfoVerdict scfo_verify(const ScfoProtocol& p, const BooleanFunction& f);

struct ScfoSearchConfig {
    std::size_t max_cards = 0;
    /// Keep sweeping after the first hit and count every working permutation.
    bool exhaustive = false;
    /// Lexicographic rank of the first permutation to examine.
    std::uint64_t start_rank = 0;
    /// 0 = read CYCLEQUAL_THREADS, falling back to hardware concurrency.
    std::size_t threads = 0;
    /// Set from outside (e.g. a signal handler) to stop early.
    const std::atomic<bool>* stop = nullptr;
    std::size_t state_cap_per_perm = 1'000'000;
};

struct ScfoSearchResult {
    /// Protocol for the lowest-ranked working permutation in the examined range.
    std::optional<ScfoProtocol> protocol;
    std::uint64_t first_rank = 0;
    std::uint64_t examined = 0;
    std::uint64_t solutions = 0;
    /// Permutations whose search hit the per-permutation state cap.
    std::uint64_t capped = 0;
    /// First rank not yet examined; equals total when the sweep finished.
    std::uint64_t next_rank = 0;
    std::uint64_t total = 0;
    bool interrupted = false;
};

/// Sweeps permutations of S_{2n} in lexicographic order. For each one, runs a
/// bounded insertion search (at most max_cards - 2n columns) for a schedule
/// under which each output class is pairwise cyclically equal and the two
/// classes are not. The result does not depend on the thread count.
ScfoSearchResult scfo_search(const BooleanFunction& f, const ScfoSearchConfig& cfg);

/// Permutation of {0..m-1} with the given lexicographic rank.
std::vector<std::size_t> unrank_permutation(std::size_t m, std::uint64_t rank);

/// Thread count from CYCLEQUAL_THREADS, or hardware concurrency.
std::size_t default_threads();

}  // namespace cycleq
