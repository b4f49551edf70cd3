#include <functional>

#include "doctest.h"

#include "cycleq/oracle.hpp"
#include "support.hpp"

using namespace cycleq;
using namespace testsupport;

namespace {

// Smallest total t <= max such that some assignment of strings over `delta`
// to the n + 1 gaps (u_0 included) with total length t makes all rows
// pairwise equal; -1 if none. Pure enumeration, no search tricks.
int naive_min_depth(const std::vector<std::string>& rows, const std::string& delta, int max) {
    const std::size_t n = rows[0].size();
    for (int t = 0; t <= max; ++t) {
        std::vector<std::string> gaps(n + 1);
        std::function<bool(std::size_t, int)> go = [&](std::size_t g, int left) -> bool {
            if (g == n) {
                // The last gap takes every remaining letter.
                std::function<bool(std::string)> fill = [&](std::string s) -> bool {
                    if (static_cast<int>(s.size()) == left) {
                        gaps[n] = s;
                        std::vector<std::string> out;
                        for (const auto& r : rows) {
                            std::string w;
                            for (std::size_t i = 0; i <= n; ++i) {
                                w += gaps[i];
                                if (i < n) {
                                    w.push_back(r[i]);
                                }
                            }
                            out.push_back(w);
                        }
                        return naive_all_equal(out);
                    }
                    for (char c : delta) {
                        if (fill(s + c)) {
                            return true;
                        }
                    }
                    return false;
                };
                return fill("");
            }
            std::function<bool(std::string)> pick = [&](std::string s) -> bool {
                gaps[g] = s;
                if (go(g + 1, left - static_cast<int>(s.size()))) {
                    return true;
                }
                if (static_cast<int>(s.size()) == left) {
                    return false;
                }
                for (char c : delta) {
                    if (pick(s + c)) {
                        return true;
                    }
                }
                return false;
            };
            return pick("");
        };
        if (go(0, t)) {
            return t;
        }
    }
    return -1;
}

SearchConfig config(const std::string& delta, std::size_t max_extra, Dedup dedup = Dedup::exact,
                    const Alphabet& alphabet = Alphabet::binary()) {
    SearchConfig cfg{Delta::parse(delta, alphabet), max_extra};
    cfg.dedup = dedup;
    return cfg;
}

}  // namespace

TEST_CASE("oracle examples") {
    const auto hit = search_equalizable(bm({"1001", "1010", "0101"}), config("1", 1));
    REQUIRE(hit.found);
    CHECK(hit.depth == 1);
    CHECK(hit.schedule->total_inserted() == 1);
    CHECK(hit.schedule->gap(2) == std::vector<Letter>{1});
    CHECK(hit.bound == 1);

    const auto miss = search_equalizable(bm({"1001", "1010", "1100"}), config("0", 8));
    CHECK_FALSE(miss.found);
    CHECK_FALSE(miss.schedule.has_value());
    CHECK(miss.bound == 8);
    CHECK(naive_min_depth({"1001", "1010", "1100"}, "0", 4) == -1);

    const auto single = search_equalizable(bm({"0110"}), config("01", 0));
    CHECK(single.found);
    CHECK(single.schedule->empty());
}

TEST_CASE("search_min_schedule examples") {
    const Alphabet bin = Alphabet::binary();
    const auto rot2 = search_min_schedule(bm({"1100", "0011"}), Delta::full(bin), 3);
    CHECK(rot2.found);
    CHECK(rot2.depth == 0);

    CHECK(search_min_schedule(bm({"10", "01"}), Delta::full(bin), 0).depth == 0);

    // The constructive route inserts exactly one letter here; the oracle can do no worse.
    const auto hand = search_min_schedule(bm({"101100", "010011"}), Delta::full(bin), 1);
    CHECK(hand.found);
    CHECK(hand.depth <= 1);
}

TEST_CASE("minimum depth matches exhaustive gap enumeration") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t k = 2 + rng() % 2;
        const std::string delta = std::vector<std::string>{"0", "1", "01"}[rng() % 3];
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(random_word(rng, n));
        }
        const int want = naive_min_depth(rows, delta, 3);
        for (auto dedup : {Dedup::off, Dedup::exact, Dedup::rotation_canonical}) {
            auto cfg = config(delta, 3, dedup);
            cfg.prune_letter_counts = iter % 2 == 0;
            const auto got = search_equalizable(bm(rows), cfg);
            REQUIRE(got.found == (want >= 0));
            if (got.found) {
                CHECK(static_cast<int>(got.depth) == want);
                CHECK(got.schedule->is_normal());
                CHECK(verify_schedule(bm(rows), *got.schedule));
            }
        }
    }
}

TEST_CASE("letter-count pruning never changes the verdict") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng() % 5;
        std::vector<std::string> rows{random_word(rng, n), random_word(rng, n)};
        auto on = config("01", 3);
        auto off = config("01", 3);
        off.prune_letter_counts = false;
        CHECK(search_equalizable(bm(rows), on).found == search_equalizable(bm(rows), off).found);
    }
}

TEST_CASE("rotation-canonical dedup agrees with exact dedup") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (unsigned x = 0; x < (1u << n); ++x) {
            for (unsigned y = 0; y < (1u << n); ++y) {
                std::string a;
                std::string b;
                for (std::size_t i = 0; i < n; ++i) {
                    a.push_back((x >> i) & 1 ? '1' : '0');
                    b.push_back((y >> i) & 1 ? '1' : '0');
                }
                for (const char* delta : {"0", "1", "01"}) {
                    auto exact = config(delta, 3, Dedup::exact);
                    auto canon = config(delta, 3, Dedup::rotation_canonical);
                    exact.prune_letter_counts = canon.prune_letter_counts = false;
                    const auto e = search_equalizable(bm({a, b}), exact);
                    const auto c = search_equalizable(bm({a, b}), canon);
                    CHECK(e.found == c.found);
                    CHECK(e.depth == c.depth);
                    if (c.found) {
                        CHECK(verify_schedule(bm({a, b}), *c.schedule));
                    }
                    CHECK(c.explored <= e.explored);
                }
            }
        }
    }
}

TEST_CASE("ternary alphabet") {
    const Alphabet t("012");
    const WordMatrix m({parse_word("0120", t), parse_word("0201", t)});
    const auto got = search_equalizable(m, config("012", 2, Dedup::exact, t));
    // 0120 vs 0201: letter counts agree, but no rotation matches; one letter fixes it.
    CHECK_FALSE(cyclically_equal(m.row(0), m.row(1)).equal);
    REQUIRE(got.found);
    CHECK(verify_schedule(m, *got.schedule));
}

TEST_CASE("state cap and determinism") {
    auto cfg = config("01", 6);
    cfg.prune_letter_counts = false;
    cfg.state_cap = 50;
    CHECK_THROWS_AS(search_equalizable(bm({"1101", "0000"}), cfg), BudgetExceeded);

    const auto a = search_equalizable(bm({"110010", "011100"}), config("01", 3));
    const auto b = search_equalizable(bm({"110010", "011100"}), config("01", 3));
    CHECK(a.found == b.found);
    CHECK(a.explored == b.explored);
    CHECK(a.schedule == b.schedule);
}

TEST_CASE("parse_dedup") {
    CHECK(parse_dedup("exact") == Dedup::exact);
    CHECK(parse_dedup("off") == Dedup::off);
    CHECK(parse_dedup("canonical") == Dedup::rotation_canonical);
    CHECK_THROWS_AS(parse_dedup("fast"), Error);
}
