#include "doctest.h"

#include "cycleq/insertion.hpp"
#include "cycleq/oracle.hpp"
#include "support.hpp"

using namespace cycleq;
using namespace testsupport;

namespace {

// u_0 a_0 u_1 ... a_{n-1} u_n on plain strings.
std::vector<std::string> naive_apply(const std::vector<std::string>& rows, const std::vector<std::string>& gaps) {
    std::vector<std::string> out;
    for (const auto& r : rows) {
        std::string s;
        for (std::size_t g = 0; g <= r.size(); ++g) {
            s += gaps[g];
            if (g < r.size()) {
                s.push_back(r[g]);
            }
        }
        out.push_back(s);
    }
    return out;
}

std::vector<std::string> naive_delete(const std::vector<std::string>& rows, char c) {
    std::vector<std::string> out(rows.size());
    for (std::size_t j = 0; j < rows[0].size(); ++j) {
        bool constant = true;
        for (const auto& r : rows) {
            constant = constant && r[j] == c;
        }
        if (!constant) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                out[i].push_back(rows[i][j]);
            }
        }
    }
    return out;
}

InsertionSchedule schedule_of(std::size_t n, const std::vector<std::string>& gaps, const std::string& delta = "01") {
    const Alphabet bin = Alphabet::binary();
    InsertionSchedule s(n, Delta::parse(delta, bin));
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        if (!gaps[g].empty()) {
            s.insert(g, parse_word(gaps[g], bin).letters());
        }
    }
    return s;
}

std::vector<std::string> random_gaps(std::mt19937_64& rng, std::size_t n, std::size_t budget, const std::string& symbols) {
    std::vector<std::string> gaps(n + 1);
    for (std::size_t t = 0; t < budget; ++t) {
        gaps[rng() % (n + 1)] += random_word(rng, 1, symbols);
    }
    return gaps;
}

}  // namespace

TEST_CASE("apply_schedule examples") {
    const auto m = bm({"1001", "1010", "0101"});
    const auto s = schedule_of(4, {"", "", "1", "", ""}, "1");
    CHECK(strs(apply_schedule(m, s)) == std::vector<std::string>{"10101", "10110", "01101"});
    CHECK(verify_schedule(m, s));

    CHECK(apply_schedule(m, InsertionSchedule(4, Delta({1}))) == m);

    const auto pair = bm({"10", "01"});
    CHECK(strs(apply_schedule(pair, schedule_of(2, {"", "0", "0"}, "0"))) ==
          std::vector<std::string>{"1000", "0010"});
}

TEST_CASE("apply_schedule errors") {
    CHECK_THROWS_AS(apply_schedule(bm({"10"}), InsertionSchedule(3, Delta({0}))), LengthMismatch);
    InsertionSchedule s(2, Delta({1}));
    CHECK_THROWS_AS(s.insert(1, Letter{0}), LetterOutsideDelta);
    CHECK_THROWS_AS(s.insert(3, Letter{1}), Error);
    CHECK_THROWS_AS(Delta(std::vector<Letter>{}), Error);
}

TEST_CASE("apply_schedule matches string splicing") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = rng() % 9;
        const std::size_t k = 1 + rng() % 3;
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(random_word(rng, n));
        }
        const auto gaps = random_gaps(rng, n, rng() % 6, "01");
        const auto s = schedule_of(n, gaps);
        const auto got = apply_schedule(bm(rows), s);
        CHECK(strs(got) == naive_apply(rows, gaps));
        CHECK(got.width() == s.result_length());
        CHECK(verify_schedule(bm(rows), s) == naive_all_equal(naive_apply(rows, gaps)));
    }
}

TEST_CASE("normalization moves u_0 behind u_n and keeps the verdict") {
    const auto s = schedule_of(3, {"10", "", "1", "0"});
    CHECK_FALSE(s.is_normal());
    const auto n = s.normalized();
    CHECK(n.is_normal());
    CHECK(n.gap(3) == std::vector<Letter>{0, 1, 0});
    CHECK(n.total_inserted() == s.total_inserted());

    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n0 = 1 + rng() % 6;
        std::vector<std::string> rows{random_word(rng, n0), random_word(rng, n0)};
        const auto sched = schedule_of(n0, random_gaps(rng, n0, rng() % 5, "01"));
        const auto a = strs(apply_schedule(bm(rows), sched));
        const auto b = strs(apply_schedule(bm(rows), sched.normalized()));
        // Each normalized row is a rotation of the original row.
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(naive_equal(a[i], b[i]));
        }
        CHECK(naive_all_equal(a) == naive_all_equal(b));
    }
}

TEST_CASE("delete_constant_columns on the 20-letter pair") {
    const std::vector<std::string> w{"10101001010110101000", "00011110010001000111"};
    auto [m1, st1] = delete_constant_columns(bm(w), 1);
    CHECK(strs(m1) == std::vector<std::string>{"101000100110101000", "000111000001000111"});
    CHECK(strs(m1) == naive_delete(w, '1'));
    // The (1,1) columns are 4 and 9: isolated.
    CHECK(st1.nu == 1);
    CHECK(st1.deleted() == 2);

    auto [m2, st2] = delete_constant_columns(m1, 0);
    CHECK(strs(m2) == std::vector<std::string>{"11000111011000", "00111000100111"});
    CHECK(strs(m2) == naive_delete(naive_delete(w, '1'), '0'));
    // (0,0) columns of the 18-letter pair sit at 3, 7, 8, 15: longest run 2.
    CHECK(st2.nu == 2);
    CHECK(st2.deleted() == 4);

    auto [same, empty] = delete_constant_columns(m2, 1);
    CHECK(same == m2);
    CHECK(empty.deleted() == 0);
    CHECK(empty.nu == 0);
}

TEST_CASE("deletion records replay to the original") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t k = 1 + rng() % 3;
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(random_word(rng, n));
        }
        const std::vector<Letter> order = rng() % 2 ? std::vector<Letter>{1, 0} : std::vector<Letter>{0, 1};
        const auto [reduced, record] = reduce(bm(rows), order);
        CHECK(strs(reduced) == naive_delete(naive_delete(rows, char('0' + order[0])), char('0' + order[1])));
        if (reduced.width() > 0) {
            CHECK(strs(record.replay(reduced)) == rows);
        }
        for (const auto& stage : record.stages) {
            // Independent run bound: longest cyclic run of deleted positions.
            std::vector<bool> del;
            for (std::size_t g = 0; g <= stage.reduced_length(); ++g) {
                for (std::size_t t = 0; t < stage.counts[g]; ++t) {
                    del.push_back(true);
                }
                if (g < stage.reduced_length()) {
                    del.push_back(false);
                }
            }
            std::size_t best = 0;
            const std::size_t len = del.size();
            for (std::size_t start = 0; start < len && stage.reduced_length() > 0; ++start) {
                std::size_t run = 0;
                while (run < len && del[(start + run) % len]) {
                    ++run;
                }
                best = std::max(best, run);
            }
            if (stage.reduced_length() > 0) {
                CHECK(stage.nu == best);
            }
        }
    }
}

TEST_CASE("insert-then-delete round trip") {
    std::mt19937_64 rng(24);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t k = 1 + rng() % 3;
        const Letter c = static_cast<Letter>(rng() % 2);
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(random_word(rng, n));
        }
        const auto gaps = random_gaps(rng, n, rng() % 6, std::string(1, char('0' + c)));
        const auto m = bm(rows);
        const auto grown = apply_schedule(m, schedule_of(n, gaps, std::string(1, char('0' + c))));
        CHECK(delete_constant_columns(grown, c).first == delete_constant_columns(m, c).first);
    }
}

TEST_CASE("interleave_constant") {
    const auto m = bm({"10", "01"});
    const auto out = interleave_constant(m, 0, 1);
    CHECK(strs(out) == std::vector<std::string>{"1000", "0010"});
    CHECK(cyclically_equal(out.row(0), out.row(1)).shift == 2);
    CHECK(interleave_constant(m, 1, 0) == m);

    // Interleaving scales every shift delta to (mu + 1) delta.
    std::mt19937_64 rng(25);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 1 + rng() % 8;
        const std::string base = random_word(rng, n);
        std::vector<std::string> rows;
        std::vector<std::size_t> shifts;
        for (std::size_t i = 0; i < 1 + rng() % 3; ++i) {
            shifts.push_back(rng() % n);
            rows.push_back(rot(base, shifts.back()));
        }
        const Letter c = static_cast<Letter>(rng() % 2);
        const std::size_t mu = rng() % 4;
        const auto wide = strs(interleave_constant(bm(rows), c, mu));
        CHECK(naive_all_equal(wide));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const std::size_t delta = (shifts[i] + n - shifts[0]) % n;
            CHECK(wide[i] == rot(wide[0], (mu + 1) * delta));
        }
        CHECK(wide[0].size() == (mu + 1) * n);
    }
}

TEST_CASE("lift_schedule trivial cases") {
    const auto s = schedule_of(3, {"", "1", "", "0"});
    CHECK(lift_schedule(s, DeletionRecord{}) == s);

    // All columns constant: the reduced matrix is empty and nothing needs inserting.
    const auto [reduced, record] = reduce(bm({"1101", "1101"}), std::vector<Letter>{1, 0});
    CHECK(reduced.width() == 0);
    const auto lifted = lift_schedule(InsertionSchedule(0, Delta({0, 1})), record);
    CHECK(lifted.base_length() == 4);
    CHECK(lifted.empty());
}

TEST_CASE("lift_schedule carries oracle schedules back to the original") {
    std::mt19937_64 rng(26);
    const Alphabet bin = Alphabet::binary();
    int lifted_count = 0;
    for (int iter = 0; iter < 600; ++iter) {
        const std::size_t n = 2 + rng() % 7;
        const std::size_t k = 2 + rng() % 2;
        // Equal weights: otherwise no schedule exists at all.
        const std::size_t w = rng() % (n + 1);
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < k; ++i) {
            rows.push_back(random_weighted(rng, n, w));
        }
        const std::vector<Letter> order = rng() % 2 ? std::vector<Letter>{1, 0} : std::vector<Letter>{0, 1};
        const auto [reduced, record] = reduce(bm(rows), order);
        if (reduced.width() == 0) {
            continue;
        }
        SearchConfig cfg{Delta::full(bin), 3};
        const auto found = search_equalizable(reduced, cfg);
        if (!found.found) {
            continue;
        }
        const auto lifted = lift_schedule(*found.schedule, record);
        CHECK(lifted.base_length() == n);
        std::vector<std::string> gaps;
        for (const auto& g : lifted.gaps()) {
            std::string t;
            for (Letter l : g) {
                t.push_back(char('0' + l));
            }
            gaps.push_back(t);
        }
        CHECK(naive_all_equal(naive_apply(rows, gaps)));
        ++lifted_count;
    }
    CHECK(lifted_count > 300);
}

TEST_CASE("lift_schedule rejects mismatched records") {
    const auto [reduced, record] = reduce(bm({"1100", "1010"}), std::vector<Letter>{1, 0});
    CHECK(reduced.width() == 2);
    CHECK_THROWS_AS(lift_schedule(InsertionSchedule(3, Delta({0, 1})), record), InconsistentRecord);

    DeletionRecord broken = record;
    broken.stages.front().counts.push_back(0);
    CHECK_THROWS_AS(lift_schedule(InsertionSchedule(2, Delta({0, 1})), broken), InconsistentRecord);
}
