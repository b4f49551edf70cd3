// Independent reference implementations used as test oracles. Deliberately
// naive: plain strings, explicit rotation enumeration, no library helpers.

#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cycleq/word.hpp"

namespace testsupport {

inline std::string rot(const std::string& s, std::size_t t) {
    if (s.empty()) {
        return s;
    }
    t %= s.size();
    return s.substr(t) + s.substr(0, t);
}

/// Every rotation, listed by shift.
inline std::vector<std::string> rotations(const std::string& s) {
    std::vector<std::string> out;
    for (std::size_t t = 0; t < s.size(); ++t) {
        out.push_back(rot(s, t));
    }
    return out;
}

/// Smallest t with b == rot(a, t), or -1.
inline long naive_shift(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) {
        return -1;
    }
    if (a.empty()) {
        return 0;
    }
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (rot(a, t) == b) {
            return static_cast<long>(t);
        }
    }
    return -1;
}

inline bool naive_equal(const std::string& a, const std::string& b) { return naive_shift(a, b) >= 0; }

inline std::size_t naive_class_size(const std::string& s) {
    const auto r = rotations(s);
    return std::set<std::string>(r.begin(), r.end()).size();
}

inline bool naive_all_equal(const std::vector<std::string>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (!naive_equal(rows[i], rows[j])) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t ones(const std::string& s) {
    std::size_t c = 0;
    for (char ch : s) {
        c += ch == '1';
    }
    return c;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t n, const std::string& symbols = "01") {
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(symbols[pick(rng)]);
    }
    return s;
}

/// Random word of length n with exactly w ones.
inline std::string random_weighted(std::mt19937_64& rng, std::size_t n, std::size_t w) {
    std::string s(n, '0');
    std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(w), '1');
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

inline cycleq::Word bw(const std::string& s) { return cycleq::parse_word(s, cycleq::Alphabet::binary()); }

inline cycleq::WordMatrix bm(const std::vector<std::string>& rows) {
    std::vector<cycleq::Word> words;
    for (const auto& r : rows) {
        words.push_back(bw(r));
    }
    return cycleq::WordMatrix(std::move(words));
}

inline std::vector<std::string> strs(const cycleq::WordMatrix& m) {
    std::vector<std::string> out;
    for (const auto& w : m.rows()) {
        out.push_back(w.str());
    }
    return out;
}

}  // namespace testsupport
