#include "cycleq/json_io.hpp"

namespace cycleq {

namespace {

std::string letters_str(const std::vector<Letter>& letters, const Alphabet& alphabet) {
    std::string out;
    for (Letter l : letters) {
        out.push_back(alphabet.symbol(l));
    }
    return out;
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

json schedule_to_json(const InsertionSchedule& s, const Alphabet& alphabet) {
    const InsertionSchedule normal = s.normalized();
    json gaps = json::array();
    for (std::size_t g = 0; g <= normal.base_length(); ++g) {
        if (!normal.gap(g).empty()) {
            gaps.push_back({{"gap", g}, {"letters", letters_str(normal.gap(g), alphabet)}});
        }
    }
    return {{"base_length", normal.base_length()},
            {"delta", normal.delta().str(alphabet)},
            {"gaps", gaps}};
}

InsertionSchedule schedule_from_json(const json& j, const Alphabet& alphabet) {
    const auto n = get_field<std::size_t>(j, "base_length");
    const auto delta_text = get_field<std::string>(j, "delta");
    InsertionSchedule s(n, Delta::parse(delta_text, alphabet));
    if (j.contains("gaps")) {
        if (!j.at("gaps").is_array()) {
            throw FormatError("\"gaps\" must be an array");
        }
        for (const json& entry : j.at("gaps")) {
            const auto g = get_field<std::size_t>(entry, "gap");
            const auto text = get_field<std::string>(entry, "letters");
            if (g > n) {
                throw FormatError("gap " + std::to_string(g) + " outside [0, " +
                                  std::to_string(n) + "]");
            }
            const Word letters = parse_word(text, alphabet);
            s.insert(g, letters.letters());
        }
    }
    return s.normalized();
}

json equalize_result_to_json(const EqualizeResult& r) {
    json words = json::array();
    for (const Word& w : r.equalized.rows()) {
        words.push_back(w.str());
    }
    return {{"schedule", schedule_to_json(r.schedule, r.equalized.alphabet())},
            {"equalized", words},
            {"final_length", r.final_length},
            {"deletion_order", r.deletion_order}};
}

json search_outcome_to_json(const SearchOutcome& o, const Alphabet& alphabet) {
    json out = {{"found", o.found},
                {"schedule", nullptr},
                {"explored", o.explored},
                {"bound", o.bound}};
    if (o.schedule) {
        out["schedule"] = schedule_to_json(*o.schedule, alphabet);
    }
    return out;
}

json protocol_to_json(const ScfoProtocol& p) {
    const Alphabet binary = Alphabet::binary();
    return {{"n", p.n},
            {"perm", p.perm},
            {"schedule", schedule_to_json(p.schedule, binary)},
            {"z0", p.z0.str()},
            {"z1", p.z1.str()}};
}

ScfoProtocol protocol_from_json(const json& j) {
    const Alphabet binary = Alphabet::binary();
    ScfoProtocol p;
    p.n = get_field<std::size_t>(j, "n");
    p.perm = get_field<std::vector<std::size_t>>(j, "perm");
    if (!j.contains("schedule")) {
        throw FormatError("missing field \"schedule\"");
    }
    p.schedule = schedule_from_json(j.at("schedule"), binary);
    p.z0 = parse_word(get_field<std::string>(j, "z0"), binary);
    p.z1 = parse_word(get_field<std::string>(j, "z1"), binary);
    return p;
}

}  // namespace cycleq
