#include "cycleq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cycleq/json_io.hpp"

namespace cycleq::cli {

std::atomic<bool>& interrupt_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

namespace {

struct Options {
    std::string alphabet = "01";
    bool json = false;
    bool cards = false;

    // check / equalize / trick
    std::vector<std::string> positional;
    std::string order = "min";
    std::uint64_t seed = kDefaultSeed;

    // oracle / erase
    std::string words;
    std::string delta;
    std::size_t max_extra = 0;
    bool canonical_dedup = false;
    std::size_t state_cap = 10'000'000;

    // scfo
    std::string protocol_file;
    std::string fn;
    std::size_t max_cards = 0;
    bool all = false;
    std::size_t threads = 0;
    std::string checkpoint;
    bool resume = false;
};

std::string show(const Word& w, bool cards) {
    return cards && w.alphabet().is_binary() ? card_string(w) : w.str();
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

std::string describe(const InsertionSchedule& s, const Alphabet& alphabet) {
    const InsertionSchedule normal = s.normalized();
    std::string out;
    for (std::size_t g = 0; g <= normal.base_length(); ++g) {
        if (normal.gap(g).empty()) {
            continue;
        }
        if (!out.empty()) {
            out += ", ";
        }
        out += "\"";
        for (Letter l : normal.gap(g)) {
            out += alphabet.symbol(l);
        }
        out += "\"@gap" + std::to_string(g);
    }
    return out.empty() ? "(empty)" : out;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.positional.size() != 2) {
        throw FormatError("check needs exactly two words");
    }
    const Alphabet alphabet(o.alphabet);
    const Word w1 = parse_word(o.positional[0], alphabet);
    const Word w2 = parse_word(o.positional[1], alphabet);
    const CyclicMatch match = cyclically_equal(w1, w2);
    if (o.json) {
        json j = {{"equal", match.equal}, {"shift", nullptr}};
        if (match.equal) {
            j["shift"] = match.shift;
        }
        out << j.dump() << '\n';
    } else if (match.equal) {
        out << "cyclically equal, shift " << match.shift << '\n';
    } else {
        out << "not cyclically equal\n";
    }
    return match.equal ? kSuccess : kNegative;
}

int cmd_equalize(const Options& o, std::ostream& out) {
    if (o.positional.size() != 2) {
        throw FormatError("equalize needs exactly two words");
    }
    const Alphabet binary = Alphabet::binary();
    const Word w1 = parse_word(o.positional[0], binary);
    const Word w2 = parse_word(o.positional[1], binary);
    const DeletionOrder order = parse_deletion_order(o.order);
    std::optional<EqualizeResult> result;
    try {
        result = equalize_two_binary(w1, w2, order);
    } catch (const WeightMismatch& e) {
        if (o.json) {
            out << json{{"error", "weight_mismatch"}, {"message", e.what()}}.dump() << '\n';
        } else {
            out << "not equalizable: " << e.what() << '\n';
        }
        return kNegative;
    }
    const EqualizeResult& r = *result;
    if (o.json) {
        out << equalize_result_to_json(r).dump() << '\n';
        return kSuccess;
    }
    out << "deletion order: " << (r.deletion_order.empty() ? "-" : r.deletion_order) << '\n';
    if (r.reduced) {
        out << "reduced:   " << show(r.reduced->row(0), o.cards) << " / "
            << show(r.reduced->row(1), o.cards) << '\n';
        out << "repaired:  " << show(r.reduced_equalized->row(0), o.cards) << " / "
            << show(r.reduced_equalized->row(1), o.cards) << '\n';
    }
    out << "schedule:  " << describe(r.schedule, binary) << '\n';
    out << "equalized: " << show(r.equalized.row(0), o.cards) << '\n';
    out << "           " << show(r.equalized.row(1), o.cards) << '\n';
    out << "length:    " << r.final_length << '\n';
    return kSuccess;
}

std::vector<Word> parse_word_list(const Options& o, const Alphabet& alphabet) {
    std::string text = o.words;
    if (text.empty() && o.positional.size() == 1) {
        text = o.positional[0];
    } else if (!o.positional.empty()) {
        throw FormatError("give the words either positionally or with --words");
    }
    if (text.empty()) {
        throw FormatError("no words given");
    }
    std::vector<Word> words;
    for (const std::string& t : split_words(text)) {
        words.push_back(parse_word(t, alphabet));
    }
    return words;
}

SearchConfig search_config(const Options& o, const Alphabet& alphabet) {
    SearchConfig cfg{o.delta.empty() ? Delta::full(alphabet) : Delta::parse(o.delta, alphabet),
                     o.max_extra};
    cfg.dedup = o.canonical_dedup ? Dedup::rotation_canonical : Dedup::exact;
    cfg.state_cap = o.state_cap;
    return cfg;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Alphabet alphabet(o.alphabet);
    const WordMatrix m(parse_word_list(o, alphabet));
    const SearchConfig cfg = search_config(o, alphabet);
    SearchOutcome outcome;
    try {
        outcome = search_equalizable(m, cfg);
    } catch (const BudgetExceeded& e) {
        if (o.json) {
            out << json{{"found", false}, {"error", "budget_exceeded"}, {"explored", e.states()},
                        {"bound", cfg.max_extra}}
                       .dump()
                << '\n';
        } else {
            out << "undecided: " << e.what() << '\n';
        }
        return kNegative;
    }
    if (o.json) {
        out << search_outcome_to_json(outcome, alphabet).dump() << '\n';
    } else if (outcome.found) {
        const WordMatrix result = apply_schedule(m, *outcome.schedule);
        out << "found with " << outcome.depth << " extra letter(s): "
            << describe(*outcome.schedule, alphabet) << '\n';
        for (const Word& w : result.rows()) {
            out << "  " << show(w, o.cards) << '\n';
        }
        out << "explored " << outcome.explored << " states\n";
    } else {
        out << "not found within bound " << outcome.bound << " (explored " << outcome.explored
            << " states)\n";
    }
    return outcome.found ? kSuccess : kNegative;
}

std::string probability_str(const Probability& p) {
    return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

int cmd_erase(const Options& o, std::ostream& out) {
    const Alphabet alphabet(o.alphabet);
    const std::vector<Word> words = parse_word_list(o, alphabet);
    const ErasureResult r = erase_check(words, search_config(o, alphabet));
    if (o.json) {
        json j = search_outcome_to_json(r.search, alphabet);
        json dist = json::object();
        for (const auto& [w, p] : r.distribution) {
            dist[w.str()] = probability_str(p);
        }
        j["distribution"] = dist;
        out << j.dump() << '\n';
    } else if (r.found) {
        out << "information erasure with " << describe(*r.schedule, alphabet) << '\n';
        out << "opened distribution (identical for every input):\n";
        for (const auto& [w, p] : r.distribution) {
            out << "  " << show(w, o.cards) << "  " << probability_str(p) << '\n';
        }
    } else {
        out << "not found within bound " << r.search.bound << '\n';
    }
    return r.found ? kSuccess : kNegative;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

int cmd_scfo_verify(const Options& o, std::ostream& out) {
    const ScfoProtocol p = protocol_from_json(read_json_file(o.protocol_file));
    const BooleanFunction f = BooleanFunction::parse(o.fn);
    const ScfoVerdict v = scfo_verify(p, f);
    const std::size_t bound = card_lower_bound(f);
    if (o.json) {
        json j = {{"ok", v.ok}, {"cards", v.card_count}, {"lower_bound", bound}};
        if (v.violation) {
            j["violation"] = v.violation->detail;
            if (v.violation->input) {
                j["input"] = *v.violation->input;
            }
        }
        out << j.dump() << '\n';
    } else if (v.ok) {
        out << "ok, cards=" << v.card_count << " (lower bound " << bound << ")\n";
    } else {
        out << "violation: " << v.violation->detail;
        if (v.violation->input) {
            out << " at x=" << *v.violation->input;
        }
        out << '\n';
    }
    return v.ok ? kSuccess : kNegative;
}

void write_checkpoint(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        f << j.dump(2) << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::string table_string(const BooleanFunction& f) {
    std::string s;
    for (auto v : f.table) {
        s.push_back(static_cast<char>('0' + v));
    }
    return s;
}

int cmd_scfo_search(const Options& o, std::ostream& out) {
    const BooleanFunction f = BooleanFunction::parse(o.fn);
    ScfoSearchConfig cfg;
    cfg.max_cards = o.max_cards;
    cfg.exhaustive = o.all;
    cfg.threads = o.threads;
    cfg.state_cap_per_perm = o.state_cap;
    cfg.stop = &interrupt_flag();

    std::uint64_t prior_solutions = 0;
    std::uint64_t prior_capped = 0;
    if (o.resume) {
        if (o.checkpoint.empty()) {
            throw FormatError("--resume needs --checkpoint");
        }
        const json cp = read_json_file(o.checkpoint);
        if (cp.at("table").get<std::string>() != table_string(f) ||
            cp.at("max_cards").get<std::size_t>() != o.max_cards ||
            cp.at("all").get<bool>() != o.all) {
            throw FormatError("checkpoint was written for a different search");
        }
        cfg.start_rank = cp.at("next_rank").get<std::uint64_t>();
        prior_solutions = cp.at("solutions").get<std::uint64_t>();
        prior_capped = cp.at("capped").get<std::uint64_t>();
    }

    const ScfoSearchResult r = scfo_search(f, cfg);
    const std::uint64_t solutions = prior_solutions + r.solutions;
    const std::uint64_t capped = prior_capped + r.capped;

    if (!o.checkpoint.empty()) {
        write_checkpoint(o.checkpoint, {{"table", table_string(f)},
                                        {"max_cards", o.max_cards},
                                        {"all", o.all},
                                        {"next_rank", r.next_rank},
                                        {"total", r.total},
                                        {"solutions", solutions},
                                        {"capped", capped}});
    }

    const bool found = r.protocol.has_value() || (o.all && solutions > 0);
    if (o.json) {
        json j = {{"found", found},
                  {"examined", r.examined},
                  {"next_rank", r.next_rank},
                  {"total", r.total},
                  {"solutions", solutions},
                  {"capped", capped},
                  {"interrupted", r.interrupted},
                  {"max_cards", o.max_cards},
                  {"protocol", nullptr}};
        if (r.protocol) {
            j["protocol"] = protocol_to_json(*r.protocol);
            j["rank"] = r.first_rank;
        }
        out << j.dump() << '\n';
    } else {
        out << "function table " << table_string(f) << ", lower bound " << card_lower_bound(f)
            << " cards, max " << o.max_cards << " cards\n";
        out << "examined " << r.examined << " permutation(s), ranks " << cfg.start_rank << ".."
            << r.next_rank << " of " << r.total << '\n';
        if (o.all) {
            out << "working permutations: " << solutions << '\n';
        }
        if (capped > 0) {
            out << "undecided (state cap): " << capped << '\n';
        }
        if (r.protocol) {
            out << "protocol at rank " << r.first_rank << ": "
                << protocol_to_json(*r.protocol).dump() << '\n';
        } else if (!found) {
            out << "not found within " << o.max_cards << " cards"
                << (r.interrupted ? " (interrupted; resume from the checkpoint)" : "") << '\n';
        }
    }
    return found ? kSuccess : kNegative;
}

int cmd_trick(const Options& o, std::ostream& out) {
    if (o.positional.size() != 2) {
        throw FormatError("trick needs two input bits");
    }
    const auto bit = [](const std::string& s) {
        if (s != "0" && s != "1") {
            throw FormatError("input bits must be 0 or 1, got \"" + s + "\"");
        }
        return s == "1";
    };
    const TrickResult r = five_card_trick(bit(o.positional[0]), bit(o.positional[1]), o.seed);
    const auto render = [&](const std::string& seq) {
        if (!o.cards) {
            return seq;
        }
        std::string s;
        for (char c : seq) {
            s += c == '0' ? "♣" : c == '1' ? "♥" : "?";
        }
        return s;
    };
    if (o.json) {
        json steps = json::array();
        for (const TraceStep& s : r.trace.steps) {
            steps.push_back({{"operation", s.operation}, {"sequence", s.sequence}});
        }
        out << json{{"output", r.output},
                    {"seed", o.seed},
                    {"opened", r.trace.opened.str()},
                    {"steps", steps}}
                   .dump()
            << '\n';
    } else {
        for (const TraceStep& s : r.trace.steps) {
            out << render(s.sequence) << "  " << s.operation << '\n';
        }
        out << "output " << r.output << '\n';
    }
    return kSuccess;
}

int cmd_lower_bound(const Options& o, std::ostream& out) {
    const BooleanFunction f = BooleanFunction::parse(o.fn);
    const ClassCounts c = count_nb(f);
    const std::size_t bound = card_lower_bound(f);
    if (o.json) {
        out << json{{"n0", c.zeros}, {"n1", c.ones}, {"lower_bound", bound}}.dump() << '\n';
    } else {
        out << "N0=" << c.zeros << " N1=" << c.ones << " lower bound " << bound << " cards\n";
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic equalizability of words and single-cut card protocols"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Machine-readable output");
        sub->add_flag("--cards", o.cards, "Render binary words as club/heart cards");
    };

    auto* check = app.add_subcommand("check", "Test two words for cyclic equality");
    check->add_option("words", o.positional, "Two words")->expected(2);
    check->add_option("--alphabet", o.alphabet, "Alphabet symbols");
    add_common(check);

    auto* equalize = app.add_subcommand("equalize", "Equalize two equal-weight binary words");
    equalize->add_option("words", o.positional, "Two binary words")->expected(2);
    equalize->add_option("--order", o.order, "Deletion order: 10, 01 or min");
    add_common(equalize);

    const auto add_search = [&](CLI::App* sub) {
        sub->add_option("word-list", o.positional, "Comma-separated words")->expected(0, 1);
        sub->add_option("--words", o.words, "Comma-separated words");
        sub->add_option("--delta", o.delta, "Insertable letters (default: whole alphabet)");
        sub->add_option("--max-extra", o.max_extra, "Maximum inserted letters")->required();
        sub->add_option("--alphabet", o.alphabet, "Alphabet symbols");
        sub->add_flag("--canonical-dedup", o.canonical_dedup,
                      "Deduplicate states up to simultaneous rotation");
        sub->add_option("--state-cap", o.state_cap, "Abort after this many states");
        add_common(sub);
    };
    auto* oracle = app.add_subcommand("oracle", "Bounded search for an equalizing insertion");
    add_search(oracle);
    auto* erase = app.add_subcommand("erase", "Bounded search for information erasure");
    add_search(erase);

    auto* verify = app.add_subcommand("scfo-verify", "Verify a single-cut full-open protocol");
    verify->add_option("protocol", o.protocol_file, "Protocol JSON file")->required();
    verify->add_option("--fn", o.fn, "and:N, xor:N, eq:N or a truth table")->required();
    add_common(verify);

    auto* scfo = app.add_subcommand("scfo-search", "Sweep permutations for an SCFO protocol");
    scfo->add_option("--fn", o.fn, "and:N, xor:N, eq:N or a truth table")->required();
    scfo->add_option("--max-cards", o.max_cards, "Card budget")->required();
    scfo->add_flag("--all", o.all, "Count every working permutation");
    scfo->add_option("--threads", o.threads, "Worker threads (default CYCLEQUAL_THREADS)");
    scfo->add_option("--checkpoint", o.checkpoint, "Checkpoint file written on exit");
    scfo->add_flag("--resume", o.resume, "Continue from --checkpoint");
    scfo->add_option("--state-cap", o.state_cap, "Per-permutation state cap");
    add_common(scfo);

    auto* trick = app.add_subcommand("trick", "Run the five-card trick");
    trick->add_option("bits", o.positional, "Input bits a b")->expected(2);
    trick->add_option("--seed", o.seed, "Random cut seed");
    add_common(trick);

    auto* lower = app.add_subcommand("lower-bound", "Card lower bound for a function");
    lower->add_option("--fn", o.fn, "and:N, xor:N, eq:N or a truth table")->required();
    add_common(lower);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (equalize->parsed()) return cmd_equalize(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (erase->parsed()) return cmd_erase(o, out);
        if (verify->parsed()) return cmd_scfo_verify(o, out);
        if (scfo->parsed()) return cmd_scfo_search(o, out);
        if (trick->parsed()) return cmd_trick(o, out);
        if (lower->parsed()) return cmd_lower_bound(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cycleq::cli
