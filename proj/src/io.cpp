#include "symshift/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace symshift::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &source, std::size_t line, const std::string &message) {
    throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

struct Line {
    std::size_t number;
    std::string key;
    std::string value;
};

// Non-blank lines of a "key: value" document with comments removed.
std::vector<Line> key_value_lines(std::string_view text, const std::string &source) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        raw = trim(raw);
        if (raw.empty())
            continue;
        const auto colon = raw.find(':');
        if (colon == std::string_view::npos)
            fail(source, number, "expected 'key: value'");
        out.push_back(Line{number, std::string(trim(raw.substr(0, colon))), std::string(trim(raw.substr(colon + 1)))});
    }
    return out;
}

Word tokens_to_word(const Alphabet &alphabet, const std::vector<std::string> &tokens, const std::string &source,
                    std::size_t line) {
    Word word;
    auto lookup = [&](std::string_view tok) {
        auto idx = alphabet.index_of(tok);
        if (!idx)
            fail(source, line, "unknown symbol '" + std::string(tok) + "'");
        word.push_back(*idx);
    };
    if (tokens.size() == 1 && !alphabet.index_of(tokens[0]) && alphabet.single_char()) {
        for (char ch : tokens[0])
            lookup(std::string_view(&ch, 1));
        return word;
    }
    for (const auto &tok : tokens)
        lookup(tok);
    return word;
}

} // namespace

SftSpec parse_sft(std::string_view text, const std::string &source) {
    std::optional<Alphabet> alphabet;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> forbidden;
    for (const auto &line : key_value_lines(text, source)) {
        if (line.key == "alphabet") {
            if (alphabet)
                fail(source, line.number, "duplicate alphabet line");
            try {
                alphabet.emplace(split_ws(line.value));
            } catch (const Error &e) {
                fail(source, line.number, e.message());
            }
        } else if (line.key == "forbidden") {
            auto tokens = split_ws(line.value);
            if (tokens.empty())
                fail(source, line.number, "empty forbidden word");
            forbidden.emplace_back(line.number, std::move(tokens));
        } else {
            fail(source, line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!alphabet)
        fail(source, 1, "missing alphabet line");
    std::vector<Word> words;
    for (const auto &[number, tokens] : forbidden)
        words.push_back(tokens_to_word(*alphabet, tokens, source, number));
    return SftSpec(*alphabet, std::move(words));
}

std::string format_sft(const SftSpec &spec) {
    std::string out = "alphabet:";
    for (const auto &s : spec.alphabet().symbols())
        out += " " + s;
    out += "\n";
    for (const auto &w : spec.forbidden()) {
        out += "forbidden:";
        for (Symbol s : w)
            out += " " + spec.alphabet().name(s);
        out += "\n";
    }
    return out;
}

LocalRule parse_rule(std::string_view text, const SftSpec &domain, const std::string &source) {
    const auto &alphabet = domain.alphabet();
    std::optional<std::size_t> radius;
    std::vector<std::int32_t> table;
    std::vector<std::size_t> defined_at;
    for (const auto &line : key_value_lines(text, source)) {
        if (line.key == "radius") {
            if (radius)
                fail(source, line.number, "duplicate radius line");
            try {
                std::size_t used = 0;
                const auto value = std::stoul(line.value, &used);
                if (used != line.value.size())
                    throw std::invalid_argument("trailing characters");
                radius = value;
                std::size_t size = 1;
                for (std::size_t i = 0; i < 2 * value + 1; ++i) {
                    size *= alphabet.size();
                    if (size > (1u << 24))
                        fail(source, line.number, "radius too large");
                }
                table.assign(size, -1);
                defined_at.assign(size, 0);
            } catch (const std::logic_error &) {
                fail(source, line.number, "radius must be a natural number");
            }
        } else if (line.key == "map") {
            if (!radius)
                fail(source, line.number, "map line before the radius line");
            const auto arrow = line.value.find("->");
            if (arrow == std::string::npos)
                fail(source, line.number, "expected '<window> -> <symbol>'");
            const Word window = tokens_to_word(alphabet, split_ws(line.value.substr(0, arrow)), source, line.number);
            const auto out_tokens = split_ws(line.value.substr(arrow + 2));
            if (out_tokens.size() != 1)
                fail(source, line.number, "expected exactly one output symbol");
            const auto output = alphabet.index_of(out_tokens[0]);
            if (!output)
                fail(source, line.number, "unknown symbol '" + out_tokens[0] + "'");
            if (window.size() != 2 * *radius + 1)
                fail(source, line.number,
                     "window has " + std::to_string(window.size()) + " symbols, expected " + std::to_string(2 * *radius + 1));
            std::size_t i = 0;
            for (Symbol s : window)
                i = i * alphabet.size() + s;
            if (table[i] >= 0 && table[i] != static_cast<std::int32_t>(*output))
                throw Error(ErrorCode::RuleConflict, source + ":" + std::to_string(line.number) + ": window " +
                                                         alphabet.format_word(window) + " already maps to " +
                                                         alphabet.name(static_cast<Symbol>(table[i])) + " (line " +
                                                         std::to_string(defined_at[i]) + ")");
            table[i] = static_cast<std::int32_t>(*output);
            defined_at[i] = line.number;
        } else {
            fail(source, line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!radius)
        fail(source, 1, "missing radius line");
    try {
        return LocalRule(domain, *radius, std::move(table));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::RuleIncomplete)
            throw Error(ErrorCode::RuleIncomplete, source + ": " + e.message());
        throw;
    }
}

std::string format_rule(const LocalRule &rule) {
    const auto &alphabet = rule.domain().alphabet();
    std::string out = "radius: " + std::to_string(rule.radius()) + "\n";
    for (const auto &w : rule.windows()) {
        out += "map:";
        for (Symbol s : w)
            out += " " + alphabet.name(s);
        out += " -> " + alphabet.name(*rule.lookup(w)) + "\n";
    }
    return out;
}

LabeledGraph parse_presentation(std::string_view text, const std::string &source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::Parse, source + ": " + e.what());
    }
    auto bad = [&](const std::string &what) -> Error { return Error(ErrorCode::Parse, source + ": " + what); };
    try {
        if (!doc.is_object())
            throw bad("expected a JSON object");
        std::optional<Alphabet> alphabet;
        if (doc.contains("alphabet"))
            alphabet.emplace(doc.at("alphabet").get<std::vector<std::string>>());
        const auto states = doc.at("states").get<std::vector<std::string>>();
        std::map<std::string, StateId> ids;
        for (StateId s = 0; s < states.size(); ++s)
            if (!ids.emplace(states[s], s).second)
                throw bad("duplicate state '" + states[s] + "'");
        std::vector<Edge> edges;
        const auto &edge_list = doc.contains("edges") ? doc.at("edges") : json::array();
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            const auto &rec = edge_list.at(i);
            const auto where = "edge " + std::to_string(i);
            auto state = [&](const char *field) {
                const auto name = rec.at(field).get<std::string>();
                auto it = ids.find(name);
                if (it == ids.end())
                    throw bad(where + ": unknown state '" + name + "'");
                return it->second;
            };
            Edge e{state("from"), state("to"), std::nullopt};
            if (rec.contains("label")) {
                if (!alphabet)
                    throw bad(where + ": labeled edge without an alphabet");
                const auto name = rec.at("label").get<std::string>();
                auto idx = alphabet->index_of(name);
                if (!idx)
                    throw bad(where + ": unknown label '" + name + "'");
                e.label = *idx;
            }
            edges.push_back(e);
        }
        return LabeledGraph(states, std::move(edges), std::move(alphabet));
    } catch (const json::exception &e) {
        throw bad(e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::Parse)
            throw;
        throw bad(e.message());
    }
}

std::string format_presentation(const LabeledGraph &graph) {
    json doc;
    if (graph.alphabet())
        doc["alphabet"] = graph.alphabet()->symbols();
    doc["states"] = graph.states();
    json edges = json::array();
    for (const auto &e : graph.edges()) {
        json rec{{"from", graph.states()[e.src]}, {"to", graph.states()[e.dst]}};
        if (e.label)
            rec["label"] = graph.alphabet()->name(*e.label);
        edges.push_back(std::move(rec));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Parse, path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Parse, path.string() + ": cannot write file");
    out << contents;
}

SftSpec load_sft(const std::filesystem::path &path) { return parse_sft(read_file(path), path.string()); }

LocalRule load_rule(const std::filesystem::path &path, const SftSpec &domain) {
    return parse_rule(read_file(path), domain, path.string());
}

LabeledGraph load_presentation(const std::filesystem::path &path) {
    return parse_presentation(read_file(path), path.string());
}

} // namespace symshift::io
