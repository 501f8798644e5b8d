#include "symshift/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_set>

namespace symshift {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyWord: return "E_EMPTY_WORD";
    case ErrorCode::AlphabetMismatch: return "E_ALPHABET_MISMATCH";
    case ErrorCode::BadLength: return "E_BAD_LENGTH";
    case ErrorCode::BadAlphabet: return "E_BAD_ALPHABET";
    case ErrorCode::Unlabeled: return "E_UNLABELED";
    case ErrorCode::BadGraph: return "E_BAD_GRAPH";
    case ErrorCode::OrderTooSmall: return "E_ORDER_TOO_SMALL";
    case ErrorCode::EmptyShift: return "E_EMPTY_SHIFT";
    case ErrorCode::OverlapTooShort: return "E_OVERLAP_TOO_SHORT";
    case ErrorCode::NotInDomain: return "E_NOT_IN_DOMAIN";
    case ErrorCode::NotASelfmap: return "E_NOT_A_SELFMAP";
    case ErrorCode::DensityUnknown: return "E_DENSITY_UNKNOWN";
    case ErrorCode::RuleConflict: return "E_RULE_CONFLICT";
    case ErrorCode::RuleIncomplete: return "E_RULE_INCOMPLETE";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::LimitExceeded: return "E_LIMIT_EXCEEDED";
    }
    return "E_UNKNOWN";
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2)
        throw Error(ErrorCode::BadAlphabet, "an alphabet needs at least two symbols");
    std::unordered_set<std::string> seen;
    for (const auto &s : symbols_) {
        if (s.empty())
            throw Error(ErrorCode::BadAlphabet, "empty symbol name");
        if (std::any_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch) || ch == ','; }))
            throw Error(ErrorCode::BadAlphabet, "symbol name '" + s + "' contains whitespace or ','");
        if (!seen.insert(s).second)
            throw Error(ErrorCode::BadAlphabet, "duplicate symbol '" + s + "'");
        if (s.size() != 1)
            single_char_ = false;
    }
}

const std::string &Alphabet::name(Symbol s) const {
    if (s >= symbols_.size())
        throw Error(ErrorCode::AlphabetMismatch, "symbol index " + std::to_string(s) + " out of range");
    return symbols_[s];
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name)
            return static_cast<Symbol>(i);
    return std::nullopt;
}

bool Alphabet::contains(const Word &word) const noexcept {
    return std::all_of(word.begin(), word.end(), [&](Symbol s) { return s < symbols_.size(); });
}

Word Alphabet::parse_word(std::string_view text) const {
    Word word;
    if (text.empty())
        return word;
    auto lookup = [&](std::string_view tok) {
        auto idx = index_of(tok);
        if (!idx)
            throw Error(ErrorCode::AlphabetMismatch, "unknown symbol '" + std::string(tok) + "'");
        word.push_back(*idx);
    };
    if (text.find(',') == std::string_view::npos && !index_of(text)) {
        if (!single_char_)
            throw Error(ErrorCode::AlphabetMismatch,
                        "unknown symbol '" + std::string(text) + "' (separate multi-character symbols with ',')");
        for (char ch : text)
            lookup(std::string_view(&ch, 1));
        return word;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (tok.empty())
            throw Error(ErrorCode::Parse, "empty token in word '" + std::string(text) + "'");
        lookup(tok);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return word;
}

std::string Alphabet::format_word(const Word &word) const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !single_char_)
            out += ',';
        out += name(word[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SftSpec

SftSpec::SftSpec(Alphabet alphabet, std::vector<Word> forbidden) : alphabet_(std::move(alphabet)) {
    std::set<Word> unique;
    for (auto &w : forbidden) {
        if (w.empty())
            throw Error(ErrorCode::EmptyWord, "forbidden words must be non-empty");
        if (!alphabet_.contains(w))
            throw Error(ErrorCode::AlphabetMismatch, "forbidden word uses a symbol outside the alphabet");
        unique.insert(std::move(w));
    }
    forbidden_.assign(unique.begin(), unique.end());
    for (const auto &w : forbidden_)
        max_forbidden_length_ = std::max(max_forbidden_length_, w.size());
    memory_ = max_forbidden_length_ > 1 ? max_forbidden_length_ - 1 : 1;
}

bool is_locally_allowed(const SftSpec &spec, std::span<const Symbol> word) {
    for (const auto &f : spec.forbidden()) {
        if (f.size() > word.size())
            continue;
        if (std::search(word.begin(), word.end(), f.begin(), f.end()) != word.end())
            return false;
    }
    return true;
}

std::vector<Word> locally_allowed_words(const SftSpec &spec, std::size_t length) {
    std::vector<Word> out;
    Word prefix;
    const auto k = static_cast<Symbol>(spec.alphabet().size());
    // Being locally allowed is closed under taking prefixes, so the search
    // prunes as soon as a prefix fails.
    auto extend = [&](auto &&self) -> void {
        if (prefix.size() == length) {
            out.push_back(prefix);
            return;
        }
        for (Symbol s = 0; s < k; ++s) {
            prefix.push_back(s);
            if (is_locally_allowed(spec, prefix))
                self(self);
            prefix.pop_back();
        }
    };
    extend(extend);
    return out;
}

// ---------------------------------------------------------------------------
// PeriodicConfig

PeriodicConfig PeriodicConfig::from_word(const Word &word) {
    if (word.empty())
        throw Error(ErrorCode::EmptyWord, "a periodic configuration needs a non-empty repeating block");
    const std::size_t n = word.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool power = true;
        for (std::size_t i = d; i < n && power; ++i)
            power = word[i] == word[i % d];
        if (power)
            return PeriodicConfig(Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(d)));
    }
    return PeriodicConfig(word);
}

Symbol PeriodicConfig::at(std::int64_t position) const noexcept {
    const auto n = static_cast<std::int64_t>(primitive_.size());
    auto r = position % n;
    if (r < 0)
        r += n;
    return primitive_[static_cast<std::size_t>(r)];
}

PeriodicConfig PeriodicConfig::shifted(std::int64_t offset) const {
    return PeriodicConfig(window(offset, primitive_.size()));
}

Word PeriodicConfig::window(std::int64_t first, std::size_t length) const {
    Word out(length);
    for (std::size_t i = 0; i < length; ++i)
        out[i] = at(first + static_cast<std::int64_t>(i));
    return out;
}

PeriodicConfig normalize_periodic(const Word &word) { return PeriodicConfig::from_word(word); }

Rational config_distance(const PeriodicConfig &c1, const PeriodicConfig &c2) {
    const auto span = static_cast<std::int64_t>(std::lcm(c1.least_period(), c2.least_period()));
    // The disagreement pattern repeats with period `span`, so one sweep of
    // radius `span` finds the first mismatch if there is one.
    for (std::int64_t n = 0; n <= span; ++n) {
        if (c1.at(n) != c2.at(n) || c1.at(-n) != c2.at(-n))
            return Rational{1, static_cast<std::uint64_t>(n) + 1};
    }
    return Rational{0, 1};
}

Rational config_distance(const Alphabet &a1, const PeriodicConfig &c1, const Alphabet &a2, const PeriodicConfig &c2) {
    if (!(a1 == a2))
        throw Error(ErrorCode::AlphabetMismatch, "configurations live over different alphabets");
    return config_distance(c1, c2);
}

std::vector<Word> cyclic_factors(const PeriodicConfig &config, std::size_t k) {
    if (k == 0)
        throw Error(ErrorCode::BadLength, "factor length must be at least 1");
    std::set<Word> out;
    for (std::size_t start = 0; start < config.least_period(); ++start)
        out.insert(config.window(static_cast<std::int64_t>(start), k));
    return {out.begin(), out.end()};
}

bool contains_periodic(const SftSpec &spec, const PeriodicConfig &config) {
    const std::size_t n = config.least_period();
    const Word unrolled = config.window(0, n + spec.max_forbidden_length());
    return is_locally_allowed(spec, unrolled);
}

PeriodicCensus census_from_p(const std::vector<std::uint64_t> &p) {
    PeriodicCensus census;
    census.max_n = p.size();
    census.p = p;
    census.q.resize(p.size());
    for (std::size_t n = 1; n <= p.size(); ++n) {
        std::uint64_t q = p[n - 1];
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0)
                continue;
            if (census.q[d - 1] > q)
                throw std::logic_error("periodic counts are not divisor-consistent");
            q -= census.q[d - 1];
        }
        census.q[n - 1] = q;
    }
    return census;
}

} // namespace symshift
