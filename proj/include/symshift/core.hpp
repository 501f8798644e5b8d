#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symshift/error.hpp"

namespace symshift {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Finite ordered symbol table. Symbols are referred to by index everywhere
/// except in text formats, which use the names.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string> &symbols() const noexcept { return symbols_; }
    const std::string &name(Symbol s) const;
    std::optional<Symbol> index_of(std::string_view name) const;

    /// True when every symbol name is one character long, so words may be
    /// written without separators.
    bool single_char() const noexcept { return single_char_; }

    bool contains(const Word &word) const noexcept;

    /// Parses "a,b,c" or, for single-character alphabets, "abc".
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word &word) const;

    friend bool operator==(const Alphabet &a, const Alphabet &b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<std::string> symbols_;
    bool single_char_ = true;
};

/// A shift of finite type given by a finite list of forbidden words.
class SftSpec {
public:
    SftSpec(Alphabet alphabet, std::vector<Word> forbidden);

    const Alphabet &alphabet() const noexcept { return alphabet_; }
    const std::vector<Word> &forbidden() const noexcept { return forbidden_; }

    /// max(1, longest forbidden word - 1); 1 for the full shift.
    std::size_t memory() const noexcept { return memory_; }
    std::size_t max_forbidden_length() const noexcept { return max_forbidden_length_; }

private:
    Alphabet alphabet_;
    std::vector<Word> forbidden_;
    std::size_t memory_ = 1;
    std::size_t max_forbidden_length_ = 0;
};

bool is_locally_allowed(const SftSpec &spec, std::span<const Symbol> word);

/// Locally allowed words of the given length, in lexicographic order.
std::vector<Word> locally_allowed_words(const SftSpec &spec, std::size_t length);

/// Periodic bi-infinite configuration; c[z] = primitive[z mod period].
class PeriodicConfig {
public:
    /// Reduces `word` to its primitive root. Throws E_EMPTY_WORD.
    static PeriodicConfig from_word(const Word &word);

    const Word &primitive() const noexcept { return primitive_; }
    std::size_t least_period() const noexcept { return primitive_.size(); }
    Symbol at(std::int64_t position) const noexcept;

    /// The configuration d with d[z] = c[z + offset].
    PeriodicConfig shifted(std::int64_t offset) const;

    /// c[first], ..., c[first + length - 1].
    Word window(std::int64_t first, std::size_t length) const;

    friend auto operator<=>(const PeriodicConfig &, const PeriodicConfig &) = default;

private:
    explicit PeriodicConfig(Word primitive) : primitive_(std::move(primitive)) {}
    Word primitive_;
};

PeriodicConfig normalize_periodic(const Word &word);

/// Distance values are 0 or 1/(n+1); kept exact.
struct Rational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const Rational &, const Rational &) = default;
};

Rational config_distance(const PeriodicConfig &c1, const PeriodicConfig &c2);
Rational config_distance(const Alphabet &a1, const PeriodicConfig &c1, const Alphabet &a2, const PeriodicConfig &c2);

/// All length-k windows of the configuration, sorted. Throws E_BAD_LENGTH for k = 0.
std::vector<Word> cyclic_factors(const PeriodicConfig &config, std::size_t k);

/// True iff the configuration avoids every forbidden word of `spec`.
bool contains_periodic(const SftSpec &spec, const PeriodicConfig &config);

struct PeriodicCensus {
    std::size_t max_n = 0;
    std::vector<std::uint64_t> p; // p[n-1] = |P_n|
    std::vector<std::uint64_t> q; // q[n-1] = |Q_n|
};

/// Recovers q_n from p_n through q_n = p_n - sum_{d | n, d < n} q_d.
PeriodicCensus census_from_p(const std::vector<std::uint64_t> &p);

} // namespace symshift
