#pragma once

#include <optional>
#include <vector>

#include "symshift/core.hpp"
#include "symshift/graphs.hpp"

namespace symshift {

/// Higher-block presentation of an SFT: states are locally allowed words of
/// length `order`, u -> v when they overlap in order-1 symbols and the merged
/// word is locally allowed. Each edge is labeled with the first letter of its
/// source word.
struct HigherBlockGraph {
    SftSpec base;
    std::size_t order;
    LabeledGraph graph;
    std::vector<Word> words; // words[s] is the block of state s

    /// Essential form, keeping the block of every surviving state.
    HigherBlockGraph trimmed() const;
};

/// Throws E_ORDER_TOO_SMALL when order < spec.memory().
HigherBlockGraph build_higher_block(const SftSpec &spec, std::size_t order);

/// Essential higher-block presentation; `order` defaults to the memory.
HigherBlockGraph essential_presentation(const SftSpec &spec, std::optional<std::size_t> order = std::nullopt);

bool is_empty(const SftSpec &spec);

/// Membership in the language of the shift (factors of configurations),
/// which is stricter than being locally allowed.
bool language_member(const SftSpec &spec, const Word &word);

bool is_irreducible(const SftSpec &spec, std::optional<std::size_t> order = std::nullopt);
bool is_mixing(const SftSpec &spec, std::optional<std::size_t> order = std::nullopt);

/// gcd of cycle lengths of a strongly connected graph (0 if it has no cycle).
std::size_t cycle_period(const LabeledGraph &g);

PeriodicCensus periodic_census(const SftSpec &spec, std::size_t max_n, std::optional<std::size_t> order = std::nullopt);

/// Every configuration of the shift whose period divides n, sorted by the
/// word it shows on [0, n).
std::vector<PeriodicConfig> enumerate_periodic(const SftSpec &spec, std::size_t n,
                                               std::optional<std::size_t> order = std::nullopt);

/// Decides density of periodic points: every edge of the essential
/// presentation stays inside one strongly connected component.
bool periodic_density(const SftSpec &spec, std::optional<std::size_t> order = std::nullopt);

/// A periodic point of the shift showing `word` at the origin, found by
/// closing a path labeled `word` inside the essential presentation. The
/// period is at most |word| + (state count - 1).
std::optional<PeriodicConfig> periodic_witness(const SftSpec &spec, const Word &word);

/// Equality of the sofic shifts presented by two labeled graphs.
LanguageComparison sofic_equal(const LabeledGraph &a1, const LabeledGraph &a2);

/// language_member(spec, u v w); throws E_OVERLAP_TOO_SHORT when |v| < memory.
bool pasting_check(const SftSpec &spec, const Word &u, const Word &v, const Word &w);

} // namespace symshift
