#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symshift/core.hpp"
#include "symshift/graphs.hpp"

namespace symshift {

/// Sliding block code of radius r on an SFT domain, stored extensionally:
/// one output symbol per locally allowed window of length 2r+1.
class LocalRule {
public:
    using WindowFunction = std::function<Symbol(std::span<const Symbol>)>;

    /// `table` is indexed by the base-|A| value of the window (first symbol
    /// most significant); -1 marks an undefined entry. Entries on locally
    /// forbidden windows are dropped. Throws E_RULE_INCOMPLETE naming the
    /// first allowed window without an entry.
    LocalRule(SftSpec domain, std::size_t radius, std::vector<std::int32_t> table);

    static LocalRule from_function(const SftSpec &domain, std::size_t radius, const WindowFunction &f);

    /// The k-th rule in the enumeration of all radius-r rules: the output on
    /// the j-th allowed window (lexicographic) is digit j of k in base |A|.
    /// For binary radius-1 rules on the full shift this is the Wolfram code.
    static LocalRule from_index(const SftSpec &domain, std::size_t radius, std::uint64_t k);

    const SftSpec &domain() const noexcept { return domain_; }
    std::size_t radius() const noexcept { return radius_; }
    std::size_t window_length() const noexcept { return 2 * radius_ + 1; }

    /// Throws E_NOT_IN_DOMAIN when the window is locally forbidden.
    Symbol apply_window(std::span<const Symbol> window) const;
    std::optional<Symbol> lookup(std::span<const Symbol> window) const;

    /// Locally allowed windows, lexicographic.
    const std::vector<Word> &windows() const noexcept { return windows_; }
    const std::vector<std::int32_t> &table() const noexcept { return table_; }

    /// Applies the rule to a finite word, producing |word| - 2r symbols.
    Word apply_word(std::span<const Symbol> word) const;

private:
    std::size_t index_of(std::span<const Symbol> window) const;

    SftSpec domain_;
    std::size_t radius_;
    std::vector<std::int32_t> table_;
    std::vector<Word> windows_;
};

/// Number of distinct radius-r rules on `domain`, or nullopt past 2^64.
std::optional<std::uint64_t> rule_count(const SftSpec &domain, std::size_t radius);

namespace rules {
LocalRule identity(const SftSpec &domain, std::size_t radius = 1);
/// Output the right neighbour: delta(a1, a2, a3) = a3.
LocalRule shift(const SftSpec &domain);
LocalRule constant(const SftSpec &domain, Symbol value, std::size_t radius = 1);
/// delta(a1, a2, a3) = a1 + a3 mod |A|.
LocalRule xor_rule(const SftSpec &domain);
/// delta(a1, a2, a3) = a1 * a2 * a3 mod |A|.
LocalRule and_rule(const SftSpec &domain);
} // namespace rules

/// Composite rule `second` after `first`, of radius r1 + r2 on first's domain.
LocalRule compose(const LocalRule &first, const LocalRule &second);

PeriodicConfig apply_to_periodic(const LocalRule &rule, const PeriodicConfig &config);

/// Labeled graph presenting the image shift. Built on the higher-block graph
/// of order 2m with m = max(radius, ceil(memory / 2)); the edge for the
/// merged word u_1..u_m a v_1..v_m carries the rule output on the window
/// centred at a.
struct ImagePresentation {
    LocalRule rule;
    std::size_t half_order;
    LabeledGraph graph;
    std::vector<Word> words;

    ImagePresentation trimmed() const;
};

ImagePresentation build_image_presentation(const LocalRule &rule);

struct SurjectivityVerdict {
    bool surjective = false;
    /// Shortest word of the target language without a preimage.
    std::optional<Word> orphan;
};

/// Decides whether the image equals the target shift. Throws E_NOT_A_SELFMAP
/// when the image is not contained in the target.
SurjectivityVerdict is_surjective(const LocalRule &rule, const SftSpec &target);

bool is_injective(const LocalRule &rule);

/// False iff two domain configurations that differ on a finite set have the
/// same image, i.e. the product of the (essential) image presentation has a
/// label-synchronized excursion off the diagonal.
bool is_preinjective(const LocalRule &rule);

/// Shortest orphan (Garden of Eden) word, or nullopt when surjective.
std::optional<Word> find_goe_pattern(const LocalRule &rule, const SftSpec &target);

struct AuditEntry {
    std::uint64_t index = 0;
    bool selfmap = false;
    bool injective = false;
    bool surjective = false;
    bool preinjective = false;
    std::optional<Word> orphan;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    /// Indices of selfmaps that are injective but not surjective.
    std::vector<std::uint64_t> violations;

    std::size_t selfmap_count() const;
};

/// Checks injective => surjective for each rule that maps the domain into
/// itself. Requires periodic density of the domain (E_DENSITY_UNKNOWN).
AuditReport surjunctivity_audit(std::span<const LocalRule> rules, const SftSpec &domain);

/// Audit over every radius-r rule; E_LIMIT_EXCEEDED when there are more than `limit`.
AuditReport audit_all_rules(const SftSpec &domain, std::size_t radius, std::uint64_t limit = 65536);

} // namespace symshift
