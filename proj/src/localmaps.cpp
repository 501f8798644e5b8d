#include "symshift/localmaps.hpp"

#include <algorithm>
#include <deque>

#include "symshift/shifts.hpp"

namespace symshift {

namespace {

constexpr std::uint64_t max_table_size = 1u << 24;

std::size_t table_size(const SftSpec &domain, std::size_t radius) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < 2 * radius + 1; ++i) {
        size *= domain.alphabet().size();
        if (size > max_table_size)
            throw Error(ErrorCode::LimitExceeded, "rule table for radius " + std::to_string(radius) + " is too large");
    }
    return static_cast<std::size_t>(size);
}

} // namespace

LocalRule::LocalRule(SftSpec domain, std::size_t radius, std::vector<std::int32_t> table)
    : domain_(std::move(domain)), radius_(radius), table_(std::move(table)) {
    const auto size = table_size(domain_, radius_);
    if (table_.size() != size)
        throw Error(ErrorCode::BadLength, "rule table has " + std::to_string(table_.size()) + " entries, expected " +
                                              std::to_string(size));
    windows_ = locally_allowed_words(domain_, window_length());
    std::vector<std::int32_t> kept(size, -1);
    const auto k = static_cast<std::int32_t>(domain_.alphabet().size());
    for (const auto &w : windows_) {
        const auto i = index_of(w);
        if (table_[i] < 0)
            throw Error(ErrorCode::RuleIncomplete, "no output for window " + domain_.alphabet().format_word(w));
        if (table_[i] >= k)
            throw Error(ErrorCode::AlphabetMismatch, "rule output outside the alphabet");
        kept[i] = table_[i];
    }
    table_ = std::move(kept);
}

LocalRule LocalRule::from_function(const SftSpec &domain, std::size_t radius, const WindowFunction &f) {
    std::vector<std::int32_t> table(table_size(domain, radius), -1);
    const auto k = domain.alphabet().size();
    for (const auto &w : locally_allowed_words(domain, 2 * radius + 1)) {
        std::size_t i = 0;
        for (Symbol s : w)
            i = i * k + s;
        table[i] = static_cast<std::int32_t>(f(w));
    }
    return LocalRule(domain, radius, std::move(table));
}

LocalRule LocalRule::from_index(const SftSpec &domain, std::size_t radius, std::uint64_t index) {
    const auto count = rule_count(domain, radius);
    if (count && index >= *count)
        throw Error(ErrorCode::LimitExceeded, "rule index " + std::to_string(index) + " out of range");
    const auto k = domain.alphabet().size();
    std::vector<std::int32_t> table(table_size(domain, radius), -1);
    std::uint64_t rest = index;
    for (const auto &w : locally_allowed_words(domain, 2 * radius + 1)) {
        std::size_t i = 0;
        for (Symbol s : w)
            i = i * k + s;
        table[i] = static_cast<std::int32_t>(rest % k);
        rest /= k;
    }
    return LocalRule(domain, radius, std::move(table));
}

std::size_t LocalRule::index_of(std::span<const Symbol> window) const {
    const auto k = domain_.alphabet().size();
    std::size_t i = 0;
    for (Symbol s : window)
        i = i * k + s;
    return i;
}

std::optional<Symbol> LocalRule::lookup(std::span<const Symbol> window) const {
    if (window.size() != window_length())
        throw Error(ErrorCode::BadLength, "window length differs from 2r+1");
    for (Symbol s : window)
        if (s >= domain_.alphabet().size())
            throw Error(ErrorCode::AlphabetMismatch, "window symbol outside the alphabet");
    const auto t = table_[index_of(window)];
    if (t < 0)
        return std::nullopt;
    return static_cast<Symbol>(t);
}

Symbol LocalRule::apply_window(std::span<const Symbol> window) const {
    auto out = lookup(window);
    if (!out)
        throw Error(ErrorCode::NotInDomain, "window " + domain_.alphabet().format_word(Word(window.begin(), window.end())) +
                                                " is locally forbidden in the domain");
    return *out;
}

Word LocalRule::apply_word(std::span<const Symbol> word) const {
    const auto w = window_length();
    if (word.size() < w)
        return {};
    Word out;
    out.reserve(word.size() - w + 1);
    for (std::size_t i = 0; i + w <= word.size(); ++i)
        out.push_back(apply_window(word.subspan(i, w)));
    return out;
}

std::optional<std::uint64_t> rule_count(const SftSpec &domain, std::size_t radius) {
    const auto windows = locally_allowed_words(domain, 2 * radius + 1).size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < windows; ++i)
        if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(domain.alphabet().size()), &count))
            return std::nullopt;
    return count;
}

namespace rules {

LocalRule identity(const SftSpec &domain, std::size_t radius) {
    return LocalRule::from_function(domain, radius, [radius](auto w) { return w[radius]; });
}

LocalRule shift(const SftSpec &domain) {
    return LocalRule::from_function(domain, 1, [](auto w) { return w[2]; });
}

LocalRule constant(const SftSpec &domain, Symbol value, std::size_t radius) {
    return LocalRule::from_function(domain, radius, [value](auto) { return value; });
}

LocalRule xor_rule(const SftSpec &domain) {
    const auto k = static_cast<Symbol>(domain.alphabet().size());
    return LocalRule::from_function(domain, 1, [k](auto w) { return (w[0] + w[2]) % k; });
}

LocalRule and_rule(const SftSpec &domain) {
    const auto k = static_cast<Symbol>(domain.alphabet().size());
    return LocalRule::from_function(domain, 1, [k](auto w) { return (w[0] * w[1] * w[2]) % k; });
}

} // namespace rules

LocalRule compose(const LocalRule &first, const LocalRule &second) {
    if (!(first.domain().alphabet() == second.domain().alphabet()))
        throw Error(ErrorCode::AlphabetMismatch, "composed rules use different alphabets");
    const auto radius = first.radius() + second.radius();
    const auto &domain = first.domain();
    return LocalRule::from_function(domain, radius, [&](std::span<const Symbol> w) {
        const Word middle = first.apply_word(w);
        auto out = second.lookup(middle);
        if (!out)
            throw Error(ErrorCode::NotInDomain, "intermediate block " + domain.alphabet().format_word(middle) +
                                                    " is outside the second rule's domain");
        return *out;
    });
}

PeriodicConfig apply_to_periodic(const LocalRule &rule, const PeriodicConfig &config) {
    if (!contains_periodic(rule.domain(), config))
        throw Error(ErrorCode::NotInDomain, "configuration is not a point of the domain shift");
    const auto n = config.least_period();
    const auto r = static_cast<std::int64_t>(rule.radius());
    Word image(n);
    for (std::size_t z = 0; z < n; ++z)
        image[z] = rule.apply_window(config.window(static_cast<std::int64_t>(z) - r, rule.window_length()));
    return normalize_periodic(image);
}

// ---------------------------------------------------------------------------
// Image presentation and the decision procedures built on it

ImagePresentation ImagePresentation::trimmed() const {
    auto sub = essential_subgraph(graph);
    std::vector<Word> kept;
    for (StateId s : sub.origin)
        kept.push_back(words[s]);
    return ImagePresentation{rule, half_order, std::move(sub.graph), std::move(kept)};
}

ImagePresentation build_image_presentation(const LocalRule &rule) {
    const auto &domain = rule.domain();
    if (is_empty(domain))
        throw Error(ErrorCode::EmptyShift, "the domain shift is empty");
    const std::size_t m = std::max(rule.radius(), (domain.memory() + 1) / 2);
    auto base = build_higher_block(domain, 2 * m);
    const auto r = rule.radius();
    std::vector<Edge> edges;
    edges.reserve(base.graph.edge_count());
    Word merged;
    for (const auto &e : base.graph.edges()) {
        merged = base.words[e.src];
        merged.push_back(base.words[e.dst].back());
        const auto window = std::span<const Symbol>(merged).subspan(m - r, 2 * r + 1);
        edges.push_back(Edge{e.src, e.dst, rule.apply_window(window)});
    }
    LabeledGraph graph(base.graph.states(), std::move(edges), domain.alphabet());
    return ImagePresentation{rule, m, std::move(graph), std::move(base.words)};
}

SurjectivityVerdict is_surjective(const LocalRule &rule, const SftSpec &target) {
    if (!(rule.domain().alphabet() == target.alphabet()))
        throw Error(ErrorCode::AlphabetMismatch, "target shift uses a different alphabet");
    const auto image = build_image_presentation(rule).trimmed();
    const Dfa image_acceptor = determinize_factor_acceptor(image.graph);
    const Dfa target_acceptor = determinize_factor_acceptor(essential_presentation(target).graph);
    if (auto outside = language_excess(image_acceptor, target_acceptor))
        throw Error(ErrorCode::NotASelfmap,
                    "image word " + target.alphabet().format_word(*outside) + " is not in the target language");
    SurjectivityVerdict verdict;
    verdict.orphan = language_excess(target_acceptor, image_acceptor);
    verdict.surjective = !verdict.orphan.has_value();
    return verdict;
}

bool is_injective(const LocalRule &rule) {
    const auto image = build_image_presentation(rule).trimmed();
    const auto product = essential_form(product_automaton(image.graph));
    return std::all_of(product.diagonal.begin(), product.diagonal.end(), [](bool d) { return d; });
}

bool is_preinjective(const LocalRule &rule) {
    const auto image = build_image_presentation(rule).trimmed();
    const auto product = product_automaton(image.graph);
    const auto &g = product.graph;
    const auto n = g.state_count();

    auto reach = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::deque<StateId> queue;
        for (StateId s = 0; s < n; ++s)
            if (product.diagonal[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        while (!queue.empty()) {
            StateId v = queue.front();
            queue.pop_front();
            for (auto ei : forward ? g.out_edges(v) : g.in_edges(v)) {
                const auto &e = g.edges()[ei];
                StateId w = forward ? e.dst : e.src;
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        return seen;
    };
    const auto from_diagonal = reach(true);
    const auto to_diagonal = reach(false);
    for (StateId s = 0; s < n; ++s)
        if (!product.diagonal[s] && from_diagonal[s] && to_diagonal[s])
            return false;
    return true;
}

std::optional<Word> find_goe_pattern(const LocalRule &rule, const SftSpec &target) {
    return is_surjective(rule, target).orphan;
}

std::size_t AuditReport::selfmap_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto &e) { return e.selfmap; }));
}

AuditReport surjunctivity_audit(std::span<const LocalRule> rules, const SftSpec &domain) {
    if (is_empty(domain) || !periodic_density(domain))
        throw Error(ErrorCode::DensityUnknown, "periodic points are not known to be dense in the domain");
    AuditReport report;
    report.entries.reserve(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto &rule = rules[i];
        if (!(rule.domain().alphabet() == domain.alphabet()))
            throw Error(ErrorCode::AlphabetMismatch, "audited rule uses a different alphabet");
        AuditEntry entry;
        entry.index = i;
        try {
            auto verdict = is_surjective(rule, domain);
            entry.selfmap = true;
            entry.surjective = verdict.surjective;
            entry.orphan = std::move(verdict.orphan);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NotASelfmap)
                throw;
        }
        if (entry.selfmap) {
            entry.injective = is_injective(rule);
            entry.preinjective = is_preinjective(rule);
            if (entry.injective && !entry.surjective)
                report.violations.push_back(entry.index);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

AuditReport audit_all_rules(const SftSpec &domain, std::size_t radius, std::uint64_t limit) {
    const auto count = rule_count(domain, radius);
    if (!count || *count > limit)
        throw Error(ErrorCode::LimitExceeded, "radius " + std::to_string(radius) + " has more than " +
                                                  std::to_string(limit) + " rules");
    std::vector<LocalRule> all;
    all.reserve(*count);
    for (std::uint64_t k = 0; k < *count; ++k)
        all.push_back(LocalRule::from_index(domain, radius, k));
    return surjunctivity_audit(all, domain);
}

} // namespace symshift
