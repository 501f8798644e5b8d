#include "symshift/shifts.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace symshift {

namespace {

void require_nonempty(const HigherBlockGraph &presentation) {
    if (presentation.graph.empty())
        throw Error(ErrorCode::EmptyShift, "the shift is empty");
}

Symbol edge_label(const HigherBlockGraph &h, StateId src) { return h.words[src].front(); }

template <typename T>
T checked_mul_add(T acc, T a, T b) {
    T prod;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
        throw Error(ErrorCode::LimitExceeded, "periodic point count overflows 64 bits");
    return acc;
}

} // namespace

HigherBlockGraph HigherBlockGraph::trimmed() const {
    auto sub = essential_subgraph(graph);
    std::vector<Word> kept;
    kept.reserve(sub.origin.size());
    for (StateId s : sub.origin)
        kept.push_back(words[s]);
    return HigherBlockGraph{base, order, std::move(sub.graph), std::move(kept)};
}

HigherBlockGraph build_higher_block(const SftSpec &spec, std::size_t order) {
    if (order < spec.memory())
        throw Error(ErrorCode::OrderTooSmall, "order " + std::to_string(order) + " is below the memory " +
                                                  std::to_string(spec.memory()));
    auto words = locally_allowed_words(spec, order);
    std::map<Word, StateId> ids;
    std::vector<std::string> names;
    for (const auto &w : words) {
        ids.emplace(w, static_cast<StateId>(names.size()));
        names.push_back(spec.alphabet().format_word(w));
    }
    std::vector<Edge> edges;
    const auto k = static_cast<Symbol>(spec.alphabet().size());
    Word merged;
    for (StateId u = 0; u < words.size(); ++u) {
        for (Symbol a = 0; a < k; ++a) {
            merged = words[u];
            merged.push_back(a);
            if (!is_locally_allowed(spec, merged))
                continue;
            Word v(merged.begin() + 1, merged.end());
            edges.push_back(Edge{u, ids.at(v), words[u].front()});
        }
    }
    LabeledGraph graph(std::move(names), std::move(edges), spec.alphabet());
    return HigherBlockGraph{spec, order, std::move(graph), std::move(words)};
}

HigherBlockGraph essential_presentation(const SftSpec &spec, std::optional<std::size_t> order) {
    return build_higher_block(spec, order.value_or(spec.memory())).trimmed();
}

bool is_empty(const SftSpec &spec) { return !has_biinfinite_path(build_higher_block(spec, spec.memory()).graph); }

bool language_member(const SftSpec &spec, const Word &word) {
    if (!spec.alphabet().contains(word))
        throw Error(ErrorCode::AlphabetMismatch, "word uses a symbol outside the shift alphabet");
    const auto presentation = essential_presentation(spec);
    if (presentation.graph.empty())
        return false;
    return labels_path(presentation.graph, word);
}

bool is_irreducible(const SftSpec &spec, std::optional<std::size_t> order) {
    const auto presentation = essential_presentation(spec, order);
    require_nonempty(presentation);
    return scc_decomposition(presentation.graph).components.size() == 1;
}

std::size_t cycle_period(const LabeledGraph &g) {
    if (g.empty())
        return 0;
    constexpr auto unseen = std::numeric_limits<std::int64_t>::min();
    std::vector<std::int64_t> level(g.state_count(), unseen);
    std::deque<StateId> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
        StateId v = queue.front();
        queue.pop_front();
        for (auto ei : g.out_edges(v)) {
            StateId w = g.edges()[ei].dst;
            if (level[w] == unseen) {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    std::int64_t period = 0;
    for (const auto &e : g.edges()) {
        if (level[e.src] == unseen || level[e.dst] == unseen)
            continue;
        period = std::gcd(period, level[e.src] + 1 - level[e.dst]);
    }
    return static_cast<std::size_t>(period < 0 ? -period : period);
}

bool is_mixing(const SftSpec &spec, std::optional<std::size_t> order) {
    const auto presentation = essential_presentation(spec, order);
    require_nonempty(presentation);
    if (scc_decomposition(presentation.graph).components.size() != 1)
        return false;
    return cycle_period(presentation.graph) == 1;
}

PeriodicCensus periodic_census(const SftSpec &spec, std::size_t max_n, std::optional<std::size_t> order) {
    if (max_n == 0)
        throw Error(ErrorCode::BadLength, "max_n must be at least 1");
    const auto presentation = essential_presentation(spec, order);
    const auto n = presentation.graph.state_count();
    // p_n = trace(A^n) for the adjacency matrix A of the essential graph.
    std::vector<std::uint64_t> adjacency(n * n, 0);
    for (const auto &e : presentation.graph.edges())
        ++adjacency[e.src * n + e.dst];
    std::vector<std::uint64_t> power = adjacency;
    std::vector<std::uint64_t> p;
    p.reserve(max_n);
    for (std::size_t step = 1; step <= max_n; ++step) {
        std::uint64_t trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (__builtin_add_overflow(trace, power[i * n + i], &trace))
                throw Error(ErrorCode::LimitExceeded, "periodic point count overflows 64 bits");
        }
        p.push_back(trace);
        if (step == max_n)
            break;
        std::vector<std::uint64_t> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                if (power[i * n + m] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (adjacency[m * n + j] != 0)
                        next[i * n + j] = checked_mul_add(next[i * n + j], power[i * n + m], adjacency[m * n + j]);
            }
        power = std::move(next);
    }
    return census_from_p(p);
}

std::vector<PeriodicConfig> enumerate_periodic(const SftSpec &spec, std::size_t n, std::optional<std::size_t> order) {
    if (n == 0)
        throw Error(ErrorCode::BadLength, "period bound must be at least 1");
    const auto h = essential_presentation(spec, order);
    const auto &g = h.graph;
    const auto states = g.state_count();
    std::set<Word> found;
    Word labels;
    for (StateId start = 0; start < states; ++start) {
        // back[r][v]: a path of length r leads from v to start.
        std::vector<std::vector<bool>> back(n + 1, std::vector<bool>(states, false));
        back[0][start] = true;
        for (std::size_t r = 1; r <= n; ++r)
            for (const auto &e : g.edges())
                if (back[r - 1][e.dst])
                    back[r][e.src] = true;
        if (!back[n][start])
            continue;
        auto walk = [&](auto &&self, StateId v, std::size_t remaining) -> void {
            if (remaining == 0) {
                found.insert(labels);
                return;
            }
            labels.push_back(edge_label(h, v));
            for (auto ei : g.out_edges(v)) {
                StateId w = g.edges()[ei].dst;
                if (back[remaining - 1][w])
                    self(self, w, remaining - 1);
            }
            labels.pop_back();
        };
        walk(walk, start, n);
    }
    std::vector<PeriodicConfig> out;
    out.reserve(found.size());
    for (const auto &w : found)
        out.push_back(normalize_periodic(w));
    return out;
}

bool periodic_density(const SftSpec &spec, std::optional<std::size_t> order) {
    const auto presentation = essential_presentation(spec, order);
    require_nonempty(presentation);
    const auto sccs = scc_decomposition(presentation.graph);
    const auto &edges = presentation.graph.edges();
    return std::all_of(edges.begin(), edges.end(),
                       [&](const Edge &e) { return sccs.component_of[e.src] == sccs.component_of[e.dst]; });
}

std::optional<PeriodicConfig> periodic_witness(const SftSpec &spec, const Word &word) {
    if (word.empty())
        throw Error(ErrorCode::EmptyWord, "the witness search needs a non-empty word");
    if (!spec.alphabet().contains(word))
        throw Error(ErrorCode::AlphabetMismatch, "word uses a symbol outside the shift alphabet");
    const auto h = essential_presentation(spec);
    const auto &g = h.graph;
    const auto states = g.state_count();

    std::optional<Word> best;
    for (StateId start = 0; start < states; ++start) {
        if (edge_label(h, start) != word.front())
            continue;
        // Distance from every state back to `start`.
        std::vector<std::int64_t> to_start(states, -1);
        std::deque<StateId> queue{start};
        to_start[start] = 0;
        while (!queue.empty()) {
            StateId v = queue.front();
            queue.pop_front();
            for (auto ei : g.in_edges(v)) {
                StateId u = g.edges()[ei].src;
                if (to_start[u] < 0) {
                    to_start[u] = to_start[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        // Layered search for paths labeled `word` leaving `start`.
        std::vector<std::vector<std::int64_t>> parent(word.size() + 1, std::vector<std::int64_t>(states, -2));
        parent[0][start] = -1;
        for (std::size_t i = 0; i < word.size(); ++i)
            for (StateId v = 0; v < states; ++v) {
                if (parent[i][v] == -2 || edge_label(h, v) != word[i])
                    continue;
                for (auto ei : g.out_edges(v)) {
                    StateId w = g.edges()[ei].dst;
                    if (parent[i + 1][w] == -2)
                        parent[i + 1][w] = v;
                }
            }
        std::optional<StateId> end;
        for (StateId v = 0; v < states; ++v)
            if (parent[word.size()][v] != -2 && to_start[v] >= 0 && (!end || to_start[v] < to_start[*end]))
                end = v;
        if (!end)
            continue;
        Word cycle = word;
        for (StateId v = *end; v != start;) {
            cycle.push_back(edge_label(h, v));
            // Step to a successor one closer to `start`.
            for (auto ei : g.out_edges(v)) {
                StateId w = g.edges()[ei].dst;
                if (to_start[w] == to_start[v] - 1) {
                    v = w;
                    break;
                }
            }
        }
        if (!best || cycle.size() < best->size())
            best = std::move(cycle);
    }
    if (!best)
        return std::nullopt;
    return normalize_periodic(*best);
}

LanguageComparison sofic_equal(const LabeledGraph &a1, const LabeledGraph &a2) {
    if (!a1.is_labeled() || !a2.is_labeled())
        throw Error(ErrorCode::Unlabeled, "sofic equality needs labeled presentations");
    if (!(*a1.alphabet() == *a2.alphabet()))
        throw Error(ErrorCode::AlphabetMismatch, "presentations use different alphabets");
    return dfa_language_equal(determinize_factor_acceptor(essential_form(a1)),
                              determinize_factor_acceptor(essential_form(a2)));
}

bool pasting_check(const SftSpec &spec, const Word &u, const Word &v, const Word &w) {
    if (v.size() < spec.memory())
        throw Error(ErrorCode::OverlapTooShort, "overlap shorter than the memory");
    Word joined = u;
    joined.insert(joined.end(), v.begin(), v.end());
    joined.insert(joined.end(), w.begin(), w.end());
    return language_member(spec, joined);
}

} // namespace symshift
