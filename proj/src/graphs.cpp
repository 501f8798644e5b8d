#include "symshift/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace symshift {

LabeledGraph::LabeledGraph(std::vector<std::string> states, std::vector<Edge> edges, std::optional<Alphabet> alphabet)
    : states_(std::move(states)), edges_(std::move(edges)), alphabet_(std::move(alphabet)) {
    const auto n = states_.size();
    std::size_t labeled = 0;
    for (const auto &e : edges_) {
        if (e.src >= n || e.dst >= n)
            throw Error(ErrorCode::BadGraph, "edge endpoint out of range");
        if (e.label) {
            ++labeled;
            if (!alphabet_)
                throw Error(ErrorCode::BadGraph, "labeled edges need an alphabet");
            if (*e.label >= alphabet_->size())
                throw Error(ErrorCode::AlphabetMismatch, "edge label outside the alphabet");
        }
    }
    if (labeled != 0 && labeled != edges_.size())
        throw Error(ErrorCode::BadGraph, "either all edges are labeled or none");
    // An edgeless graph with an alphabet is an (empty) presentation.
    labeled_ = alphabet_.has_value() && labeled == edges_.size();
    out_.resize(n);
    in_.resize(n);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        out_[edges_[i].src].push_back(i);
        in_[edges_[i].dst].push_back(i);
    }
}

std::optional<StateId> LabeledGraph::find_state(const std::string &name) const {
    for (StateId s = 0; s < states_.size(); ++s)
        if (states_[s] == name)
            return s;
    return std::nullopt;
}

Subgraph induced_subgraph(const LabeledGraph &g, const std::vector<bool> &keep) {
    std::vector<std::int64_t> remap(g.state_count(), -1);
    Subgraph out;
    std::vector<std::string> names;
    for (StateId s = 0; s < g.state_count(); ++s) {
        if (!keep[s])
            continue;
        remap[s] = static_cast<std::int64_t>(names.size());
        names.push_back(g.states()[s]);
        out.origin.push_back(s);
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (remap[e.src] < 0 || remap[e.dst] < 0)
            continue;
        edges.push_back(Edge{static_cast<StateId>(remap[e.src]), static_cast<StateId>(remap[e.dst]), e.label});
    }
    out.graph = LabeledGraph(std::move(names), std::move(edges), g.alphabet());
    return out;
}

Subgraph essential_subgraph(const LabeledGraph &g) {
    const auto n = g.state_count();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> in_degree(n), out_degree(n);
    for (const auto &e : g.edges()) {
        ++out_degree[e.src];
        ++in_degree[e.dst];
    }
    std::deque<StateId> stranded;
    for (StateId s = 0; s < n; ++s)
        if (in_degree[s] == 0 || out_degree[s] == 0)
            stranded.push_back(s);
    while (!stranded.empty()) {
        StateId s = stranded.front();
        stranded.pop_front();
        if (!alive[s])
            continue;
        alive[s] = false;
        for (auto ei : g.out_edges(s)) {
            StateId t = g.edges()[ei].dst;
            if (alive[t] && --in_degree[t] == 0)
                stranded.push_back(t);
        }
        for (auto ei : g.in_edges(s)) {
            StateId t = g.edges()[ei].src;
            if (alive[t] && --out_degree[t] == 0)
                stranded.push_back(t);
        }
    }
    return induced_subgraph(g, alive);
}

LabeledGraph essential_form(const LabeledGraph &g) { return essential_subgraph(g).graph; }

SccPartition scc_decomposition(const LabeledGraph &g) {
    const auto n = g.state_count();
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::uint32_t counter = 0;

    SccPartition out;
    out.component_of.assign(n, 0);

    // Iterative Tarjan: each frame is (state, next out-edge position).
    std::vector<std::pair<StateId, std::size_t>> frames;
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto &[v, pos] = frames.back();
            const auto &succ = g.out_edges(v);
            if (pos < succ.size()) {
                StateId w = g.edges()[succ[pos++]].dst;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const StateId done = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] != index[done])
                continue;
            std::vector<StateId> component;
            StateId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                out.component_of[w] = static_cast<std::uint32_t>(out.components.size());
                component.push_back(w);
            } while (w != done);
            std::sort(component.begin(), component.end());
            bool trivial = false;
            if (component.size() == 1) {
                const auto &outs = g.out_edges(done);
                trivial = std::none_of(outs.begin(), outs.end(), [&](auto ei) { return g.edges()[ei].dst == done; });
            }
            out.components.push_back(std::move(component));
            out.trivial.push_back(trivial);
        }
    }
    return out;
}

bool has_biinfinite_path(const LabeledGraph &g) {
    const auto sccs = scc_decomposition(g);
    return std::find(sccs.trivial.begin(), sccs.trivial.end(), false) != sccs.trivial.end();
}

bool labels_path(const LabeledGraph &g, const Word &word) {
    if (!g.is_labeled())
        throw Error(ErrorCode::Unlabeled, "path labels need a labeled graph");
    if (!g.alphabet()->contains(word))
        throw Error(ErrorCode::AlphabetMismatch, "word uses a symbol outside the graph alphabet");
    std::vector<bool> current(g.state_count(), true);
    bool any = g.state_count() > 0;
    if (word.empty())
        return true;
    for (Symbol s : word) {
        std::vector<bool> next(g.state_count(), false);
        any = false;
        for (const auto &e : g.edges()) {
            if (current[e.src] && e.label == s) {
                next[e.dst] = true;
                any = true;
            }
        }
        if (!any)
            return false;
        current = std::move(next);
    }
    return any;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::vector<std::vector<std::int32_t>> transitions, std::vector<std::vector<StateId>> subsets)
    : alphabet_(std::move(alphabet)), transitions_(std::move(transitions)), subsets_(std::move(subsets)) {
    if (transitions_.empty())
        throw Error(ErrorCode::BadGraph, "a Dfa needs a start state");
    for (const auto &row : transitions_) {
        if (row.size() != alphabet_.size())
            throw Error(ErrorCode::BadGraph, "transition row size differs from alphabet size");
        for (auto t : row)
            if (t >= static_cast<std::int32_t>(transitions_.size()))
                throw Error(ErrorCode::BadGraph, "transition target out of range");
    }
}

std::optional<StateId> Dfa::next(StateId state, Symbol symbol) const {
    const auto t = transitions_.at(state).at(symbol);
    if (t < 0)
        return std::nullopt;
    return static_cast<StateId>(t);
}

bool Dfa::accepts(const Word &word) const {
    StateId state = 0;
    for (Symbol s : word) {
        if (s >= alphabet_.size())
            return false;
        auto t = next(state, s);
        if (!t)
            return false;
        state = *t;
    }
    return true;
}

Dfa determinize_factor_acceptor(const LabeledGraph &a) {
    if (!a.is_labeled())
        throw Error(ErrorCode::Unlabeled, "determinization needs a labeled presentation");
    const auto k = a.alphabet()->size();
    std::vector<StateId> start(a.state_count());
    for (StateId s = 0; s < a.state_count(); ++s)
        start[s] = s;

    std::map<std::vector<StateId>, std::int32_t> ids;
    std::vector<std::vector<StateId>> subsets;
    std::vector<std::vector<std::int32_t>> table;
    ids.emplace(start, 0);
    subsets.push_back(start);
    table.emplace_back(k, -1);

    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        std::vector<std::vector<bool>> targets(k, std::vector<bool>(a.state_count(), false));
        for (StateId p : subsets[cur])
            for (auto ei : a.out_edges(p)) {
                const auto &e = a.edges()[ei];
                targets[*e.label][e.dst] = true;
            }
        for (Symbol s = 0; s < k; ++s) {
            std::vector<StateId> subset;
            for (StateId t = 0; t < a.state_count(); ++t)
                if (targets[s][t])
                    subset.push_back(t);
            if (subset.empty())
                continue;
            auto [it, inserted] = ids.emplace(subset, static_cast<std::int32_t>(subsets.size()));
            if (inserted) {
                subsets.push_back(std::move(subset));
                table.emplace_back(k, -1);
            }
            table[cur][s] = it->second;
        }
    }
    return Dfa(*a.alphabet(), std::move(table), std::move(subsets));
}

namespace {

// Breadth-first walk over pairs of Dfa states, -1 standing for the dead
// state. Returns the first word reaching a pair accepted by `stop`.
template <typename Stop>
std::optional<Word> first_pair_word(const Dfa &d1, const Dfa &d2, Stop stop) {
    if (!(d1.alphabet() == d2.alphabet()))
        throw Error(ErrorCode::AlphabetMismatch, "automata use different alphabets");
    using Pair = std::pair<std::int32_t, std::int32_t>;
    const auto k = d1.alphabet().size();
    std::map<Pair, std::pair<Pair, Symbol>> parent;
    std::deque<Pair> queue{{0, 0}};
    parent.emplace(Pair{0, 0}, std::pair{Pair{-1, -1}, Symbol{0}});
    auto step = [](const Dfa &d, std::int32_t s, Symbol x) -> std::int32_t {
        if (s < 0)
            return -1;
        auto t = d.next(static_cast<StateId>(s), x);
        return t ? static_cast<std::int32_t>(*t) : -1;
    };
    while (!queue.empty()) {
        Pair cur = queue.front();
        queue.pop_front();
        for (Symbol x = 0; x < k; ++x) {
            Pair nxt{step(d1, cur.first, x), step(d2, cur.second, x)};
            if (nxt.first < 0 && nxt.second < 0)
                continue;
            if (parent.count(nxt))
                continue;
            parent.emplace(nxt, std::pair{cur, x});
            if (stop(nxt)) {
                Word word;
                for (Pair p = nxt; p != Pair{0, 0};) {
                    const auto &[prev, sym] = parent.at(p);
                    word.push_back(sym);
                    p = prev;
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(nxt);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Word> language_excess(const Dfa &accepting, const Dfa &rejecting) {
    return first_pair_word(accepting, rejecting, [](const auto &p) { return p.first >= 0 && p.second < 0; });
}

LanguageComparison dfa_language_equal(const Dfa &d1, const Dfa &d2) {
    auto word = first_pair_word(d1, d2, [](const auto &p) { return (p.first < 0) != (p.second < 0); });
    LanguageComparison out;
    if (word) {
        out.equal = false;
        out.counterexample_in_first = d1.accepts(*word);
        out.counterexample = std::move(word);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product automaton

ProductAutomaton product_automaton(const LabeledGraph &a) {
    if (!a.is_labeled())
        throw Error(ErrorCode::Unlabeled, "the product automaton needs a labeled presentation");
    const auto n = a.state_count();
    ProductAutomaton out;
    std::vector<std::string> names;
    names.reserve(n * n);
    for (StateId p = 0; p < n; ++p)
        for (StateId q = 0; q < n; ++q) {
            names.push_back("(" + a.states()[p] + "," + a.states()[q] + ")");
            out.pairs.emplace_back(p, q);
            out.diagonal.push_back(p == q);
        }
    auto id = [n](StateId p, StateId q) { return static_cast<StateId>(p * n + q); };
    std::vector<Edge> edges;
    for (StateId p = 0; p < n; ++p)
        for (StateId q = 0; q < n; ++q)
            for (auto e1 : a.out_edges(p))
                for (auto e2 : a.out_edges(q)) {
                    const auto &x = a.edges()[e1];
                    const auto &y = a.edges()[e2];
                    if (x.label == y.label)
                        edges.push_back(Edge{id(p, q), id(x.dst, y.dst), x.label});
                }
    out.graph = LabeledGraph(std::move(names), std::move(edges), a.alphabet());
    return out;
}

ProductAutomaton essential_form(const ProductAutomaton &product) {
    auto sub = essential_subgraph(product.graph);
    ProductAutomaton out;
    out.graph = std::move(sub.graph);
    for (StateId s : sub.origin) {
        out.pairs.push_back(product.pairs[s]);
        out.diagonal.push_back(product.diagonal[s]);
    }
    return out;
}

} // namespace symshift
