#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symshift/core.hpp"

namespace symshift {

using StateId = std::uint32_t;

struct Edge {
    StateId src = 0;
    StateId dst = 0;
    std::optional<Symbol> label;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Finite directed multigraph. Either every edge carries a label (a
/// presentation of a sofic shift) or none does (an edge shift).
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::vector<std::string> states, std::vector<Edge> edges, std::optional<Alphabet> alphabet = std::nullopt);

    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return states_.empty(); }
    const std::vector<std::string> &states() const noexcept { return states_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const std::optional<Alphabet> &alphabet() const noexcept { return alphabet_; }
    bool is_labeled() const noexcept { return labeled_; }

    /// Indices into edges(), grouped by source / destination state.
    const std::vector<std::uint32_t> &out_edges(StateId s) const { return out_[s]; }
    const std::vector<std::uint32_t> &in_edges(StateId s) const { return in_[s]; }

    std::optional<StateId> find_state(const std::string &name) const;

private:
    std::vector<std::string> states_;
    std::vector<Edge> edges_;
    std::optional<Alphabet> alphabet_;
    bool labeled_ = false;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> in_;
};

/// A subgraph together with the index in the parent graph of each kept state.
struct Subgraph {
    LabeledGraph graph;
    std::vector<StateId> origin;
};

/// Keeps the states flagged in `keep` and the edges between them.
Subgraph induced_subgraph(const LabeledGraph &g, const std::vector<bool> &keep);

/// Maximal subgraph where every state has an incoming and an outgoing edge.
Subgraph essential_subgraph(const LabeledGraph &g);
LabeledGraph essential_form(const LabeledGraph &g);

struct SccPartition {
    std::vector<std::vector<StateId>> components;
    std::vector<std::uint32_t> component_of;
    /// A component is trivial when it is a single state without a self-loop.
    std::vector<bool> trivial;
};

SccPartition scc_decomposition(const LabeledGraph &g);

bool has_biinfinite_path(const LabeledGraph &g);

/// True iff some finite path of `g` carries the label sequence `word`.
bool labels_path(const LabeledGraph &g, const Word &word);

/// Deterministic acceptor whose every state accepts; state 0 is the start.
/// next(state, symbol) is nullopt where the run dies.
class Dfa {
public:
    Dfa(Alphabet alphabet, std::vector<std::vector<std::int32_t>> transitions,
        std::vector<std::vector<StateId>> subsets = {});

    const Alphabet &alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return transitions_.size(); }
    std::optional<StateId> next(StateId state, Symbol symbol) const;
    bool accepts(const Word &word) const;

    /// For determinized acceptors, the set of source states behind each state.
    const std::vector<std::vector<StateId>> &subsets() const noexcept { return subsets_; }

private:
    Alphabet alphabet_;
    std::vector<std::vector<std::int32_t>> transitions_;
    std::vector<std::vector<StateId>> subsets_;
};

/// Subset construction starting from the set of all states. On an essential
/// presentation the accepted language is the factor language of the shift.
Dfa determinize_factor_acceptor(const LabeledGraph &a);

/// Shortest word accepted by `accepting` and rejected by `rejecting`.
std::optional<Word> language_excess(const Dfa &accepting, const Dfa &rejecting);

struct LanguageComparison {
    bool equal = true;
    /// Shortest word in exactly one language, when the languages differ.
    std::optional<Word> counterexample;
    /// True when the counterexample belongs to the first language.
    bool counterexample_in_first = false;
};

LanguageComparison dfa_language_equal(const Dfa &d1, const Dfa &d2);

struct ProductAutomaton {
    LabeledGraph graph;
    std::vector<std::pair<StateId, StateId>> pairs;
    std::vector<bool> diagonal;
};

/// Label-synchronized square A*A: (p,q) -x-> (r,s) iff p -x-> r and q -x-> s.
ProductAutomaton product_automaton(const LabeledGraph &a);

/// Essential trimming that keeps pair and diagonal bookkeeping.
ProductAutomaton essential_form(const ProductAutomaton &product);

} // namespace symshift
