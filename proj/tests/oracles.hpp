#pragma once

// Brute-force reference computations for the test suites. Nothing here goes
// through the graph constructions of the library; everything is plain word
// enumeration over the forbidden list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "symshift/core.hpp"
#include "symshift/graphs.hpp"
#include "symshift/localmaps.hpp"

namespace oracle {

using symshift::LabeledGraph;
using symshift::LocalRule;
using symshift::SftSpec;
using symshift::Symbol;
using symshift::Word;

inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    Word w(n, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == k - 1)
            w[--i] = 0;
        if (i == 0)
            break;
        ++w[i - 1];
    }
    return out;
}

inline bool occurs_at(const Word &text, std::size_t pos, const Word &f) {
    if (pos + f.size() > text.size())
        return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (text[pos + i] != f[i])
            return false;
    return true;
}

inline bool avoids(const SftSpec &spec, const Word &text) {
    for (std::size_t pos = 0; pos < text.size(); ++pos)
        for (const auto &f : spec.forbidden())
            if (occurs_at(text, pos, f))
                return false;
    return true;
}

/// The periodization of w avoids every forbidden word: check all windows
/// starting in one period of w repeated past the longest forbidden word.
inline bool periodization_allowed(const SftSpec &spec, const Word &w) {
    const std::size_t n = w.size();
    Word t;
    while (t.size() < n + spec.max_forbidden_length())
        t.insert(t.end(), w.begin(), w.end());
    for (std::size_t pos = 0; pos < n; ++pos)
        for (const auto &f : spec.forbidden())
            if (occurs_at(t, pos, f))
                return false;
    return true;
}

inline std::uint64_t census_p(const SftSpec &spec, std::size_t n) {
    std::uint64_t count = 0;
    for (const auto &w : all_words(spec.alphabet().size(), n))
        count += periodization_allowed(spec, w);
    return count;
}

/// Words of length n whose periodization lies in the shift.
inline std::vector<Word> periodic_words(const SftSpec &spec, std::size_t n) {
    std::vector<Word> out;
    for (const auto &w : all_words(spec.alphabet().size(), n))
        if (periodization_allowed(spec, w))
            out.push_back(w);
    return out;
}

/// Membership in L(X): w extends to a locally allowed word with `reach`
/// extra symbols on each side. With reach = |A|^M + M an M-block repeats on
/// each side, so the extension continues forever.
inline bool in_language(const SftSpec &spec, const Word &w) {
    std::size_t blocks = 1;
    for (std::size_t i = 0; i < spec.memory(); ++i)
        blocks *= spec.alphabet().size();
    const std::size_t reach = blocks + spec.memory();
    const auto k = static_cast<Symbol>(spec.alphabet().size());
    if (!avoids(spec, w))
        return false;
    Word cur = w;
    std::function<bool(std::size_t)> left = [&](std::size_t depth) -> bool {
        if (depth == reach)
            return true;
        for (Symbol s = 0; s < k; ++s) {
            cur.insert(cur.begin(), s);
            bool ok = false;
            // Only windows touching the new first symbol can be new.
            Word head(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(std::min(cur.size(), spec.max_forbidden_length())));
            if (avoids(spec, head))
                ok = left(depth + 1);
            cur.erase(cur.begin());
            if (ok)
                return true;
        }
        return false;
    };
    // When |w| >= M no forbidden window meets both extensions, so the two
    // sides can be searched separately.
    const bool independent = w.size() >= spec.memory();
    std::function<bool(std::size_t)> right = [&](std::size_t depth) -> bool {
        if (depth == reach)
            return independent ? true : left(0);
        for (Symbol s = 0; s < k; ++s) {
            cur.push_back(s);
            bool ok = false;
            const auto tail_len = std::min(cur.size(), spec.max_forbidden_length());
            Word tail(cur.end() - static_cast<std::ptrdiff_t>(tail_len), cur.end());
            if (avoids(spec, tail))
                ok = right(depth + 1);
            cur.pop_back();
            if (ok)
                return true;
        }
        return false;
    };
    if (!right(0))
        return false;
    if (!independent)
        return true;
    cur = w;
    return left(0);
}

/// Depth-first search for a path labeled `w`.
inline bool graph_labels(const LabeledGraph &g, const Word &w) {
    if (w.empty())
        return true;
    std::function<bool(symshift::StateId, std::size_t)> go = [&](symshift::StateId s, std::size_t i) -> bool {
        if (i == w.size())
            return true;
        for (const auto &e : g.edges())
            if (e.src == s && e.label == w[i] && go(e.dst, i + 1))
                return true;
        return false;
    };
    for (symshift::StateId s = 0; s < g.state_count(); ++s)
        if (go(s, 0))
            return true;
    return false;
}

/// Number of closed edge paths of length n.
inline std::uint64_t closed_paths(const LabeledGraph &g, std::size_t n) {
    std::uint64_t count = 0;
    std::function<void(symshift::StateId, symshift::StateId, std::size_t)> go = [&](symshift::StateId start,
                                                                                    symshift::StateId s, std::size_t left) {
        if (left == 0) {
            count += s == start;
            return;
        }
        for (const auto &e : g.edges())
            if (e.src == s)
                go(start, e.dst, left - 1);
    };
    for (symshift::StateId s = 0; s < g.state_count(); ++s)
        go(s, s, n);
    return count;
}

/// Image of a finite word: one output per full window.
inline Word apply(const LocalRule &rule, const Word &u) {
    Word out;
    const auto w = rule.window_length();
    for (std::size_t i = 0; i + w <= u.size(); ++i) {
        auto out_sym = rule.lookup(Word(u.begin() + static_cast<std::ptrdiff_t>(i),
                                        u.begin() + static_cast<std::ptrdiff_t>(i + w)));
        if (!out_sym)
            return {};
        out.push_back(*out_sym);
    }
    return out;
}

/// Does some word of L(domain) of length |w| + 2*pad map onto w in its
/// middle? (pad >= radius.)
inline bool has_preimage(const LocalRule &rule, const Word &w, std::size_t pad) {
    const auto &domain = rule.domain();
    const auto r = rule.radius();
    for (const auto &u : all_words(domain.alphabet().size(), w.size() + 2 * pad)) {
        if (!avoids(domain, u))
            continue;
        Word middle(u.begin() + static_cast<std::ptrdiff_t>(pad - r),
                    u.begin() + static_cast<std::ptrdiff_t>(pad + w.size() + r));
        if (oracle::apply(rule, middle) == w && in_language(domain, u))
            return true;
    }
    return false;
}

/// Shortest (then lexicographically first) word of L(target) of length <= max_len
/// without a preimage.
inline std::optional<Word> shortest_orphan(const LocalRule &rule, const SftSpec &target, std::size_t max_len,
                                           std::size_t pad) {
    for (std::size_t n = 1; n <= max_len; ++n)
        for (const auto &w : all_words(target.alphabet().size(), n))
            if (in_language(target, w) && !has_preimage(rule, w, pad))
                return w;
    return std::nullopt;
}

/// Two distinct points of P_n(domain), n <= max_n, with the same image.
inline bool periodic_collision(const LocalRule &rule, std::size_t max_n) {
    const auto r = rule.radius();
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::map<Word, Word> seen;
        for (const auto &w : periodic_words(rule.domain(), n)) {
            Word unrolled;
            for (std::size_t i = 0; i < n + 2 * r; ++i)
                unrolled.push_back(w[(i + n * (r + 1) - r) % n]);
            const Word img = oracle::apply(rule, unrolled);
            auto [it, inserted] = seen.emplace(img, w);
            if (!inserted && it->second != w)
                return true;
        }
    }
    return false;
}

/// Two distinct words of L(domain) of length L <= max_len agreeing on their
/// first and last max(2r, M) symbols and having the same image: a finite
/// difference that the map erases.
inline bool finite_collision(const LocalRule &rule, std::size_t max_len) {
    const auto r = rule.radius();
    const auto &domain = rule.domain();
    const auto rim = std::max(2 * r, domain.memory());
    for (std::size_t len = 2 * rim + 1; len <= max_len; ++len) {
        std::map<std::pair<Word, Word>, std::vector<Word>> groups;
        for (const auto &u : all_words(domain.alphabet().size(), len)) {
            if (!avoids(domain, u))
                continue;
            Word ends(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(rim));
            ends.insert(ends.end(), u.end() - static_cast<std::ptrdiff_t>(rim), u.end());
            groups[{ends, oracle::apply(rule, u)}].push_back(u);
        }
        for (auto &[key, members] : groups) {
            if (members.size() < 2)
                continue;
            // Only pairs of genuine language words count.
            std::size_t in_lang = 0;
            for (const auto &u : members)
                in_lang += in_language(domain, u);
            if (in_lang >= 2)
                return true;
        }
    }
    return false;
}

/// Deterministic family of small SFTs: alphabets of size 2-3, 1-3 forbidden
/// words of length 1-3, with no length-1 forbidden word on binary alphabets
/// so most members are non-empty.
inline std::vector<SftSpec> spec_family(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<SftSpec> out;
    const symshift::Alphabet binary({"0", "1"});
    const symshift::Alphabet ternary({"0", "1", "2"});
    while (out.size() < count) {
        const bool tern = rng() % 2 == 0;
        const auto &alpha = tern ? ternary : binary;
        std::vector<Word> forbidden;
        const auto nf = 1 + rng() % 3;
        for (std::size_t i = 0; i < nf; ++i) {
            std::size_t len = 1 + rng() % 3;
            if (!tern && len == 1)
                len = 2;
            Word w(len);
            for (auto &s : w)
                s = rng() % alpha.size();
            forbidden.push_back(w);
        }
        out.emplace_back(alpha, forbidden);
    }
    return out;
}

} // namespace oracle
