#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symshift/shifts.hpp"

using namespace symshift;
using testing::bits;

namespace {

std::vector<SftSpec> fixed_specs() {
    using testing::sft;
    const auto b = testing::binary();
    const auto t = testing::ternary();
    return {
        sft(b, {"11"}),         sft(b, {"01"}),        sft(b, {"00", "11"}), sft(b, {"101"}),
        sft(b, {"111", "010"}), sft(b, {"10", "011"}), sft(t, {"12", "21"}), sft(t, {"0", "112"}),
        sft(t, {"00", "11", "22"}), sft(t, {"102", "20"}),
    };
}

std::vector<Edge> sorted_edges(const LabeledGraph &g) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
    });
    return edges;
}

bool contains_word(const PeriodicConfig &c, const Word &w) {
    for (std::int64_t start = 0; start < static_cast<std::int64_t>(c.least_period()); ++start)
        if (c.window(start, w.size()) == w)
            return true;
    return false;
}

} // namespace

TEST_CASE("higher-block graph examples") {
    const auto full = build_higher_block(testing::full2(), 1);
    CHECK(full.graph.state_count() == 2);
    CHECK(full.graph.edge_count() == 4);

    const auto golden = build_higher_block(testing::golden(), 1);
    CHECK(golden.words == std::vector<Word>{bits("0"), bits("1")});
    CHECK(sorted_edges(golden.graph) == std::vector<Edge>{{0, 0, 0}, {0, 1, 0}, {1, 0, 1}});

    const auto one = build_higher_block(testing::onesided(), 1);
    CHECK(sorted_edges(one.graph) == std::vector<Edge>{{0, 0, 0}, {1, 0, 1}, {1, 1, 1}});

    const auto golden2 = build_higher_block(testing::golden(), 2);
    CHECK(golden2.words == std::vector<Word>{bits("00"), bits("01"), bits("10")});
    CHECK(golden2.graph.edge_count() == 5);

    try {
        build_higher_block(testing::sft(testing::binary(), {"101"}), 1);
        FAIL("order below memory accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OrderTooSmall);
    }
}

TEST_CASE("is_empty and language_member") {
    CHECK_FALSE(is_empty(testing::golden()));
    CHECK(is_empty(testing::sft(testing::binary(), {"0", "1"})));
    CHECK(is_empty(testing::sft(testing::binary(), {"00", "1"})));
    CHECK(language_member(testing::golden(), bits("0100")));
    CHECK_FALSE(language_member(testing::golden(), bits("0110")));
    CHECK(language_member(testing::golden(), Word{}));

    const Alphabet ab({"a", "b"});
    const auto isolated = testing::sft(ab, {"aa", "ab", "ba"});
    CHECK_FALSE(language_member(isolated, testing::word(ab, "a")));
    CHECK(language_member(isolated, testing::word(ab, "bbb")));

    // Nothing may follow a 0, so "10" is locally allowed but not extendable.
    const auto dead_end = testing::sft(testing::binary(), {"00", "01"});
    CHECK_FALSE(language_member(dead_end, bits("10")));
    CHECK(language_member(dead_end, bits("11")));
}

TEST_CASE("language_member agrees with brute-force extension") {
    for (const auto &spec : oracle::spec_family(40, 101))
        for (std::size_t len = 0; len <= 5; ++len)
            for (const auto &w : oracle::all_words(spec.alphabet().size(), len)) {
                const bool member = language_member(spec, w);
                CHECK(member == oracle::in_language(spec, w));
                // Factor closure.
                if (member && !w.empty()) {
                    CHECK(language_member(spec, Word(w.begin() + 1, w.end())));
                    CHECK(language_member(spec, Word(w.begin(), w.end() - 1)));
                }
            }
}

TEST_CASE("irreducibility and mixing examples") {
    CHECK(is_irreducible(testing::golden()));
    CHECK(is_mixing(testing::golden()));
    CHECK(is_irreducible(testing::full2()));
    CHECK_FALSE(is_irreducible(testing::onesided()));
    CHECK_FALSE(is_mixing(testing::onesided()));
    // Period 2: 0 and 1 must alternate.
    const auto alternating = testing::sft(testing::binary(), {"00", "11"});
    CHECK(is_irreducible(alternating));
    CHECK_FALSE(is_mixing(alternating));
    CHECK(cycle_period(essential_presentation(alternating).graph) == 2);
    CHECK_THROWS_AS(is_irreducible(testing::sft(testing::binary(), {"0", "1"})), Error);
}

TEST_CASE("periodic census examples") {
    CHECK(periodic_census(testing::golden(), 4).p == std::vector<std::uint64_t>{1, 3, 4, 7});
    CHECK(periodic_census(testing::golden(), 4).q == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(periodic_census(testing::onesided(), 3).p == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(periodic_census(testing::full2(), 3).p == std::vector<std::uint64_t>{2, 4, 8});
    CHECK(periodic_census(testing::sft(testing::binary(), {"0", "1"}), 2).p == std::vector<std::uint64_t>{0, 0});
    CHECK_THROWS_AS(periodic_census(testing::golden(), 0), Error);
}

TEST_CASE("periodic census agrees with the cyclic-word oracle") {
    for (const auto &spec : oracle::spec_family(30, 202)) {
        const auto census = periodic_census(spec, 9);
        for (std::size_t n = 1; n <= 9; ++n)
            CHECK(census.p[n - 1] == oracle::census_p(spec, n));
    }
}

TEST_CASE("census and density are invariant under recoding") {
    for (const auto &spec : fixed_specs()) {
        const auto m = spec.memory();
        const auto base = periodic_census(spec, 8, m);
        for (std::size_t extra = 1; extra <= 2; ++extra) {
            CHECK(periodic_census(spec, 8, m + extra).p == base.p);
            if (!is_empty(spec))
                CHECK(periodic_density(spec, m + extra) == periodic_density(spec, m));
        }
    }
}

TEST_CASE("irreducible shifts have dense periodic points") {
    for (const auto &spec : oracle::spec_family(60, 303)) {
        if (is_empty(spec))
            continue;
        if (is_irreducible(spec))
            CHECK(periodic_density(spec));
    }
    CHECK_FALSE(periodic_density(testing::onesided()));
    CHECK(periodic_density(testing::sft(testing::binary(), {"00", "11"})));
    CHECK_THROWS_AS(periodic_density(testing::sft(testing::binary(), {"0", "1"})), Error);
}

TEST_CASE("density verdict matches witness search") {
    for (const auto &spec : oracle::spec_family(40, 404)) {
        if (is_empty(spec))
            continue;
        const bool dense = periodic_density(spec);
        bool every_word_witnessed = true;
        for (const auto &w : oracle::all_words(spec.alphabet().size(), 4)) {
            if (!oracle::in_language(spec, w))
                continue;
            const auto witness = periodic_witness(spec, w);
            if (witness) {
                CHECK(contains_periodic(spec, *witness));
                CHECK(witness->window(0, w.size()) == w);
                std::set<PeriodicConfig> brute;
                for (const auto &p : oracle::periodic_words(spec, witness->least_period()))
                    brute.insert(normalize_periodic(p));
                CHECK(brute.count(*witness) == 1);
            }
            every_word_witnessed = every_word_witnessed && witness.has_value();
            if (dense)
                CHECK(witness.has_value());
        }
        CHECK(dense == every_word_witnessed);
    }
}

TEST_CASE("enumerate_periodic examples") {
    const auto onesided = enumerate_periodic(testing::onesided(), 6);
    REQUIRE(onesided.size() == 2);
    CHECK(onesided[0] == normalize_periodic(bits("0")));
    CHECK(onesided[1] == normalize_periodic(bits("1")));

    const auto golden2 = enumerate_periodic(testing::golden(), 2);
    CHECK(golden2 == std::vector<PeriodicConfig>{normalize_periodic(bits("0")), normalize_periodic(bits("01")),
                                                 normalize_periodic(bits("10"))});
    const auto ones = enumerate_periodic(testing::sft(testing::binary(), {"0"}), 1);
    CHECK(ones == std::vector<PeriodicConfig>{normalize_periodic(bits("1"))});

    const auto golden = enumerate_periodic(testing::golden(), 4);
    CHECK(golden.size() == 7);
    for (const auto &c : golden) {
        CHECK(4 % c.least_period() == 0);
        CHECK(contains_periodic(testing::golden(), c));
    }
    CHECK(std::is_sorted(golden.begin(), golden.end(),
                         [](const PeriodicConfig &a, const PeriodicConfig &b) { return a.window(0, 4) < b.window(0, 4); }));
}

TEST_CASE("enumerate_periodic matches the census") {
    for (const auto &spec : oracle::spec_family(20, 505))
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto points = enumerate_periodic(spec, n);
            CHECK(points.size() == oracle::census_p(spec, n));
            std::set<PeriodicConfig> distinct(points.begin(), points.end());
            CHECK(distinct.size() == points.size());
        }
}

TEST_CASE("periodic_witness examples") {
    const auto w = periodic_witness(testing::golden(), bits("0100"));
    REQUIRE(w);
    CHECK(w->window(0, 4) == bits("0100"));
    CHECK(contains_word(*w, bits("0100")));
    CHECK_FALSE(periodic_witness(testing::golden(), bits("11")));
    CHECK_FALSE(periodic_witness(testing::onesided(), bits("10")));
    CHECK(periodic_witness(testing::onesided(), bits("11")));
}

TEST_CASE("sofic_equal examples") {
    const auto golden1 = essential_presentation(testing::golden(), 1).graph;
    const auto golden2 = essential_presentation(testing::golden(), 2).graph;
    const auto full = essential_presentation(testing::full2(), 1).graph;
    CHECK(sofic_equal(golden1, golden2).equal);
    const auto cmp = sofic_equal(golden1, full);
    CHECK_FALSE(cmp.equal);
    REQUIRE(cmp.counterexample);
    CHECK(*cmp.counterexample == bits("11"));
    CHECK_FALSE(cmp.counterexample_in_first);

    // A non-essential tail does not change the shift.
    const LabeledGraph tail({"x", "y"}, {{0, 0, 0}, {1, 0, 1}}, testing::binary());
    const LabeledGraph zero({"x"}, {{0, 0, 0}}, testing::binary());
    CHECK(sofic_equal(tail, zero).equal);

    const LabeledGraph bare({"x"}, {{0, 0, std::nullopt}});
    CHECK_THROWS_AS(sofic_equal(bare, zero), Error);
    const LabeledGraph tern({"x"}, {{0, 0, 2}}, testing::ternary());
    CHECK_THROWS_AS(sofic_equal(tern, zero), Error);
}

TEST_CASE("sofic_equal matches exhaustive language comparison") {
    const auto specs = oracle::spec_family(30, 606);
    for (std::size_t i = 0; i < specs.size(); ++i)
        for (std::size_t j = 0; j < specs.size(); ++j) {
            if (specs[i].alphabet().size() != specs[j].alphabet().size())
                continue;
            const auto a = essential_presentation(specs[i]).graph;
            const auto b = essential_presentation(specs[j]).graph;
            const auto cmp = sofic_equal(a, b);
            bool same = true;
            for (std::size_t len = 0; len <= 6 && same; ++len)
                for (const auto &w : oracle::all_words(specs[i].alphabet().size(), len))
                    if (oracle::in_language(specs[i], w) != oracle::in_language(specs[j], w)) {
                        same = false;
                        break;
                    }
            if (!cmp.equal) {
                const auto &w = *cmp.counterexample;
                CHECK(oracle::in_language(specs[i], w) == cmp.counterexample_in_first);
                CHECK(oracle::in_language(specs[j], w) != cmp.counterexample_in_first);
            } else {
                CHECK(same);
            }
        }
}

TEST_CASE("pasting_check") {
    const auto golden = testing::golden();
    CHECK(pasting_check(golden, bits("10"), bits("0"), bits("01")));
    CHECK(pasting_check(golden, bits("0"), bits("0"), bits("1")));
    CHECK(pasting_check(golden, bits("1"), bits("0"), bits("1")));
    CHECK(pasting_check(testing::full2(), bits("11"), bits("1"), bits("1")));
    CHECK_FALSE(pasting_check(golden, bits("1"), bits("1"), bits("0")));
    try {
        pasting_check(golden, bits("1"), Word{}, bits("0"));
        FAIL("short overlap accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OverlapTooShort);
    }
}

TEST_CASE("pasting holds on random triples") {
    std::mt19937 rng(9);
    for (const auto &spec : oracle::spec_family(10, 707)) {
        const auto k = spec.alphabet().size();
        const auto m = spec.memory();
        auto random_word = [&](std::size_t len) {
            Word w(len);
            for (auto &s : w)
                s = rng() % k;
            return w;
        };
        for (int trial = 0; trial < 80; ++trial) {
            const auto u = random_word(rng() % 4);
            const auto v = random_word(m + rng() % 2);
            const auto w = random_word(rng() % 4);
            Word uv = u, vw = v, uvw = u;
            uv.insert(uv.end(), v.begin(), v.end());
            vw.insert(vw.end(), w.begin(), w.end());
            uvw.insert(uvw.end(), v.begin(), v.end());
            uvw.insert(uvw.end(), w.begin(), w.end());
            if (language_member(spec, uv) && language_member(spec, vw))
                CHECK(pasting_check(spec, u, v, w));
            CHECK(pasting_check(spec, u, v, w) == oracle::in_language(spec, uvw));
        }
    }
}
