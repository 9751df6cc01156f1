#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sclab/dfa.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;

namespace {

// Two states over {a,b}: a toggles, b stays. Accepts words with an odd number of a.
Dfa parity() { return Dfa::from_rows({"a", "b"}, 0, {1}, {{1, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("positive_mod keeps results in 0..p-1") {
    CHECK(positive_mod(-1, 5) == 4);
    CHECK(positive_mod(7, 5) == 2);
    CHECK(positive_mod(0, 3) == 0);
    CHECK_THROWS_AS(positive_mod(1, 0), std::invalid_argument);
}

TEST_CASE("state maps compose right to left") {
    const StateMap shift{{1, 2, 0}};
    const StateMap swap{{1, 0, 2}};
    // (shift o swap)(0) = shift(1) = 2
    CHECK(compose(shift, swap).image == std::vector<State>{2, 1, 0});
    CHECK(compose(swap, shift).image == std::vector<State>{0, 2, 1});
    CHECK(compose(StateMap::identity(3), shift) == shift);
    CHECK_THROWS_AS(compose(shift, StateMap::identity(2)), std::invalid_argument);
}

TEST_CASE("permutations and cycle lengths") {
    CHECK(is_permutation(StateMap{{1, 2, 0, 4, 3}}));
    CHECK_FALSE(is_permutation(StateMap{{0, 0, 2}}));
    auto lens = cycle_lengths(StateMap{{1, 2, 0, 4, 3, 5}});
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS_AS(cycle_lengths(StateMap{{0, 0}}), std::domain_error);
}

TEST_CASE("constructor rejects malformed automata") {
    CHECK_THROWS_AS(Dfa({}, 1, 0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa({"a"}, 0, 0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa({"a"}, 2, 2, {}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa({"a"}, 2, 0, {}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa({"a"}, 2, 0, {}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa({"a"}, 2, 0, {5}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa::from_rows({"a", "b"}, 0, {}, {{0}}), std::invalid_argument);
}

TEST_CASE("finals are sorted and deduplicated") {
    const Dfa d({"a"}, 3, 0, {2, 0, 2}, {1, 2, 0});
    CHECK(d.finals() == std::vector<State>{0, 2});
    CHECK(d.is_final(0));
    CHECK_FALSE(d.is_final(1));
}

TEST_CASE("acceptance and stepping") {
    const Dfa d = parity();
    CHECK(d.accepts({0}));
    CHECK_FALSE(d.accepts({0, 1, 0}));
    CHECK(d.accepts({1, 0, 1}));
    CHECK_FALSE(d.accepts({}));
    CHECK(step(d, 1, {0, 0, 0}) == 0);
    CHECK_THROWS_AS(step(d, 2, {}), std::out_of_range);
    CHECK_THROWS_AS(step(d, 0, {2}), std::out_of_range);
    CHECK(d.letter("b") == 1);
    CHECK_THROWS_AS(d.letter("z"), std::out_of_range);
}

TEST_CASE("trivial automata") {
    CHECK(Dfa::trivial({"a", "b"}, true).accepts({0, 1}));
    CHECK_FALSE(Dfa::trivial({"a"}, false).accepts({}));
    CHECK(is_empty_language(Dfa::trivial({"a"}, false)));
    CHECK_FALSE(is_empty_language(parity()));
}

TEST_CASE("structure comparison ignores letter names, equality does not") {
    const Dfa a = parity();
    const Dfa b = Dfa::from_rows({"x", "y"}, 0, {1}, {{1, 0}, {0, 1}});
    CHECK(a.same_structure(b));
    CHECK_FALSE(a == b);
    CHECK(a == parity());
}

TEST_CASE("words parse and format with letter names") {
    const Dfa d = parity();
    CHECK(parse_word(d, "abba") == Word{0, 1, 1, 0});
    CHECK(parse_word(d, "") == Word{});
    CHECK(format_word(d, {1, 0}) == "ba");
    CHECK_THROWS(parse_word(d, "abc"));
    const Dfa long_names = Dfa::from_rows({"up", "down"}, 0, {}, {{0, 0}});
    CHECK(parse_word(long_names, "up down up") == Word{0, 1, 0});
    CHECK(format_word(long_names, {1, 0}) == "down up");
}

TEST_CASE("reachable states come out in breadth-first order") {
    // 0 -a-> 2, 0 -b-> 1, 2 -a-> 3; 4 is unreachable
    const Dfa d = Dfa::from_rows({"a", "b"}, 0, {3}, {{2, 1}, {1, 1}, {3, 2}, {3, 3}, {0, 0}});
    CHECK(reachable_states(d) == std::vector<State>{0, 2, 1, 3});
    const Dfa dead = Dfa::from_rows({"a"}, 0, {1}, {{0}, {1}});
    CHECK(is_empty_language(dead));
}

TEST_CASE("letter actions on a Brzozowski automaton") {
    const Dfa x = brzozowski(BrzozowskiSpec::from_slots(4, {"a", "b", "c", "d"}, "a", "b", "c"));
    CHECK(letter_action(x, 0).image == std::vector<State>{1, 2, 3, 0});
    CHECK(letter_action(x, 1).image == std::vector<State>{1, 0, 2, 3});
    CHECK(letter_action(x, 2).image == std::vector<State>{0, 0, 2, 3});
    CHECK(letter_action(x, 3) == StateMap::identity(4));
    CHECK(word_action(x, {0, 0}).image == std::vector<State>{2, 3, 0, 1});
    CHECK_THROWS_AS(letter_action(x, 4), std::out_of_range);
}

TEST_CASE("inverse words undo a permutation") {
    const Dfa x = brzozowski(BrzozowskiSpec::from_slots(5, {"a", "b", "c"}, "a", "b", "c"));
    for (const Word& w : {Word{0}, Word{1}, Word{0, 1}, Word{0, 0, 1, 0}}) {
        REQUIRE(induces_permutation(x, w));
        const Word inv = inverse_word(x, w);
        Word both = w;
        both.insert(both.end(), inv.begin(), inv.end());
        CHECK(word_action(x, both) == StateMap::identity(5));
    }
    // the 5-cycle has order 5, so its inverse is a^4
    CHECK(inverse_word(x, {0}) == Word{0, 0, 0, 0});
    CHECK(inverse_word(x, {}) == Word{});
    CHECK_FALSE(induces_permutation(x, {2}));
    CHECK_THROWS_AS(inverse_word(x, {2}), std::domain_error);
}

TEST_CASE("acceptance agrees with stepping on random automata") {
    std::mt19937_64 rng(7);
    const auto words = oracle::all_words(2, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const Dfa d = oracle::random_dfa(rng, 1 + trial % 6, 2);
        for (const Word& w : words) {
            CHECK(d.accepts(w) == d.is_final(step(d, d.initial(), w)));
        }
    }
}

TEST_CASE("worked step examples") {
    const Dfa fig = brzozowski(BrzozowskiSpec::from_slots(5, {"a", "b", "c", "d"}, "a", "", "c"));
    CHECK(step(fig, 1, parse_word(fig, "c")) == 0);
    CHECK(step(fig, 3, {}) == 3);
    const Dfa x4 = brzozowski(BrzozowskiSpec::from_slots(4, {"a", "b"}, "a", "b", ""));
    CHECK(step(x4, 0, parse_word(x4, "ab")) == 0);
    CHECK(inverse_word(x4, parse_word(x4, "b")) == parse_word(x4, "b"));
    const Dfa x3 = brzozowski(BrzozowskiSpec::from_slots(3, {"a", "b"}, "a", "", ""));
    CHECK(inverse_word(x3, {0}) == parse_word(x3, "aa"));
}
