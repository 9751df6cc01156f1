#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sclab/minimize.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;

TEST_CASE("role names round trip") {
    for (TransformRole r : kAllRoles) {
        CHECK(parse_role(role_name(r)) == r);
    }
    CHECK(parse_role("K") == TransformRole::Contraction10);
    CHECK_THROWS_AS(parse_role("swap"), std::invalid_argument);
}

TEST_CASE("role maps") {
    CHECK(role_map(TransformRole::Cycle, 3).image == std::vector<State>{1, 2, 0});
    CHECK(role_map(TransformRole::Transposition01, 3).image == std::vector<State>{1, 0, 2});
    CHECK(role_map(TransformRole::Contraction10, 3).image == std::vector<State>{0, 0, 2});
    CHECK(role_map(TransformRole::Identity, 3) == StateMap::identity(3));
}

TEST_CASE("the five-state example automaton has the expected table") {
    const auto spec = BrzozowskiSpec::from_slots(5, {"a", "b", "c", "d"}, "a", "-", "c");
    CHECK(spec.to_string() == "X_5(a,-,c;{b,d})");
    const Dfa x = brzozowski(spec);
    const std::vector<std::vector<State>> rows = {
        {1, 0, 0, 0}, {2, 1, 0, 1}, {3, 2, 2, 2}, {4, 3, 3, 3}, {0, 4, 4, 4}};
    CHECK(x == Dfa::from_rows({"a", "b", "c", "d"}, 0, {4}, rows));
}

TEST_CASE("identity letters never leave the initial state") {
    const Dfa x = brzozowski(BrzozowskiSpec::from_slots(3, {"a", "b"}, "", "", ""));
    CHECK(is_empty_language(x));
    CHECK(reachable_states(x) == std::vector<State>{0});
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(BrzozowskiSpec::from_slots(3, {"a", "b"}, "a", "a", ""), std::invalid_argument);
    CHECK_THROWS_AS(BrzozowskiSpec::from_slots(3, {"a", "b"}, "z", "", ""), std::invalid_argument);
    CHECK_THROWS_AS(BrzozowskiSpec::from_slots(1, {"a", "b"}, "", "b", ""), std::invalid_argument);
    BrzozowskiSpec bad{3, {"a", "b"}, {TransformRole::Cycle, TransformRole::Cycle}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    BrzozowskiSpec short_roles{3, {"a", "b"}, {TransformRole::Cycle}};
    CHECK_THROWS_AS(brzozowski(short_roles), std::invalid_argument);
}

TEST_CASE("shape names round trip") {
    for (Shape s : kAllShapes) {
        CHECK(parse_shape(shape_name(s)) == s);
    }
    CHECK_THROWS_AS(parse_shape("triple"), std::invalid_argument);
}

TEST_CASE("witness families") {
    const auto bb = witness_specs(Shape::BoolBool, 3, 3, 3);
    CHECK(bb[1].alphabet == std::vector<std::string>{"a", "b"});
    CHECK(bb[1].roles[1] == TransformRole::Transposition01);
    const auto cb = witness_specs(Shape::CatThenBool, 3, 3, 3);
    CHECK(cb[2].alphabet == std::vector<std::string>{"a", "b"});
    CHECK(cb[2].roles[1] == TransformRole::Cycle);
    CHECK(cb[2].roles[0] == TransformRole::Transposition01);
    CHECK(witness_specs(Shape::DoubleCat, 3, 4, 5)[0].to_string() == "X_3(b,c,-;{a})");
    CHECK(witness_specs(Shape::CatOfBool, 3, 4, 5)[1].to_string() == "X_4(b,a,c;{})");
    CHECK(witness_specs(Shape::BoolThenCat, 3, 4, 5)[2].to_string() == "X_5(a,-,b;{c})");
    CHECK_THROWS_AS(witness(Shape::BoolBool, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("every witness component is minimal at its nominal size") {
    for (Shape s : kAllShapes) {
        for (std::size_t m = 3; m <= 6; ++m) {
            for (std::size_t n = 3; n <= 6; ++n) {
                for (std::size_t p = 3; p <= 6; ++p) {
                    const auto w = witness(s, m, n, p);
                    CHECK(state_complexity(w[0]) == m);
                    CHECK(state_complexity(w[1]) == n);
                    CHECK(state_complexity(w[2]) == p);
                    CHECK(w[0].alphabet() == witness_alphabet(s));
                }
            }
        }
    }
}

TEST_CASE("letters act as their roles") {
    for (Shape s : kAllShapes) {
        const auto specs = witness_specs(s, 4, 5, 6);
        for (const auto& spec : specs) {
            const Dfa d = brzozowski(spec);
            for (Letter a = 0; a < spec.alphabet.size(); ++a) {
                CHECK(letter_action(d, a) == role_map(spec.roles[a], spec.n));
                const bool contraction = spec.roles[a] == TransformRole::Contraction10;
                CHECK(is_permutation(letter_action(d, a)) == !contraction);
            }
        }
    }
}
