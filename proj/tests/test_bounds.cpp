#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sclab/bounds.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;

namespace {

Count value(Shape s, std::vector<BoolOp> ops, Count m, Count n, Count p) {
    return bound({s, std::move(ops), m, n, p}).value.value();
}

const BoolOp kOr = BoolOp::union_op();
const BoolOp kAnd = BoolOp::intersection();
const BoolOp kXor = BoolOp::sym_diff();

}  // namespace

TEST_CASE("catenation") {
    CHECK(sc_cat(3, 3) == 20);
    CHECK(sc_cat(1, 4) == 8);
    CHECK(sc_cat_kfinal(3, 1, 3) == 20);
    CHECK(sc_cat_kfinal(9, 5, 3) == 52);
    CHECK_THROWS_AS(sc_cat_kfinal(3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(sc_cat(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sc_cat(3, 64), std::overflow_error);
}

TEST_CASE("worked values at (3,3,3) and (3,3,4)") {
    CHECK(value(Shape::BoolBool, {kOr, kXor}, 3, 3, 3) == 27);
    CHECK(value(Shape::CatOfBool, {kAnd}, 3, 3, 3) == 1280);
    CHECK(value(Shape::CatOfBool, {kAnd}, 3, 3, 4) == 10240);
    CHECK(value(Shape::CatOfBool, {kOr}, 3, 3, 3) == 116);
    CHECK(cat_of_union_alternative(3, 3, 3) == 144);
    CHECK(value(Shape::BoolThenCat, {kAnd}, 3, 3, 3) == 68);
    CHECK(value(Shape::BoolThenCat, {kOr}, 3, 3, 3) == 52);
    CHECK(value(Shape::BoolThenCat, {kXor}, 3, 3, 3) == 56);
    CHECK(value(Shape::CatThenBool, {kAnd}, 3, 3, 3) == 60);
}

TEST_CASE("bound kinds") {
    CHECK(bound({Shape::DoubleCat, {}, 3, 3, 3}).kind == Bound::Kind::NoClosedForm);
    CHECK_FALSE(bound({Shape::DoubleCat, {}, 3, 3, 3}).value.has_value());
    const Bound x = bound({Shape::CatOfBool, {kXor}, 3, 3, 4});
    CHECK(x.kind == Bound::Kind::UpperBoundOnly);
    CHECK(x.value == 10240);
    CHECK(bound({Shape::CatThenBool, {kXor}, 4, 5, 6}).formula == "((m-1)*2^n + 2^(n-1))*p");
}

TEST_CASE("malformed queries") {
    CHECK_THROWS_AS(bound({Shape::BoolBool, {kOr}, 3, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(bound({Shape::DoubleCat, {kOr}, 3, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(bound({Shape::CatThenBool, {kOr}, 2, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(bound({Shape::CatThenBool, {parse_bool_op("tt0010")}, 3, 3, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bound({Shape::CatOfBool, {kAnd}, 3, 9, 9}), std::overflow_error);
}

TEST_CASE("closed forms agree with direct arithmetic over a grid") {
    auto p2 = [](Count e) { return Count{1} << e; };
    for (Count m = 3; m <= 7; ++m) {
        for (Count n = 3; n <= 6; ++n) {
            for (Count p = 3; p <= 6; ++p) {
                CHECK(value(Shape::BoolBool, {kAnd, kXor}, m, n, p) == m * n * p);
                CHECK(value(Shape::CatOfBool, {kAnd}, m, n, p) ==
                      (m - 1) * p2(n * p) + p2(n * p - 1));
                CHECK(value(Shape::CatOfBool, {kOr}, m, n, p) ==
                      (m - 1) * (p2(n + p) - p2(n) - p2(p) + 2) + p2(n + p - 2));
                CHECK(value(Shape::BoolThenCat, {kAnd}, m, n, p) == m * n * p2(p) - p2(p - 1));
                CHECK(value(Shape::BoolThenCat, {kOr}, m, n, p) ==
                      m * n * p2(p) - (m + n - 1) * p2(p - 1));
                CHECK(value(Shape::BoolThenCat, {kXor}, m, n, p) ==
                      m * n * p2(p) - (m + n - 2) * p2(p - 1));
                CHECK(value(Shape::CatThenBool, {kOr}, m, n, p) ==
                      ((m - 1) * p2(n) + p2(n - 1)) * p);
            }
        }
    }
}

TEST_CASE("final pair counts on the witness operands") {
    for (std::size_t m = 3; m <= 5; ++m) {
        for (std::size_t n = 3; n <= 5; ++n) {
            const auto w = witness(Shape::BoolThenCat, m, n, 3);
            for (const BoolOp& op : {kAnd, kOr, kXor}) {
                CHECK(final_pair_count(op, w[0], w[1]) == final_pair_count(op, m, n));
            }
        }
    }
    CHECK_THROWS_AS(final_pair_count(parse_bool_op("tt1000"), 3, 3), std::invalid_argument);
}

TEST_CASE("union tableau counts") {
    CHECK(union_tableau_count(3, 3) == 50);
    CHECK(union_tableau_count_with_origin(3, 3) == 16);
    CHECK(union_tableau_count(1, 1) == 2);
    CHECK(union_tableau_count_with_origin(1, 1) == 1);
}
