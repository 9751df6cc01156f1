#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/dfa.hpp"

namespace sclab {

/// Action of one letter in a Brzozowski automaton on {0..n-1}.
enum class TransformRole {
    Cycle,            ///< q -> q+1 mod n
    Transposition01,  ///< swaps 0 and 1
    Contraction10,    ///< sends 1 to 0
    Identity,
};

inline constexpr std::array<TransformRole, 4> kAllRoles = {
    TransformRole::Cycle, TransformRole::Transposition01, TransformRole::Contraction10,
    TransformRole::Identity};

std::string_view role_name(TransformRole r);
/// Accepts "cycle", "transposition", "contraction", "identity" and the
/// one-letter abbreviations C, T, K, I.
TransformRole parse_role(std::string_view name);

StateMap role_map(TransformRole r, std::size_t n);

/**
 * X_n(s1, s2, s3; rest): n states, initial 0, final n-1. At most one letter
 * carries each non-identity role; every other letter is the identity.
 */
struct BrzozowskiSpec {
    std::size_t n = 0;
    std::vector<std::string> alphabet;
    std::vector<TransformRole> roles;  ///< one per letter

    /// Letters given by name; an empty name is the "-" slot.
    static BrzozowskiSpec from_slots(std::size_t n, std::vector<std::string> alphabet,
                                     std::string_view cycle, std::string_view transposition,
                                     std::string_view contraction);

    /// Throws std::invalid_argument on a role/size conflict.
    void validate() const;

    /// Renders as X_n(a,b,-;{c}).
    std::string to_string() const;

    friend bool operator==(const BrzozowskiSpec&, const BrzozowskiSpec&) = default;
    friend auto operator<=>(const BrzozowskiSpec&, const BrzozowskiSpec&) = default;
};

Dfa brzozowski(const BrzozowskiSpec& spec);

/// The five combination shapes over operands A=0, B=1, C=2.
enum class Shape {
    DoubleCat,    ///< (A.B).C
    BoolBool,     ///< (A o1 B) o2 C
    CatOfBool,    ///< A.(B o C)
    BoolThenCat,  ///< (A o B).C
    CatThenBool,  ///< (A.B) o C
};

inline constexpr std::array<Shape, 5> kAllShapes = {Shape::DoubleCat, Shape::BoolBool,
                                                    Shape::CatOfBool, Shape::BoolThenCat,
                                                    Shape::CatThenBool};

/// CLI spelling: double-cat, bool-bool, cat-of-bool, bool-then-cat, cat-then-bool.
std::string_view shape_name(Shape s);
Shape parse_shape(std::string_view name);

/// Letters of the shape's witness family: {a,b} or {a,b,c}.
std::vector<std::string> witness_alphabet(Shape s);

/// Number of boolean connectives the shape takes (0, 1 or 2).
std::size_t shape_op_count(Shape s);

/// The three Brzozowski specifications of the shape's witness family.
std::array<BrzozowskiSpec, 3> witness_specs(Shape s, std::size_t m, std::size_t n, std::size_t p);

/// Witness automata for the shape at sizes m, n, p (each at least 3).
std::array<Dfa, 3> witness(Shape s, std::size_t m, std::size_t n, std::size_t p);

}  // namespace sclab
