#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sclab/constructions.hpp"
#include "sclab/witnesses.hpp"

namespace sclab {

using Count = std::uint64_t;

/// (m-1) 2^n + 2^(n-1): state complexity of catenation.
Count sc_cat(Count m, Count n);

/// m 2^n - k 2^(n-1): catenation when the left operand has k final states.
/// Throws std::invalid_argument if k > m.
Count sc_cat_kfinal(Count m, Count k, Count n);

/// (2^n - 1)(2^p - 1) + 1.
Count union_tableau_count(Count n, Count p);
/// 2^(n-1) 2^(p-1): union-saturated tableaux with cell (0,0) marked.
Count union_tableau_count_with_origin(Count n, Count p);

/// Number of final states of the pair automaton (F_A x Q_B) op (Q_A x F_B).
Count final_pair_count(const BoolOp& op, const Dfa& a, const Dfa& b);

/// The k used by the (A o B).C bound for witnesses with single final states:
/// 1 for and, m+n-1 for or, m+n-2 for xor.
Count final_pair_count(const BoolOp& op, Count m, Count n);

struct BoundQuery {
    Shape shape = Shape::BoolBool;
    std::vector<BoolOp> ops;  ///< as in shape_tree()
    Count m = 3;
    Count n = 3;
    Count p = 3;
};

struct Bound {
    enum class Kind {
        Exact,           ///< proven closed form, reached by the witness family
        UpperBoundOnly,  ///< only the generic composition bound is known
        NoClosedForm,
    };
    Kind kind = Kind::NoClosedForm;
    std::optional<Count> value;
    std::string formula;
};

/// Throws std::invalid_argument for sizes below 3 or connectives other than
/// or/and/xor.
Bound bound(const BoundQuery& q);

/// The alternative closed form (m-1) 2^(n+p) + 2^(n+p-2) sometimes quoted for
/// A.(B or C); kept for comparison against the tableau count.
Count cat_of_union_alternative(Count m, Count n, Count p);

}  // namespace sclab
