#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclab/dfa.hpp"
#include "sclab/witnesses.hpp"

namespace sclab {

/// A binary boolean connective applied to the finality of two components.
class BoolOp {
public:
    enum class Kind { Union, Intersection, SymDiff, Custom };

    BoolOp() : BoolOp(union_op()) {}

    static BoolOp union_op() { return BoolOp(Kind::Union, {false, true, true, true}); }
    static BoolOp intersection() { return BoolOp(Kind::Intersection, {false, false, false, true}); }
    static BoolOp sym_diff() { return BoolOp(Kind::SymDiff, {false, true, true, false}); }
    /// Truth table indexed by (in_left << 1) | in_right.
    static BoolOp custom(std::array<bool, 4> table);

    Kind kind() const { return kind_; }
    bool apply(bool in_left, bool in_right) const {
        return table_[(in_left ? 2 : 0) | (in_right ? 1 : 0)];
    }
    const std::array<bool, 4>& table() const { return table_; }

    /// "or", "and", "xor", or "tt" followed by the four table bits.
    std::string name() const;

    friend bool operator==(const BoolOp& a, const BoolOp& b) { return a.table_ == b.table_; }

private:
    BoolOp(Kind kind, std::array<bool, 4> table) : kind_(kind), table_(table) {}
    Kind kind_;
    std::array<bool, 4> table_;
};

/// Accepts or/union, and/inter/intersection, xor/sym/symdiff, and ttXXXX.
BoolOp parse_bool_op(std::string_view text);

/// Expression tree over operand indices.
class OpTree {
public:
    enum class Kind { Leaf, Cat, Bool };

    static OpTree leaf(std::size_t operand);
    static OpTree cat(OpTree left, OpTree right);
    static OpTree boolean(BoolOp op, OpTree left, OpTree right);

    Kind kind() const { return kind_; }
    std::size_t operand() const { return operand_; }
    const BoolOp& op() const { return op_; }
    const OpTree& left() const { return *left_; }
    const OpTree& right() const { return *right_; }

    std::size_t leaf_count() const;
    /// Leaves in left-to-right order.
    std::vector<std::size_t> operands() const;

    /// Throws std::invalid_argument unless the operands are distinct and
    /// cover 0..leaf_count()-1.
    void validate() const;

    /// Text in the CLI syntax, e.g. "cat(0,or(1,2))".
    std::string to_string() const;

    /// The matching combination shape when the leaves read 0,1,2 in order.
    std::optional<Shape> shape() const;

private:
    OpTree() = default;
    Kind kind_ = Kind::Leaf;
    std::size_t operand_ = 0;
    BoolOp op_;
    std::shared_ptr<const OpTree> left_;
    std::shared_ptr<const OpTree> right_;
};

/// Parses "cat(cat(0,1),2)", "xor(cat(0,1),2)", "cat(0,or(1,2))", ...
/// Rejects reused operands.
OpTree parse_tree(std::string_view text);

/// The tree of a combination shape. `ops` supplies the connectives in the
/// order they appear reading the shape left to right (inner one first for
/// BoolBool: (A ops[0] B) ops[1] C).
OpTree shape_tree(Shape s, const std::vector<BoolOp>& ops);

/// Which state label layout a constructed automaton exposes.
enum class LabelForm {
    Leaf,         ///< i
    CatPair,      ///< (i, S)
    BoolPair,     ///< (i, j)
    DoubleCat,    ///< (i, S1, S2)
    CatThenBool,  ///< (i, S1, k)
    BoolThenCat,  ///< (i, j, S2)
    CatOfBool,    ///< (i, T), T a set of pairs
    BoolBool,     ///< (i, j, k)
    Nested,       ///< any other tree; only `text` is meaningful
};

/// Structured name of a product state in terms of operand states.
struct LabeledState {
    LabelForm form = LabelForm::Leaf;
    State i = 0;
    State j = 0;
    State k = 0;
    std::vector<State> s1;
    std::vector<State> s2;
    std::vector<std::pair<State, State>> t;
    std::string text;

    friend bool operator==(const LabeledState& a, const LabeledState& b) {
        return a.form == b.form && a.text == b.text;
    }
    friend auto operator<=>(const LabeledState& a, const LabeledState& b) {
        if (auto c = a.form <=> b.form; c != 0) {
            return c;
        }
        return a.text <=> b.text;
    }
};

class StateLimitExceeded : public std::runtime_error {
public:
    explicit StateLimitExceeded(std::size_t limit)
        : std::runtime_error("construction exceeded the state limit of " + std::to_string(limit)),
          limit_(limit) {}
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

struct BuildOptions {
    /// 0 means unlimited.
    std::size_t max_states = 0;
};

/**
 * A constructed automaton plus the provenance of each of its states.
 *
 * Only states reachable from the initial state are materialized. Labels are
 * computed on demand from the operand automata kept alongside.
 */
class LabeledDfa {
public:
    /// Wraps an operand as-is.
    static LabeledDfa leaf(Dfa d, std::size_t operand = 0);

    const Dfa& dfa() const;
    std::size_t state_count() const { return dfa().state_count(); }
    LabelForm form() const;

    LabeledState label(State q) const;
    /// Labels of all materialized states, indexed by state.
    std::vector<LabeledState> labels() const;
    /// The state carrying @p label, if it was materialized.
    std::optional<State> find(const LabeledState& label) const;

    struct Node;
    explicit LabeledDfa(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    const std::shared_ptr<const Node>& node() const { return node_; }

private:
    std::shared_ptr<const Node> node_;
};

/// Deterministic catenation: states (p, S) with S a subset of b's states.
LabeledDfa cat_product(const LabeledDfa& a, const LabeledDfa& b, BuildOptions opts = {});
Dfa cat_product(const Dfa& a, const Dfa& b);

/// Pair construction with finality op(p in F_a, q in F_b).
LabeledDfa bool_product(const BoolOp& op, const LabeledDfa& a, const LabeledDfa& b,
                        BuildOptions opts = {});
Dfa bool_product(const BoolOp& op, const Dfa& a, const Dfa& b);

LabeledDfa build_tree(const OpTree& tree, const std::vector<Dfa>& operands, BuildOptions opts = {});

/// Set of labels of the materialized states.
std::vector<LabeledState> reachable_labels(const LabeledDfa& d);

/// Renders "(i,S1,S2)", "(i,{(j,k),...})", ... for the structured forms.
std::string label_text(const LabeledState& s);

/// Builders for looking labels up by structure.
LabeledState make_cat_of_bool_label(State i, std::vector<std::pair<State, State>> t);
LabeledState make_bool_bool_label(State i, State j, State k);

}  // namespace sclab
