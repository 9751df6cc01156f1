#include "sclab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_map>

namespace sclab {

// ---------------------------------------------------------------- BoolOp

BoolOp BoolOp::custom(std::array<bool, 4> table) {
    if (table == union_op().table()) return union_op();
    if (table == intersection().table()) return intersection();
    if (table == sym_diff().table()) return sym_diff();
    return BoolOp(Kind::Custom, table);
}

std::string BoolOp::name() const {
    switch (kind_) {
        case Kind::Union: return "or";
        case Kind::Intersection: return "and";
        case Kind::SymDiff: return "xor";
        case Kind::Custom: break;
    }
    std::string s = "tt";
    for (bool b : table_) {
        s += b ? '1' : '0';
    }
    return s;
}

BoolOp parse_bool_op(std::string_view text) {
    if (text == "or" || text == "union") return BoolOp::union_op();
    if (text == "and" || text == "inter" || text == "intersection") return BoolOp::intersection();
    if (text == "xor" || text == "sym" || text == "symdiff") return BoolOp::sym_diff();
    if (text.size() == 6 && text.substr(0, 2) == "tt") {
        std::array<bool, 4> table{};
        for (std::size_t i = 0; i < 4; ++i) {
            const char c = text[2 + i];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("truth table must be four 0/1 digits");
            }
            table[i] = c == '1';
        }
        return BoolOp::custom(table);
    }
    throw std::invalid_argument("unknown boolean operation '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- OpTree

OpTree OpTree::leaf(std::size_t operand) {
    OpTree t;
    t.kind_ = Kind::Leaf;
    t.operand_ = operand;
    return t;
}

OpTree OpTree::cat(OpTree left, OpTree right) {
    OpTree t;
    t.kind_ = Kind::Cat;
    t.left_ = std::make_shared<const OpTree>(std::move(left));
    t.right_ = std::make_shared<const OpTree>(std::move(right));
    return t;
}

OpTree OpTree::boolean(BoolOp op, OpTree left, OpTree right) {
    OpTree t;
    t.kind_ = Kind::Bool;
    t.op_ = op;
    t.left_ = std::make_shared<const OpTree>(std::move(left));
    t.right_ = std::make_shared<const OpTree>(std::move(right));
    return t;
}

std::size_t OpTree::leaf_count() const {
    return kind_ == Kind::Leaf ? 1 : left_->leaf_count() + right_->leaf_count();
}

std::vector<std::size_t> OpTree::operands() const {
    if (kind_ == Kind::Leaf) {
        return {operand_};
    }
    auto l = left_->operands();
    const auto r = right_->operands();
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

void OpTree::validate() const {
    auto ops = operands();
    std::sort(ops.begin(), ops.end());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0 && ops[i] == ops[i - 1]) {
            throw std::invalid_argument("operand " + std::to_string(ops[i]) + " used twice");
        }
        if (ops[i] != i) {
            throw std::invalid_argument("operands must be numbered 0.." +
                                        std::to_string(ops.size() - 1));
        }
    }
}

std::string OpTree::to_string() const {
    switch (kind_) {
        case Kind::Leaf: return std::to_string(operand_);
        case Kind::Cat: return "cat(" + left_->to_string() + "," + right_->to_string() + ")";
        case Kind::Bool:
            return op_.name() + "(" + left_->to_string() + "," + right_->to_string() + ")";
    }
    return {};
}

std::optional<Shape> OpTree::shape() const {
    if (operands() != std::vector<std::size_t>{0, 1, 2}) {
        return std::nullopt;
    }
    const bool left_leaf = left_->kind_ == Kind::Leaf;
    const bool right_leaf = right_->kind_ == Kind::Leaf;
    if (kind_ == Kind::Cat && right_leaf && left_->kind_ == Kind::Cat) return Shape::DoubleCat;
    if (kind_ == Kind::Bool && right_leaf && left_->kind_ == Kind::Bool) return Shape::BoolBool;
    if (kind_ == Kind::Cat && left_leaf && right_->kind_ == Kind::Bool) return Shape::CatOfBool;
    if (kind_ == Kind::Cat && right_leaf && left_->kind_ == Kind::Bool) return Shape::BoolThenCat;
    if (kind_ == Kind::Bool && right_leaf && left_->kind_ == Kind::Cat) return Shape::CatThenBool;
    return std::nullopt;
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    OpTree parse() {
        OpTree t = node();
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("tree syntax error at offset " + std::to_string(pos_) + ": " +
                                    what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    OpTree node() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end");
        }
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
            }
            return OpTree::leaf(v);
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name.empty()) {
            fail("expected an operand index or an operation name");
        }
        expect('(');
        OpTree l = node();
        expect(',');
        OpTree r = node();
        expect(')');
        if (name == "cat") {
            return OpTree::cat(std::move(l), std::move(r));
        }
        return OpTree::boolean(parse_bool_op(name), std::move(l), std::move(r));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

OpTree parse_tree(std::string_view text) {
    OpTree t = TreeParser(text).parse();
    t.validate();
    return t;
}

OpTree shape_tree(Shape s, const std::vector<BoolOp>& ops) {
    if (ops.size() != shape_op_count(s)) {
        throw std::invalid_argument(std::string(shape_name(s)) + " takes " +
                                    std::to_string(shape_op_count(s)) + " boolean operation(s)");
    }
    using T = OpTree;
    switch (s) {
        case Shape::DoubleCat: return T::cat(T::cat(T::leaf(0), T::leaf(1)), T::leaf(2));
        case Shape::BoolBool:
            return T::boolean(ops[1], T::boolean(ops[0], T::leaf(0), T::leaf(1)), T::leaf(2));
        case Shape::CatOfBool: return T::cat(T::leaf(0), T::boolean(ops[0], T::leaf(1), T::leaf(2)));
        case Shape::BoolThenCat: return T::cat(T::boolean(ops[0], T::leaf(0), T::leaf(1)), T::leaf(2));
        case Shape::CatThenBool: return T::boolean(ops[0], T::cat(T::leaf(0), T::leaf(1)), T::leaf(2));
    }
    throw std::logic_error("unreachable shape");
}

// ---------------------------------------------------------------- products

struct LabeledDfa::Node {
    enum class Kind { Leaf, Cat, Bool };

    Kind kind = Kind::Leaf;
    std::size_t operand = 0;
    Dfa dfa;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    LabelForm form = LabelForm::Leaf;
    // Per materialized state: the left component, and either the right
    // component (Bool) or a bitset over right states (Cat, `words` per state).
    std::vector<State> left_state;
    std::vector<State> right_state;
    std::size_t words = 0;
    std::vector<std::uint64_t> right_sets;

    explicit Node(Dfa d) : dfa(std::move(d)) {}
};

namespace {

using Node = LabeledDfa::Node;

LabelForm form_of(const Node& n) {
    using K = Node::Kind;
    if (n.kind == K::Leaf) return LabelForm::Leaf;
    const K l = n.left->kind;
    const K r = n.right->kind;
    auto two_leaves = [](const Node& x) {
        return x.left->kind == K::Leaf && x.right->kind == K::Leaf;
    };
    if (l == K::Leaf && r == K::Leaf) {
        return n.kind == K::Cat ? LabelForm::CatPair : LabelForm::BoolPair;
    }
    if (n.kind == K::Cat && r == K::Leaf && l == K::Cat && two_leaves(*n.left)) return LabelForm::DoubleCat;
    if (n.kind == K::Bool && r == K::Leaf && l == K::Cat && two_leaves(*n.left)) return LabelForm::CatThenBool;
    if (n.kind == K::Cat && r == K::Leaf && l == K::Bool && two_leaves(*n.left)) return LabelForm::BoolThenCat;
    if (n.kind == K::Cat && l == K::Leaf && r == K::Bool && two_leaves(*n.right)) return LabelForm::CatOfBool;
    if (n.kind == K::Bool && r == K::Leaf && l == K::Bool && two_leaves(*n.left)) return LabelForm::BoolBool;
    if (n.kind == K::Bool && l == K::Leaf && r == K::Bool && two_leaves(*n.right)) return LabelForm::BoolBool;
    return LabelForm::Nested;
}

// Uninterpreted provenance tree of one state.
struct Generic {
    enum class Kind { Atom, Pair, Set } kind = Kind::Atom;
    State atom = 0;
    std::vector<Generic> parts;  // Pair: {left, right}; Set: {left, members...}
};

template <typename F>
void for_each_bit(const std::uint64_t* words, std::size_t count, F&& f) {
    for (std::size_t w = 0; w < count; ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            f(static_cast<State>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
}

Generic generic_label(const Node& n, State q) {
    Generic g;
    switch (n.kind) {
        case Node::Kind::Leaf:
            g.atom = q;
            return g;
        case Node::Kind::Bool:
            g.kind = Generic::Kind::Pair;
            g.parts.push_back(generic_label(*n.left, n.left_state[q]));
            g.parts.push_back(generic_label(*n.right, n.right_state[q]));
            return g;
        case Node::Kind::Cat:
            g.kind = Generic::Kind::Set;
            g.parts.push_back(generic_label(*n.left, n.left_state[q]));
            for_each_bit(n.right_sets.data() + q * n.words, n.words,
                         [&](State s) { g.parts.push_back(generic_label(*n.right, s)); });
            return g;
    }
    return g;
}

std::string generic_text(const Generic& g) {
    switch (g.kind) {
        case Generic::Kind::Atom: return std::to_string(g.atom);
        case Generic::Kind::Pair:
            return "(" + generic_text(g.parts[0]) + "," + generic_text(g.parts[1]) + ")";
        case Generic::Kind::Set: {
            std::vector<std::string> members;
            for (std::size_t i = 1; i < g.parts.size(); ++i) {
                members.push_back(generic_text(g.parts[i]));
            }
            std::sort(members.begin(), members.end());
            std::string s = "(" + generic_text(g.parts[0]) + ",{";
            for (std::size_t i = 0; i < members.size(); ++i) {
                s += (i ? "," : "") + members[i];
            }
            return s + "})";
        }
    }
    return {};
}

std::vector<State> atoms(const Generic& set_node) {
    std::vector<State> out;
    for (std::size_t i = 1; i < set_node.parts.size(); ++i) {
        out.push_back(set_node.parts[i].atom);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_text(const std::vector<State>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (std::uint64_t x : v) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            x ^= x >> 31;
            h = (h ^ x) * 0x100000001b3ULL + (h >> 17);
        }
        return static_cast<std::size_t>(h);
    }
};

void check_alphabets(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet()) {
        throw std::invalid_argument("operands must share one alphabet");
    }
}

void check_limit(std::size_t count, const BuildOptions& opts) {
    if (opts.max_states != 0 && count > opts.max_states) {
        throw StateLimitExceeded(opts.max_states);
    }
}

}  // namespace

std::string label_text(const LabeledState& s) {
    const auto num = [](State x) { return std::to_string(x); };
    switch (s.form) {
        case LabelForm::Leaf: return num(s.i);
        case LabelForm::CatPair: return "(" + num(s.i) + "," + set_text(s.s1) + ")";
        case LabelForm::BoolPair: return "(" + num(s.i) + "," + num(s.j) + ")";
        case LabelForm::DoubleCat:
            return "(" + num(s.i) + "," + set_text(s.s1) + "," + set_text(s.s2) + ")";
        case LabelForm::CatThenBool:
            return "(" + num(s.i) + "," + set_text(s.s1) + "," + num(s.k) + ")";
        case LabelForm::BoolThenCat:
            return "(" + num(s.i) + "," + num(s.j) + "," + set_text(s.s2) + ")";
        case LabelForm::CatOfBool: {
            std::string out = "(" + num(s.i) + ",{";
            for (std::size_t x = 0; x < s.t.size(); ++x) {
                out += (x ? ",(" : "(") + num(s.t[x].first) + "," + num(s.t[x].second) + ")";
            }
            return out + "})";
        }
        case LabelForm::BoolBool:
            return "(" + num(s.i) + "," + num(s.j) + "," + num(s.k) + ")";
        case LabelForm::Nested: return s.text;
    }
    return s.text;
}

LabeledState make_cat_of_bool_label(State i, std::vector<std::pair<State, State>> t) {
    LabeledState s;
    s.form = LabelForm::CatOfBool;
    s.i = i;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    s.t = std::move(t);
    s.text = label_text(s);
    return s;
}

LabeledState make_bool_bool_label(State i, State j, State k) {
    LabeledState s;
    s.form = LabelForm::BoolBool;
    s.i = i;
    s.j = j;
    s.k = k;
    s.text = label_text(s);
    return s;
}

LabeledDfa LabeledDfa::leaf(Dfa d, std::size_t operand) {
    auto node = std::make_shared<Node>(std::move(d));
    node->operand = operand;
    return LabeledDfa(std::move(node));
}

const Dfa& LabeledDfa::dfa() const { return node_->dfa; }

LabelForm LabeledDfa::form() const { return node_->form; }

LabeledState LabeledDfa::label(State q) const {
    if (q >= state_count()) {
        throw std::out_of_range("label: state out of range");
    }
    const Generic g = generic_label(*node_, q);
    LabeledState s;
    s.form = node_->form;
    switch (s.form) {
        case LabelForm::Leaf: s.i = g.atom; break;
        case LabelForm::CatPair:
            s.i = g.parts[0].atom;
            s.s1 = atoms(g);
            break;
        case LabelForm::BoolPair:
            s.i = g.parts[0].atom;
            s.j = g.parts[1].atom;
            break;
        case LabelForm::DoubleCat:
            s.i = g.parts[0].parts[0].atom;
            s.s1 = atoms(g.parts[0]);
            s.s2 = atoms(g);
            break;
        case LabelForm::CatThenBool:
            s.i = g.parts[0].parts[0].atom;
            s.s1 = atoms(g.parts[0]);
            s.k = g.parts[1].atom;
            break;
        case LabelForm::BoolThenCat:
            s.i = g.parts[0].parts[0].atom;
            s.j = g.parts[0].parts[1].atom;
            s.s2 = atoms(g);
            break;
        case LabelForm::CatOfBool:
            s.i = g.parts[0].atom;
            for (std::size_t x = 1; x < g.parts.size(); ++x) {
                s.t.emplace_back(g.parts[x].parts[0].atom, g.parts[x].parts[1].atom);
            }
            std::sort(s.t.begin(), s.t.end());
            break;
        case LabelForm::BoolBool:
            if (g.parts[0].kind == Generic::Kind::Pair) {
                s.i = g.parts[0].parts[0].atom;
                s.j = g.parts[0].parts[1].atom;
                s.k = g.parts[1].atom;
            } else {
                s.i = g.parts[0].atom;
                s.j = g.parts[1].parts[0].atom;
                s.k = g.parts[1].parts[1].atom;
            }
            break;
        case LabelForm::Nested: s.text = generic_text(g); break;
    }
    if (s.form != LabelForm::Nested) {
        s.text = label_text(s);
    }
    return s;
}

std::vector<LabeledState> LabeledDfa::labels() const {
    std::vector<LabeledState> out;
    out.reserve(state_count());
    for (State q = 0; q < state_count(); ++q) {
        out.push_back(label(q));
    }
    return out;
}

std::optional<State> LabeledDfa::find(const LabeledState& wanted) const {
    for (State q = 0; q < state_count(); ++q) {
        if (label(q) == wanted) {
            return q;
        }
    }
    return std::nullopt;
}

LabeledDfa cat_product(const LabeledDfa& a, const LabeledDfa& b, BuildOptions opts) {
    const Dfa& da = a.dfa();
    const Dfa& db = b.dfa();
    check_alphabets(da, db);
    const std::size_t k = da.alphabet_size();
    const std::size_t nb = db.state_count();
    const std::size_t words = (nb + 63) / 64;
    const std::size_t stride = words + 1;
    const State init_b = db.initial();

    std::vector<std::uint64_t> final_mask(words, 0);
    for (State f : db.finals()) {
        final_mask[f / 64] |= std::uint64_t{1} << (f % 64);
    }

    std::unordered_map<std::vector<std::uint64_t>, State, WordsHash> index;
    std::vector<std::uint64_t> store;  // stride words per state: [p, set...]
    std::vector<State> table;
    std::vector<State> finals;

    auto intern = [&](const std::vector<std::uint64_t>& key) -> State {
        auto [it, inserted] = index.try_emplace(key, static_cast<State>(index.size()));
        if (inserted) {
            check_limit(index.size(), opts);
            store.insert(store.end(), key.begin(), key.end());
        }
        return it->second;
    };

    std::vector<std::uint64_t> key(stride, 0);
    key[0] = da.initial();
    if (da.is_final(da.initial())) {
        key[1 + init_b / 64] |= std::uint64_t{1} << (init_b % 64);
    }
    intern(key);

    std::vector<std::uint64_t> current(stride);
    for (std::size_t head = 0; head < index.size(); ++head) {
        std::copy_n(store.begin() + static_cast<std::ptrdiff_t>(head * stride), stride,
                    current.begin());
        const State p = static_cast<State>(current[0]);
        bool is_final = false;
        for (std::size_t w = 0; w < words; ++w) {
            is_final = is_final || (current[1 + w] & final_mask[w]) != 0;
        }
        if (is_final) {
            finals.push_back(static_cast<State>(head));
        }
        for (Letter x = 0; x < k; ++x) {
            std::fill(key.begin(), key.end(), 0);
            const State p2 = da.delta(p, x);
            key[0] = p2;
            for_each_bit(current.data() + 1, words, [&](State s) {
                const State t = db.delta(s, x);
                key[1 + t / 64] |= std::uint64_t{1} << (t % 64);
            });
            if (da.is_final(p2)) {
                key[1 + init_b / 64] |= std::uint64_t{1} << (init_b % 64);
            }
            table.push_back(intern(key));
        }
    }

    const std::size_t count = index.size();
    auto node = std::make_shared<Node>(Dfa(da.alphabet(), count, 0, std::move(finals), std::move(table)));
    node->kind = Node::Kind::Cat;
    node->left = a.node();
    node->right = b.node();
    node->words = words;
    node->left_state.resize(count);
    node->right_sets.resize(count * words);
    for (std::size_t q = 0; q < count; ++q) {
        node->left_state[q] = static_cast<State>(store[q * stride]);
        std::copy_n(store.begin() + static_cast<std::ptrdiff_t>(q * stride + 1), words,
                    node->right_sets.begin() + static_cast<std::ptrdiff_t>(q * words));
    }
    node->form = form_of(*node);
    return LabeledDfa(std::move(node));
}

Dfa cat_product(const Dfa& a, const Dfa& b) {
    return cat_product(LabeledDfa::leaf(a, 0), LabeledDfa::leaf(b, 1)).dfa();
}

LabeledDfa bool_product(const BoolOp& op, const LabeledDfa& a, const LabeledDfa& b,
                        BuildOptions opts) {
    const Dfa& da = a.dfa();
    const Dfa& db = b.dfa();
    check_alphabets(da, db);
    const std::size_t k = da.alphabet_size();
    const std::uint64_t nb = db.state_count();

    std::unordered_map<std::uint64_t, State> index;
    std::vector<State> left_state;
    std::vector<State> right_state;
    std::vector<State> table;
    std::vector<State> finals;

    auto intern = [&](State p, State q) -> State {
        const std::uint64_t code = p * nb + q;
        auto [it, inserted] = index.try_emplace(code, static_cast<State>(left_state.size()));
        if (inserted) {
            check_limit(index.size(), opts);
            left_state.push_back(p);
            right_state.push_back(q);
        }
        return it->second;
    };

    intern(da.initial(), db.initial());
    for (std::size_t head = 0; head < left_state.size(); ++head) {
        const State p = left_state[head];
        const State q = right_state[head];
        if (op.apply(da.is_final(p), db.is_final(q))) {
            finals.push_back(static_cast<State>(head));
        }
        for (Letter x = 0; x < k; ++x) {
            table.push_back(intern(da.delta(p, x), db.delta(q, x)));
        }
    }

    const std::size_t count = left_state.size();
    auto node = std::make_shared<Node>(Dfa(da.alphabet(), count, 0, std::move(finals), std::move(table)));
    node->kind = Node::Kind::Bool;
    node->left = a.node();
    node->right = b.node();
    node->left_state = std::move(left_state);
    node->right_state = std::move(right_state);
    node->form = form_of(*node);
    return LabeledDfa(std::move(node));
}

Dfa bool_product(const BoolOp& op, const Dfa& a, const Dfa& b) {
    return bool_product(op, LabeledDfa::leaf(a, 0), LabeledDfa::leaf(b, 1)).dfa();
}

namespace {

LabeledDfa build_node(const OpTree& tree, const std::vector<Dfa>& operands, const BuildOptions& opts) {
    switch (tree.kind()) {
        case OpTree::Kind::Leaf:
            return LabeledDfa::leaf(operands.at(tree.operand()), tree.operand());
        case OpTree::Kind::Cat:
            return cat_product(build_node(tree.left(), operands, opts),
                               build_node(tree.right(), operands, opts), opts);
        case OpTree::Kind::Bool:
            return bool_product(tree.op(), build_node(tree.left(), operands, opts),
                                build_node(tree.right(), operands, opts), opts);
    }
    throw std::logic_error("unreachable tree kind");
}

}  // namespace

LabeledDfa build_tree(const OpTree& tree, const std::vector<Dfa>& operands, BuildOptions opts) {
    tree.validate();
    if (tree.leaf_count() != operands.size()) {
        throw std::invalid_argument("tree has " + std::to_string(tree.leaf_count()) +
                                    " operands but " + std::to_string(operands.size()) +
                                    " automata were given");
    }
    for (const Dfa& d : operands) {
        check_alphabets(operands.front(), d);
    }
    return build_node(tree, operands, opts);
}

std::vector<LabeledState> reachable_labels(const LabeledDfa& d) {
    auto out = d.labels();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sclab
