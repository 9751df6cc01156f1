#include "sclab/tableau.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sclab/minimize.hpp"

namespace sclab {

Tableau::Tableau(std::size_t rows, std::size_t cols, std::uint64_t mask)
    : rows_(rows), cols_(cols), mask_(mask) {
    if (rows == 0 || cols == 0 || rows * cols > 64) {
        throw std::invalid_argument("tableau dimensions must be positive with at most 64 cells");
    }
    if (rows * cols < 64 && (mask >> (rows * cols)) != 0) {
        throw std::invalid_argument("tableau mask has cells out of range");
    }
}

Tableau Tableau::from_cells(std::size_t rows, std::size_t cols, const std::vector<Cell>& cells) {
    Tableau t(rows, cols);
    for (const auto& [j, k] : cells) {
        t = t.with(j, k);
    }
    return t;
}

Tableau Tableau::full(std::size_t rows, std::size_t cols) {
    const std::size_t n = rows * cols;
    return Tableau(rows, cols, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

Tableau Tableau::parse(std::size_t rows, std::size_t cols, std::string_view text) {
    std::vector<Cell> cells;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string item(text.substr(pos, end - pos));
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("cell '" + item + "' must be written j:k");
        }
        try {
            cells.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cell '" + item + "' must be written j:k");
        }
        pos = end + 1;
    }
    return from_cells(rows, cols, cells);
}

Tableau Tableau::with(std::size_t j, std::size_t k) const {
    if (j >= rows_ || k >= cols_) {
        throw std::out_of_range("cell (" + std::to_string(j) + "," + std::to_string(k) +
                                ") outside the tableau");
    }
    return Tableau(rows_, cols_, mask_ | (std::uint64_t{1} << bit(j, k)));
}

std::size_t Tableau::count() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Cell> Tableau::cells() const {
    std::vector<Cell> out;
    for (std::size_t j = 0; j < rows_; ++j) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (marked(j, k)) {
                out.emplace_back(j, k);
            }
        }
    }
    return out;
}

std::uint64_t Tableau::row_set() const {
    std::uint64_t rs = 0;
    for (const auto& [j, k] : cells()) {
        rs |= std::uint64_t{1} << j;
    }
    return rs;
}

std::uint64_t Tableau::col_set() const {
    std::uint64_t cs = 0;
    for (const auto& [j, k] : cells()) {
        cs |= std::uint64_t{1} << k;
    }
    return cs;
}

std::string Tableau::to_ascii() const {
    std::string out;
    for (std::size_t j = 0; j < rows_; ++j) {
        for (std::size_t k = 0; k < cols_; ++k) {
            out += marked(j, k) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string Tableau::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [j, k] : cells()) {
        out += first ? "" : ",";
        out += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
        first = false;
    }
    return out + "}";
}

Tableau saturate_union(const Tableau& t) {
    const std::uint64_t rs = t.row_set();
    const std::uint64_t cs = t.col_set();
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < t.rows(); ++j) {
        if ((rs >> j) & 1U) {
            mask |= cs << (j * t.cols());
        }
    }
    return Tableau(t.rows(), t.cols(), mask);
}

std::vector<RightTriangle> find_right_triangles(const Tableau& t) {
    std::vector<RightTriangle> out;
    for (const auto& [j, k] : t.cells()) {
        for (std::size_t k2 = 0; k2 < t.cols(); ++k2) {
            if (k2 == k || !t.marked(j, k2)) {
                continue;
            }
            for (std::size_t j2 = 0; j2 < t.rows(); ++j2) {
                if (j2 == j || !t.marked(j2, k) || t.marked(j2, k2)) {
                    continue;
                }
                out.push_back({{Cell{j, k}, Cell{j, k2}, Cell{j2, k}}, Cell{j2, k2}});
            }
        }
    }
    return out;
}

std::vector<std::array<Cell, 4>> find_rectangles(const Tableau& t) {
    std::vector<std::array<Cell, 4>> out;
    for (std::size_t x = 0; x < t.rows(); ++x) {
        for (std::size_t y = x + 1; y < t.rows(); ++y) {
            std::vector<std::size_t> shared;
            for (std::size_t k = 0; k < t.cols(); ++k) {
                if (t.marked(x, k) && t.marked(y, k)) {
                    shared.push_back(k);
                }
            }
            for (std::size_t a = 0; a < shared.size(); ++a) {
                for (std::size_t b = a + 1; b < shared.size(); ++b) {
                    out.push_back({Cell{x, shared[a]}, Cell{x, shared[b]}, Cell{y, shared[a]},
                                   Cell{y, shared[b]}});
                }
            }
        }
    }
    return out;
}

Tableau saturate_xor(const Tableau& t) {
    Tableau cur = t;
    for (;;) {
        const auto tris = find_right_triangles(cur);
        if (tris.empty()) {
            return cur;
        }
        for (const auto& tri : tris) {
            cur = cur.with(tri.missing.first, tri.missing.second);
        }
    }
}

UnionClassCount count_union_classes(std::size_t n, std::size_t p) {
    return {union_tableau_count(n, p), union_tableau_count_with_origin(n, p)};
}

UnionClassCount count_union_classes_exhaustive(std::size_t n, std::size_t p) {
    if (n == 0 || p == 0 || n * p > 24) {
        throw std::invalid_argument("exhaustive tableau enumeration needs 1 <= n*p <= 24");
    }
    std::unordered_set<std::uint64_t> fixpoints;
    const std::uint64_t total = std::uint64_t{1} << (n * p);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        fixpoints.insert(saturate_union(Tableau(n, p, mask)).mask());
    }
    UnionClassCount c;
    c.without_origin = fixpoints.size();
    for (std::uint64_t f : fixpoints) {
        c.with_origin += (f & 1U) ? 1 : 0;
    }
    return c;
}

LabeledState tableau_label(std::size_t i, const Tableau& t) {
    std::vector<std::pair<State, State>> pairs;
    for (const auto& [j, k] : t.cells()) {
        pairs.emplace_back(static_cast<State>(j), static_cast<State>(k));
    }
    return make_cat_of_bool_label(static_cast<State>(i), std::move(pairs));
}

Tableau label_tableau(const LabeledState& s, std::size_t rows, std::size_t cols) {
    if (s.form != LabelForm::CatOfBool) {
        throw std::invalid_argument("label is not of the form (i, T)");
    }
    std::vector<Cell> cells;
    for (const auto& [j, k] : s.t) {
        cells.emplace_back(j, k);
    }
    return Tableau::from_cells(rows, cols, cells);
}

Tableau xor_six_cell_tableau() {
    return Tableau::from_cells(3, 4, {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 2}});
}

std::string XorReport::to_string() const {
    std::ostringstream os;
    os << "A.(B xor C) on the A.(B o C) witness at (m,n,p) = (" << m << "," << n << "," << p
       << ")\n";
    os << "  reachable states: " << reachable << "\n";
    os << "  state complexity: " << measured << "\n";
    os << "  generic upper bound (m-1)2^(np)+2^(np-1): " << upper_bound << "\n";
    os << "  below upper bound: " << (below_upper_bound() ? "yes" : "no") << "\n";
    os << "  full grid:\n" << Tableau::full(n, p).to_ascii();
    os << "  six-cell tableau:\n" << xor_six_cell_tableau().to_ascii();
    os << "  equivalent (i, full) ~ (i', six-cell) pairs:";
    if (equivalent_pairs.empty()) {
        os << " none";
    }
    for (const auto& [i, i2] : equivalent_pairs) {
        os << " (" << i << "," << i2 << ")";
    }
    os << "\n";
    return os.str();
}

XorReport xor_counterexample() {
    XorReport r;
    const auto w = witness(Shape::CatOfBool, r.m, r.n, r.p);
    const LabeledDfa built =
        build_tree(shape_tree(Shape::CatOfBool, {BoolOp::sym_diff()}), {w[0], w[1], w[2]});
    const Minimized min = minimize_with_classes(built.dfa());
    r.reachable = built.state_count();
    r.measured = min.dfa.state_count();
    r.upper_bound = sc_cat(r.m, r.n * r.p);

    std::vector<std::optional<State>> full_state(r.m);
    std::vector<std::optional<State>> six_state(r.m);
    for (std::size_t i = 0; i < r.m; ++i) {
        full_state[i] = built.find(tableau_label(i, Tableau::full(r.n, r.p)));
        six_state[i] = built.find(tableau_label(i, xor_six_cell_tableau()));
    }
    for (std::size_t i = 0; i < r.m; ++i) {
        for (std::size_t i2 = 0; i2 < r.m; ++i2) {
            if (full_state[i] && six_state[i2] &&
                min.class_of[*full_state[i]] == min.class_of[*six_state[i2]]) {
                r.equivalent_pairs.emplace_back(i, i2);
            }
        }
    }
    return r;
}

}  // namespace sclab
