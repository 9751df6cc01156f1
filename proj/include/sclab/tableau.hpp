#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclab/bounds.hpp"
#include "sclab/constructions.hpp"

namespace sclab {

/// Cell (row, column).
using Cell = std::pair<std::size_t, std::size_t>;

/**
 * An n x p grid of marked cells: the pair set T of a state (i, T) of
 * A.(B o C), with row j standing for a state of B and column k for a state
 * of C. At most 64 cells.
 */
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols, std::uint64_t mask = 0);
    static Tableau from_cells(std::size_t rows, std::size_t cols, const std::vector<Cell>& cells);
    static Tableau full(std::size_t rows, std::size_t cols);
    /// Parses "j:k,j:k,...". Empty text is the empty tableau.
    static Tableau parse(std::size_t rows, std::size_t cols, std::string_view cells);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t mask() const { return mask_; }

    bool marked(std::size_t j, std::size_t k) const { return (mask_ >> bit(j, k)) & 1U; }
    Tableau with(std::size_t j, std::size_t k) const;
    std::size_t count() const;
    std::vector<Cell> cells() const;

    /// Rows (resp. columns) holding at least one mark, as bitmasks.
    std::uint64_t row_set() const;
    std::uint64_t col_set() const;

    bool subset_of(const Tableau& other) const { return (mask_ & ~other.mask_) == 0; }

    /// One line per row, '#' marked and '.' unmarked.
    std::string to_ascii() const;
    std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::size_t bit(std::size_t j, std::size_t k) const { return j * cols_ + k; }
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t mask_;
};

/// Row set x column set of the marks.
Tableau saturate_union(const Tableau& t);

/// Least superset closed under completing right triangles into rectangles.
Tableau saturate_xor(const Tableau& t);

struct RightTriangle {
    std::array<Cell, 3> cells;  ///< cells[0] is the corner sharing a row and a column with the others
    Cell missing;
};

/// Four marked cells {x,y} x {x',y'}.
std::vector<std::array<Cell, 4>> find_rectangles(const Tableau& t);
std::vector<RightTriangle> find_right_triangles(const Tableau& t);

struct UnionClassCount {
    Count without_origin = 0;  ///< all distinct union-saturated tableaux
    Count with_origin = 0;     ///< those containing (0,0)
    friend bool operator==(const UnionClassCount&, const UnionClassCount&) = default;
};

/// Closed form ((2^n-1)(2^p-1)+1, 2^(n-1) 2^(p-1)).
UnionClassCount count_union_classes(std::size_t n, std::size_t p);

/// Saturates all 2^(n p) tableaux and counts distinct fixpoints. Requires
/// n p <= 24.
UnionClassCount count_union_classes_exhaustive(std::size_t n, std::size_t p);

/// The (i, T) label of a state of A.(B o C) for a given tableau.
LabeledState tableau_label(std::size_t i, const Tableau& t);
Tableau label_tableau(const LabeledState& s, std::size_t rows, std::size_t cols);

/// The six-cell 3 x 4 configuration equivalent to the full grid under xor.
Tableau xor_six_cell_tableau();

struct XorReport {
    std::size_t m = 3, n = 3, p = 4;
    std::size_t reachable = 0;
    std::size_t measured = 0;
    Count upper_bound = 0;
    /// Pairs (i, i') such that (i, full grid) and (i', six-cell tableau) are
    /// both reachable and land in one class of the minimal automaton.
    std::vector<std::pair<std::size_t, std::size_t>> equivalent_pairs;
    bool below_upper_bound() const { return measured < upper_bound; }
    std::string to_string() const;
};

/// Builds A.(B xor C) on the A.(B o C) witness family at (3,3,4) and reports
/// its size against the generic bound, together with the explicit
/// indistinguishable pair of tableaux.
XorReport xor_counterexample();

}  // namespace sclab
