#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/bounds.hpp"
#include "sclab/constructions.hpp"
#include "sclab/witnesses.hpp"

namespace sclab {

inline constexpr std::size_t kDefaultMaxStates = 2'000'000;

/// One measured grid point.
struct ExperimentRow {
    Shape shape = Shape::BoolBool;
    std::vector<BoolOp> ops;
    std::size_t m = 0, n = 0, p = 0;
    std::optional<Count> predicted;
    Bound::Kind bound_kind = Bound::Kind::NoClosedForm;
    std::size_t measured = 0;
    std::size_t reachable = 0;
    std::optional<bool> match;  ///< empty when there is no prediction or on error
    double wall_ms = 0.0;
    std::string error;          ///< nonempty when the point could not be measured

    /// Equality ignoring wall time.
    bool same_result(const ExperimentRow& other) const;
};

/// "or+xor", "and", or "-" when there are none.
std::string ops_text(const std::vector<BoolOp>& ops);
std::vector<BoolOp> parse_ops(std::string_view text);

/// Size of the full product space the construction ranges over, before
/// reachability (m 2^n 2^p, m n p, m 2^(np), m n 2^p, m 2^n p).
double generic_product_size(Shape s, std::size_t m, std::size_t n, std::size_t p);

struct VerifyOptions {
    std::size_t max_states = kDefaultMaxStates;
};

/// Builds the witness, the shape's product and its minimal DFA, and compares
/// against the closed form. Throws StateLimitExceeded past the cap.
ExperimentRow verify(Shape shape, const std::vector<BoolOp>& ops, std::size_t m, std::size_t n,
                     std::size_t p, VerifyOptions opts = {});

/// Inclusive integer range "lo..hi" (or a single value).
struct GridRange {
    std::size_t lo = 3;
    std::size_t hi = 3;
};
GridRange parse_range(std::string_view text);

struct SweepOptions {
    std::size_t max_states = kDefaultMaxStates;
    std::size_t jobs = 1;
};

/// One row per (m, n, p), ordered by m, then n, then p. Per-point failures are
/// recorded in the row's `error`.
std::vector<ExperimentRow> sweep(Shape shape, const std::vector<BoolOp>& ops, GridRange m,
                                 GridRange n, GridRange p, SweepOptions opts = {});

// ------------------------------------------------------------------ search

struct SearchSpace {
    std::size_t letters = 2;  ///< at most 4; names a, b, c, d
    /// allowed[c][l]: roles letter l may take in component c. An empty entry
    /// (or a missing component) allows every role.
    std::array<std::vector<std::vector<TransformRole>>, 3> allowed;
    BoundQuery target;  ///< shape, ops and the sizes m, n, p
};

struct SearchOptions {
    std::size_t budget = 100'000;  ///< maximum number of assignments examined
    std::size_t max_states = kDefaultMaxStates;
    std::size_t jobs = 1;
};

struct Candidate {
    std::array<BrzozowskiSpec, 3> specs;
    std::optional<std::size_t> measured;
    bool components_minimal = false;  ///< each operand has its nominal state complexity
    bool attains_target = false;
    std::string error;

    std::string to_string() const;
};

struct SearchResult {
    std::vector<Candidate> ranked;  ///< measured desc, then role assignment lexicographically
    std::size_t total = 0;          ///< size of the full space
    std::size_t examined = 0;
    std::size_t distinct_measured = 0;  ///< constructions built after letter-relabeling dedup
    bool complete = true;
    std::optional<Count> target_value;
    std::size_t attaining = 0;
};

/// All role assignments of one component allowed by the space.
std::vector<std::vector<TransformRole>> component_assignments(
    std::size_t letters, const std::vector<std::vector<TransformRole>>& allowed);

SearchResult search(const SearchSpace& space, SearchOptions opts = {});

// ------------------------------------------------------------------ reports

inline constexpr std::string_view kCsvHeader =
    "shape,ops,m,n,p,predicted,measured,reachable,match,wall_ms";

std::string rows_to_csv(const std::vector<ExperimentRow>& rows);
std::string rows_to_json(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> rows_from_json(std::string_view text);

}  // namespace sclab
