#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "sclab/dfa.hpp"

namespace sclab {

inline constexpr State kUnreachable = std::numeric_limits<State>::max();

/// A minimal DFA together with the class of every input state.
struct Minimized {
    Dfa dfa;
    /// class_of[q] is the state of `dfa` equivalent to input state q, or
    /// kUnreachable if q is not accessible.
    std::vector<State> class_of;
};

/**
 * Accessible part followed by Hopcroft partition refinement.
 *
 * The result is numbered canonically: states appear in breadth-first order
 * from the initial state, scanning letters by index. Two DFAs recognizing the
 * same language over the same alphabet therefore minimize to equal values.
 */
Minimized minimize_with_classes(const Dfa& d);
Dfa minimize(const Dfa& d);

/// Number of states of the minimal complete DFA of L(d).
std::size_t state_complexity(const Dfa& d);

/// Renumbers the accessible part in canonical breadth-first order, without
/// merging states.
Dfa canonical_accessible(const Dfa& d);

/// Whether the minimal DFAs of both inputs coincide (letter names ignored).
bool is_isomorphic(const Dfa& a, const Dfa& b);

}  // namespace sclab
