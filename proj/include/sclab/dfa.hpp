#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file dfa.hpp
 * @brief Complete deterministic automata over a dense, indexed alphabet.
 */

namespace sclab {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Nonnegative residue of @p i modulo @p p (the cyclic index convention used
/// throughout the witnesses). Requires p > 0.
std::int64_t positive_mod(std::int64_t i, std::int64_t p);

/// A transformation q -> image[q] of {0..n-1}.
struct StateMap {
    std::vector<State> image;

    std::size_t size() const { return image.size(); }
    State operator[](std::size_t q) const { return image[q]; }

    static StateMap identity(std::size_t n);

    friend bool operator==(const StateMap&, const StateMap&) = default;
};

/// outer o inner, i.e. q -> outer[inner[q]].
StateMap compose(const StateMap& outer, const StateMap& inner);

bool is_permutation(const StateMap& m);

/// Lengths of the cycles of a permutation, in order of their least element.
std::vector<std::size_t> cycle_lengths(const StateMap& m);

/**
 * A complete DFA. States are 0..state_count-1, letters 0..alphabet_size-1.
 * Transitions are stored row-major: delta(q, a) = table[q * k + a].
 *
 * Instances are validated on construction and immutable afterwards.
 */
class Dfa {
public:
    Dfa(std::vector<std::string> alphabet, std::size_t state_count, State initial,
        std::vector<State> finals, std::vector<State> table);

    /// Builds from one row of successors per state.
    static Dfa from_rows(std::vector<std::string> alphabet, State initial,
                         std::vector<State> finals,
                         const std::vector<std::vector<State>>& rows);

    /// Single-state automaton accepting everything (final) or nothing.
    static Dfa trivial(std::vector<std::string> alphabet, bool accepting);

    std::size_t alphabet_size() const { return alphabet_.size(); }
    std::size_t state_count() const { return final_flags_.size(); }
    State initial() const { return initial_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    /// Sorted, duplicate-free.
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(State q) const { return final_flags_[q] != 0; }

    State delta(State q, Letter a) const { return table_[q * alphabet_size() + a]; }
    std::span<const State> row(State q) const {
        return {table_.data() + q * alphabet_size(), alphabet_size()};
    }
    const std::vector<State>& table() const { return table_; }

    /// Index of the letter named @p name; throws if absent.
    Letter letter(std::string_view name) const;

    bool accepts(const Word& w) const;

    /// Structural equality: same sizes, initial, finals and transitions.
    /// Letter names are not compared.
    bool same_structure(const Dfa& other) const;

    friend bool operator==(const Dfa& a, const Dfa& b) {
        return a.same_structure(b) && a.alphabet_ == b.alphabet_;
    }

private:
    std::vector<std::string> alphabet_;
    State initial_;
    std::vector<State> finals_;
    std::vector<std::uint8_t> final_flags_;
    std::vector<State> table_;
};

/// q . w. Throws std::out_of_range on a bad state or letter.
State step(const Dfa& d, State q, const Word& w);

StateMap word_action(const Dfa& d, const Word& w);
StateMap letter_action(const Dfa& d, Letter a);

/// Whether @p w acts on the states of @p d as a bijection.
bool induces_permutation(const Dfa& d, const Word& w);

/// w^(N-1) with N the lcm of the cycle lengths of the permutation induced by w,
/// so that the result acts as the inverse permutation. Throws
/// std::domain_error if w does not induce a permutation.
Word inverse_word(const Dfa& d, const Word& w);

/// Parses a word written with the automaton's letter names. Single-character
/// names may be juxtaposed ("abba"); otherwise separate letters by spaces.
Word parse_word(const Dfa& d, std::string_view text);
std::string format_word(const Dfa& d, const Word& w);

/// States reachable from the initial state, in breadth-first order with
/// letters scanned in index order.
std::vector<State> reachable_states(const Dfa& d);

/// Whether L(d) is empty.
bool is_empty_language(const Dfa& d);

}  // namespace sclab
