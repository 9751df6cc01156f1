#include "sclab/dfa.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sclab {

std::int64_t positive_mod(std::int64_t i, std::int64_t p) {
    if (p <= 0) {
        throw std::invalid_argument("positive_mod: modulus must be positive");
    }
    const std::int64_t r = i % p;
    return r < 0 ? r + p : r;
}

StateMap StateMap::identity(std::size_t n) {
    StateMap m;
    m.image.resize(n);
    std::iota(m.image.begin(), m.image.end(), State{0});
    return m;
}

StateMap compose(const StateMap& outer, const StateMap& inner) {
    if (outer.size() != inner.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    StateMap r;
    r.image.resize(inner.size());
    for (std::size_t q = 0; q < inner.size(); ++q) {
        r.image[q] = outer[inner[q]];
    }
    return r;
}

bool is_permutation(const StateMap& m) {
    std::vector<bool> seen(m.size(), false);
    for (State q : m.image) {
        if (q >= m.size() || seen[q]) {
            return false;
        }
        seen[q] = true;
    }
    return true;
}

std::vector<std::size_t> cycle_lengths(const StateMap& m) {
    if (!is_permutation(m)) {
        throw std::domain_error("cycle_lengths: not a permutation");
    }
    std::vector<bool> seen(m.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t start = 0; start < m.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::size_t len = 0;
        for (std::size_t q = start; !seen[q]; q = m[q]) {
            seen[q] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t state_count, State initial,
         std::vector<State> finals, std::vector<State> table)
    : alphabet_(std::move(alphabet)), initial_(initial), table_(std::move(table)) {
    if (alphabet_.empty()) {
        throw std::invalid_argument("Dfa: alphabet must be nonempty");
    }
    if (state_count == 0) {
        throw std::invalid_argument("Dfa: at least one state is required");
    }
    if (initial_ >= state_count) {
        throw std::invalid_argument("Dfa: initial state out of range");
    }
    if (table_.size() != state_count * alphabet_.size()) {
        throw std::invalid_argument("Dfa: transition table is not complete");
    }
    for (State t : table_) {
        if (t >= state_count) {
            throw std::invalid_argument("Dfa: transition target out of range");
        }
    }
    final_flags_.assign(state_count, 0);
    for (State f : finals) {
        if (f >= state_count) {
            throw std::invalid_argument("Dfa: final state out of range");
        }
        final_flags_[f] = 1;
    }
    for (State q = 0; q < state_count; ++q) {
        if (final_flags_[q]) {
            finals_.push_back(q);
        }
    }
}

Dfa Dfa::from_rows(std::vector<std::string> alphabet, State initial, std::vector<State> finals,
                   const std::vector<std::vector<State>>& rows) {
    std::vector<State> table;
    table.reserve(rows.size() * alphabet.size());
    for (const auto& r : rows) {
        if (r.size() != alphabet.size()) {
            throw std::invalid_argument("Dfa: every state needs one successor per letter");
        }
        table.insert(table.end(), r.begin(), r.end());
    }
    const std::size_t n = rows.size();
    return Dfa(std::move(alphabet), n, initial, std::move(finals), std::move(table));
}

Dfa Dfa::trivial(std::vector<std::string> alphabet, bool accepting) {
    const std::size_t k = alphabet.size();
    std::vector<State> finals;
    if (accepting) {
        finals.push_back(0);
    }
    return Dfa(std::move(alphabet), 1, 0, std::move(finals), std::vector<State>(k, 0));
}

Letter Dfa::letter(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) {
        throw std::out_of_range("unknown letter '" + std::string(name) + "'");
    }
    return static_cast<Letter>(it - alphabet_.begin());
}

bool Dfa::accepts(const Word& w) const { return is_final(step(*this, initial_, w)); }

bool Dfa::same_structure(const Dfa& other) const {
    return alphabet_size() == other.alphabet_size() && initial_ == other.initial_ &&
           finals_ == other.finals_ && table_ == other.table_;
}

State step(const Dfa& d, State q, const Word& w) {
    if (q >= d.state_count()) {
        throw std::out_of_range("step: state out of range");
    }
    for (Letter a : w) {
        if (a >= d.alphabet_size()) {
            throw std::out_of_range("step: letter out of range");
        }
        q = d.delta(q, a);
    }
    return q;
}

StateMap letter_action(const Dfa& d, Letter a) {
    if (a >= d.alphabet_size()) {
        throw std::out_of_range("letter_action: letter out of range");
    }
    StateMap m;
    m.image.resize(d.state_count());
    for (State q = 0; q < d.state_count(); ++q) {
        m.image[q] = d.delta(q, a);
    }
    return m;
}

StateMap word_action(const Dfa& d, const Word& w) {
    StateMap m = StateMap::identity(d.state_count());
    for (State q = 0; q < d.state_count(); ++q) {
        m.image[q] = step(d, q, w);
    }
    return m;
}

bool induces_permutation(const Dfa& d, const Word& w) { return is_permutation(word_action(d, w)); }

Word inverse_word(const Dfa& d, const Word& w) {
    const StateMap m = word_action(d, w);
    if (!is_permutation(m)) {
        throw std::domain_error("inverse_word: word does not induce a permutation");
    }
    std::size_t order = 1;
    for (std::size_t len : cycle_lengths(m)) {
        order = std::lcm(order, len);
    }
    Word u;
    u.reserve(w.size() * (order - 1));
    for (std::size_t i = 0; i + 1 < order; ++i) {
        u.insert(u.end(), w.begin(), w.end());
    }
    return u;
}

Word parse_word(const Dfa& d, std::string_view text) {
    Word w;
    const bool single_chars = std::all_of(d.alphabet().begin(), d.alphabet().end(),
                                          [](const std::string& s) { return s.size() == 1; });
    if (single_chars && text.find(' ') == std::string_view::npos) {
        for (char c : text) {
            w.push_back(d.letter(std::string_view(&c, 1)));
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find(' ', pos), text.size());
        if (end > pos) {
            w.push_back(d.letter(text.substr(pos, end - pos)));
        }
        pos = end + 1;
    }
    return w;
}

std::string format_word(const Dfa& d, const Word& w) {
    const bool single_chars = std::all_of(d.alphabet().begin(), d.alphabet().end(),
                                          [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_chars && i > 0) {
            out += ' ';
        }
        out += d.alphabet().at(w[i]);
    }
    return out;
}

std::vector<State> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.state_count(), false);
    std::vector<State> order;
    order.reserve(d.state_count());
    order.push_back(d.initial());
    seen[d.initial()] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (State t : d.row(order[head])) {
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
        }
    }
    return order;
}

bool is_empty_language(const Dfa& d) {
    for (State q : reachable_states(d)) {
        if (d.is_final(q)) {
            return false;
        }
    }
    return true;
}

}  // namespace sclab
