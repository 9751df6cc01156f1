#include "sclab/witnesses.hpp"

#include <stdexcept>

namespace sclab {

std::string_view role_name(TransformRole r) {
    switch (r) {
        case TransformRole::Cycle: return "cycle";
        case TransformRole::Transposition01: return "transposition";
        case TransformRole::Contraction10: return "contraction";
        case TransformRole::Identity: return "identity";
    }
    return "?";
}

TransformRole parse_role(std::string_view name) {
    if (name == "cycle" || name == "C") return TransformRole::Cycle;
    if (name == "transposition" || name == "T") return TransformRole::Transposition01;
    if (name == "contraction" || name == "K") return TransformRole::Contraction10;
    if (name == "identity" || name == "I") return TransformRole::Identity;
    throw std::invalid_argument("unknown role '" + std::string(name) + "'");
}

StateMap role_map(TransformRole r, std::size_t n) {
    StateMap m = StateMap::identity(n);
    switch (r) {
        case TransformRole::Cycle:
            for (std::size_t q = 0; q < n; ++q) {
                m.image[q] = static_cast<State>(positive_mod(static_cast<std::int64_t>(q) + 1,
                                                             static_cast<std::int64_t>(n)));
            }
            break;
        case TransformRole::Transposition01:
            m.image[0] = 1;
            m.image[1] = 0;
            break;
        case TransformRole::Contraction10:
            m.image[1] = 0;
            break;
        case TransformRole::Identity:
            break;
    }
    return m;
}

BrzozowskiSpec BrzozowskiSpec::from_slots(std::size_t n, std::vector<std::string> alphabet,
                                          std::string_view cycle, std::string_view transposition,
                                          std::string_view contraction) {
    BrzozowskiSpec spec;
    spec.n = n;
    spec.roles.assign(alphabet.size(), TransformRole::Identity);
    auto assign = [&](std::string_view letter, TransformRole role) {
        if (letter.empty() || letter == "-") {
            return;
        }
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (alphabet[i] == letter) {
                if (spec.roles[i] != TransformRole::Identity) {
                    throw std::invalid_argument("letter '" + std::string(letter) +
                                                "' assigned two roles");
                }
                spec.roles[i] = role;
                return;
            }
        }
        throw std::invalid_argument("letter '" + std::string(letter) + "' not in alphabet");
    };
    assign(cycle, TransformRole::Cycle);
    assign(transposition, TransformRole::Transposition01);
    assign(contraction, TransformRole::Contraction10);
    spec.alphabet = std::move(alphabet);
    spec.validate();
    return spec;
}

void BrzozowskiSpec::validate() const {
    if (alphabet.empty()) {
        throw std::invalid_argument("Brzozowski automaton needs a nonempty alphabet");
    }
    if (roles.size() != alphabet.size()) {
        throw std::invalid_argument("one role per letter is required");
    }
    if (n < 1) {
        throw std::invalid_argument("Brzozowski automaton needs at least one state");
    }
    std::array<int, 3> used{};
    for (TransformRole r : roles) {
        if (r == TransformRole::Identity) {
            continue;
        }
        if (r != TransformRole::Cycle && n < 2) {
            throw std::invalid_argument(std::string(role_name(r)) + " requires n >= 2");
        }
        if (++used[static_cast<int>(r)] > 1) {
            throw std::invalid_argument(std::string(role_name(r)) +
                                        " assigned to more than one letter");
        }
    }
}

std::string BrzozowskiSpec::to_string() const {
    auto slot = [&](TransformRole role) -> std::string {
        for (std::size_t i = 0; i < roles.size(); ++i) {
            if (roles[i] == role) {
                return alphabet[i];
            }
        }
        return "-";
    };
    std::string rest;
    for (std::size_t i = 0; i < roles.size(); ++i) {
        if (roles[i] == TransformRole::Identity) {
            rest += rest.empty() ? "" : ",";
            rest += alphabet[i];
        }
    }
    return "X_" + std::to_string(n) + "(" + slot(TransformRole::Cycle) + "," +
           slot(TransformRole::Transposition01) + "," + slot(TransformRole::Contraction10) +
           ";{" + rest + "})";
}

Dfa brzozowski(const BrzozowskiSpec& spec) {
    spec.validate();
    const std::size_t k = spec.alphabet.size();
    std::vector<StateMap> maps;
    maps.reserve(k);
    for (TransformRole r : spec.roles) {
        maps.push_back(role_map(r, spec.n));
    }
    std::vector<State> table(spec.n * k);
    for (std::size_t q = 0; q < spec.n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            table[q * k + a] = maps[a][q];
        }
    }
    return Dfa(spec.alphabet, spec.n, 0, {static_cast<State>(spec.n - 1)}, std::move(table));
}

std::string_view shape_name(Shape s) {
    switch (s) {
        case Shape::DoubleCat: return "double-cat";
        case Shape::BoolBool: return "bool-bool";
        case Shape::CatOfBool: return "cat-of-bool";
        case Shape::BoolThenCat: return "bool-then-cat";
        case Shape::CatThenBool: return "cat-then-bool";
    }
    return "?";
}

Shape parse_shape(std::string_view name) {
    for (Shape s : kAllShapes) {
        if (shape_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

std::vector<std::string> witness_alphabet(Shape s) {
    if (s == Shape::BoolBool || s == Shape::CatThenBool) {
        return {"a", "b"};
    }
    return {"a", "b", "c"};
}

std::size_t shape_op_count(Shape s) {
    switch (s) {
        case Shape::DoubleCat: return 0;
        case Shape::BoolBool: return 2;
        default: return 1;
    }
}

std::array<BrzozowskiSpec, 3> witness_specs(Shape s, std::size_t m, std::size_t n, std::size_t p) {
    if (m < 3 || n < 3 || p < 3) {
        throw std::invalid_argument("witness families are defined for m, n, p >= 3");
    }
    const auto sigma = witness_alphabet(s);
    auto x = [&](std::size_t size, std::string_view c, std::string_view t, std::string_view k) {
        return BrzozowskiSpec::from_slots(size, sigma, c, t, k);
    };
    switch (s) {
        case Shape::DoubleCat: return {x(m, "b", "c", "-"), x(n, "a", "b", "c"), x(p, "a", "-", "b")};
        case Shape::BoolBool: return {x(m, "a", "-", "-"), x(n, "a", "b", "-"), x(p, "b", "-", "-")};
        case Shape::CatOfBool: return {x(m, "a", "b", "-"), x(n, "b", "a", "c"), x(p, "b", "-", "c")};
        case Shape::BoolThenCat: return {x(m, "a", "b", "-"), x(n, "a", "c", "-"), x(p, "a", "-", "b")};
        case Shape::CatThenBool: return {x(m, "a", "b", "-"), x(n, "a", "-", "b"), x(p, "b", "a", "-")};
    }
    throw std::logic_error("unreachable shape");
}

std::array<Dfa, 3> witness(Shape s, std::size_t m, std::size_t n, std::size_t p) {
    const auto specs = witness_specs(s, m, n, p);
    return {brzozowski(specs[0]), brzozowski(specs[1]), brzozowski(specs[2])};
}

}  // namespace sclab
