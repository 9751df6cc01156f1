#include "sclab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sclab/minimize.hpp"

namespace sclab {
namespace {

template <typename F>
void parallel_for(std::size_t count, std::size_t jobs, F&& body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                body(i);
            }
        });
    }
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

bool ExperimentRow::same_result(const ExperimentRow& o) const {
    return shape == o.shape && ops == o.ops && m == o.m && n == o.n && p == o.p &&
           predicted == o.predicted && bound_kind == o.bound_kind && measured == o.measured &&
           reachable == o.reachable && match == o.match && error == o.error;
}

std::string ops_text(const std::vector<BoolOp>& ops) {
    if (ops.empty()) {
        return "-";
    }
    std::string s;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        s += (i ? "+" : "") + ops[i].name();
    }
    return s;
}

std::vector<BoolOp> parse_ops(std::string_view text) {
    std::vector<BoolOp> ops;
    if (text.empty() || text == "-") {
        return ops;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of("+,", pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ops.push_back(parse_bool_op(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return ops;
}

double generic_product_size(Shape s, std::size_t m, std::size_t n, std::size_t p) {
    const double M = static_cast<double>(m);
    const double N = static_cast<double>(n);
    const double P = static_cast<double>(p);
    switch (s) {
        case Shape::DoubleCat: return M * std::exp2(N) * std::exp2(P);
        case Shape::BoolBool: return M * N * P;
        case Shape::CatOfBool: return M * std::exp2(N * P);
        case Shape::BoolThenCat: return M * N * std::exp2(P);
        case Shape::CatThenBool: return M * std::exp2(N) * P;
    }
    return 0.0;
}

ExperimentRow verify(Shape shape, const std::vector<BoolOp>& ops, std::size_t m, std::size_t n,
                     std::size_t p, VerifyOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRow row;
    row.shape = shape;
    row.ops = ops;
    row.m = m;
    row.n = n;
    row.p = p;

    const OpTree tree = shape_tree(shape, ops);
    const Bound b = bound({shape, ops, m, n, p});
    row.bound_kind = b.kind;
    row.predicted = b.value;

    const auto w = witness(shape, m, n, p);
    const LabeledDfa built = build_tree(tree, {w[0], w[1], w[2]}, {opts.max_states});
    row.reachable = built.state_count();
    row.measured = state_complexity(built.dfa());
    if (row.predicted) {
        row.match = *row.predicted == row.measured;
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return row;
}

GridRange parse_range(std::string_view text) {
    auto num = [&](std::string_view s) -> std::size_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("bad range '" + std::string(text) + "'");
        }
        return std::stoul(std::string(s));
    };
    const std::size_t dots = text.find("..");
    GridRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = num(text);
    } else {
        r.lo = num(text.substr(0, dots));
        r.hi = num(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw std::invalid_argument("empty range '" + std::string(text) + "'");
    }
    return r;
}

std::vector<ExperimentRow> sweep(Shape shape, const std::vector<BoolOp>& ops, GridRange m,
                                 GridRange n, GridRange p, SweepOptions opts) {
    std::vector<std::array<std::size_t, 3>> points;
    for (std::size_t i = m.lo; i <= m.hi; ++i) {
        for (std::size_t j = n.lo; j <= n.hi; ++j) {
            for (std::size_t k = p.lo; k <= p.hi; ++k) {
                points.push_back({i, j, k});
            }
        }
    }
    std::vector<ExperimentRow> rows(points.size());
    parallel_for(points.size(), opts.jobs, [&](std::size_t idx) {
        const auto [i, j, k] = points[idx];
        try {
            rows[idx] = verify(shape, ops, i, j, k, {opts.max_states});
        } catch (const std::exception& e) {
            ExperimentRow& r = rows[idx];
            r.shape = shape;
            r.ops = ops;
            r.m = i;
            r.n = j;
            r.p = k;
            r.error = e.what();
        }
    });
    return rows;
}

// ------------------------------------------------------------------ search

std::vector<std::vector<TransformRole>> component_assignments(
    std::size_t letters, const std::vector<std::vector<TransformRole>>& allowed) {
    std::vector<std::vector<TransformRole>> out;
    std::vector<TransformRole> current;
    auto rec = [&](auto&& self, std::size_t letter, unsigned used) -> void {
        if (letter == letters) {
            out.push_back(current);
            return;
        }
        const bool all = letter >= allowed.size() || allowed[letter].empty();
        for (TransformRole r : kAllRoles) {
            if (!all && std::find(allowed[letter].begin(), allowed[letter].end(), r) ==
                            allowed[letter].end()) {
                continue;
            }
            const unsigned bit = 1U << static_cast<unsigned>(r);
            if (r != TransformRole::Identity && (used & bit)) {
                continue;
            }
            current.push_back(r);
            self(self, letter + 1, r == TransformRole::Identity ? used : (used | bit));
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::string Candidate::to_string() const {
    return "(" + specs[0].to_string() + ", " + specs[1].to_string() + ", " + specs[2].to_string() +
           ")";
}

namespace {

using RoleKey = std::vector<int>;  // component-major, letter-minor role indices

RoleKey role_key(const std::array<const std::vector<TransformRole>*, 3>& parts) {
    RoleKey key;
    for (const auto* part : parts) {
        for (TransformRole r : *part) {
            key.push_back(static_cast<int>(r));
        }
    }
    return key;
}

// Smallest key over all consistent relabelings of the letters.
RoleKey canonical_key(const RoleKey& key, std::size_t letters) {
    std::vector<std::size_t> perm(letters);
    std::iota(perm.begin(), perm.end(), 0);
    RoleKey best = key;
    RoleKey cand(key.size());
    do {
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t l = 0; l < letters; ++l) {
                cand[c * letters + perm[l]] = key[c * letters + l];
            }
        }
        best = std::min(best, cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

SearchResult search(const SearchSpace& space, SearchOptions opts) {
    const std::size_t k = space.letters;
    if (k < 1 || k > 4) {
        throw std::invalid_argument("search supports 1 to 4 letters");
    }
    const BoundQuery& target = space.target;
    const std::array<std::size_t, 3> sizes = {target.m, target.n, target.p};
    const OpTree tree = shape_tree(target.shape, target.ops);
    const Bound b = bound(target);

    std::vector<std::string> alphabet;
    for (std::size_t l = 0; l < k; ++l) {
        alphabet.push_back(std::string(1, static_cast<char>('a' + l)));
    }

    std::array<std::vector<std::vector<TransformRole>>, 3> per;
    for (std::size_t c = 0; c < 3; ++c) {
        per[c] = component_assignments(k, space.allowed[c]);
    }

    SearchResult result;
    result.total = per[0].size() * per[1].size() * per[2].size();
    result.examined = std::min(result.total, opts.budget);
    result.complete = result.examined == result.total;
    if (b.kind != Bound::Kind::NoClosedForm) {
        result.target_value = b.value;
    }

    // Operand automata and their minimality, per component choice.
    std::array<std::vector<Dfa>, 3> dfas;
    std::array<std::vector<bool>, 3> minimal;
    for (std::size_t c = 0; c < 3; ++c) {
        for (const auto& roles : per[c]) {
            BrzozowskiSpec spec{sizes[c], alphabet, roles};
            dfas[c].push_back(brzozowski(spec));
            minimal[c].push_back(state_complexity(dfas[c].back()) == sizes[c]);
        }
    }

    struct Point {
        std::array<std::size_t, 3> idx;
        RoleKey key;
        std::size_t orbit;
    };
    std::vector<Point> points;
    points.reserve(result.examined);
    std::map<RoleKey, std::size_t> orbit_of;
    std::vector<std::array<std::size_t, 3>> orbit_rep;
    for (std::size_t flat = 0; flat < result.examined; ++flat) {
        const std::size_t c2 = flat % per[2].size();
        const std::size_t c1 = (flat / per[2].size()) % per[1].size();
        const std::size_t c0 = flat / (per[2].size() * per[1].size());
        Point pt{{c0, c1, c2}, role_key({&per[0][c0], &per[1][c1], &per[2][c2]}), 0};
        const RoleKey canon = canonical_key(pt.key, k);
        auto [it, inserted] = orbit_of.try_emplace(canon, orbit_rep.size());
        if (inserted) {
            orbit_rep.push_back(pt.idx);
        }
        pt.orbit = it->second;
        points.push_back(std::move(pt));
    }

    struct Outcome {
        std::optional<std::size_t> measured;
        std::string error;
    };
    std::vector<Outcome> outcomes(orbit_rep.size());
    parallel_for(orbit_rep.size(), opts.jobs, [&](std::size_t o) {
        const auto& idx = orbit_rep[o];
        try {
            const LabeledDfa built = build_tree(
                tree, {dfas[0][idx[0]], dfas[1][idx[1]], dfas[2][idx[2]]}, {opts.max_states});
            outcomes[o].measured = state_complexity(built.dfa());
        } catch (const std::exception& e) {
            outcomes[o].error = e.what();
        }
    });
    result.distinct_measured = orbit_rep.size();

    std::vector<std::pair<RoleKey, Candidate>> keyed;
    keyed.reserve(points.size());
    for (const Point& pt : points) {
        Candidate cand;
        for (std::size_t c = 0; c < 3; ++c) {
            cand.specs[c] = BrzozowskiSpec{sizes[c], alphabet, per[c][pt.idx[c]]};
        }
        cand.components_minimal =
            minimal[0][pt.idx[0]] && minimal[1][pt.idx[1]] && minimal[2][pt.idx[2]];
        cand.measured = outcomes[pt.orbit].measured;
        cand.error = outcomes[pt.orbit].error;
        cand.attains_target = cand.components_minimal && cand.measured && result.target_value &&
                              *cand.measured == *result.target_value;
        result.attaining += cand.attains_target ? 1 : 0;
        keyed.emplace_back(pt.key, std::move(cand));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        const std::size_t mx = x.second.measured.value_or(0);
        const std::size_t my = y.second.measured.value_or(0);
        if (mx != my) {
            return mx > my;
        }
        return x.first < y.first;
    });
    result.ranked.reserve(keyed.size());
    for (auto& [key, cand] : keyed) {
        result.ranked.push_back(std::move(cand));
    }
    return result;
}

// ------------------------------------------------------------------ reports

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << shape_name(r.shape) << ',' << ops_text(r.ops) << ',' << r.m << ',' << r.n << ','
           << r.p << ',';
        if (r.predicted) {
            os << *r.predicted;
        }
        os << ',';
        if (r.error.empty()) {
            os << r.measured << ',' << r.reachable << ',';
            if (r.match) {
                os << (*r.match ? "true" : "false");
            }
        } else {
            os << ",,error";
        }
        os << ',' << format_ms(r.wall_ms) << '\n';
    }
    return os.str();
}

std::string rows_to_json(const std::vector<ExperimentRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["shape"] = shape_name(r.shape);
        std::vector<std::string> ops;
        for (const auto& op : r.ops) {
            ops.push_back(op.name());
        }
        j["ops"] = ops;
        j["m"] = r.m;
        j["n"] = r.n;
        j["p"] = r.p;
        j["predicted"] = r.predicted ? nlohmann::ordered_json(*r.predicted) : nullptr;
        j["bound"] = r.bound_kind == Bound::Kind::Exact            ? "exact"
                     : r.bound_kind == Bound::Kind::UpperBoundOnly ? "upper-bound-only"
                                                                   : "none";
        j["measured"] = r.measured;
        j["reachable"] = r.reachable;
        j["match"] = r.match ? nlohmann::ordered_json(*r.match) : nullptr;
        j["wall_ms"] = std::round(r.wall_ms * 1000.0) / 1000.0;
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<ExperimentRow> rows_from_json(std::string_view text) {
    std::vector<ExperimentRow> rows;
    try {
        const auto arr = nlohmann::json::parse(text);
        for (const auto& j : arr) {
            ExperimentRow r;
            r.shape = parse_shape(j.at("shape").get<std::string>());
            for (const auto& op : j.at("ops")) {
                r.ops.push_back(parse_bool_op(op.get<std::string>()));
            }
            r.m = j.at("m").get<std::size_t>();
            r.n = j.at("n").get<std::size_t>();
            r.p = j.at("p").get<std::size_t>();
            if (!j.at("predicted").is_null()) {
                r.predicted = j.at("predicted").get<Count>();
            }
            const auto kind = j.value("bound", std::string("none"));
            r.bound_kind = kind == "exact"              ? Bound::Kind::Exact
                           : kind == "upper-bound-only" ? Bound::Kind::UpperBoundOnly
                                                        : Bound::Kind::NoClosedForm;
            r.measured = j.at("measured").get<std::size_t>();
            r.reachable = j.at("reachable").get<std::size_t>();
            if (!j.at("match").is_null()) {
                r.match = j.at("match").get<bool>();
            }
            r.wall_ms = j.at("wall_ms").get<double>();
            r.error = j.value("error", std::string());
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
    return rows;
}

}  // namespace sclab
