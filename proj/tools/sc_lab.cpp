// sc-lab: build, measure and sweep state complexity of combined operations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclab/bounds.hpp"
#include "sclab/constructions.hpp"
#include "sclab/dfa_json.hpp"
#include "sclab/lab.hpp"
#include "sclab/minimize.hpp"
#include "sclab/tableau.hpp"
#include "sclab/witnesses.hpp"

namespace fs = std::filesystem;
using namespace sclab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0) {
        return jobs;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

struct GridArgs {
    std::string shape;
    std::string ops;
    std::string m = "3", n = "3", p = "3";
    std::string range;
};

void add_grid_options(CLI::App* cmd, GridArgs& g) {
    cmd->add_option("--shape", g.shape,
                    "double-cat | bool-bool | cat-of-bool | bool-then-cat | cat-then-bool")
        ->required();
    cmd->add_option("--ops", g.ops, "connectives, e.g. and, or+xor, tt0110");
    cmd->add_option("-m", g.m, "size of the first operand");
    cmd->add_option("-n", g.n, "size of the second operand");
    cmd->add_option("-p", g.p, "size of the third operand");
}

std::string rows_text(const std::vector<ExperimentRow>& rows, const std::string& format) {
    if (format == "json") {
        return rows_to_json(rows) + "\n";
    }
    return rows_to_csv(rows);
}

int rows_exit(const std::vector<ExperimentRow>& rows) {
    bool mismatch = false;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            return kExitError;
        }
        mismatch = mismatch || (r.match && !*r.match);
    }
    return mismatch ? kExitMismatch : kExitOk;
}

std::vector<std::vector<TransformRole>> parse_role_set(std::string_view text) {
    std::vector<TransformRole> roles;
    for (char c : text) {
        roles.push_back(parse_role(std::string_view(&c, 1)));
    }
    return {roles};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State complexity lab for combined catenation and boolean operations"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // witness
    GridArgs wg;
    std::string witness_out;
    auto* witness_cmd = app.add_subcommand("witness", "Emit the witness triple of a shape");
    witness_cmd->add_option("--shape", wg.shape, "combination shape")->required();
    witness_cmd->add_option("-m", wg.m);
    witness_cmd->add_option("-n", wg.n);
    witness_cmd->add_option("-p", wg.p);
    witness_cmd->add_option("--out", witness_out, "directory for 0.json, 1.json, 2.json");
    witness_cmd->callback([&] {
        const Shape s = parse_shape(wg.shape);
        const auto w = witness(s, std::stoul(wg.m), std::stoul(wg.n), std::stoul(wg.p));
        if (witness_out.empty()) {
            std::cout << write_dfas({w[0], w[1], w[2]}) << "\n";
            return;
        }
        fs::create_directories(witness_out);
        for (std::size_t i = 0; i < 3; ++i) {
            write_output((fs::path(witness_out) / (std::to_string(i) + ".json")).string(),
                         write_dfa(w[i]) + "\n");
        }
    });

    // build
    std::string tree_text;
    std::vector<std::string> build_files;
    std::string build_out;
    bool build_minimize = false;
    std::size_t build_max = kDefaultMaxStates;
    auto* build_cmd = app.add_subcommand("build", "Construct the DFA of an operation tree");
    build_cmd->add_option("--tree", tree_text, "e.g. cat(0,or(1,2))")->required();
    build_cmd->add_option("files", build_files, "operand DFA files (an array file expands)")
        ->required();
    build_cmd->add_flag("--minimize", build_minimize, "minimize the result");
    build_cmd->add_option("--max-states", build_max, "reachable state cap (0 = none)");
    build_cmd->add_option("--out", build_out, "output file (default stdout)");
    build_cmd->callback([&] {
        std::vector<Dfa> operands;
        for (const auto& f : build_files) {
            for (auto& d : read_dfas(read_file(f))) {
                operands.push_back(std::move(d));
            }
        }
        const LabeledDfa built = build_tree(parse_tree(tree_text), operands, {build_max});
        write_output(build_out, write_dfa(build_minimize ? minimize(built.dfa()) : built.dfa()) + "\n");
    });

    // sc
    std::string sc_file;
    auto* sc_cmd = app.add_subcommand("sc", "Print the state complexity of a DFA file");
    sc_cmd->add_option("file", sc_file)->required();
    sc_cmd->callback([&] {
        for (const auto& d : read_dfas(read_file(sc_file))) {
            std::cout << state_complexity(d) << "\n";
        }
    });

    // bound
    GridArgs bg;
    auto* bound_cmd = app.add_subcommand("bound", "Print the closed-form bound");
    add_grid_options(bound_cmd, bg);
    bound_cmd->callback([&] {
        const Bound b = bound({parse_shape(bg.shape), parse_ops(bg.ops), std::stoul(bg.m),
                               std::stoul(bg.n), std::stoul(bg.p)});
        std::cout << (b.value ? std::to_string(*b.value) : "none") << "\t" << b.formula << "\n";
    });

    // verify
    GridArgs vg;
    std::string verify_format = "csv";
    std::size_t verify_max = kDefaultMaxStates;
    auto* verify_cmd = app.add_subcommand("verify", "Measure the witness against its bound");
    add_grid_options(verify_cmd, vg);
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--max-states", verify_max, "reachable state cap (0 = none)");
    verify_cmd->callback([&] {
        const auto row = verify(parse_shape(vg.shape), parse_ops(vg.ops), std::stoul(vg.m),
                                std::stoul(vg.n), std::stoul(vg.p), {verify_max});
        std::cout << rows_text({row}, verify_format);
        exit_code = rows_exit({row});
    });

    // sweep
    GridArgs sg;
    std::string sweep_format = "csv";
    std::string sweep_out;
    std::size_t sweep_max = kDefaultMaxStates;
    std::size_t sweep_jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify every point of an (m,n,p) grid");
    add_grid_options(sweep_cmd, sg);
    sweep_cmd->add_option("--range", sg.range, "same range for m, n and p, e.g. 3..5");
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--max-states", sweep_max, "reachable state cap (0 = none)");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");
    sweep_cmd->callback([&] {
        GridRange m = parse_range(sg.m), n = parse_range(sg.n), p = parse_range(sg.p);
        if (!sg.range.empty()) {
            m = n = p = parse_range(sg.range);
        }
        const auto rows = sweep(parse_shape(sg.shape), parse_ops(sg.ops), m, n, p,
                                {sweep_max, resolve_jobs(sweep_jobs)});
        write_output(sweep_out, rows_text(rows, sweep_format));
        exit_code = rows_exit(rows);
    });

    // search
    GridArgs qg;
    std::size_t letters = 2;
    std::string roles_all;
    std::vector<std::string> allowed_specs;
    std::size_t budget = SearchOptions{}.budget;
    std::size_t search_max = kDefaultMaxStates;
    std::size_t search_jobs = 1;
    std::size_t top = 10;
    std::string search_format = "text";
    auto* search_cmd =
        app.add_subcommand("search", "Enumerate Brzozowski role assignments for a shape");
    add_grid_options(search_cmd, qg);
    search_cmd->add_option("--letters", letters, "alphabet size, at most 4");
    search_cmd->add_option("--roles", roles_all, "roles every letter may take, e.g. CTI");
    search_cmd->add_option("--allow", allowed_specs,
                           "COMPONENT:LETTER:ROLES, e.g. 0:a:C restricts letter a of A to the cycle");
    search_cmd->add_option("--budget", budget, "maximum assignments examined");
    search_cmd->add_option("--max-states", search_max, "reachable state cap per construction");
    search_cmd->add_option("--jobs", search_jobs, "worker threads (0 = hardware)");
    search_cmd->add_option("--top", top, "ranked candidates to print (0 = all)");
    search_cmd->add_option("--format", search_format)->check(CLI::IsMember({"text", "json"}));
    search_cmd->callback([&] {
        SearchSpace space;
        space.letters = letters;
        space.target = {parse_shape(qg.shape), parse_ops(qg.ops), std::stoul(qg.m),
                        std::stoul(qg.n), std::stoul(qg.p)};
        for (auto& comp : space.allowed) {
            comp.assign(letters, roles_all.empty() ? std::vector<TransformRole>{}
                                                   : parse_role_set(roles_all)[0]);
        }
        for (const auto& spec : allowed_specs) {
            const auto c1 = spec.find(':');
            const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos || c1 != 1 || c2 != 3) {
                throw std::invalid_argument("--allow expects COMPONENT:LETTER:ROLES, got '" +
                                            spec + "'");
            }
            const std::size_t comp = static_cast<std::size_t>(spec[0] - '0');
            const std::size_t letter = static_cast<std::size_t>(spec[2] - 'a');
            if (comp > 2 || letter >= letters) {
                throw std::invalid_argument("--allow '" + spec + "' is out of range");
            }
            space.allowed[comp][letter] = parse_role_set(spec.substr(4))[0];
        }
        const SearchResult res = search(space, {budget, search_max, resolve_jobs(search_jobs)});
        const std::size_t shown = top == 0 ? res.ranked.size() : std::min(top, res.ranked.size());
        if (search_format == "json") {
            nlohmann::ordered_json j;
            j["total"] = res.total;
            j["examined"] = res.examined;
            j["distinct_measured"] = res.distinct_measured;
            j["complete"] = res.complete;
            j["target"] = res.target_value ? nlohmann::ordered_json(*res.target_value) : nullptr;
            j["attaining"] = res.attaining;
            j["ranked"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < shown; ++i) {
                const auto& c = res.ranked[i];
                nlohmann::ordered_json cj;
                cj["operands"] = {c.specs[0].to_string(), c.specs[1].to_string(),
                                  c.specs[2].to_string()};
                cj["measured"] = c.measured ? nlohmann::ordered_json(*c.measured) : nullptr;
                cj["components_minimal"] = c.components_minimal;
                cj["attains_target"] = c.attains_target;
                if (!c.error.empty()) {
                    cj["error"] = c.error;
                }
                j["ranked"].push_back(std::move(cj));
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "examined " << res.examined << " of " << res.total << " assignments"
                      << (res.complete ? "" : " (incomplete: budget exhausted)") << ", "
                      << res.distinct_measured << " distinct up to letter renaming\n";
            std::cout << "target "
                      << (res.target_value ? std::to_string(*res.target_value) : "none")
                      << ", attained by " << res.attaining << "\n";
            for (std::size_t i = 0; i < shown; ++i) {
                const auto& c = res.ranked[i];
                std::cout << (c.measured ? std::to_string(*c.measured) : "error") << "\t"
                          << c.to_string() << (c.attains_target ? "\t*" : "")
                          << (c.components_minimal ? "" : "\t(non-minimal operand)") << "\n";
            }
        }
        exit_code = (!res.target_value || res.attaining > 0) ? kExitOk : kExitMismatch;
    });

    // tableau
    std::string tableau_op = "union";
    std::string grid = "3,3";
    std::string cells;
    bool classes = false;
    auto* tableau_cmd = app.add_subcommand("tableau", "Saturate a tableau of marked cells");
    tableau_cmd->add_option("--op", tableau_op)->check(CLI::IsMember({"union", "xor"}));
    tableau_cmd->add_option("--grid", grid, "rows,cols");
    tableau_cmd->add_option("--cells", cells, "marked cells j:k,j:k,...");
    tableau_cmd->add_flag("--classes", classes, "count union-saturated tableaux of the grid");
    tableau_cmd->callback([&] {
        const auto comma = grid.find_first_of(",x");
        if (comma == std::string::npos) {
            throw std::invalid_argument("--grid expects rows,cols");
        }
        const std::size_t rows = std::stoul(grid.substr(0, comma));
        const std::size_t cols = std::stoul(grid.substr(comma + 1));
        if (classes) {
            const auto c = count_union_classes(rows, cols);
            std::cout << "union classes: " << c.without_origin << ", with (0,0): "
                      << c.with_origin << "\n";
            if (rows * cols <= 24) {
                const auto e = count_union_classes_exhaustive(rows, cols);
                std::cout << "exhaustive:    " << e.without_origin << ", with (0,0): "
                          << e.with_origin << "\n";
                exit_code = e == c ? kExitOk : kExitMismatch;
            }
            return;
        }
        const Tableau t = Tableau::parse(rows, cols, cells);
        const Tableau s = tableau_op == "xor" ? saturate_xor(t) : saturate_union(t);
        std::cout << "input " << t.to_string() << "\n" << t.to_ascii();
        std::cout << "saturated " << s.to_string() << "\n" << s.to_ascii();
        std::cout << "right triangles: " << find_right_triangles(t).size()
                  << ", rectangles: " << find_rectangles(t).size() << "\n";
    });

    // xor-demo
    auto* xor_cmd = app.add_subcommand(
        "xor-demo", "Show that the A.(B o C) witness falls short of the bound under xor");
    xor_cmd->callback([&] {
        const XorReport r = xor_counterexample();
        std::cout << r.to_string();
        exit_code = r.below_upper_bound() && !r.equivalent_pairs.empty() ? kExitOk : kExitMismatch;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "sc-lab: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
