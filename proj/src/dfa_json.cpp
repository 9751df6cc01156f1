#include "sclab/dfa_json.hpp"

#include <sstream>
#include <stdexcept>

namespace sclab {
namespace {

std::string indent_block(const std::string& text, const std::string& pad) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        out += pad;
        out.append(text, pos, end - pos);
        if (end < text.size()) {
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const Dfa& d) {
    nlohmann::ordered_json j;
    j["alphabet"] = d.alphabet();
    j["states"] = d.state_count();
    j["initial"] = d.initial();
    j["finals"] = d.finals();
    auto rows = nlohmann::ordered_json::array();
    for (State q = 0; q < d.state_count(); ++q) {
        const auto r = d.row(q);
        rows.push_back(std::vector<State>(r.begin(), r.end()));
    }
    j["delta"] = std::move(rows);
    return j;
}

Dfa dfa_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) {
            throw std::invalid_argument("DFA JSON must be an object");
        }
        auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
        const auto states = j.at("states").get<std::size_t>();
        const auto initial = j.at("initial").get<State>();
        auto finals = j.at("finals").get<std::vector<State>>();
        const auto rows = j.at("delta").get<std::vector<std::vector<State>>>();
        if (rows.size() != states) {
            throw std::invalid_argument("\"delta\" must have one row per state");
        }
        return Dfa::from_rows(std::move(alphabet), initial, std::move(finals), rows);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed DFA JSON: ") + e.what());
    }
}

std::string write_dfa(const Dfa& d) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"alphabet\": " << nlohmann::json(d.alphabet()).dump(-1, ' ', false) << ",\n";
    os << "  \"states\": " << d.state_count() << ",\n";
    os << "  \"initial\": " << d.initial() << ",\n";
    os << "  \"finals\": " << nlohmann::json(d.finals()).dump() << ",\n";
    os << "  \"delta\": [";
    for (State q = 0; q < d.state_count(); ++q) {
        os << (q == 0 ? "\n    [" : ",\n    [");
        const auto r = d.row(q);
        for (std::size_t a = 0; a < r.size(); ++a) {
            os << (a ? ", " : "") << r[a];
        }
        os << ']';
    }
    os << "\n  ]\n}";
    return os.str();
}

Dfa read_dfa(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return dfa_from_json(j);
}

std::string write_dfas(const std::vector<Dfa>& ds) {
    std::string out = "[";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out += i ? ",\n" : "\n";
        out += indent_block(write_dfa(ds[i]), "  ");
    }
    out += ds.empty() ? "]" : "\n]";
    return out;
}

std::vector<Dfa> read_dfas(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    std::vector<Dfa> out;
    if (j.is_array()) {
        for (const auto& item : j) {
            out.push_back(dfa_from_json(item));
        }
    } else {
        out.push_back(dfa_from_json(j));
    }
    return out;
}

}  // namespace sclab
