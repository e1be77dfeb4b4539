#include "rigged/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rigged/rc_ops.hpp"

namespace rigged {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown key \"" + key + "\" in " + where);
        }
    }
}

const nlohmann::json& require_key(const nlohmann::json& j, const char* key,
                                  const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument("missing key \"" + std::string(key) + "\" in " + where);
    }
    return *it;
}

std::vector<std::int64_t> int_list(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) {
        throw std::invalid_argument(where + " must be an array of integers");
    }
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_number_integer()) {
            throw std::invalid_argument(where + " must contain integers only");
        }
        out.push_back(item.get<std::int64_t>());
    }
    return out;
}

} // namespace

std::string graph_to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    for (int v = 0; v < g.size(); ++v) {
        out << "  " << v << " [label=\"" << dot_escape(g.keys[static_cast<size_t>(v)])
            << "\"];\n";
    }
    for (const ColoredEdge& e : g.edges) {
        out << "  " << e.src << " -> " << e.dst << " [label=\"" << e.color << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json graph_to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["rank"] = g.rank;
    nlohmann::json vertices = nlohmann::json::array();
    const bool decorated = !g.weights.empty();
    for (int v = 0; v < g.size(); ++v) {
        nlohmann::json vertex;
        vertex["id"] = v;
        vertex["key"] = g.keys[static_cast<size_t>(v)];
        if (decorated) {
            vertex["weight"] = g.weights[static_cast<size_t>(v)].coords();
        }
        if (!g.cocharges.empty()) {
            vertex["cocharge"] = g.cocharges[static_cast<size_t>(v)];
        }
        vertices.push_back(std::move(vertex));
    }
    j["vertices"] = std::move(vertices);
    nlohmann::json edges = nlohmann::json::array();
    for (const ColoredEdge& e : g.edges) {
        edges.push_back(nlohmann::json::array({e.src, e.color, e.dst}));
    }
    j["edges"] = std::move(edges);
    return j;
}

CrystalGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("graph JSON must be an object");
    }
    reject_unknown_keys(j, {"rank", "vertices", "edges"}, "graph");
    CrystalGraph g;
    const nlohmann::json& rank = require_key(j, "rank", "graph");
    if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1) {
        throw std::invalid_argument("graph rank must be a positive integer");
    }
    g.rank = rank.get<int>();

    const nlohmann::json& vertices = require_key(j, "vertices", "graph");
    if (!vertices.is_array()) {
        throw std::invalid_argument("graph vertices must be an array");
    }
    int expected = 0;
    for (const auto& vertex : vertices) {
        if (!vertex.is_object()) {
            throw std::invalid_argument("graph vertex must be an object");
        }
        reject_unknown_keys(vertex, {"id", "key", "weight", "cocharge"}, "vertex");
        if (require_key(vertex, "id", "vertex").get<std::int64_t>() != expected) {
            throw std::invalid_argument("vertex ids must be 0,1,2,... in order");
        }
        const nlohmann::json& key = require_key(vertex, "key", "vertex");
        if (!key.is_string()) {
            throw std::invalid_argument("vertex key must be a string");
        }
        g.keys.push_back(key.get<std::string>());
        if (vertex.contains("weight")) {
            g.weights.emplace_back(int_list(vertex["weight"], "vertex weight"));
        }
        if (vertex.contains("cocharge")) {
            if (!vertex["cocharge"].is_number_integer()) {
                throw std::invalid_argument("vertex cocharge must be an integer");
            }
            g.cocharges.push_back(vertex["cocharge"].get<std::int64_t>());
        }
        ++expected;
    }
    if (!g.weights.empty() && g.weights.size() != g.keys.size()) {
        throw std::invalid_argument("either all vertices carry a weight or none");
    }
    if (!g.cocharges.empty() && g.cocharges.size() != g.keys.size()) {
        throw std::invalid_argument("either all vertices carry a cocharge or none");
    }

    const nlohmann::json& edges = require_key(j, "edges", "graph");
    if (!edges.is_array()) {
        throw std::invalid_argument("graph edges must be an array");
    }
    for (const auto& edge : edges) {
        const std::vector<std::int64_t> triple = int_list(edge, "edge");
        if (triple.size() != 3) {
            throw std::invalid_argument("edge must be [src, color, dst]");
        }
        if (triple[0] < 0 || triple[0] >= g.size() || triple[2] < 0 || triple[2] >= g.size()) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (triple[1] < 1 || triple[1] > g.rank) {
            throw std::invalid_argument("edge color out of range");
        }
        g.edges.push_back({static_cast<int>(triple[0]), static_cast<int>(triple[1]),
                           static_cast<int>(triple[2])});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

nlohmann::json rc_to_json(const RiggedConfiguration& rc) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int a = 1; a <= rc.rank(); ++a) {
        nlohmann::json strings = nlohmann::json::array();
        for (const RcString& s : rc.strings(a)) {
            strings.push_back(nlohmann::json::array({s.length, s.label}));
        }
        nodes.push_back(std::move(strings));
    }
    return nodes;
}

RiggedConfiguration rc_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("rigged configuration must be a nonempty array of nodes");
    }
    std::vector<std::vector<RcString>> strings;
    strings.reserve(j.size());
    for (const auto& node : j) {
        if (!node.is_array()) {
            throw std::invalid_argument("each node must be an array of [length, label] pairs");
        }
        std::vector<RcString> list;
        for (const auto& pair : node) {
            const std::vector<std::int64_t> values = int_list(pair, "string");
            if (values.size() != 2) {
                throw std::invalid_argument("each string must be a [length, label] pair");
            }
            list.push_back({values[0], values[1]});
        }
        strings.push_back(std::move(list));
    }
    return RiggedConfiguration::from_strings(std::move(strings));
}

nlohmann::json tableau_to_json(const LowerBoundTableau& t) {
    size_t height = 0;
    for (const auto& column : t.columns) {
        height = std::max(height, column.size());
    }
    nlohmann::json rows = nlohmann::json::array();
    for (size_t row = 0; row < height; ++row) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& column : t.columns) {
            if (row < column.size()) {
                entries.push_back(column[row]);
            }
        }
        rows.push_back(std::move(entries));
    }
    return rows;
}

std::string render_rc(const AlgebraData& alg, const MultiplicityArray& L,
                      const RiggedConfiguration& rc, bool show_vacancies) {
    const Configuration shape = rc.shape();
    std::ostringstream out;
    for (int a = 1; a <= rc.rank(); ++a) {
        out << "node " << a << ":\n";
        if (rc.strings(a).empty()) {
            out << "  (empty)\n";
            continue;
        }
        // Width of the vacancy column for alignment.
        size_t vacancy_width = 0;
        if (show_vacancies) {
            for (const RcString& s : rc.strings(a)) {
                const std::int64_t p = vacancy(alg, L, shape, a, s.length);
                vacancy_width = std::max(vacancy_width, std::to_string(p).size());
            }
        }
        for (const RcString& s : rc.strings(a)) {
            out << "  ";
            if (show_vacancies) {
                const std::string p = std::to_string(vacancy(alg, L, shape, a, s.length));
                out << std::string(vacancy_width - p.size(), ' ') << p << ' ';
            }
            for (std::int64_t box = 0; box < s.length; ++box) {
                out << '#';
            }
            out << ' ' << s.label << '\n';
        }
    }
    return out.str();
}

std::string polynomial_lines(const LaurentPolynomial& p) {
    if (p.is_zero()) {
        return "0\n";
    }
    std::ostringstream out;
    for (const auto& [exponent, coefficient] : p.terms()) {
        out << "q^" << exponent << ": " << coefficient << '\n';
    }
    return out.str();
}

Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("instance must be a JSON object");
    }
    reject_unknown_keys(j, {"algebra", "L", "lambda", "weight", "rc"}, "instance");

    const nlohmann::json& algebra = require_key(j, "algebra", "instance");
    if (!algebra.is_object()) {
        throw std::invalid_argument("algebra must be an object");
    }
    reject_unknown_keys(algebra, {"family", "rank"}, "algebra");
    const nlohmann::json& family = require_key(algebra, "family", "algebra");
    const nlohmann::json& rank = require_key(algebra, "rank", "algebra");
    if (!family.is_string() || !rank.is_number_integer()) {
        throw std::invalid_argument("algebra needs a string family and an integer rank");
    }
    AlgebraData alg(family_from_string(family.get<std::string>()), rank.get<int>());

    MultiplicityArray L;
    const nlohmann::json& entries = require_key(j, "L", "instance");
    if (!entries.is_array()) {
        throw std::invalid_argument("L must be an array");
    }
    for (const auto& entry : entries) {
        if (!entry.is_object()) {
            throw std::invalid_argument("each L entry must be an object");
        }
        reject_unknown_keys(entry, {"node", "width", "multiplicity"}, "L entry");
        const std::int64_t node = require_key(entry, "node", "L entry").get<std::int64_t>();
        const std::int64_t width = require_key(entry, "width", "L entry").get<std::int64_t>();
        const std::int64_t mult =
            require_key(entry, "multiplicity", "L entry").get<std::int64_t>();
        if (node < 1 || node > alg.rank()) {
            throw std::invalid_argument("L entry node out of range");
        }
        L.add(static_cast<int>(node), width, mult);
    }

    Instance instance{std::move(alg), std::move(L), std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("lambda")) {
        instance.lambda = TypeATuple(int_list(j["lambda"], "lambda"));
    }
    if (j.contains("weight")) {
        std::vector<std::int64_t> coords = int_list(j["weight"], "weight");
        if (static_cast<int>(coords.size()) != instance.algebra.rank()) {
            throw std::invalid_argument("weight must have one coordinate per node");
        }
        instance.weight = Weight(std::move(coords));
    }
    if (j.contains("rc")) {
        instance.rc = rc_from_json(j["rc"]);
        if (instance.rc->rank() != instance.algebra.rank()) {
            throw std::invalid_argument("rc rank does not match the algebra rank");
        }
    }
    return instance;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open instance file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + err.what());
    }
    return instance_from_json(j);
}

}  // namespace rigged
