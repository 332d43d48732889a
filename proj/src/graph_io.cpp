#include "lrw/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

namespace {

bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

std::string next_line(std::istream& in, std::size_t& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!skip_line(line)) return line;
    }
    return {};
}

template <typename T>
T parse_keyed(const std::string& line, const char* key, std::size_t lineno) {
    std::istringstream ss(line);
    std::string k;
    T value{};
    std::string rest;
    if (!(ss >> k >> value) || k != key || (ss >> rest))
        throw ConfigError("line " + std::to_string(lineno) + ": expected '" + key + " <value>'");
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::size_t lineno = 0;
    const auto n = parse_keyed<std::size_t>(next_line(in, lineno), "N", lineno);
    const auto k = parse_keyed<std::size_t>(next_line(in, lineno), "cases", lineno);
    if (k > n) throw ConfigError("cases exceed N");

    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        long long i = -1, j = -1;
        std::string rest;
        if (!(ss >> i >> j) || (ss >> rest) || i < 0 || j < 0)
            throw ConfigError("line " + std::to_string(lineno) + ": expected '<i> <j>'");
        edges.emplace_back(NodeId(i), NodeId(j));
    }
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) y[i] = 1.0;
    return Graph(n, edges, std::move(y));
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph file " + path.string());
    return read_edge_list(in);
}

std::size_t case_prefix_length(const Graph& g) {
    std::size_t k = 0;
    while (k < g.node_count() && g.value(NodeId(k)) == 1.0) ++k;
    for (std::size_t i = k; i < g.node_count(); ++i)
        if (g.value(NodeId(i)) != 0.0)
            throw ConfigError("node values are not a 0/1 case prefix; edge-list format cannot store them");
    return k;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "N " << g.node_count() << '\n';
    out << "cases " << case_prefix_length(g) << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write graph file " + path.string());
    write_edge_list(out, g);
}

}  // namespace lrw
