#include "elsim/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace elsim {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_csv_line(const std::string& line, const char* what) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("snapshot: bad number in ") + what);
        }
        while (used < tok.size() && std::isspace((unsigned char)tok[used])) ++used;
        if (used != tok.size())
            throw std::runtime_error(std::string("snapshot: trailing junk in ") + what);
        out.push_back(v);
    }
    if (out.empty())
        throw std::runtime_error(std::string("snapshot: empty ") + what);
    return out;
}

}  // namespace

void write_snapshot(std::ostream& os, const Field& f, double time) {
    const GridSpec& g = f.grid();
    os << g.dim();
    for (int a = 0; a < g.dim(); ++a) os << ',' << g.nodes(a);
    for (int a = 0; a < g.dim(); ++a) os << ',' << format_double(g.extent(a));
    os << ',' << f.components() << ',' << format_double(time) << '\n';
    for (std::int64_t r = 0; r < g.node_count(); ++r) {
        for (int c = 0; c < f.components(); ++c) {
            if (c) os << ',';
            os << format_double(f.value(c, r));
        }
        os << '\n';
    }
    if (!os) throw std::runtime_error("snapshot: stream write failed");
}

void write_snapshot(const std::string& path, const Field& f, double time) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
    write_snapshot(os, f, time);
}

Snapshot read_snapshot(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("snapshot: missing header line");
    const std::vector<double> head = parse_csv_line(line, "header");
    std::size_t at = 0;
    auto next = [&](const char* what) {
        if (at >= head.size())
            throw std::runtime_error(std::string("snapshot: header too short, missing ") + what);
        return head[at++];
    };
    const int dim = int(next("dim"));
    if (dim != 1 && dim != 2) throw std::runtime_error("snapshot: dim must be 1 or 2");
    std::array<int, 2> nodes{1, 1};
    std::array<double, 2> extent{1.0, 1.0};
    for (int a = 0; a < dim; ++a) nodes[std::size_t(a)] = int(next("node count"));
    for (int a = 0; a < dim; ++a) extent[std::size_t(a)] = next("extent");
    const int components = int(next("component count"));
    const double time = next("time");
    if (at != head.size()) throw std::runtime_error("snapshot: header has extra entries");
    if (components < 1) throw std::runtime_error("snapshot: component count must be positive");

    const GridSpec grid(dim, nodes, extent);
    Field f(grid, components);
    for (std::int64_t r = 0; r < grid.node_count(); ++r) {
        if (!std::getline(is, line))
            throw std::runtime_error("snapshot: truncated at node row " + std::to_string(r));
        const std::vector<double> row = parse_csv_line(line, "node row");
        if (std::int64_t(row.size()) != components)
            throw std::runtime_error("snapshot: node row " + std::to_string(r) +
                                     " has wrong component count");
        for (int c = 0; c < components; ++c) f.value(c, r) = row[std::size_t(c)];
    }
    f.ensure_finite("snapshot field");
    return Snapshot{std::move(f), time};
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path);
    return read_snapshot(is);
}

}  // namespace elsim
