#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/hypergraph.hpp"

namespace hm {

/// Parsed "h3" file: the hypergraph plus any `# T: ...` certificate line.
struct H3File {
    int n = 0;
    std::vector<Triple> triples;
    std::optional<std::vector<int>> t_line;

    Hypergraph3 graph() const { return Hypergraph3(n, triples); }
};

/// Reads the "h3" text format: first data line `n m`, then m lines `a b c`
/// (1-based, any order within a line). Lines starting with `#` are comments;
/// a comment of the form `# T: v ...` is captured as a certificate sideline.
/// Blank lines are ignored.
inline H3File read_h3(std::istream& in) {
    H3File file;
    std::string line;
    long long expected = -1;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("h3 parse error at line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            std::istringstream cs(line.substr(start + 1));
            std::string tag;
            if (cs >> tag && tag == "T:") {
                std::vector<int> t;
                int v;
                while (cs >> v) t.push_back(v);
                file.t_line = std::move(t);
            }
            continue;
        }
        std::istringstream ls(line);
        if (expected < 0) {
            long long m;
            if (!(ls >> file.n >> m)) fail("expected header `n m`");
            if (file.n < 1) fail("vertex count must be positive");
            if (m < 0) fail("edge count must be nonnegative");
            expected = m;
            continue;
        }
        int a, b, c;
        if (!(ls >> a >> b >> c)) fail("expected edge line `a b c`");
        file.triples.push_back({a, b, c});
        if (static_cast<long long>(file.triples.size()) > expected) fail("more edges than declared");
    }
    if (expected < 0) throw std::runtime_error("h3 parse error: empty input");
    if (static_cast<long long>(file.triples.size()) != expected)
        throw std::runtime_error("h3 parse error: expected " + std::to_string(expected) +
                                 " edges, found " + std::to_string(file.triples.size()));
    return file;
}

inline H3File read_h3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_h3(in);
}

/// Canonical writer: sorted triples in lexicographic order, LF endings.
/// Output is bit-exact for a given hypergraph.
inline void write_h3(std::ostream& out, const Hypergraph3& h,
                     const std::optional<std::vector<int>>& t_line = std::nullopt) {
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Triple& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    if (t_line) {
        out << "# T:";
        for (int v : *t_line) out << ' ' << v;
        out << '\n';
    }
}

inline std::string to_h3_string(const Hypergraph3& h) {
    std::ostringstream os;
    write_h3(os, h);
    return os.str();
}

inline void write_h3_file(const std::string& path, const Hypergraph3& h,
                          const std::optional<std::vector<int>>& t_line = std::nullopt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_h3(out, h, t_line);
}

}  // namespace hm
