#include "ids/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ids/errors.hpp"

namespace ids::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + " '" + tok + "' is not an integer");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string(what) + " '" + tok + "' is not an integer");
    return v;
}

int parse_index(const std::string& tok, int line, const char* what, long long lo, long long hi) {
    long long v = parse_int(tok, line, what);
    if (v < lo || v > hi)
        throw ParseError(line, std::string(what) + " " + tok + " out of range " +
                             std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(v);
}

void expect_arity(const std::vector<std::string>& toks, size_t n, int line) {
    if (toks.size() != n)
        throw ParseError(line, "expected " + std::to_string(n - 1) + " fields after '" + toks[0] +
                             "', got " + std::to_string(toks.size() - 1));
}

// Shared line loop: hands every non-comment token list to the callback.
template <class F>
int scan_lines(std::istream& in, F&& on_line) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        on_line(toks, lineno);
    }
    return lineno;
}

void check_declared_m(long long m, long long raw, long long distinct, int header_line,
                      std::vector<std::string>* warnings) {
    if (raw != distinct)
        warnings->push_back(std::to_string(raw - distinct) + " duplicate edge line(s) collapsed");
    if (m != distinct && m != raw)
        throw ParseError(header_line, "header declares " + std::to_string(m) +
                                          " edges but file has " + std::to_string(raw) +
                                          " edge line(s), " + std::to_string(distinct) +
                                          " distinct");
}

} // namespace

ParsedGraph parse_bip(std::istream& in) {
    int nl = -1, nr = -1, header_line = 0;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    long long raw_edges = 0;

    int last_line = scan_lines(in, [&](const std::vector<std::string>& toks, int lineno) {
        if (toks[0] == "p") {
            if (header_line) throw ParseError(lineno, "duplicate header");
            expect_arity(toks, 5, lineno);
            if (toks[1] != "bip")
                throw ParseError(lineno, "expected 'p bip', got 'p " + toks[1] + "'");
            nl = parse_index(toks[2], lineno, "n_left", 0, 1 << 28);
            nr = parse_index(toks[3], lineno, "n_right", 0, 1 << 28);
            m = parse_int(toks[4], lineno, "edge count");
            if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");
            header_line = lineno;
        } else if (toks[0] == "e") {
            if (!header_line) throw ParseError(lineno, "edge line before 'p bip' header");
            expect_arity(toks, 3, lineno);
            int l = parse_index(toks[1], lineno, "left index", 1, nl);
            int r = parse_index(toks[2], lineno, "right index", 1, nr);
            edges.push_back({l - 1, r - 1});
            ++raw_edges;
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    });
    if (!header_line) throw ParseError(last_line + 1, "missing 'p bip' header");

    ParsedGraph out;
    out.graph = build(nl, nr, edges);
    check_declared_m(m, raw_edges, out.graph.edge_count, header_line, &out.warnings);
    return out;
}

ParsedMCQ parse_mcq(std::istream& in) {
    int n = -1, k = -1, header_line = 0;
    long long m = -1;
    std::vector<int> coloring;
    std::vector<char> colored;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    long long raw_edges = 0;

    int last_line = scan_lines(in, [&](const std::vector<std::string>& toks, int lineno) {
        if (toks[0] == "p") {
            if (header_line) throw ParseError(lineno, "duplicate header");
            expect_arity(toks, 5, lineno);
            if (toks[1] != "mcq")
                throw ParseError(lineno, "expected 'p mcq', got 'p " + toks[1] + "'");
            n = parse_index(toks[2], lineno, "vertex count", 1, 1 << 28);
            m = parse_int(toks[3], lineno, "edge count");
            if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");
            k = parse_index(toks[4], lineno, "color count", 1, 1 << 20);
            coloring.assign(n, 0);
            colored.assign(n, 0);
            header_line = lineno;
        } else if (toks[0] == "n") {
            if (!header_line) throw ParseError(lineno, "color line before 'p mcq' header");
            expect_arity(toks, 3, lineno);
            int v = parse_index(toks[1], lineno, "vertex", 1, n) - 1;
            int c = parse_index(toks[2], lineno, "color", 1, k);
            if (colored[v])
                throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " already colored");
            coloring[v] = c;
            colored[v] = 1;
        } else if (toks[0] == "e") {
            if (!header_line) throw ParseError(lineno, "edge line before 'p mcq' header");
            expect_arity(toks, 3, lineno);
            int u = parse_index(toks[1], lineno, "vertex", 1, n) - 1;
            int v = parse_index(toks[2], lineno, "vertex", 1, n) - 1;
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u + 1));
            ++raw_edges;
            auto key = std::minmax(u, v);
            if (seen.insert({key.first, key.second}).second)
                edges.push_back({key.first, key.second});
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    });
    if (!header_line) throw ParseError(last_line + 1, "missing 'p mcq' header");
    for (int v = 0; v < n; ++v)
        if (!colored[v])
            throw ParseError(last_line + 1, "vertex " + std::to_string(v + 1) + " has no color line");

    ParsedMCQ out;
    out.instance = MCQInstance{n, k, std::move(coloring), std::move(edges)};
    check_declared_m(m, raw_edges, static_cast<long long>(out.instance.edges.size()), header_line,
                     &out.warnings);
    validate_mcq(out.instance);  // nonempty classes etc.
    return out;
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open file: " + path);
    return f;
}
} // namespace

ParsedGraph parse_bip_file(const std::string& path) {
    auto f = open_or_throw(path);
    return parse_bip(f);
}

ParsedMCQ parse_mcq_file(const std::string& path) {
    auto f = open_or_throw(path);
    return parse_mcq(f);
}

void write_bip(std::ostream& out, const BipartiteGraph& g,
               const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p bip " << g.n_left << " " << g.n_right << " " << g.edge_count << "\n";
    for (int l = 0; l < g.n_left; ++l)
        for (int r : g.adj_left[l]) out << "e " << l + 1 << " " << r + 1 << "\n";
}

void write_mcq(std::ostream& out, const MCQInstance& inst,
               const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p mcq " << inst.n << " " << inst.edges.size() << " " << inst.k << "\n";
    for (int v = 0; v < inst.n; ++v) out << "n " << v + 1 << " " << inst.coloring[v] << "\n";
    for (auto [u, v] : inst.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_labels(std::ostream& out, const ReductionOutput& red) {
    for (size_t i = 0; i < red.left_labels.size(); ++i) {
        const auto& lab = red.left_labels[i];
        out << "L " << i + 1 << " ";
        if (lab.kind == LeftLabel::Kind::vertex)
            out << "v " << lab.value + 1;
        else
            out << "t " << lab.value;
        out << "\n";
    }
    for (size_t i = 0; i < red.right_labels.size(); ++i) {
        const auto& lab = red.right_labels[i];
        out << "R " << i + 1 << " ";
        switch (lab.kind) {
            case RightLabel::Kind::E:
                out << "E " << lab.a << " " << lab.b << " " << lab.c + 1;
                break;
            case RightLabel::Kind::F:
                out << "F " << lab.a << " " << lab.b;
                break;
            case RightLabel::Kind::p:
                out << "p " << lab.a + 1 << " " << lab.b;
                break;
            case RightLabel::Kind::q:
                out << "q " << lab.a + 1 << " " << lab.b;
                break;
        }
        out << "\n";
    }
}

std::string read_file(const std::string& path) {
    auto f = open_or_throw(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

} // namespace ids::io
