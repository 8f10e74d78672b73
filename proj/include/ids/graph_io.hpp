#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ids/bipgraph.hpp"
#include "ids/reductions.hpp"

namespace ids::io {

// Bipartite graph text format:
//   c <free text>
//   p bip <n_left> <n_right> <m>
//   e <l> <r>            (1-based)
// Multicolored-clique text format:
//   p mcq <n> <m> <k>
//   n <v> <c>            (vertex v gets color c, 1-based)
//   e <u> <v>
// Parsers throw ParseError (with line number) on malformed input; duplicate
// edges are collapsed with a warning, and the declared m may count either raw
// or distinct edges when duplicates are present.

struct ParsedGraph {
    BipartiteGraph graph;
    std::vector<std::string> warnings;
};

struct ParsedMCQ {
    MCQInstance instance;
    std::vector<std::string> warnings;
};

ParsedGraph parse_bip(std::istream& in);
ParsedGraph parse_bip_file(const std::string& path);
ParsedMCQ parse_mcq(std::istream& in);
ParsedMCQ parse_mcq_file(const std::string& path);

// Writers emit deterministic bytes: header first, then edges sorted by
// (left, right); optional comment lines precede the header.
void write_bip(std::ostream& out, const BipartiteGraph& g,
               const std::vector<std::string>& comments = {});
void write_mcq(std::ostream& out, const MCQInstance& inst,
               const std::vector<std::string>& comments = {});

// Label sidecar for reduction outputs, one line per vertex:
//   L <idx> v <orig> | L <idx> t <i>
//   R <idx> E <i> <j> <edge-id> | R <idx> F <i> <slot>
//   R <idx> p <v> <slot>        | R <idx> q <edge-id> <copy>
// All indices, vertex ids, and edge ids are 1-based on the wire.
void write_labels(std::ostream& out, const ReductionOutput& red);

// Whole file as bytes; InputError when unreadable.
std::string read_file(const std::string& path);

std::uint64_t fnv1a64(std::string_view data);
// "fnv1a64:" + 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

} // namespace ids::io
