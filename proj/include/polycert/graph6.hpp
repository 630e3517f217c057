#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycert/graph.hpp"

namespace polycert {

struct Graph6Error : std::runtime_error {
    size_t offset;  // byte offset of the offending character
    Graph6Error(const std::string& what, size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

inline constexpr int kDefaultMaxGraph6Order = 64;

Graph parse_graph6(std::string_view line, int max_n = kDefaultMaxGraph6Order);
std::string encode_graph6(const Graph& g);

// Newline-delimited graph6 records; lines starting with '>' (geng header) are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in, int max_n = kDefaultMaxGraph6Order);

}  // namespace polycert
