#include "polycert/graph6.hpp"

namespace polycert {

namespace {

int decode_char(char c, size_t off) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw Graph6Error("graph6 character out of range 63..126", off);
    return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, int max_n) {
    if (line.empty()) throw Graph6Error("empty graph6 record", 0);
    size_t pos = 0;
    long n;
    int first = decode_char(line[0], 0);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // N(n) long form: '~' then three 6-bit digits (n <= 258047)
        if (line.size() < 4) throw Graph6Error("truncated graph6 header", line.size());
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("graph6 orders above 258047 not supported", 1);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(line[i], i);
        pos = 4;
    }
    if (n > max_n)
        throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds limit " +
                              std::to_string(max_n),
                          0);
    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) < bytes)
        throw Graph6Error("truncated graph6 bit vector", line.size());
    if (static_cast<long>(line.size()) - static_cast<long>(pos) > bytes)
        throw Graph6Error("trailing garbage after graph6 record", pos + bytes);

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = decode_char(line[pos + bit / 6], pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long b = bits; b < bytes * 6; ++b) {
        int byte = decode_char(line[pos + b / 6], pos + b / 6);
        if ((byte >> (5 - b % 6)) & 1)
            throw Graph6Error("nonzero padding bits in graph6 record", pos + b / 6);
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for supported graph6 encoding");
    }
    long bits = n * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
    for (int v : groups) out.push_back(static_cast<char>(v + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in, int max_n) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        out.push_back(parse_graph6(line, max_n));
    }
    return out;
}

}  // namespace polycert
