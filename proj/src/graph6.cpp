#include "bkv/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace bkv {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kByteMax = 126;

int payload_byte(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
        throw Graph6Error(pos, "truncated record: expected more payload bytes");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > kByteMax)
        throw Graph6Error(pos, "byte out of printable graph6 range [63,126]");
    return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view record) {
    if (record.substr(0, kHeader.size()) == kHeader) record.remove_prefix(kHeader.size());
    if (record.empty()) throw Graph6Error(0, "empty record");
    if (record[0] == ':')
        throw Graph6Error(0, "sparse6 records are not supported, expected plain graph6");
    if (record[0] == ';' || record[0] == '&')
        throw Graph6Error(0, "not a graph6 record (incremental sparse6 / digraph6 prefix)");

    std::size_t pos = 0;
    long n = 0;
    int first = payload_byte(record, pos++);
    if (first < kByteMax - kBias) {
        n = first;
    } else {
        int b1 = payload_byte(record, pos++);
        if (b1 == kByteMax - kBias)
            throw Graph6Error(1, "orders above 258047 are not supported");
        int b2 = payload_byte(record, pos++);
        int b3 = payload_byte(record, pos++);
        n = (static_cast<long>(b1) << 12) | (b2 << 6) | b3;
    }
    if (n > Graph::kMaxOrder)
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds supported maximum " +
                                 std::to_string(Graph::kMaxOrder));

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (record.size() - pos < nbytes)
        throw Graph6Error(record.size(), "truncated bit payload: need " + std::to_string(nbytes) +
                                             " bytes, have " + std::to_string(record.size() - pos));
    if (record.size() - pos > nbytes)
        throw Graph6Error(pos + nbytes, "trailing bytes after bit payload");

    EdgeList edges;
    long bit = 0;
    int cur = 0;
    int have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                cur = payload_byte(record, pos++);
                have = 6;
            }
            if (cur & (1 << (have - 1))) edges.emplace_back(i, j);
            --have;
        }
    }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw Graph6Error(pos - 1, "nonzero padding bits in final payload byte");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kByteMax));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int cur = 0;
    int have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + kBias));
    return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == kHeader) continue;
        if (line.empty()) continue;
        out.push_back({lineno, line});
    }
    return out;
}

std::vector<Graph6Line> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    return read_graph6_lines(in);
}

}  // namespace bkv
