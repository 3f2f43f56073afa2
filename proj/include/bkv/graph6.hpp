#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bkv/graph.hpp"

namespace bkv {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: " + what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Single record; a leading ">>graph6<<" marker is tolerated and skipped.
Graph from_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

struct Graph6Line {
    int line = 0;  // 1-based
    std::string text;
};

// Newline-delimited records; whole-stream ">>graph6<<" header and blank lines skipped.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);
std::vector<Graph6Line> read_graph6_file(const std::string& path);

}  // namespace bkv
