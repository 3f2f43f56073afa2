#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkv/graph6.hpp"

namespace testsupport {

inline std::string corpus_dir() {
    if (const char* env = std::getenv("BKV_CORPUS_DIR")) return env;
    return "data/corpus";
}

inline std::vector<bkv::Graph6Line> corpus_file(const std::string& name) {
    return bkv::read_graph6_file(corpus_dir() + "/" + name);
}

}  // namespace testsupport
