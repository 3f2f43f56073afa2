#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "bkv/graph.hpp"

namespace bkv {

// Total or partial color assignment over 0-based colors < palette().
// Reports render colors 1-based; the palette bound is checked on assign.
class Coloring {
public:
    static constexpr int kUnassigned = -1;

    Coloring() = default;
    Coloring(int n, int palette);

    int order() const { return static_cast<int>(color_.size()); }
    int palette() const { return palette_; }
    int color(int v) const { return color_.at(static_cast<std::size_t>(v)); }
    bool assigned(int v) const { return color(v) != kUnassigned; }
    void assign(int v, int c);
    void clear(int v);
    bool total() const;
    int colors_used() const;
    const std::vector<int>& values() const { return color_; }

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.palette_ == b.palette_ && a.color_ == b.color_;
    }

private:
    int palette_ = 0;
    std::vector<int> color_;
};

// Per-instance solve budget. Undecided outcomes are reported explicitly;
// budgets never silently convert to an answer.
struct Budget {
    std::chrono::milliseconds limit{std::chrono::milliseconds{10000}};
    bool is_unlimited = false;

    static Budget unlimited() { return {std::chrono::milliseconds{0}, true}; }
    static Budget seconds(double s) {
        return {std::chrono::milliseconds{static_cast<long>(s * 1000.0)}, false};
    }
};

struct MaxCliqueResult {
    bool decided = false;
    int omega = 0;
    VertexList clique;  // witness, pairwise adjacent
};
MaxCliqueResult max_clique(const Graph& g, const Budget& budget = {});

enum class ColorableStatus { Colorable, NotColorable, Undecided };

struct KColorResult {
    ColorableStatus status = ColorableStatus::Undecided;
    std::optional<Coloring> coloring;
};

// Exhaustive backtracking with maximum-clique seeding and first-use color
// symmetry breaking; branching order is fixed (degree descending, ties by
// index) so certificates are deterministic.
KColorResult is_k_colorable(const Graph& g, int k, const Budget& budget = {});

// Same search but honoring a caller-supplied partial assignment (no clique
// seeding; fresh colors still enter in first-use order).
KColorResult extend_coloring(const Graph& g, int k, const Coloring& partial,
                             const Budget& budget = {});

struct ChromaticResult {
    bool decided = false;
    int chi = -1;
    std::optional<Coloring> cert;  // proper, exactly chi colors
};
ChromaticResult chromatic_number(const Graph& g, const Budget& budget = {});

enum class GreedyOrder { IndexAscending, DegreeDescending };
Coloring greedy_coloring(const Graph& g, GreedyOrder order = GreedyOrder::DegreeDescending);

}  // namespace bkv
