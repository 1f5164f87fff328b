#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fragcode/grid.hpp"

namespace fragcode {

bool is_legal_2d(long long a, long long b, long long M, long long h);
bool is_legal_3d(long long alpha, long long beta, long long gamma, long long M, long long h);

enum class FragMode { Guillotine, FixedCrop, WorstCase };

struct FragmentationPlan {
    FragMode mode = FragMode::Guillotine;
    std::uint64_t seed = 0;
    int maxCuts = 0;           // guillotine
    long long M = 0, h = 0;    // legality bound for selection
    int top = 0, left = 0, rows = 0, cols = 0;  // fixed crop
};

struct Rect {
    int top = 0, left = 0, rows = 0, cols = 0;
    auto operator<=>(const Rect&) const = default;
};

struct FragmentResult {
    std::vector<Rect> pieces;            // exact partition of the codeword
    std::optional<Rect> legalRect;       // position of the selected fragment
    std::optional<BitGrid2D> fragment;   // the selected fragment, metadata-free
};

// Guillotine mode splits recursively with seeded axis-parallel cuts until
// maxCuts is exhausted, then selects the largest legal piece (ties broken by
// topmost-leftmost). Fixed-crop passes the requested window through.
// Worst-case returns the smallest legal crop shape (ties by lexicographic
// (rows, cols)) at position (0, 0).
FragmentResult fragment(const BitGrid2D& g, const FragmentationPlan& plan);

struct FlipBudget {
    enum class Strategy { Random, ZeroUnit, Borders };
    long long delta = 0;
    Strategy strategy = Strategy::Random;
    std::uint64_t seed = 0;
    int d = 0;  // unit side; required by the targeted strategies
};

// Toggles at most delta cells per the strategy; returns the new grid and the
// sorted list of flipped positions. The targeted strategies concentrate flips
// on an all-zero window (ZeroUnit) or on the 1-borders of aligned high-weight
// windows (Borders).
std::pair<BitGrid2D, std::vector<std::pair<int, int>>> inject_flips(
    const BitGrid2D& g, const FlipBudget& budget);

struct CropSpec {
    int top = 0, left = 0, a = 0, b = 0;  // a rows, b cols
    auto operator<=>(const CropSpec&) const = default;
};

// Every legal crop of an n x n codeword exactly once, ordered by (a, b, top, left).
std::vector<CropSpec> enumerate_legal_crops(long long n, long long M, long long h);

} // namespace fragcode
