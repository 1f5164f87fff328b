#include "fragcode/channel.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fragcode {

bool is_legal_2d(long long a, long long b, long long M, long long h) {
    if (a < 1 || b < 1) return false;
    return a >= h && b >= h && static_cast<__int128>(a) * b >= M;
}

bool is_legal_3d(long long alpha, long long beta, long long gamma, long long M, long long h) {
    if (alpha < 1 || beta < 1 || gamma < 1) return false;
    return alpha >= h && beta >= h && gamma >= h &&
           static_cast<__int128>(alpha) * beta * gamma >= M;
}

namespace {

FragmentResult run_guillotine(const BitGrid2D& g, const FragmentationPlan& plan) {
    std::mt19937_64 rng(plan.seed);
    std::vector<Rect> pieces{{0, 0, g.rows(), g.cols()}};
    for (int cut = 0; cut < plan.maxCuts; ++cut) {
        // split the largest splittable piece, topmost-leftmost on ties
        int pick = -1;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const Rect& r = pieces[i];
            if (r.rows < 2 && r.cols < 2) continue;
            if (pick < 0) {
                pick = static_cast<int>(i);
                continue;
            }
            const Rect& b = pieces[static_cast<std::size_t>(pick)];
            long long ra = 1LL * r.rows * r.cols, ba = 1LL * b.rows * b.cols;
            if (ra > ba || (ra == ba && std::pair(r.top, r.left) < std::pair(b.top, b.left)))
                pick = static_cast<int>(i);
        }
        if (pick < 0) break;
        Rect r = pieces[static_cast<std::size_t>(pick)];
        bool horizontal;
        if (r.rows < 2)
            horizontal = false;
        else if (r.cols < 2)
            horizontal = true;
        else
            horizontal = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
        if (horizontal) {
            int at = std::uniform_int_distribution<int>(1, r.rows - 1)(rng);
            pieces[static_cast<std::size_t>(pick)] = {r.top, r.left, at, r.cols};
            pieces.push_back({r.top + at, r.left, r.rows - at, r.cols});
        } else {
            int at = std::uniform_int_distribution<int>(1, r.cols - 1)(rng);
            pieces[static_cast<std::size_t>(pick)] = {r.top, r.left, r.rows, at};
            pieces.push_back({r.top, r.left + at, r.rows, r.cols - at});
        }
    }

    FragmentResult res;
    res.pieces = pieces;
    int pick = -1;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Rect& r = pieces[i];
        if (!is_legal_2d(r.rows, r.cols, plan.M, plan.h)) continue;
        if (pick < 0) {
            pick = static_cast<int>(i);
            continue;
        }
        const Rect& b = pieces[static_cast<std::size_t>(pick)];
        long long ra = 1LL * r.rows * r.cols, ba = 1LL * b.rows * b.cols;
        if (ra > ba || (ra == ba && std::pair(r.top, r.left) < std::pair(b.top, b.left)))
            pick = static_cast<int>(i);
    }
    if (pick >= 0) {
        const Rect& r = pieces[static_cast<std::size_t>(pick)];
        res.legalRect = r;
        res.fragment = crop2d(g, r.top, r.left, r.rows, r.cols);
    }
    return res;
}

FragmentResult run_worst_case(const BitGrid2D& g, const FragmentationPlan& plan) {
    FragmentResult res;
    res.pieces = {{0, 0, g.rows(), g.cols()}};
    long long bestArea = -1;
    int bestR = 0, bestC = 0;
    for (long long a = std::max(1LL, plan.h); a <= g.rows(); ++a) {
        long long b = std::max(std::max(1LL, plan.h), (plan.M + a - 1) / a);
        if (b > g.cols()) continue;
        if (bestArea < 0 || a * b < bestArea) {
            bestArea = a * b;
            bestR = static_cast<int>(a);
            bestC = static_cast<int>(b);
        }
    }
    if (bestArea >= 0) {
        res.legalRect = Rect{0, 0, bestR, bestC};
        res.fragment = crop2d(g, 0, 0, bestR, bestC);
    }
    return res;
}

} // namespace

FragmentResult fragment(const BitGrid2D& g, const FragmentationPlan& plan) {
    switch (plan.mode) {
        case FragMode::Guillotine:
            return run_guillotine(g, plan);
        case FragMode::FixedCrop: {
            FragmentResult res;
            res.pieces = {{0, 0, g.rows(), g.cols()}};
            res.legalRect = Rect{plan.top, plan.left, plan.rows, plan.cols};
            res.fragment = crop2d(g, plan.top, plan.left, plan.rows, plan.cols);
            return res;
        }
        case FragMode::WorstCase:
            return run_worst_case(g, plan);
    }
    throw ParamError("unknown fragmentation mode");
}

std::pair<BitGrid2D, std::vector<std::pair<int, int>>> inject_flips(const BitGrid2D& g,
                                                                    const FlipBudget& budget) {
    long long cellCount = 1LL * g.rows() * g.cols();
    if (budget.delta < 0) throw ParamError("flip budget must be nonnegative");
    if (budget.delta > cellCount) throw ParamError("flip budget exceeds the cell count");

    std::vector<std::pair<int, int>> pos;
    if (budget.strategy == FlipBudget::Strategy::Random) {
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<int> dr(0, g.rows() - 1), dc(0, g.cols() - 1);
        std::set<std::pair<int, int>> chosen;
        while (static_cast<long long>(chosen.size()) < budget.delta)
            chosen.insert({dr(rng), dc(rng)});
        pos.assign(chosen.begin(), chosen.end());
    } else {
        int d = budget.d;
        if (d < 1) throw ParamError("targeted flip strategies need the unit side");
        PrefixSum2D sums(g);
        if (budget.strategy == FlipBudget::Strategy::ZeroUnit) {
            // first all-zero window, then its cells row-major up to the budget
            bool found = false;
            for (int top = 0; !found && top + d <= g.rows(); ++top)
                for (int left = 0; !found && left + d <= g.cols(); ++left) {
                    if (sums.window_weight(top, left, d, d) != 0) continue;
                    found = true;
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c)
                            if (static_cast<long long>(pos.size()) < budget.delta)
                                pos.push_back({top + r, left + c});
                }
        } else {
            // borders of aligned high-weight windows, scan order
            for (int top = 0; top + d <= g.rows(); top += d)
                for (int left = 0; left + d <= g.cols(); left += d) {
                    if (sums.window_weight(top, left, d, d) <= 2LL * d - 2) continue;
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c) {
                            if (r != 0 && r != d - 1 && c != 0 && c != d - 1) continue;
                            if (static_cast<long long>(pos.size()) < budget.delta)
                                pos.push_back({top + r, left + c});
                        }
                }
        }
    }

    std::vector<std::uint8_t> cells = g.cells();
    for (auto [r, c] : pos) {
        auto& v = cells[static_cast<std::size_t>(r) * g.cols() + c];
        v = v == 0 ? 1 : 0;
    }
    std::sort(pos.begin(), pos.end());
    return {BitGrid2D(g.rows(), g.cols(), g.q(), std::move(cells)), pos};
}

std::vector<CropSpec> enumerate_legal_crops(long long n, long long M, long long h) {
    if (n < 1 || M < 1 || h < 1) throw ParamError("crop enumeration needs positive bounds");
    std::vector<CropSpec> out;
    for (long long a = h; a <= n; ++a)
        for (long long b = h; b <= n; ++b) {
            if (a * b < M) continue;
            for (long long top = 0; top + a <= n; ++top)
                for (long long left = 0; left + b <= n; ++left)
                    out.push_back({static_cast<int>(top), static_cast<int>(left),
                                   static_cast<int>(a), static_cast<int>(b)});
        }
    return out;
}

} // namespace fragcode
