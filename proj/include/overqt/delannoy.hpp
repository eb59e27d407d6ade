#pragma once

#include <functional>
#include <vector>

#include "overqt/mpoly.hpp"

namespace overqt {

enum class Step { east, north, northeast };

/* A lattice path from (0,0) built from unit East, North and NorthEast steps.
 * Weights: an East step costs 0, a North step from (i,j) costs i, a NorthEast
 * step from (i,j) costs i+1. */
struct DelannoyPath {
    std::vector<Step> steps;
};

struct PathStats {
    long weight = 0;
    int diagonal_steps = 0;
};
PathStats path_stats(const DelannoyPath& path);

/* Visit every path from (0,0) to (m,n) exactly once (steps tried in the
 * order east, north, northeast at each point). */
void for_each_delannoy_path(int m, int n,
                            const std::function<void(const DelannoyPath&)>& fn);

/* Central recurrence D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1),
 * D(m,0) = D(0,n) = 1; zero for negative arguments. */
BigInt delannoy_number(int m, int n);

/* sum over paths of t^{diagonal_steps} q^{weight}. */
MPoly path_generating_function(int m, int n);

}  // namespace overqt
