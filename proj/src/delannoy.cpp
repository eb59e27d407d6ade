#include "overqt/delannoy.hpp"

#include <map>
#include <mutex>

namespace overqt {

PathStats path_stats(const DelannoyPath& path) {
    PathStats st;
    int i = 0;
    for (Step s : path.steps) {
        switch (s) {
            case Step::east:
                ++i;
                break;
            case Step::north:
                st.weight += i;
                break;
            case Step::northeast:
                st.weight += i + 1;
                st.diagonal_steps += 1;
                ++i;
                break;
        }
    }
    return st;
}

namespace {

void walk_paths(DelannoyPath& path, int dx, int dy,
                const std::function<void(const DelannoyPath&)>& fn) {
    if (dx == 0 && dy == 0) {
        fn(path);
        return;
    }
    if (dx > 0) {
        path.steps.push_back(Step::east);
        walk_paths(path, dx - 1, dy, fn);
        path.steps.pop_back();
    }
    if (dy > 0) {
        path.steps.push_back(Step::north);
        walk_paths(path, dx, dy - 1, fn);
        path.steps.pop_back();
    }
    if (dx > 0 && dy > 0) {
        path.steps.push_back(Step::northeast);
        walk_paths(path, dx - 1, dy - 1, fn);
        path.steps.pop_back();
    }
}

}  // namespace

void for_each_delannoy_path(
    int m, int n, const std::function<void(const DelannoyPath&)>& fn) {
    if (m < 0 || n < 0) return;
    DelannoyPath path;
    walk_paths(path, m, n, fn);
}

BigInt delannoy_number(int m, int n) {
    if (m < 0 || n < 0) return BigInt(0);
    static std::map<std::pair<int, int>, BigInt> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    std::function<const BigInt&(int, int)> get =
        [&](int a, int b) -> const BigInt& {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        BigInt v;
        if (a == 0 || b == 0)
            v = 1;
        else
            v = get(a - 1, b) + get(a, b - 1) + get(a - 1, b - 1);
        return memo.emplace(std::pair{a, b}, std::move(v)).first->second;
    };
    return get(m, n);
}

MPoly path_generating_function(int m, int n) {
    MPoly gf;
    for_each_delannoy_path(m, n, [&](const DelannoyPath& p) {
        PathStats st = path_stats(p);
        gf += MPoly::monomial(1, static_cast<int>(st.weight),
                              st.diagonal_steps, 0);
    });
    return gf;
}

}  // namespace overqt
