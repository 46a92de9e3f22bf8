#pragma once

#include "relcat/fincat.hpp"

#include <array>
#include <string>
#include <vector>

/* Hand-built categories shared across the test suites. */
namespace testcats {

using namespace relcat;

/* one object, identity only */
inline RelativeCategory terminal() {
    RelativeCategory rc;
    rc.cat = FinCategory::build({"pt"}, {{"id:pt", 0, 0}}, {"id:pt"}, {});
    rc.marked = {true};
    return rc;
}

/* two objects, identities only */
inline RelativeCategory discrete2() {
    RelativeCategory rc;
    rc.cat = FinCategory::build({"d0", "d1"}, {{"id:d0", 0, 0}, {"id:d1", 1, 1}},
                                {"id:d0", "id:d1"}, {});
    rc.marked = {true, true};
    return rc;
}

/* x -> y with the arrow marked (or not) */
inline RelativeCategory arrow(bool marked_arrow) {
    RelativeCategory rc;
    rc.cat = FinCategory::build({"x", "y"},
                                {{"id:x", 0, 0}, {"id:y", 1, 1}, {"w", 0, 1}},
                                {"id:x", "id:y"}, {});
    rc.marked.assign(3, false);
    rc.marked[rc.cat.morphism_index("id:x")] = true;
    rc.marked[rc.cat.morphism_index("id:y")] = true;
    rc.marked[rc.cat.morphism_index("w")] = marked_arrow;
    return rc;
}

/* one object, morphisms {1, s} with s*s = 1, everything marked */
inline RelativeCategory zmod2() {
    std::vector<MorRec> mors{{"id:g", 0, 0}, {"s", 0, 0}};
    std::vector<std::array<int, 3>> comp{{1, 1, 0}};
    RelativeCategory rc;
    rc.cat = FinCategory::build({"g"}, mors, {"id:g"}, comp);
    rc.marked = {true, true};
    return rc;
}

/* one object, morphisms {1, e} with e*e = e, everything marked */
inline RelativeCategory idempotent() {
    std::vector<MorRec> mors{{"e", 0, 0}, {"id:m", 0, 0}};
    std::vector<std::array<int, 3>> comp{{0, 0, 0}};
    RelativeCategory rc;
    rc.cat = FinCategory::build({"m"}, mors, {"id:m"}, comp);
    rc.marked = {true, true};
    return rc;
}

/* x ->w y ->f z, only w (and identities) marked */
inline RelativeCategory chain2() {
    std::vector<MorRec> mors{{"id:x", 0, 0}, {"id:y", 1, 1}, {"id:z", 2, 2},
                             {"w", 0, 1},    {"f", 1, 2},    {"fw", 0, 2}};
    // indices into the vector above (pre-sort): f.w = fw
    std::vector<std::array<int, 3>> comp{{4, 3, 5}};
    RelativeCategory rc;
    rc.cat = FinCategory::build({"x", "y", "z"}, mors, {"id:x", "id:y", "id:z"}, comp);
    rc.marked.assign(rc.cat.num_morphisms(), false);
    rc.marked[rc.cat.morphism_index("id:x")] = true;
    rc.marked[rc.cat.morphism_index("id:y")] = true;
    rc.marked[rc.cat.morphism_index("id:z")] = true;
    rc.marked[rc.cat.morphism_index("w")] = true;
    return rc;
}

/* free category on a poset, every relation pair composable uniquely */
inline RelativeCategory poset(const std::vector<std::string>& elems,
                              const std::vector<std::pair<int, int>>& strict_less,
                              const std::vector<std::pair<int, int>>& marked_pairs) {
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (auto& [a, b] : strict_less) le[a][b] = true;
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    std::vector<MorRec> mors;
    std::vector<std::vector<int>> mor_at(n, std::vector<int>(n, -1));
    std::vector<std::string> ids(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le[i][j]) {
                std::string name = i == j ? "id:" + elems[i] : elems[i] + "_to_" + elems[j];
                mor_at[i][j] = static_cast<int>(mors.size());
                mors.push_back({name, i, j});
                if (i == j) ids[i] = name;
            }
    std::vector<std::array<int, 3>> comp;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (le[i][j] && le[j][k])
                    comp.push_back({mor_at[j][k], mor_at[i][j], mor_at[i][k]});
    RelativeCategory rc;
    rc.cat = FinCategory::build(elems, mors, ids, comp);
    rc.marked.assign(rc.cat.num_morphisms(), false);
    for (int i = 0; i < n; ++i) rc.marked[rc.cat.morphism_index(ids[i])] = true;
    for (auto& [a, b] : marked_pairs) {
        int m = rc.cat.morphism_index(elems[a] + "_to_" + elems[b]);
        if (m >= 0) rc.marked[m] = true;
    }
    // close the marking under composition so the structure is valid
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < rc.cat.num_morphisms(); ++g)
            for (int f = 0; f < rc.cat.num_morphisms(); ++f) {
                int h = rc.cat.compose(g, f);
                if (h >= 0 && rc.marked[g] && rc.marked[f] && !rc.marked[h]) {
                    rc.marked[h] = true;
                    changed = true;
                }
            }
    }
    return rc;
}

}  // namespace testcats
