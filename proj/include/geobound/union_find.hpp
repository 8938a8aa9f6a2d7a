#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace geobound {

// Disjoint-set forest over dense indices 0..n-1, path halving.
// Representative of a class is always its smallest member, so orbit
// representatives are reproducible across runs.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int size() const { return static_cast<int>(parent_.size()); }

    int find(int i) const {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    // Returns true if the two classes were distinct.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    int class_count() const {
        int c = 0;
        for (int i = 0; i < size(); ++i)
            if (find(i) == i)
                ++c;
        return c;
    }

    // Classes sorted by representative; members ascending.
    std::vector<std::vector<int>> classes() const {
        std::map<int, std::vector<int>> by_root;
        for (int i = 0; i < size(); ++i)
            by_root[find(i)].push_back(i);
        std::vector<std::vector<int>> out;
        out.reserve(by_root.size());
        for (auto& [root, members] : by_root)
            out.push_back(std::move(members));
        return out;
    }

private:
    mutable std::vector<int> parent_;
};

} // namespace geobound
