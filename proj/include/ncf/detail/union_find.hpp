#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace ncf::detail {

// Union by size without path compression, so every union can be undone.
class UndoableUnionFind {
public:
    explicit UndoableUnionFind(int size) : parent_(size), size_(size, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns false (and records nothing) when a and b are already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }

    void undo() {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
    }

    std::size_t depth() const noexcept { return history_.size(); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

}  // namespace ncf::detail
