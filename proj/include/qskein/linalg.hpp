#pragma once

#include "qskein/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qs {

// Sparse vector over Scalar with ordered keys.
template <class Key, class Cmp = std::less<Key>>
using SparseVec = std::map<Key, Scalar, Cmp>;

template <class Key, class Cmp>
void sparse_axpy(SparseVec<Key, Cmp>& y, const Scalar& a, const SparseVec<Key, Cmp>& x) {
    if (a.is_zero()) return;
    for (const auto& [k, c] : x) {
        auto [it, fresh] = y.try_emplace(k, a * c);
        if (fresh) continue;
        it->second += a * c;
        if (it->second.is_zero()) y.erase(it);
    }
}

// Incrementally built row echelon form. Pivot of a row is its largest key; pivot
// rows are monic. Optionally tracks each pivot as a combination of inserted rows.
template <class Key, class Cmp = std::less<Key>>
class Echelon {
public:
    using Vec = SparseVec<Key, Cmp>;
    using Combo = std::map<int, Scalar>;

    explicit Echelon(bool track = false) : track_(track) {}

    std::size_t rank() const { return piv_.size(); }
    bool has_pivot(const Key& k) const { return piv_.count(k) != 0; }
    const std::map<Key, Vec, Cmp>& pivots() const { return piv_; }

    // Reduces by leading entries until the top key is not a pivot.
    // Returns true (and stores the row) when it was independent.
    bool insert(Vec row, int tag = -1, Combo* kernel_out = nullptr) {
        Combo combo;
        if (track_ && tag >= 0) combo[tag] = Scalar(1);
        while (!row.empty()) {
            auto top = std::prev(row.end());
            auto it = piv_.find(top->first);
            if (it == piv_.end()) break;
            Scalar c = top->second;
            sparse_axpy(row, -c, it->second);
            if (track_) sparse_axpy(combo, -c, combos_.at(top->first));
        }
        if (row.empty()) {
            if (kernel_out) *kernel_out = std::move(combo);
            return false;
        }
        Scalar inv = std::prev(row.end())->second.inverse();
        for (auto& [k, c] : row) c *= inv;
        if (track_) {
            for (auto& [k, c] : combo) c *= inv;
            combos_.emplace(std::prev(row.end())->first, std::move(combo));
        }
        Key lead = std::prev(row.end())->first;
        piv_.emplace(lead, std::move(row));
        return true;
    }

    // Full reduction: every key that is a pivot is eliminated.
    Vec reduce(Vec row, Combo* used = nullptr) const {
        Vec out;
        while (!row.empty()) {
            auto top = std::prev(row.end());
            auto it = piv_.find(top->first);
            if (it == piv_.end()) {
                out.emplace_hint(out.begin(), top->first, std::move(top->second));
                row.erase(top);
                continue;
            }
            Scalar c = top->second;
            sparse_axpy(row, -c, it->second);
            if (used && track_) sparse_axpy(*used, c, combos_.at(it->first));
        }
        return out;
    }

    // Coefficients x with sum_i x_i * inserted_row_i == target, if in the span.
    std::optional<Combo> solve(const Vec& target) const {
        Combo used;
        Vec rest = reduce(target, &used);
        if (!rest.empty()) return std::nullopt;
        return used;
    }

private:
    bool track_;
    std::map<Key, Vec, Cmp> piv_;
    std::map<Key, Combo, Cmp> combos_;
};

// rank of a list of sparse rows
template <class Key, class Cmp>
std::size_t sparse_rank(const std::vector<SparseVec<Key, Cmp>>& rows) {
    Echelon<Key, Cmp> e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

// basis of {x : sum_i x_i * images_i = 0}
template <class Key, class Cmp>
std::vector<std::map<int, Scalar>> sparse_kernel(const std::vector<SparseVec<Key, Cmp>>& images) {
    Echelon<Key, Cmp> e(true);
    std::vector<std::map<int, Scalar>> ker;
    for (std::size_t i = 0; i < images.size(); ++i) {
        std::map<int, Scalar> k;
        if (!e.insert(images[i], static_cast<int>(i), &k)) ker.push_back(std::move(k));
    }
    return ker;
}

}  // namespace qs
