#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wh3 {

/// Sparse vector: (column, value) pairs sorted by descending column, no zeros.
template <class K>
using SparseRow = std::vector<std::pair<std::int64_t, K>>;

/// Incremental row echelon basis over a field K. The pivot of a row is its
/// largest column; each stored row is monic and has a pivot no other row
/// shares. Remainders are therefore canonical for the spanned subspace.
template <class K>
class SparseEchelon {
public:
    /// Reduces `row` to its canonical remainder modulo the span.
    SparseRow<K> reduce(const SparseRow<K>& row) const {
        if (rows_.empty() || row.empty()) return row;
        std::map<std::int64_t, K, std::greater<>> acc;
        for (const auto& [c, v] : row) acc.emplace(c, v);
        for (auto it = acc.begin(); it != acc.end();) {
            auto piv = pivot_.find(it->first);
            if (piv == pivot_.end()) {
                ++it;
                continue;
            }
            const K factor = it->second;
            const auto& prow = rows_[piv->second];
            for (std::size_t i = 1; i < prow.size(); ++i) {
                const auto& [c, v] = prow[i];
                auto [jt, inserted] = acc.try_emplace(c, -(factor * v));
                if (!inserted) {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) acc.erase(jt);
                }
            }
            it = acc.erase(it);
        }
        SparseRow<K> out;
        out.reserve(acc.size());
        for (auto& [c, v] : acc) out.emplace_back(c, std::move(v));
        return out;
    }

    /// Adds `row` to the span. Returns false if it was already dependent.
    bool insert(const SparseRow<K>& row) {
        SparseRow<K> r = reduce(row);
        if (r.empty()) return false;
        const K lead = r.front().second;
        for (auto& [c, v] : r) v = v / lead;
        pivot_.emplace(r.front().first, rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const SparseRow<K>& row) const { return reduce(row).empty(); }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::int64_t col) const { return pivot_.count(col) != 0; }
    const std::vector<SparseRow<K>>& rows() const { return rows_; }

    /// Pivot rows brought to fully reduced form (pivot columns appear only in
    /// their own row), sorted by descending pivot.
    std::vector<SparseRow<K>> reduced_rows() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
        SparseEchelon<K> built;
        std::vector<SparseRow<K>> out;
        for (std::size_t idx : order) {
            const auto& row = rows_[idx];
            SparseRow<K> tail(row.begin() + 1, row.end());
            SparseRow<K> red = built.reduce(tail);
            SparseRow<K> full;
            full.reserve(red.size() + 1);
            full.push_back(row.front());
            full.insert(full.end(), red.begin(), red.end());
            built.pivot_.emplace(full.front().first, built.rows_.size());
            built.rows_.push_back(full);
            out.push_back(std::move(full));
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    std::vector<SparseRow<K>> rows_;
    std::unordered_map<std::int64_t, std::size_t> pivot_;
};

}  // namespace wh3
