#include "filling/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace filling::linalg {

namespace {

// target -= factor * source
void subtract_multiple(SparseVector& target, const Rational& factor, const SparseVector& source)
{
    SparseVector out;
    out.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            out.push_back(std::move(*t++));
        } else if (t == target.end() || s->first < t->first) {
            out.emplace_back(s->first, -factor * s->second);
            ++s;
        } else {
            Rational v = t->second - factor * s->second;
            if (v != 0)
                out.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    target = std::move(out);
}

const Rational* entry_at(const SparseVector& row, int column)
{
    auto it = std::lower_bound(row.begin(), row.end(), column,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == column) ? &it->second : nullptr;
}

int column_count(const std::vector<SparseVector>& rows)
{
    int cols = 0;
    for (const auto& r : rows)
        if (!r.empty())
            cols = std::max(cols, r.back().first + 1);
    return cols;
}

} // namespace

EchelonForm reduced_row_echelon(std::vector<SparseVector> rows)
{
    const int cols = column_count(rows);
    std::erase_if(rows, [](const SparseVector& r) { return r.empty(); });

    // Unused rows bucketed by leading column. Every unused row is reduced
    // against all pivots so far, so its leading column is never behind.
    std::vector<std::vector<std::size_t>> by_lead(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r)
        by_lead[static_cast<std::size_t>(rows[r].front().first)].push_back(r);

    EchelonForm result;
    std::vector<std::size_t> pivot_row_ids;
    for (int c = 0; c < cols; ++c) {
        auto& bucket = by_lead[static_cast<std::size_t>(c)];
        if (bucket.empty())
            continue;
        // Markowitz-style choice: shortest row, ties to the lowest id.
        auto best = std::min_element(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
            return rows[a].size() != rows[b].size() ? rows[a].size() < rows[b].size() : a < b;
        });
        const std::size_t pivot = *best;
        bucket.erase(best);

        SparseVector& prow = rows[pivot];
        const Rational inv = 1 / prow.front().second;
        if (inv != 1)
            for (auto& e : prow)
                e.second *= inv;

        std::vector<std::size_t> pending;
        pending.swap(bucket);
        for (std::size_t r : pending) {
            const Rational factor = rows[r].front().second;
            subtract_multiple(rows[r], factor, prow);
            if (!rows[r].empty())
                by_lead[static_cast<std::size_t>(rows[r].front().first)].push_back(r);
        }
        for (std::size_t r : pivot_row_ids) {
            if (const Rational* v = entry_at(rows[r], c)) {
                const Rational factor = *v;
                subtract_multiple(rows[r], factor, prow);
            }
        }
        pivot_row_ids.push_back(pivot);
        result.pivot_columns.push_back(c);
    }

    result.rows.reserve(pivot_row_ids.size());
    for (std::size_t r : pivot_row_ids)
        result.rows.push_back(std::move(rows[r]));
    return result;
}

std::size_t rank(std::vector<SparseVector> rows)
{
    return reduced_row_echelon(std::move(rows)).pivot_columns.size();
}

bool in_span(std::vector<SparseVector> rows, const SparseVector& candidate)
{
    const std::size_t before = rank(rows);
    rows.push_back(candidate);
    return rank(std::move(rows)) == before;
}

namespace {

struct Block {
    std::vector<int> columns;         // global ids, ascending
    std::vector<std::size_t> rows;    // global row ids
};

std::vector<Block> split_blocks(const std::vector<SparseVector>& rows, int num_columns)
{
    std::vector<int> parent(static_cast<std::size_t>(num_columns));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    };
    for (const auto& row : rows)
        for (std::size_t e = 1; e < row.size(); ++e) {
            int a = find(row[0].first);
            int b = find(row[e].first);
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }

    // Blocks are numbered by their smallest column.
    std::vector<int> block_of_root(static_cast<std::size_t>(num_columns), -1);
    std::vector<Block> blocks;
    std::vector<int> block_of_column(static_cast<std::size_t>(num_columns));
    for (int c = 0; c < num_columns; ++c) {
        const int root = find(c);
        int& b = block_of_root[static_cast<std::size_t>(root)];
        if (b < 0) {
            b = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(b)].columns.push_back(c);
        block_of_column[static_cast<std::size_t>(c)] = b;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty())
            blocks[static_cast<std::size_t>(block_of_column[static_cast<std::size_t>(rows[r][0].first)])]
                .rows.push_back(r);
    return blocks;
}

// Kernel vectors of one block in global column ids, ordered by free column.
std::vector<SparseVector> block_kernel(const Block& block, const std::vector<SparseVector>& rows)
{
    const auto& cols = block.columns;
    auto local = [&](int global) {
        return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), global) - cols.begin());
    };

    std::vector<SparseVector> local_rows;
    local_rows.reserve(block.rows.size());
    for (std::size_t r : block.rows) {
        SparseVector v;
        v.reserve(rows[r].size());
        for (const auto& [c, x] : rows[r])
            v.emplace_back(local(c), x);
        local_rows.push_back(std::move(v));
    }
    EchelonForm ech = reduced_row_echelon(std::move(local_rows));

    const std::size_t n = cols.size();
    std::vector<char> is_pivot(n, 0);
    for (int p : ech.pivot_columns)
        is_pivot[static_cast<std::size_t>(p)] = 1;

    std::vector<SparseVector> by_free(n);
    for (std::size_t p = 0; p < ech.rows.size(); ++p)
        for (const auto& [c, x] : ech.rows[p])
            if (!is_pivot[static_cast<std::size_t>(c)])
                by_free[static_cast<std::size_t>(c)].emplace_back(cols[static_cast<std::size_t>(ech.pivot_columns[p])], -x);

    std::vector<SparseVector> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        SparseVector v = std::move(by_free[f]);
        v.emplace_back(cols[f], Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<SparseVector> kernel(const std::vector<SparseVector>& rows, int num_columns,
                                 const KernelOptions& options)
{
    const std::vector<Block> blocks = split_blocks(rows, num_columns);
    std::vector<std::vector<SparseVector>> results(blocks.size());

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(blocks.size())));
    if (threads <= 1) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            results[b] = block_kernel(blocks[b], rows);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (std::size_t b = next++; b < blocks.size(); b = next++)
                    results[b] = block_kernel(blocks[b], rows);
            });
    }

    std::vector<SparseVector> out;
    for (auto& r : results)
        for (auto& v : r)
            out.push_back(std::move(v));
    // Order by free column (the last entry of each vector).
    std::sort(out.begin(), out.end(), [](const SparseVector& a, const SparseVector& b) {
        return a.back().first < b.back().first;
    });
    return out;
}

} // namespace filling::linalg
