#pragma once

#include "filling/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace filling::linalg {

/// (column, value) pairs sorted by column, no zero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Reduced row echelon form. Pivots are taken at the leftmost available
/// column, so the result is unique for a given column order.
struct EchelonForm {
    std::vector<int> pivot_columns;  // ascending
    std::vector<SparseVector> rows;  // rows[p] has a 1 at pivot_columns[p]
};

EchelonForm reduced_row_echelon(std::vector<SparseVector> rows);

std::size_t rank(std::vector<SparseVector> rows);

/// True iff `candidate` lies in the row span of `rows`.
bool in_span(std::vector<SparseVector> rows, const SparseVector& candidate);

struct KernelOptions {
    /// Worker threads for independent blocks; 1 runs everything inline.
    unsigned threads = 1;
};

/// Basis of {x : M x = 0} for M given by its rows over `num_columns` columns.
///
/// M is split into connected blocks (columns sharing a row) which are
/// eliminated independently. For each free column f the returned vector has
/// x_f = 1 and is supported on f plus pivot columns left of f; vectors are
/// ordered by f. The output does not depend on `options.threads`.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& rows, int num_columns,
                                 const KernelOptions& options = {});

} // namespace filling::linalg
