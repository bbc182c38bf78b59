#pragma once

#include <vector>

#include "pjack/rational.hpp"

namespace pjack {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

// In-place reduced row echelon form. Zero rows are removed. Returns the
// pivot column of each remaining row (rank = number of rows afterwards).
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

// Reduces v by the rows of an RREF matrix (with the given pivots); the
// result has zeros in all pivot columns.
RatVec reduce_by(const RatMatrix& rref_rows, const std::vector<int>& pivots, RatVec v);

// Basis of {x : A x = 0}, each row a kernel vector of length = #cols of A.
RatMatrix kernel(RatMatrix a);

bool row_spaces_equal(RatMatrix a, RatMatrix b);

// True if v lies in the row space of the RREF matrix.
bool in_row_space(const RatMatrix& rref_rows, const std::vector<int>& pivots, RatVec v);

// Inverse of a square matrix; throws if singular.
RatMatrix inverse(const RatMatrix& m);

// Incremental row-space builder used for closure computations.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}
    // Returns true if v was independent (and was added).
    bool add(RatVec v);
    bool contains(RatVec v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    std::size_t cols() const { return cols_; }
    const RatMatrix& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    std::size_t cols_;
    RatMatrix rows_;           // kept in RREF
    std::vector<int> pivots_;  // ascending
};

}  // namespace pjack
