#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "canring/rational.hpp"

namespace canring {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<mpz_class>;

// Scales a rational vector to a primitive integer vector (common denominator
// cleared, content divided out). Zero vector maps to zero.
ZVec to_primitive(const QVec& v);
void strip_content(ZVec& v);

// Incremental row-echelon accumulator over the integers. Rows are kept
// primitive; elimination is fraction-free cross-multiplication, so no entry
// ever leaves Z. Supports rank queries and membership tests against the
// accumulated row space.
class IntEchelon {
public:
    explicit IntEchelon(size_t cols) : cols_(cols) {}

    // Reduces v against the stored rows; inserts the residue if nonzero.
    // Returns true when the rank grew.
    bool add_row(ZVec v);
    bool add_row(const QVec& v) { return add_row(to_primitive(v)); }

    // True when v lies in the accumulated row space.
    bool contains(ZVec v) const;
    bool contains(const QVec& v) const { return contains(to_primitive(v)); }

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Pivot column of each stored row, ascending.
    std::vector<size_t> pivot_columns() const;

private:
    // Eliminates leading entries of v against stored rows; returns the pivot
    // column of the residue, or cols_ when v reduced to zero.
    size_t reduce(ZVec& v) const;

    size_t cols_;
    std::vector<std::pair<size_t, ZVec>> rows_;  // sorted by pivot column
};

// Sparse incremental row echelon over GF(p) for a word-sized prime p. Used as
// a rank certifier: rank can only drop under reduction mod p, so reaching a
// known upper bound certifies the exact rank. Rows are (column, value) pairs
// with strictly ascending columns and values in [1, p).
class ModEchelon {
public:
    static constexpr uint32_t kDefaultPrime = 2147483629u;

    explicit ModEchelon(size_t cols, uint32_t p = kDefaultPrime)
        : cols_(cols), p_(p), pivot_row_(cols, -1) {}

    using SparseRow = std::vector<std::pair<uint32_t, uint32_t>>;

    // Reduces the row against stored pivots; keeps the residue if nonzero.
    // Returns true when the rank grew.
    bool add_row(SparseRow row);

    // Reduces a rational sparse row mod p. Returns false (row ignored, rank
    // unchanged) when a denominator vanishes mod p, so callers can fall back
    // to exact arithmetic; grew reports whether the rank grew.
    bool add_row_rational(const std::vector<std::pair<size_t, Rational>>& row, bool& grew);

    size_t rank() const { return rank_; }
    size_t cols() const { return cols_; }

    // Total sparse merge operations performed; callers use this as a work
    // budget check.
    unsigned long long ops() const { return ops_; }

private:
    uint32_t inv(uint32_t a) const;

    size_t cols_;
    uint32_t p_;
    size_t rank_ = 0;
    unsigned long long ops_ = 0;
    std::vector<long> pivot_row_;          // column -> index into rows_, or -1
    std::vector<SparseRow> rows_;          // normalized: leading value 1
};

// Rank of the matrix given by rows.
size_t rank(const QMat& rows);

// Basis of the right null space {x : M x = 0}. Vectors are primitive integer
// vectors presented as rationals; the basis is deterministic (one vector per
// free column, ascending).
QMat kernel_basis(const QMat& m, size_t cols);

// True when v is a linear combination of the given rows.
bool span_contains(const QMat& rows, const QVec& v);

// Solves A x = b for square A; returns nullopt when A is singular or the
// system is inconsistent.
std::optional<QVec> solve_square(const QMat& a, const QVec& b);

}  // namespace canring
