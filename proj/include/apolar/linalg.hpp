#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

// One sparse row: entries sorted by strictly increasing column index, no
// stored zeros. Zero-ness is judged by the owning matrix's field.
struct SparseRow {
    std::vector<std::pair<std::int32_t, Scalar>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

struct SparseMatrix {
    Field field{FieldSpec::rationals()};
    std::int32_t ncols = 0;
    std::vector<SparseRow> rows;

    SparseMatrix() = default;
    SparseMatrix(Field f, std::int32_t cols) : field(std::move(f)), ncols(cols) {}

    std::int64_t nrows() const { return static_cast<std::int64_t>(rows.size()); }

    // Throws std::invalid_argument when a row has out-of-range or
    // non-increasing columns, or stores an explicit zero.
    void validate() const;
};

// A reduced row echelon basis: pivot columns strictly increasing, pivot
// entries equal to one, pivot columns zero in every other row. The RREF of a
// row space is unique, so two equal spans always produce identical bases.
struct RowBasis {
    SparseMatrix matrix;
    std::vector<std::int32_t> pivot_cols;

    std::int64_t rank() const { return static_cast<std::int64_t>(pivot_cols.size()); }

    // Residue of v after elimination against this basis; zero iff v lies in
    // the row span.
    SparseRow reduce(const SparseRow& v) const;
};

// Deterministic reduction to RREF. Pivoting: columns are taken lowest index
// first; among the rows that can supply a pivot the sparsest wins, ties
// broken by lowest row index.
RowBasis row_reduce(const SparseMatrix& m);

// Basis of the right null space {v : m v^T = 0}, dimension ncols - rank(m),
// returned as an RREF basis over the same columns.
RowBasis kernel(const SparseMatrix& m);

// When v lies in the row span of `originals`, returns coefficients c with
// v = sum c_i * originals_i (one coefficient per original row); otherwise
// nullopt. `b` must be row_reduce(originals).
std::optional<std::vector<Scalar>> in_span_with_certificate(
    const SparseRow& v, const RowBasis& b, const SparseMatrix& originals);

namespace detail {
class EchelonBase;
}

// Streaming span construction: rows are offered one at a time and the
// echelon grows incrementally, so product spans can be built without ever
// materializing the full matrix. The final rank equals batch reduction's.
//
// With certificate tracking enabled, every inserted row's expression over
// the original insertion sequence is carried along, which is what witness
// extraction consumes.
class SpanBuilder {
public:
    SpanBuilder(const Field& field, std::int32_t ncols, bool track_certificates = false);
    ~SpanBuilder();
    SpanBuilder(SpanBuilder&&) noexcept;
    SpanBuilder& operator=(SpanBuilder&&) noexcept;

    // Returns true when the row enlarged the span.
    bool insert(const SparseRow& row);

    std::int64_t rank() const;
    std::int64_t inserted() const;  // rows offered so far
    std::int32_t ncols() const { return ncols_; }
    bool saturated() const;  // rank == ncols; no further row can matter

    SparseRow reduce(const SparseRow& v) const;

    // Expression of v over the inserted rows as sparse (row index,
    // coefficient) pairs; nullopt when v is outside the current span.
    // Requires certificate tracking.
    std::optional<std::vector<std::pair<std::int64_t, Scalar>>> express(
        const SparseRow& v) const;

    // RREF snapshot of the current span.
    RowBasis to_row_basis() const;

    const Field& field() const { return field_; }

private:
    Field field_;
    std::int32_t ncols_ = 0;
    std::unique_ptr<detail::EchelonBase> impl_;
};

}  // namespace apolar

#endif
