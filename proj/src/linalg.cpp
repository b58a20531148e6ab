#include "apolar/linalg.hpp"

#include <algorithm>
#include <map>

#include "apolar/util.hpp"

namespace apolar {

namespace {

void validate_row(const SparseRow& row, std::int32_t ncols, const Field& field) {
    std::int32_t prev = -1;
    for (const auto& [col, val] : row.entries) {
        if (col < 0 || col >= ncols)
            throw std::invalid_argument("sparse row: column index out of range");
        if (col <= prev)
            throw std::invalid_argument("sparse row: columns not strictly increasing");
        if (field.is_zero(val))
            throw std::invalid_argument("sparse row: stored zero entry");
        prev = col;
    }
}

// ---------------------------------------------------------------------------
// Field-specific value operations. The elimination engines are instantiated
// once per field kind so prime-field rows carry plain machine words instead
// of full Scalar objects.

struct FpOps {
    using Value = std::uint64_t;
    std::uint64_t p;

    bool is_zero(Value a) const { return a == 0; }
    bool is_one(Value a) const { return a == 1 % p; }
    Value sub_mul(Value a, Value f, Value b) const {  // a - f*b
        std::uint64_t fb = mulmod(f, b, p);
        return a >= fb ? a - fb : a + p - fb;
    }
    void sub_mul_inplace(Value& a, Value f, Value b) const { a = sub_mul(a, f, b); }
    Value neg_mul(Value f, Value b) const {  // -f*b
        std::uint64_t fb = mulmod(f, b, p);
        return fb == 0 ? 0 : p - fb;
    }
    Value mul(Value a, Value b) const { return mulmod(a, b, p); }
    Value add(Value a, Value b) const {
        std::uint64_t r = a + b;
        return r >= p ? r - p : r;
    }
    Value inv(Value a) const { return invmod(a, p); }
    Value one() const { return 1 % p; }

    Value to_value(const Field& field, const Scalar& s) const { return field.residue(s); }
    Scalar to_scalar(const Field& field, const Value& v) const { return field.from_residue(v); }
};

struct QOps {
    using Value = mpq_class;

    bool is_zero(const Value& a) const { return a == 0; }
    bool is_one(const Value& a) const { return a == 1; }
    Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
    void sub_mul_inplace(Value& a, const Value& f, const Value& b) const {
        mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), b.get_mpq_t());
        mpq_sub(a.get_mpq_t(), a.get_mpq_t(), tmp_.get_mpq_t());
    }
    mutable Value tmp_;  // scratch for sub_mul_inplace
    Value neg_mul(const Value& f, const Value& b) const { return -(f * b); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value inv(const Value& a) const { return 1 / a; }
    Value one() const { return mpq_class(1); }

    Value to_value(const Field& field, const Scalar& s) const { return field.rational(s); }
    Scalar to_scalar(const Field& field, const Value& v) const { return field.from_rational(v); }
};

template <class V>
using Row = std::vector<std::pair<std::int32_t, V>>;

// Expression of a row over original insertion indices.
template <class V>
using ExprRow = std::vector<std::pair<std::int64_t, V>>;

// result = a[pos..] - f * b. Column of a[pos] equals b's leading column and
// cancels there by construction (b is normalized to leading coefficient 1).
template <class Ops>
Row<typename Ops::Value> axpy_tail(const Ops& ops,
                                   const Row<typename Ops::Value>& a, std::size_t pos,
                                   const typename Ops::Value& f,
                                   const Row<typename Ops::Value>& b) {
    Row<typename Ops::Value> out;
    out.reserve(a.size() - pos + b.size());
    std::size_t i = pos, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            auto v = ops.sub_mul(a[i].second, f, b[j].second);
            if (!ops.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.emplace_back(b[j].first, ops.neg_mul(f, b[j].second));
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, ops.neg_mul(f, b[j].second));
    return out;
}

// acc + f * e, merged on original-row indices.
template <class Ops>
ExprRow<typename Ops::Value> expr_axpy(const Ops& ops,
                                       const ExprRow<typename Ops::Value>& acc,
                                       const typename Ops::Value& f,
                                       const ExprRow<typename Ops::Value>& e) {
    ExprRow<typename Ops::Value> out;
    out.reserve(acc.size() + e.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() && j < e.size()) {
        if (acc[i].first == e[j].first) {
            auto v = ops.add(acc[i].second, ops.mul(f, e[j].second));
            if (!ops.is_zero(v)) out.emplace_back(acc[i].first, std::move(v));
            ++i; ++j;
        } else if (acc[i].first < e[j].first) {
            out.push_back(acc[i]);
            ++i;
        } else {
            out.emplace_back(e[j].first, ops.mul(f, e[j].second));
            ++j;
        }
    }
    for (; i < acc.size(); ++i) out.push_back(acc[i]);
    for (; j < e.size(); ++j) out.emplace_back(e[j].first, ops.mul(f, e[j].second));
    return out;
}

template <class Ops, class RowT, class V>
void scale_row(const Ops& ops, RowT& row, const V& factor) {
    for (auto& [idx, val] : row) val = ops.mul(val, factor);
}

}  // namespace

namespace detail {

class EchelonBase {
public:
    virtual ~EchelonBase() = default;
    virtual bool insert(const SparseRow& row) = 0;
    virtual std::int64_t rank() const = 0;
    virtual std::int64_t inserted() const = 0;
    virtual SparseRow reduce(const SparseRow& v) const = 0;
    virtual std::optional<std::vector<std::pair<std::int64_t, Scalar>>> express(
        const SparseRow& v) const = 0;
    virtual RowBasis to_row_basis() const = 0;
};

namespace {

// Streaming Gauss-Jordan: the stored rows form the canonical RREF of the
// span at every moment. Stored rows carry no entries on pivot columns other
// than their own, so reducing an incoming row is a single pass (an
// elimination only ever adds entries on non-pivot columns), and redundant
// rows reduce cheaply once the span saturates. Coefficient growth over the
// rationals stays bounded by the actual RREF entries instead of compounding
// through unreduced echelon tails.
template <class Ops>
class Echelon final : public EchelonBase {
    using V = typename Ops::Value;

public:
    Echelon(Ops ops, Field field, std::int32_t ncols, bool track)
        : ops_(std::move(ops)),
          field_(std::move(field)),
          ncols_(ncols),
          track_(track),
          pivot_of_col_(static_cast<std::size_t>(ncols), -1),
          occupancy_(static_cast<std::size_t>(ncols)),
          scratch_(static_cast<std::size_t>(ncols)) {}

    bool insert(const SparseRow& srow) override {
        validate_row(srow, ncols_, field_);
        const std::int64_t idx = inserted_++;
        ExprRow<V> acc;
        Row<V> res = reduce_row(to_internal(srow), track_ ? &acc : nullptr);
        if (res.empty()) return false;

        const std::int32_t pivot = res.front().first;
        const bool monic = ops_.is_one(res.front().second);
        V lead_inv = monic ? ops_.one() : ops_.inv(res.front().second);
        if (!monic) scale_row(ops_, res, lead_inv);
        ExprRow<V> expr;
        if (track_) {
            // Stored row = lead_inv * (original_idx - eliminated part).
            expr.reserve(acc.size() + 1);
            bool placed = false;
            for (auto& [i, v] : acc) {
                if (!placed && idx < i) {
                    expr.emplace_back(idx, ops_.one());
                    placed = true;
                }
                expr.emplace_back(i, ops_.neg_mul(ops_.one(), v));
            }
            if (!placed) expr.emplace_back(idx, ops_.one());
            if (!monic) scale_row(ops_, expr, lead_inv);
        }

        const std::int32_t new_idx = static_cast<std::int32_t>(rows_.size());

        // Gauss-Jordan step: clear the new pivot column from every stored row
        // that uses it. Occupancy lists may hold stale indices; a missing
        // entry just means the value cancelled earlier.
        auto& occ = occupancy_[static_cast<std::size_t>(pivot)];
        for (std::int32_t r : occ) {
            Row<V>& row = rows_[static_cast<std::size_t>(r)];
            auto it = std::lower_bound(
                row.begin(), row.end(), pivot,
                [](const auto& entry, std::int32_t c) { return entry.first < c; });
            if (it == row.end() || it->first != pivot) continue;
            V f = it->second;
            Row<V> updated = axpy_merge(row, f, res, r);
            row = std::move(updated);
            if (track_)
                exprs_[static_cast<std::size_t>(r)] =
                    expr_axpy(ops_, exprs_[static_cast<std::size_t>(r)], ops_.neg_mul(ops_.one(), f), expr);
        }
        occ.clear();

        for (std::size_t k = 1; k < res.size(); ++k)
            occupancy_[static_cast<std::size_t>(res[k].first)].push_back(new_idx);
        pivot_of_col_[static_cast<std::size_t>(pivot)] = new_idx;
        rows_.push_back(std::move(res));
        if (track_) exprs_.push_back(std::move(expr));
        return true;
    }

    std::int64_t rank() const override { return static_cast<std::int64_t>(rows_.size()); }
    std::int64_t inserted() const override { return inserted_; }

    SparseRow reduce(const SparseRow& v) const override {
        validate_row(v, ncols_, field_);
        return to_external(reduce_row(to_internal(v), nullptr));
    }

    std::optional<std::vector<std::pair<std::int64_t, Scalar>>> express(
        const SparseRow& v) const override {
        if (!track_) throw std::logic_error("express() without certificate tracking");
        validate_row(v, ncols_, field_);
        ExprRow<V> acc;
        Row<V> res = reduce_row(to_internal(v), &acc);
        if (!res.empty()) return std::nullopt;
        std::vector<std::pair<std::int64_t, Scalar>> out;
        out.reserve(acc.size());
        for (auto& [i, val] : acc) out.emplace_back(i, ops_.to_scalar(field_, val));
        return out;
    }

    RowBasis to_row_basis() const override {
        // The stored rows are already the canonical RREF; emit them ordered
        // by pivot column.
        std::vector<std::int32_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
        std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
            return rows_[static_cast<std::size_t>(a)].front().first <
                   rows_[static_cast<std::size_t>(b)].front().first;
        });
        RowBasis basis{SparseMatrix(field_, ncols_), {}};
        basis.matrix.rows.reserve(rows_.size());
        basis.pivot_cols.reserve(rows_.size());
        for (std::int32_t i : order) {
            basis.pivot_cols.push_back(rows_[static_cast<std::size_t>(i)].front().first);
            basis.matrix.rows.push_back(to_external(rows_[static_cast<std::size_t>(i)]));
        }
        return basis;
    }

private:
    Row<V> to_internal(const SparseRow& srow) const {
        Row<V> row;
        row.reserve(srow.entries.size());
        for (const auto& [col, val] : srow.entries)
            row.emplace_back(col, ops_.to_value(field_, val));
        return row;
    }

    SparseRow to_external(const Row<V>& row) const {
        SparseRow out;
        out.entries.reserve(row.size());
        for (const auto& [col, val] : row)
            out.entries.emplace_back(col, ops_.to_scalar(field_, val));
        return out;
    }

    // row - f * pivot_row, merged; newly created entries register the owning
    // row in the occupancy lists.
    Row<V> axpy_merge(const Row<V>& a, const V& f, const Row<V>& b, std::int32_t owner) {
        Row<V> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first == b[j].first) {
                V v = ops_.sub_mul(a[i].second, f, b[j].second);
                if (!ops_.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
                ++i; ++j;
            } else if (a[i].first < b[j].first) {
                out.push_back(a[i]);
                ++i;
            } else {
                out.emplace_back(b[j].first, ops_.neg_mul(f, b[j].second));
                occupancy_[static_cast<std::size_t>(b[j].first)].push_back(owner);
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) {
            out.emplace_back(b[j].first, ops_.neg_mul(f, b[j].second));
            occupancy_[static_cast<std::size_t>(b[j].first)].push_back(owner);
        }
        return out;
    }

    // Normal form against the current RREF in one pass: entries on pivot
    // columns trigger a single elimination each (stored rows touch no other
    // pivot columns, so no cascade), everything else accumulates in the
    // scratch buffer. Result columns ascend; support avoids all pivots.
    Row<V> reduce_row(const Row<V>& row, ExprRow<V>* acc) const {
        touched_.clear();
        for (const auto& [col, val] : row) {
            if (pivot_of_col_[static_cast<std::size_t>(col)] < 0) {
                scratch_[static_cast<std::size_t>(col)] = val;
                touched_.push_back(col);
            }
        }
        for (const auto& [col, val] : row) {
            std::int32_t pr = pivot_of_col_[static_cast<std::size_t>(col)];
            if (pr < 0) continue;
            const V& f = val;
            const Row<V>& prow = rows_[static_cast<std::size_t>(pr)];
            for (std::size_t k = 1; k < prow.size(); ++k) {
                V& target = scratch_[static_cast<std::size_t>(prow[k].first)];
                if (ops_.is_zero(target)) touched_.push_back(prow[k].first);
                ops_.sub_mul_inplace(target, f, prow[k].second);
            }
            if (acc && track_)
                *acc = expr_axpy(ops_, *acc, f, exprs_[static_cast<std::size_t>(pr)]);
        }
        std::sort(touched_.begin(), touched_.end());
        Row<V> out;
        out.reserve(touched_.size());
        for (std::int32_t col : touched_) {
            V& cell = scratch_[static_cast<std::size_t>(col)];
            if (ops_.is_zero(cell)) continue;  // cancelled, or duplicate listing
            out.emplace_back(col, std::move(cell));
            cell = V{};
        }
        return out;
    }

    Ops ops_;
    Field field_;
    std::int32_t ncols_;
    bool track_;
    std::vector<std::int32_t> pivot_of_col_;
    std::vector<Row<V>> rows_;  // canonical RREF rows, pivot first
    std::vector<ExprRow<V>> exprs_;
    std::vector<std::vector<std::int32_t>> occupancy_;  // may hold stale indices
    std::int64_t inserted_ = 0;
    mutable std::vector<V> scratch_;  // zero outside reduce_row
    mutable std::vector<std::int32_t> touched_;
};

std::unique_ptr<EchelonBase> make_echelon(const Field& field, std::int32_t ncols, bool track) {
    if (ncols < 0) throw std::invalid_argument("negative column count");
    if (field.kind() == FieldKind::PrimeField)
        return std::make_unique<Echelon<FpOps>>(FpOps{field.spec().p}, field, ncols, track);
    return std::make_unique<Echelon<QOps>>(QOps{}, field, ncols, track);
}

}  // namespace
}  // namespace detail

void SparseMatrix::validate() const {
    for (const auto& row : rows) validate_row(row, ncols, field);
}

SparseRow RowBasis::reduce(const SparseRow& v) const {
    validate_row(v, matrix.ncols, matrix.field);
    const Field& field = matrix.field;
    SparseRow work = v;
    SparseRow out;
    std::size_t pos = 0;
    while (pos < work.entries.size()) {
        auto it = std::lower_bound(pivot_cols.begin(), pivot_cols.end(), work.entries[pos].first);
        if (it == pivot_cols.end() || *it != work.entries[pos].first) {
            out.entries.push_back(work.entries[pos]);
            ++pos;
            continue;
        }
        const SparseRow& prow = matrix.rows[static_cast<std::size_t>(it - pivot_cols.begin())];
        Scalar f = work.entries[pos].second;
        SparseRow next;
        next.entries.reserve(work.entries.size() - pos + prow.entries.size());
        std::size_t i = pos, j = 0;
        while (i < work.entries.size() && j < prow.entries.size()) {
            if (work.entries[i].first == prow.entries[j].first) {
                Scalar val = field.sub(work.entries[i].second, field.mul(f, prow.entries[j].second));
                if (!field.is_zero(val)) next.entries.emplace_back(work.entries[i].first, std::move(val));
                ++i; ++j;
            } else if (work.entries[i].first < prow.entries[j].first) {
                next.entries.push_back(work.entries[i]);
                ++i;
            } else {
                next.entries.emplace_back(prow.entries[j].first,
                                          field.neg(field.mul(f, prow.entries[j].second)));
                ++j;
            }
        }
        for (; i < work.entries.size(); ++i) next.entries.push_back(work.entries[i]);
        for (; j < prow.entries.size(); ++j)
            next.entries.emplace_back(prow.entries[j].first,
                                      field.neg(field.mul(f, prow.entries[j].second)));
        work = std::move(next);
        pos = 0;
    }
    return out;
}

SpanBuilder::SpanBuilder(const Field& field, std::int32_t ncols, bool track_certificates)
    : field_(field), ncols_(ncols), impl_(detail::make_echelon(field, ncols, track_certificates)) {}

SpanBuilder::~SpanBuilder() = default;
SpanBuilder::SpanBuilder(SpanBuilder&&) noexcept = default;
SpanBuilder& SpanBuilder::operator=(SpanBuilder&&) noexcept = default;

bool SpanBuilder::insert(const SparseRow& row) { return impl_->insert(row); }
std::int64_t SpanBuilder::rank() const { return impl_->rank(); }
std::int64_t SpanBuilder::inserted() const { return impl_->inserted(); }
SparseRow SpanBuilder::reduce(const SparseRow& v) const { return impl_->reduce(v); }

std::optional<std::vector<std::pair<std::int64_t, Scalar>>> SpanBuilder::express(
    const SparseRow& v) const {
    return impl_->express(v);
}

RowBasis SpanBuilder::to_row_basis() const { return impl_->to_row_basis(); }

bool SpanBuilder::saturated() const { return impl_->rank() >= ncols_; }

namespace {

// Batch reduction with the documented pivot rule: proceed column by column
// from the left; the candidate rows are exactly those whose current leading
// column is the one under consideration; pick the sparsest, ties by lowest
// original row index.
template <class Ops>
RowBasis batch_row_reduce(const Ops& ops, const SparseMatrix& m) {
    using V = typename Ops::Value;
    struct Work {
        Row<V> row;
        std::int32_t orig;
    };
    std::vector<Work> active;
    active.reserve(m.rows.size());
    std::vector<std::vector<std::int32_t>> bucket(static_cast<std::size_t>(m.ncols));
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        Row<V> row;
        row.reserve(m.rows[r].entries.size());
        for (const auto& [col, val] : m.rows[r].entries)
            row.emplace_back(col, ops.to_value(m.field, val));
        if (row.empty()) continue;
        bucket[static_cast<std::size_t>(row.front().first)].push_back(
            static_cast<std::int32_t>(active.size()));
        active.push_back(Work{std::move(row), static_cast<std::int32_t>(r)});
    }

    std::vector<Row<V>> echelon;    // pivots in ascending column order
    std::vector<std::int32_t> pivot_cols;
    for (std::int32_t c = 0; c < m.ncols; ++c) {
        auto& ids = bucket[static_cast<std::size_t>(c)];
        if (ids.empty()) continue;
        std::size_t best = 0;
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const Work& w = active[static_cast<std::size_t>(ids[k])];
            const Work& bw = active[static_cast<std::size_t>(ids[best])];
            if (w.row.size() < bw.row.size() ||
                (w.row.size() == bw.row.size() && w.orig < bw.orig))
                best = k;
        }
        Row<V> pivot = std::move(active[static_cast<std::size_t>(ids[best])].row);
        if (!ops.is_one(pivot.front().second))
            scale_row(ops, pivot, ops.inv(pivot.front().second));
        for (std::size_t k = 0; k < ids.size(); ++k) {
            if (k == best) continue;
            Work& w = active[static_cast<std::size_t>(ids[k])];
            Row<V> reduced = axpy_tail(ops, w.row, 0, w.row.front().second, pivot);
            w.row = std::move(reduced);
            if (!w.row.empty())
                bucket[static_cast<std::size_t>(w.row.front().first)].push_back(ids[k]);
        }
        ids.clear();
        pivot_cols.push_back(c);
        echelon.push_back(std::move(pivot));
    }

    // Back-substitution to RREF, descending pivots.
    std::vector<std::int32_t> pivot_of_col(static_cast<std::size_t>(m.ncols), -1);
    for (std::size_t k = echelon.size(); k-- > 0;) {
        Row<V>& work = echelon[k];
        std::size_t pos = 1;
        while (pos < work.size()) {
            std::int32_t pr = pivot_of_col[static_cast<std::size_t>(work[pos].first)];
            if (pr < 0) { ++pos; continue; }
            V f = work[pos].second;
            Row<V> merged = axpy_tail(ops, work, pos, f, echelon[static_cast<std::size_t>(pr)]);
            work.resize(pos);
            work.insert(work.end(), merged.begin(), merged.end());
        }
        pivot_of_col[static_cast<std::size_t>(work.front().first)] = static_cast<std::int32_t>(k);
    }

    RowBasis basis{SparseMatrix(m.field, m.ncols), std::move(pivot_cols)};
    basis.matrix.rows.reserve(echelon.size());
    for (const auto& row : echelon) {
        SparseRow out;
        out.entries.reserve(row.size());
        for (const auto& [col, val] : row)
            out.entries.emplace_back(col, ops.to_scalar(m.field, val));
        basis.matrix.rows.push_back(std::move(out));
    }
    return basis;
}

}  // namespace

RowBasis row_reduce(const SparseMatrix& m) {
    m.validate();
    if (m.field.kind() == FieldKind::PrimeField)
        return batch_row_reduce(FpOps{m.field.spec().p}, m);
    return batch_row_reduce(QOps{}, m);
}

RowBasis kernel(const SparseMatrix& m) {
    RowBasis r = row_reduce(m);
    const Field& field = m.field;
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.ncols), false);
    for (std::int32_t c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    // One kernel row per free column j: unit at j, minus the RREF column above it.
    std::map<std::int32_t, SparseRow> rows_by_free_col;
    for (std::int32_t j = 0; j < m.ncols; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) rows_by_free_col[j] = SparseRow{};
    for (std::size_t i = 0; i < r.matrix.rows.size(); ++i) {
        for (const auto& [col, val] : r.matrix.rows[i].entries) {
            if (is_pivot[static_cast<std::size_t>(col)]) continue;
            rows_by_free_col[col].entries.emplace_back(r.pivot_cols[i], field.neg(val));
        }
    }
    SparseMatrix null_rows(field, m.ncols);
    null_rows.rows.reserve(rows_by_free_col.size());
    for (auto& [j, row] : rows_by_free_col) {
        row.entries.emplace_back(j, field.one());
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        null_rows.rows.push_back(std::move(row));
    }
    RowBasis result = row_reduce(null_rows);
    if (result.rank() != m.ncols - r.rank())
        throw InternalInconsistency("kernel dimension disagrees with rank-nullity");
    return result;
}

std::optional<std::vector<Scalar>> in_span_with_certificate(
    const SparseRow& v, const RowBasis& b, const SparseMatrix& originals) {
    originals.validate();
    if (b.matrix.ncols != originals.ncols)
        throw std::invalid_argument("in_span_with_certificate: column count mismatch");
    if (!(b.matrix.field.spec() == originals.field.spec()))
        throw std::invalid_argument("in_span_with_certificate: field mismatch");
    validate_row(v, originals.ncols, originals.field);

    if (!b.reduce(v).empty()) return std::nullopt;

    SpanBuilder builder(originals.field, originals.ncols, /*track_certificates=*/true);
    for (const auto& row : originals.rows) builder.insert(row);
    auto cert = builder.express(v);
    if (!cert)
        throw InternalInconsistency(
            "row basis and tracked reduction disagree on span membership");
    std::vector<Scalar> coeffs(originals.rows.size(), originals.field.zero());
    for (const auto& [idx, val] : *cert) coeffs[static_cast<std::size_t>(idx)] = val;
    return coeffs;
}

}  // namespace apolar
