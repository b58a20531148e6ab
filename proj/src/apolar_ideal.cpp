#include "apolar/apolar_ideal.hpp"

#include <algorithm>

#include "apolar/util.hpp"

namespace apolar {

namespace {

// All exponent vectors s <= a with deg s = e, in enumeration-friendly but
// unspecified order (callers sort coordinates afterwards).
void enumerate_divisors(const ExponentVector& a, std::int32_t e,
                        std::vector<ExponentVector>& out) {
    ExponentVector cur;
    cur.e.assign(a.e.size(), 0);
    // a has tiny degree here (forms are cubics and below), so plain
    // recursion over the support is cheap.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0) support.push_back(i);

    auto rec = [&](auto&& self, std::size_t k, std::int32_t rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (k >= support.size()) return;
        std::size_t v = support[k];
        std::int32_t cap = std::min(a.e[v], rem);
        for (std::int32_t t = 0; t <= cap; ++t) {
            cur.e[v] = t;
            self(self, k + 1, rem - t);
        }
        cur.e[v] = 0;
    };
    rec(rec, 0, e);
}

}  // namespace

HomogeneousForm GradedSubspace::row_form(std::int64_t i) const {
    return from_coordinates(ctx, Side::Poly, *indexer,
                            basis.matrix.rows[static_cast<std::size_t>(i)]);
}

std::vector<HomogeneousForm> GradedSubspace::forms() const {
    std::vector<HomogeneousForm> out;
    out.reserve(static_cast<std::size_t>(dimension()));
    for (std::int64_t i = 0; i < dimension(); ++i) out.push_back(row_form(i));
    return out;
}

SparseMatrix contraction_matrix(const HomogeneousForm& f, std::int32_t e) {
    if (f.side() != Side::Dual)
        throw std::invalid_argument("contraction_matrix: f must be a dual form");
    const std::int32_t d = f.degree();
    if (e < 0 || e > d) throw std::invalid_argument("contraction_matrix: degree out of range");
    const ContextPtr& ctx = f.context();
    MonomialIndexer cols(ctx, e);
    MonomialIndexer rows_idx(ctx, d - e);

    SparseMatrix m(ctx->field(), static_cast<std::int32_t>(cols.size()));
    m.rows.resize(static_cast<std::size_t>(rows_idx.size()));
    std::vector<ExponentVector> divisors;
    for (const auto& [a, c] : f.terms()) {
        divisors.clear();
        enumerate_divisors(a, e, divisors);
        for (const ExponentVector& s : divisors) {
            std::int64_t row = rows_idx.index_of(a.minus(s));
            std::int64_t col = cols.index_of(s);
            m.rows[static_cast<std::size_t>(row)].entries.emplace_back(
                static_cast<std::int32_t>(col), c);
        }
    }
    for (auto& row : m.rows)
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    return m;
}

GradedSubspace apolar_piece(const HomogeneousForm& f, std::int32_t e) {
    if (f.is_zero())
        throw std::invalid_argument("apolar_piece: the zero form has the unit ideal as annihilator");
    GradedSubspace sub;
    sub.ctx = f.context();
    sub.degree = e;
    sub.indexer = std::make_shared<const MonomialIndexer>(f.context(), e);
    sub.basis = kernel(contraction_matrix(f, e));
    return sub;
}

ApolarIdeal ApolarIdeal::compute(const HomogeneousForm& f) {
    if (f.side() != Side::Dual)
        throw std::invalid_argument("apolar ideal: f must be a dual form");
    if (f.is_zero())
        throw std::invalid_argument("apolar ideal: f must be nonzero");
    ApolarIdeal ideal(f);
    ideal.pieces_.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (std::int32_t e = 0; e <= f.degree(); ++e) {
        GradedSubspace piece = apolar_piece(f, e);
        // Construction invariant: every basis row annihilates f.
        for (std::int64_t i = 0; i < piece.dimension(); ++i)
            if (!contract_poly(piece.row_form(i), f).is_zero())
                throw InternalInconsistency("apolar piece contains a non-annihilating row");
        ideal.pieces_.push_back(std::move(piece));
    }
    return ideal;
}

const GradedSubspace& ApolarIdeal::piece(std::int32_t e) const {
    if (e < 0 || e > top_degree())
        throw std::invalid_argument("apolar ideal piece degree out of stored range");
    return pieces_[static_cast<std::size_t>(e)];
}

GradedSubspace ApolarIdeal::full_piece(std::int32_t e) const {
    if (e <= top_degree())
        throw std::invalid_argument("full_piece is for degrees above deg f");
    GradedSubspace sub;
    sub.ctx = context();
    sub.degree = e;
    sub.indexer = std::make_shared<const MonomialIndexer>(context(), e);
    const Field& field = context()->field();
    const std::int32_t ncols = static_cast<std::int32_t>(sub.indexer->size());
    sub.basis = RowBasis{SparseMatrix(field, ncols), {}};
    sub.basis.matrix.rows.reserve(static_cast<std::size_t>(ncols));
    sub.basis.pivot_cols.reserve(static_cast<std::size_t>(ncols));
    for (std::int32_t c = 0; c < ncols; ++c) {
        SparseRow row;
        row.entries.emplace_back(c, field.one());
        sub.basis.matrix.rows.push_back(std::move(row));
        sub.basis.pivot_cols.push_back(c);
    }
    return sub;
}

std::vector<std::int64_t> hilbert_function(const HomogeneousForm& f) {
    if (f.is_zero()) throw std::invalid_argument("hilbert_function: zero form");
    std::vector<std::int64_t> hf;
    hf.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (std::int32_t e = 0; e <= f.degree(); ++e) {
        SparseMatrix m = contraction_matrix(f, e);
        SpanBuilder span(m.field, m.ncols);
        for (const auto& row : m.rows) span.insert(row);
        hf.push_back(span.rank());
    }
    return hf;
}

GradedSubspace minimal_generators_by_degree(const ApolarIdeal& ideal, std::int32_t e) {
    if (e < 1) throw std::invalid_argument("minimal generators start in degree 1");
    const ContextPtr& ctx = ideal.context();
    const Field& field = ctx->field();
    GradedSubspace piece_e =
        e <= ideal.top_degree() ? ideal.piece(e) : ideal.full_piece(e);
    GradedSubspace prev =
        e - 1 <= ideal.top_degree() ? ideal.piece(e - 1) : ideal.full_piece(e - 1);

    // Span of S_1 * I_{e-1} inside degree e.
    SpanBuilder span(field, static_cast<std::int32_t>(piece_e.indexer->size()));
    for (std::int64_t i = 0; i < prev.dimension(); ++i) {
        HomogeneousForm g = prev.row_form(i);
        for (std::int32_t v = 0; v < ctx->nvars(); ++v) {
            ExponentVector var;
            var.e.assign(static_cast<std::size_t>(ctx->nvars()), 0);
            var.e[static_cast<std::size_t>(v)] = 1;
            HomogeneousForm product = multiply(HomogeneousForm::monomial(ctx, Side::Poly, var, field.one()), g);
            span.insert(coordinates(product, *piece_e.indexer));
        }
    }

    SparseMatrix residues(field, static_cast<std::int32_t>(piece_e.indexer->size()));
    for (std::int64_t i = 0; i < piece_e.dimension(); ++i) {
        SparseRow res = span.reduce(piece_e.basis.matrix.rows[static_cast<std::size_t>(i)]);
        if (!res.empty()) residues.rows.push_back(std::move(res));
    }
    GradedSubspace out;
    out.ctx = ctx;
    out.degree = e;
    out.indexer = piece_e.indexer;
    out.basis = row_reduce(residues);
    if (out.dimension() != piece_e.dimension() - span.rank())
        throw InternalInconsistency("minimal generator count disagrees with dimension count");
    return out;
}

}  // namespace apolar
