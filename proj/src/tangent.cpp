#include "apolar/tangent.hpp"

#include <algorithm>
#include <map>

#include "apolar/util.hpp"

namespace apolar {

namespace {

void require_cubic_low_pieces(const ApolarIdeal& ideal) {
    if (ideal.top_degree() != 3)
        throw std::invalid_argument("square dimensions are implemented for cubic forms only");
    if (ideal.piece(0).dimension() != 0 || ideal.piece(1).dimension() != 0)
        throw std::invalid_argument(
            "ideal has elements below degree 2; the I_2*I_3 decomposition of the square "
            "does not apply");
}

std::vector<std::int64_t> quotient_hilbert_function(const ApolarIdeal& ideal) {
    const std::int32_t n = ideal.context()->nvars();
    std::vector<std::int64_t> hf;
    for (std::int32_t e = 0; e <= ideal.top_degree(); ++e)
        hf.push_back(binomial(n + e - 1, e) - ideal.piece(e).dimension());
    return hf;
}

bool has_generic_hf(const ApolarIdeal& ideal) {
    const std::int32_t n = ideal.context()->nvars();
    std::vector<std::int64_t> hf = quotient_hilbert_function(ideal);
    return hf == std::vector<std::int64_t>{1, n, n, 1};
}

// Perp of I_{e-2} as an RREF basis over the degree-(e-2) dual coordinates:
// span(S_1 . f) for e = 4, span(f) for e = 5.
RowBasis perp_basis(const ApolarIdeal& ideal, const HomogeneousForm& f, std::int32_t e,
                    const MonomialIndexer& low_idx) {
    const ContextPtr& ctx = ideal.context();
    const Field& field = ctx->field();
    SparseMatrix gens(field, static_cast<std::int32_t>(low_idx.size()));
    if (e == 5) {
        gens.rows.push_back(coordinates(f, low_idx));
    } else {
        for (std::int32_t v = 0; v < ctx->nvars(); ++v) {
            ExponentVector var;
            var.e.assign(static_cast<std::size_t>(ctx->nvars()), 0);
            var.e[static_cast<std::size_t>(v)] = 1;
            HomogeneousForm contracted = contract(var, f);
            if (!contracted.is_zero()) gens.rows.push_back(coordinates(contracted, low_idx));
        }
    }
    return row_reduce(gens);
}

// Emits the dual-method constraint rows of one I_2 basis element h: for each
// non-pivot coordinate v of the perp basis W, the condition that the
// coordinate of h.G at v, corrected by the W-reduction, vanishes. Returns
// false when the sink stopped consumption (span saturated).
template <class Sink>
bool emit_dual_constraints(const HomogeneousForm& h, const RowBasis& w,
                           const MonomialIndexer& low_idx, const MonomialIndexer& high_idx,
                           Sink&& sink) {
    const Field& field = w.matrix.field;
    // Transpose of W over its non-pivot columns: per column v the list of
    // (row j, W_j[v]).
    std::vector<bool> is_pivot(static_cast<std::size_t>(w.matrix.ncols), false);
    for (std::int32_t c : w.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::pair<std::int32_t, Scalar>>> tail_by_col(
        static_cast<std::size_t>(w.matrix.ncols));
    for (std::size_t j = 0; j < w.matrix.rows.size(); ++j)
        for (const auto& [c, val] : w.matrix.rows[j].entries)
            if (!is_pivot[static_cast<std::size_t>(c)])
                tail_by_col[static_cast<std::size_t>(c)].emplace_back(
                    static_cast<std::int32_t>(j), val);

    std::vector<std::pair<std::int32_t, Scalar>> acc;
    for (std::int64_t v = 0; v < low_idx.size(); ++v) {
        if (is_pivot[static_cast<std::size_t>(v)]) continue;
        acc.clear();
        const ExponentVector& vm = low_idx.at(v);
        for (const auto& [b, hb] : h.terms())
            acc.emplace_back(static_cast<std::int32_t>(high_idx.index_of(vm.plus(b))), hb);
        for (const auto& [j, wjv] : tail_by_col[static_cast<std::size_t>(v)]) {
            const ExponentVector& pm = low_idx.at(w.pivot_cols[static_cast<std::size_t>(j)]);
            for (const auto& [b, hb] : h.terms())
                acc.emplace_back(static_cast<std::int32_t>(high_idx.index_of(pm.plus(b))),
                                 field.neg(field.mul(wjv, hb)));
        }
        std::sort(acc.begin(), acc.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseRow row;
        row.entries.reserve(acc.size());
        for (auto& [col, val] : acc) {
            if (!row.entries.empty() && row.entries.back().first == col) {
                row.entries.back().second = field.add(row.entries.back().second, val);
                if (field.is_zero(row.entries.back().second)) row.entries.pop_back();
            } else if (!field.is_zero(val)) {
                row.entries.emplace_back(col, val);
            }
        }
        if (!sink(std::move(row))) return false;
    }
    return true;
}

std::int64_t resolve_dim(const ApolarIdeal& ideal, const HomogeneousForm& f, std::int32_t e,
                         SquareMethod method, std::string& tag) {
    const std::int32_t n = ideal.context()->nvars();
    if (method == SquareMethod::Auto)
        method = n > 10 ? SquareMethod::Dual : SquareMethod::Span;
    switch (method) {
        case SquareMethod::Span:
            tag = "product-span";
            return square_piece_dim_span(ideal, e);
        case SquareMethod::Dual:
            tag = "dual-perp";
            return square_piece_dim_dual(ideal, f, e);
        default: {
            tag = "span+dual";
            std::int64_t span_dim = square_piece_dim_span(ideal, e);
            std::int64_t dual_dim = square_piece_dim_dual(ideal, f, e);
            if (span_dim != dual_dim)
                throw InternalInconsistency(
                    "product-span and dual-perp disagree in degree " + std::to_string(e) + ": " +
                    std::to_string(span_dim) + " vs " + std::to_string(dual_dim));
            return span_dim;
        }
    }
}

}  // namespace

SquareMethod parse_square_method(const std::string& text) {
    if (text == "auto") return SquareMethod::Auto;
    if (text == "span") return SquareMethod::Span;
    if (text == "dual") return SquareMethod::Dual;
    if (text == "both") return SquareMethod::Both;
    throw InputError("unknown method '" + text + "' (expected auto, span, dual, or both)");
}

std::string failure_reason_str(FailureReason r) {
    switch (r) {
        case FailureReason::BadHilbertFunction: return "bad-hilbert-function";
        case FailureReason::SquareDegree4: return "square-degree-4";
        default: return "square-degree-5";
    }
}

std::int64_t square_piece_dim_span(const ApolarIdeal& ideal, std::int32_t e) {
    return build_square_span(ideal, e).rank();
}

SpanBuilder build_square_span(const ApolarIdeal& ideal, std::int32_t e) {
    require_cubic_low_pieces(ideal);
    if (e != 4 && e != 5)
        throw std::invalid_argument("square pieces are computed in degrees 4 and 5 only");
    const ContextPtr& ctx = ideal.context();
    const Field& field = ctx->field();
    MonomialIndexer idx(ctx, e);

    std::vector<HomogeneousForm> left = ideal.piece(2).forms();
    std::vector<HomogeneousForm> right = e == 4 ? left : ideal.piece(3).forms();

    if (e == 5) {
        // The decomposition (I^2)_5 = I_2 * I_3 relies on S_1 * I_2 landing in
        // I_3; assert it rather than assuming it.
        const RowBasis& cubic_basis = ideal.piece(3).basis;
        const MonomialIndexer& idx3 = *ideal.piece(3).indexer;
        for (const HomogeneousForm& g : left) {
            for (std::int32_t v = 0; v < ctx->nvars(); ++v) {
                ExponentVector var;
                var.e.assign(static_cast<std::size_t>(ctx->nvars()), 0);
                var.e[static_cast<std::size_t>(v)] = 1;
                HomogeneousForm prod =
                    multiply(HomogeneousForm::monomial(ctx, Side::Poly, var, field.one()), g);
                if (!cubic_basis.reduce(coordinates(prod, idx3)).empty())
                    throw InternalInconsistency("S_1 * I_2 escapes I_3");
            }
        }
    }

    SpanBuilder span(field, static_cast<std::int32_t>(idx.size()));
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::size_t j0 = e == 4 ? i : 0;
        for (std::size_t j = j0; j < right.size(); ++j) {
            span.insert(coordinates(multiply(left[i], right[j]), idx));
            if (span.saturated()) return span;
        }
    }
    return span;
}

std::int64_t square_piece_dim_dual(const ApolarIdeal& ideal, const HomogeneousForm& f,
                                   std::int32_t e) {
    require_cubic_low_pieces(ideal);
    if (e != 4 && e != 5)
        throw std::invalid_argument("square pieces are computed in degrees 4 and 5 only");
    require_same_context(ideal.context(), f.context());
    if (!has_generic_hf(ideal))
        throw std::invalid_argument(
            "dual-perp method requires Hilbert function (1, n, n, 1)");
    const ContextPtr& ctx = ideal.context();
    const std::int32_t n = ctx->nvars();
    MonomialIndexer low_idx(ctx, e - 2);
    MonomialIndexer high_idx(ctx, e);

    RowBasis w = perp_basis(ideal, f, e, low_idx);
    if (w.rank() != (e == 5 ? 1 : n))
        throw InternalInconsistency("perp space has unexpected dimension");

    SpanBuilder span(ctx->field(), static_cast<std::int32_t>(high_idx.size()));
    for (std::int64_t hi = 0; hi < ideal.piece(2).dimension(); ++hi) {
        HomogeneousForm h = ideal.piece(2).row_form(hi);
        bool keep_going = emit_dual_constraints(h, w, low_idx, high_idx, [&](SparseRow row) {
            span.insert(row);
            return !span.saturated();
        });
        if (!keep_going) break;
    }
    return span.rank();
}

SparseMatrix dual_constraint_block(const ApolarIdeal& ideal, const HomogeneousForm& f,
                                   std::int32_t e, std::int64_t h_index) {
    require_cubic_low_pieces(ideal);
    const ContextPtr& ctx = ideal.context();
    MonomialIndexer low_idx(ctx, e - 2);
    MonomialIndexer high_idx(ctx, e);
    RowBasis w = perp_basis(ideal, f, e, low_idx);
    SparseMatrix block(ctx->field(), static_cast<std::int32_t>(high_idx.size()));
    HomogeneousForm h = ideal.piece(2).row_form(h_index);
    emit_dual_constraints(h, w, low_idx, high_idx, [&](SparseRow row) {
        block.rows.push_back(std::move(row));
        return true;
    });
    return block;
}

Verdict check_small_tangent(const HomogeneousForm& f, SquareMethod method) {
    if (f.side() != Side::Dual) throw std::invalid_argument("expected a dual form");
    if (f.is_zero()) throw std::invalid_argument("the zero form has no apolar algebra");
    if (f.degree() != 3) throw std::invalid_argument("the checker handles cubic forms only");

    const std::int32_t n = f.context()->nvars();
    Verdict verdict;

    Stopwatch apolar_clock;
    ApolarIdeal ideal = ApolarIdeal::compute(f);
    verdict.hf_quotient = quotient_hilbert_function(ideal);
    verdict.ms_apolar = apolar_clock.ms();

    if (verdict.hf_quotient != std::vector<std::int64_t>{1, n, n, 1}) {
        verdict.condition_holds = false;
        verdict.failure_reason = FailureReason::BadHilbertFunction;
        return verdict;
    }

    // With nothing in the ideal below degree 2 the square has nothing below
    // degree 4, so those values are forced.
    verdict.square.hf[0] = 1;
    verdict.square.hf[1] = n;
    verdict.square.hf[2] = binomial(n + 1, 2);
    verdict.square.hf[3] = binomial(n + 2, 3);
    for (int d = 0; d <= 3; ++d) verdict.square.method[static_cast<std::size_t>(d)] = "forced";

    Stopwatch deg4_clock;
    std::string tag4;
    std::int64_t dim4 = resolve_dim(ideal, f, 4, method, tag4);
    std::int64_t hf4 = binomial(n + 3, 4) - dim4;
    verdict.square.hf[4] = hf4;
    verdict.square.method[4] = tag4;
    verdict.ms_degree4 = deg4_clock.ms();
    if (hf4 != n) {
        verdict.condition_holds = false;
        verdict.failure_reason = FailureReason::SquareDegree4;
        return verdict;
    }

    Stopwatch deg5_clock;
    std::string tag5;
    std::int64_t dim5 = resolve_dim(ideal, f, 5, method, tag5);
    std::int64_t hf5 = binomial(n + 4, 5) - dim5;
    verdict.square.hf[5] = hf5;
    verdict.square.method[5] = tag5;
    verdict.ms_degree5 = deg5_clock.ms();
    if (hf5 != 0) {
        verdict.condition_holds = false;
        verdict.failure_reason = FailureReason::SquareDegree5;
        return verdict;
    }

    verdict.condition_holds = true;
    verdict.tangent_hf = tangent_hilbert_function_from(ideal, hf4, hf5);
    return verdict;
}

std::array<std::int64_t, 3> tangent_hilbert_function_from(const ApolarIdeal& ideal,
                                                          std::int64_t hf4, std::int64_t hf5) {
    if (hf5 != 0)
        throw std::invalid_argument(
            "tangent Hilbert function not finitely determined in the implemented range "
            "(HF(S/I^2)_5 != 0)");
    const std::int32_t n = ideal.context()->nvars();
    // Tangent degree t reads off dim (I/I^2)_{3-t}; only t = -1, 0, 1 can be
    // nonzero once the square is trivial from degree 5 on.
    return {hf4, binomial(n + 2, 3) - 1, binomial(n + 1, 2) - n};
}

std::array<std::int64_t, 3> tangent_hilbert_function(const HomogeneousForm& f,
                                                     SquareMethod method) {
    if (f.side() != Side::Dual || f.is_zero() || f.degree() != 3)
        throw std::invalid_argument("tangent Hilbert function needs a nonzero cubic dual form");
    ApolarIdeal ideal = ApolarIdeal::compute(f);
    const std::int32_t n = ideal.context()->nvars();
    if (!has_generic_hf(ideal))
        throw std::invalid_argument("tangent Hilbert function requires HF(S/I) = (1, n, n, 1)");
    std::string tag;
    std::int64_t hf4 = binomial(n + 3, 4) - resolve_dim(ideal, f, 4, method, tag);
    std::int64_t hf5 = binomial(n + 4, 5) - resolve_dim(ideal, f, 5, method, tag);
    return tangent_hilbert_function_from(ideal, hf4, hf5);
}

namespace {

struct TrackedSquareSpan {
    SpanBuilder span;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (left index, right index)
    std::vector<HomogeneousForm> left;
    std::vector<HomogeneousForm> right;
};

}  // namespace

WitnessQuery witness_square_query(const HomogeneousForm& target, const ApolarIdeal& ideal,
                                  std::span<const HomogeneousForm> extras) {
    require_same_context(target.context(), ideal.context());
    if (target.side() != Side::Poly)
        throw std::invalid_argument("witness target must be a polynomial-side form");
    if (target.is_zero()) throw std::invalid_argument("witness target must be nonzero");
    const std::int32_t e = target.degree();
    if (e != 4 && e != 5)
        throw std::invalid_argument("witness targets live in degree 4 or 5");
    require_cubic_low_pieces(ideal);
    const ContextPtr& ctx = ideal.context();
    const Field& field = ctx->field();
    MonomialIndexer idx(ctx, e);
    SparseRow target_row = coordinates(target, idx);

    TrackedSquareSpan tracked{SpanBuilder(field, static_cast<std::int32_t>(idx.size()), true),
                              {},
                              ideal.piece(2).forms(),
                              {}};
    tracked.right = e == 4 ? tracked.left : ideal.piece(3).forms();

    // Stream the products in deterministic pair order; stop as soon as the
    // target becomes expressible.
    std::optional<std::vector<std::pair<std::int64_t, Scalar>>> cert;
    for (std::size_t i = 0; i < tracked.left.size() && !cert; ++i) {
        std::size_t j0 = e == 4 ? i : 0;
        for (std::size_t j = j0; j < tracked.right.size(); ++j) {
            tracked.pairs.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
            tracked.span.insert(coordinates(multiply(tracked.left[i], tracked.right[j]), idx));
        }
        cert = tracked.span.express(target_row);
    }

    WitnessQuery result;
    if (cert) {
        result.in_square = true;
        WitnessCombination combo{target, {}};
        for (const auto& [idx_pair, coeff] : *cert) {
            auto [li, ri] = tracked.pairs[static_cast<std::size_t>(idx_pair)];
            combo.terms.push_back(WitnessTerm{coeff, tracked.left[static_cast<std::size_t>(li)],
                                              tracked.right[static_cast<std::size_t>(ri)]});
        }
        result.certificate = std::move(combo);
        return result;
    }

    result.in_square = false;
    result.residue_support =
        static_cast<std::int64_t>(tracked.span.reduce(target_row).entries.size());

    if (!extras.empty()) {
        const std::int64_t n_pairs = static_cast<std::int64_t>(tracked.pairs.size());
        for (const HomogeneousForm& extra : extras) {
            require_same_context(extra.context(), ctx);
            if (extra.side() != Side::Poly || extra.degree() != e)
                throw std::invalid_argument("auxiliary generator with wrong side or degree");
            tracked.span.insert(coordinates(extra, idx));
        }
        auto aug = tracked.span.express(target_row);
        if (aug) {
            WitnessCombination combo{target, {}};
            for (const auto& [k, coeff] : *aug) {
                if (k < n_pairs) {
                    auto [li, ri] = tracked.pairs[static_cast<std::size_t>(k)];
                    combo.terms.push_back(
                        WitnessTerm{coeff, tracked.left[static_cast<std::size_t>(li)],
                                    tracked.right[static_cast<std::size_t>(ri)]});
                } else {
                    result.auxiliary_terms.emplace_back(
                        coeff, extras[static_cast<std::size_t>(k - n_pairs)]);
                }
            }
            result.certificate = std::move(combo);
        }
    }
    return result;
}

std::optional<WitnessCombination> witness_square_membership(const HomogeneousForm& target,
                                                            const ApolarIdeal& ideal) {
    WitnessQuery q = witness_square_query(target, ideal, {});
    if (!q.in_square) return std::nullopt;
    return std::move(q.certificate);
}

bool verify_witness(const WitnessCombination& w, const HomogeneousForm& f) {
    const ContextPtr& ctx = w.target.context();
    HomogeneousForm sum(ctx, w.target.degree(), Side::Poly);
    for (const WitnessTerm& t : w.terms) {
        if (!contract_poly(t.left, f).is_zero() || !contract_poly(t.right, f).is_zero())
            return false;
        sum.add_scaled(multiply(t.left, t.right), t.coeff);
    }
    return sum.equals(w.target);
}

}  // namespace apolar
