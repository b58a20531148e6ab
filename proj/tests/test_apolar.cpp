#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apolar/apolar_ideal.hpp"
#include "apolar/families.hpp"
#include "apolar/util.hpp"

using namespace apolar;

namespace {

ContextPtr simple_ctx(std::int32_t n, FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> names;
    for (std::int32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const RingContext>(n, field, std::move(names));
}

// x1^[d]: the dual functional of the pure power of the first variable.
HomogeneousForm pure_power(const ContextPtr& ctx, std::int32_t d) {
    ExponentVector ev;
    ev.e.assign(static_cast<std::size_t>(ctx->nvars()), 0);
    ev.e[0] = d;
    return HomogeneousForm::monomial(ctx, Side::Dual, ev, ctx->field().one());
}

HomogeneousForm random_dual(const ContextPtr& ctx, std::int32_t degree, SplitMix64& rng) {
    MonomialIndexer idx(ctx, degree);
    HomogeneousForm f(ctx, degree, Side::Dual);
    const Field& field = ctx->field();
    for (std::int64_t i = 0; i < idx.size(); ++i) {
        if (rng.below(100) < 55) {
            std::int64_t c = ctx->field_spec().kind == FieldKind::PrimeField
                                 ? static_cast<std::int64_t>(rng.below(ctx->field_spec().p))
                                 : static_cast<std::int64_t>(rng.below(15)) - 7;
            f.add_term(idx.at(i), field.from_int(c));
        }
    }
    return f;
}

}  // namespace

TEST_CASE("pure power annihilator") {
    ContextPtr ctx = simple_ctx(3);
    HomogeneousForm f = pure_power(ctx, 3);

    GradedSubspace p1 = apolar_piece(f, 1);
    CHECK(p1.dimension() == 2);
    CHECK(p1.basis.pivot_cols == std::vector<std::int32_t>{1, 2});  // x2 and x3

    CHECK(hilbert_function(f) == std::vector<std::int64_t>{1, 1, 1, 1});
    for (std::int32_t n : {1, 5}) {
        ContextPtr c = simple_ctx(n);
        CHECK(hilbert_function(pure_power(c, 3)) == std::vector<std::int64_t>{1, 1, 1, 1});
    }
}

TEST_CASE("zero form rejected") {
    ContextPtr ctx = simple_ctx(2);
    HomogeneousForm zero(ctx, 3, Side::Dual);
    CHECK_THROWS_AS(apolar_piece(zero, 1), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_function(zero), std::invalid_argument);
    CHECK_THROWS_AS(ApolarIdeal::compute(zero), std::invalid_argument);
}

TEST_CASE("family Hilbert functions") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                           FieldSpec::prime_field(3)}) {
        CHECK(hilbert_function(family_cubic(6, spec)) == std::vector<std::int64_t>{1, 6, 6, 1});
        CHECK(hilbert_function(family_cubic(9, spec)) == std::vector<std::int64_t>{1, 9, 9, 1});
    }
    CHECK(hilbert_function(family_cubic(12, FieldSpec::rationals())) ==
          std::vector<std::int64_t>{1, 12, 12, 1});
}

TEST_CASE("n=18 family ideal dimensions over F_2") {
    HomogeneousForm F = family_cubic(18, FieldSpec::prime_field(2));
    ApolarIdeal ideal = ApolarIdeal::compute(F);
    CHECK(ideal.piece(1).dimension() == 0);  // no linear annihilator
    CHECK(ideal.piece(2).dimension() == 153);  // C(19,2) - 18
    CHECK(ideal.piece(3).dimension() == binomial(20, 3) - 1);
    CHECK(hilbert_function(F) == std::vector<std::int64_t>{1, 18, 18, 1});

    // With no linear part, all of I_2 is minimal; nothing new appears in
    // degree 3, and every reduced generator is a monomial or a binomial.
    GradedSubspace g2 = minimal_generators_by_degree(ideal, 2);
    CHECK(g2.dimension() == 153);
    for (const auto& row : g2.basis.matrix.rows) CHECK(row.entries.size() <= 2);
    CHECK(minimal_generators_by_degree(ideal, 3).dimension() == 0);
}

TEST_CASE("pieces annihilate and dimensions match the Hilbert function") {
    SplitMix64 rng(314);
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(32003)}) {
        for (std::int32_t n = 2; n <= 5; ++n) {
            ContextPtr ctx = simple_ctx(n, spec);
            for (int trial = 0; trial < 3; ++trial) {
                HomogeneousForm f = random_dual(ctx, 3, rng);
                if (f.is_zero()) continue;
                std::vector<std::int64_t> hf = hilbert_function(f);
                ApolarIdeal ideal = ApolarIdeal::compute(f);
                for (std::int32_t e = 0; e <= 3; ++e) {
                    const GradedSubspace& piece = ideal.piece(e);
                    CHECK(piece.dimension() == binomial(n + e - 1, e) - hf[static_cast<std::size_t>(e)]);
                    for (std::int64_t i = 0; i < piece.dimension(); ++i)
                        CHECK(contract_poly(piece.row_form(i), f).is_zero());
                }
            }
        }
    }
}

TEST_CASE("Hilbert function symmetry") {
    SplitMix64 rng(2718);
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(32003)}) {
        for (std::int32_t n = 2; n <= 6; n += 2) {
            ContextPtr ctx = simple_ctx(n, spec);
            for (std::int32_t d = 2; d <= 4; ++d) {
                HomogeneousForm f = random_dual(ctx, d, rng);
                if (f.is_zero()) continue;
                std::vector<std::int64_t> hf = hilbert_function(f);
                for (std::int32_t e = 0; e <= d; ++e)
                    CHECK(hf[static_cast<std::size_t>(e)] == hf[static_cast<std::size_t>(d - e)]);
            }
        }
    }
}

TEST_CASE("top-degree pieces saturate") {
    SplitMix64 rng(161);
    for (std::int32_t n = 2; n <= 4; ++n) {
        ContextPtr ctx = simple_ctx(n, FieldSpec::prime_field(5));
        HomogeneousForm f = random_dual(ctx, 3, rng);
        if (f.is_zero()) continue;
        // The pairing against f has rank exactly 1 in the top degree.
        CHECK(apolar_piece(f, 3).dimension() == binomial(n + 2, 3) - 1);
    }
}

TEST_CASE("ideal closure under multiplication by variables") {
    SplitMix64 rng(55);
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        ContextPtr ctx = simple_ctx(4, spec);
        HomogeneousForm f = random_dual(ctx, 3, rng);
        if (f.is_zero()) return;
        ApolarIdeal ideal = ApolarIdeal::compute(f);
        const Field& field = ctx->field();
        for (std::int32_t e = 0; e < 3; ++e) {
            const GradedSubspace& cur = ideal.piece(e);
            const GradedSubspace& next = ideal.piece(e + 1);
            for (std::int64_t i = 0; i < cur.dimension(); ++i) {
                HomogeneousForm g = cur.row_form(i);
                for (std::int32_t v = 0; v < 4; ++v) {
                    ExponentVector var;
                    var.e.assign(4, 0);
                    var.e[static_cast<std::size_t>(v)] = 1;
                    HomogeneousForm prod =
                        multiply(HomogeneousForm::monomial(ctx, Side::Poly, var, field.one()), g);
                    CHECK(next.basis.reduce(coordinates(prod, *next.indexer)).empty());
                }
            }
        }
    }
}

TEST_CASE("minimal generators of the pure power ideal in two variables") {
    ContextPtr ctx = simple_ctx(2);
    HomogeneousForm f = pure_power(ctx, 3);
    ApolarIdeal ideal = ApolarIdeal::compute(f);

    GradedSubspace g1 = minimal_generators_by_degree(ideal, 1);
    CHECK(g1.dimension() == 1);
    CHECK(g1.basis.pivot_cols == std::vector<std::int32_t>{1});  // the second variable

    for (std::int32_t e : {2, 3}) CHECK(minimal_generators_by_degree(ideal, e).dimension() == 0);

    // Degree 4: the whole space modulo S_1 * I_3 leaves exactly the pure
    // fourth power of the first variable.
    GradedSubspace g4 = minimal_generators_by_degree(ideal, 4);
    CHECK(g4.dimension() == 1);
    REQUIRE(g4.basis.matrix.rows.size() == 1);
    CHECK(g4.basis.matrix.rows[0].entries.size() == 1);
    CHECK(g4.basis.matrix.rows[0].entries[0].first == 0);  // x1^4 coordinate
}

TEST_CASE("family annihilators are generated by monomials and binomials") {
    HomogeneousForm F = family_cubic(9, FieldSpec::rationals());
    ApolarIdeal ideal = ApolarIdeal::compute(F);
    GradedSubspace g2 = minimal_generators_by_degree(ideal, 2);
    CHECK(g2.dimension() == 36);  // all of I_2 since I_1 = 0
    for (const auto& row : g2.basis.matrix.rows) CHECK(row.entries.size() <= 2);
    // The quadrics already generate everything above: S_1 * I_2 = I_3 and
    // S_1 * I_3 = I_4 for this family.
    CHECK(minimal_generators_by_degree(ideal, 3).dimension() == 0);
    CHECK(minimal_generators_by_degree(ideal, 4).dimension() == 0);
}

TEST_CASE("contraction matrix shapes") {
    HomogeneousForm F = family_cubic(9, FieldSpec::rationals());
    SparseMatrix m3 = contraction_matrix(F, 3);
    CHECK(m3.nrows() == 1);
    CHECK(m3.ncols == binomial(11, 3));
    SparseMatrix m1 = contraction_matrix(F, 1);
    CHECK(m1.nrows() == binomial(10, 2));
    CHECK(m1.ncols == 9);
    CHECK_THROWS_AS(contraction_matrix(F, 4), std::invalid_argument);
}
