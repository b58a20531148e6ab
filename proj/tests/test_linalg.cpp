#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "apolar/linalg.hpp"
#include "apolar/util.hpp"

using namespace apolar;

namespace {

SparseRow make_row(const Field& f, std::initializer_list<std::pair<int, std::int64_t>> entries) {
    SparseRow row;
    for (auto [c, v] : entries) {
        Scalar s = f.from_int(v);
        if (!f.is_zero(s)) row.entries.emplace_back(c, s);
    }
    return row;
}

SparseMatrix random_matrix(const Field& f, SplitMix64& rng, std::int32_t nrows,
                           std::int32_t ncols, int fill_percent) {
    SparseMatrix m(f, ncols);
    for (std::int32_t r = 0; r < nrows; ++r) {
        SparseRow row;
        for (std::int32_t c = 0; c < ncols; ++c) {
            if (rng.below(100) < static_cast<std::uint64_t>(fill_percent)) {
                Scalar v = f.from_int(static_cast<std::int64_t>(rng.below(19)) - 9);
                if (!f.is_zero(v)) row.entries.emplace_back(c, v);
            }
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

bool basis_equal(const RowBasis& a, const RowBasis& b) {
    if (a.pivot_cols != b.pivot_cols) return false;
    if (a.matrix.rows.size() != b.matrix.rows.size()) return false;
    const Field& f = a.matrix.field;
    for (std::size_t i = 0; i < a.matrix.rows.size(); ++i) {
        const auto& ra = a.matrix.rows[i].entries;
        const auto& rb = b.matrix.rows[i].entries;
        if (ra.size() != rb.size()) return false;
        for (std::size_t k = 0; k < ra.size(); ++k)
            if (ra[k].first != rb[k].first || !f.equal(ra[k].second, rb[k].second)) return false;
    }
    return true;
}

void check_rref_invariants(const RowBasis& b) {
    const Field& f = b.matrix.field;
    REQUIRE(b.matrix.rows.size() == b.pivot_cols.size());
    for (std::size_t i = 0; i < b.pivot_cols.size(); ++i) {
        if (i > 0) CHECK(b.pivot_cols[i] > b.pivot_cols[i - 1]);
        const auto& row = b.matrix.rows[i].entries;
        REQUIRE(!row.empty());
        CHECK(row.front().first == b.pivot_cols[i]);
        CHECK(f.is_one(row.front().second));
        // Pivot columns vanish in every other row.
        for (std::size_t j = 0; j < b.matrix.rows.size(); ++j) {
            if (j == i) continue;
            for (const auto& [c, v] : b.matrix.rows[j].entries) CHECK(c != b.pivot_cols[i]);
        }
    }
}

// Multiplies the original rows by the certificate and checks bit-exact
// equality with v.
void check_certificate(const SparseMatrix& originals, const std::vector<Scalar>& cert,
                       const SparseRow& v) {
    const Field& f = originals.field;
    std::vector<Scalar> dense(static_cast<std::size_t>(originals.ncols), f.zero());
    REQUIRE(cert.size() == originals.rows.size());
    for (std::size_t r = 0; r < originals.rows.size(); ++r)
        for (const auto& [c, val] : originals.rows[r].entries)
            dense[static_cast<std::size_t>(c)] =
                f.add(dense[static_cast<std::size_t>(c)], f.mul(cert[r], val));
    std::vector<Scalar> target(static_cast<std::size_t>(originals.ncols), f.zero());
    for (const auto& [c, val] : v.entries) target[static_cast<std::size_t>(c)] = val;
    for (std::size_t c = 0; c < dense.size(); ++c) CHECK(f.equal(dense[c], target[c]));
}

}  // namespace

TEST_CASE("identity over F_2 reduces to itself") {
    Field f(FieldSpec::prime_field(2));
    SparseMatrix m(f, 3);
    for (int i = 0; i < 3; ++i) m.rows.push_back(make_row(f, {{i, 1}}));
    RowBasis b = row_reduce(m);
    CHECK(b.rank() == 3);
    CHECK(b.pivot_cols == std::vector<std::int32_t>{0, 1, 2});
    check_rref_invariants(b);
}

TEST_CASE("proportional rows over Q have rank 1") {
    Field f(FieldSpec::rationals());
    SparseMatrix m(f, 2);
    m.rows.push_back(make_row(f, {{0, 1}, {1, 2}}));
    m.rows.push_back(make_row(f, {{0, 2}, {1, 4}}));
    RowBasis b = row_reduce(m);
    CHECK(b.rank() == 1);
    CHECK(b.pivot_cols == std::vector<std::int32_t>{0});
    CHECK(f.str(b.matrix.rows[0].entries[1].second) == "2");
}

TEST_CASE("row_reduce is idempotent") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(3),
                           FieldSpec::prime_field(32003)}) {
        Field f(spec);
        SplitMix64 rng(42);
        for (int trial = 0; trial < 8; ++trial) {
            SparseMatrix m = random_matrix(f, rng, 12, 18, 25);
            RowBasis b = row_reduce(m);
            check_rref_invariants(b);
            RowBasis b2 = row_reduce(b.matrix);
            CHECK(basis_equal(b, b2));
        }
    }
}

TEST_CASE("kernel basics") {
    Field f(FieldSpec::rationals());
    SparseMatrix zero(f, 3);
    zero.rows.resize(2);
    CHECK(kernel(zero).rank() == 3);

    SparseMatrix identity(f, 4);
    for (int i = 0; i < 4; ++i) identity.rows.push_back(make_row(f, {{i, 1}}));
    CHECK(kernel(identity).rank() == 0);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                           FieldSpec::prime_field(32003)}) {
        Field f(spec);
        SplitMix64 rng(7);
        for (int trial = 0; trial < 6; ++trial) {
            SparseMatrix m = random_matrix(f, rng, 10, 14, 30);
            RowBasis r = row_reduce(m);
            RowBasis k = kernel(m);
            CHECK(r.rank() + k.rank() == m.ncols);
            check_rref_invariants(k);
            // Every kernel row pairs to zero against every matrix row.
            for (const auto& krow : k.matrix.rows) {
                for (const auto& mrow : m.rows) {
                    Scalar acc = f.zero();
                    std::size_t i = 0, j = 0;
                    while (i < krow.entries.size() && j < mrow.entries.size()) {
                        if (krow.entries[i].first == mrow.entries[j].first) {
                            acc = f.add(acc, f.mul(krow.entries[i].second, mrow.entries[j].second));
                            ++i; ++j;
                        } else if (krow.entries[i].first < mrow.entries[j].first) {
                            ++i;
                        } else {
                            ++j;
                        }
                    }
                    CHECK(f.is_zero(acc));
                }
            }
        }
    }
}

TEST_CASE("in_span_with_certificate") {
    Field f(FieldSpec::rationals());
    SparseMatrix m(f, 4);
    m.rows.push_back(make_row(f, {{0, 1}, {2, 3}}));
    m.rows.push_back(make_row(f, {{1, 2}, {3, 1}}));
    RowBasis b = row_reduce(m);

    SUBCASE("sum of the two rows") {
        SparseRow v = make_row(f, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
        auto cert = in_span_with_certificate(v, b, m);
        REQUIRE(cert.has_value());
        CHECK(f.str((*cert)[0]) == "1");
        CHECK(f.str((*cert)[1]) == "1");
        check_certificate(m, *cert, v);
    }
    SUBCASE("outside the span") {
        SparseRow v = make_row(f, {{0, 1}, {1, 1}});
        CHECK_FALSE(in_span_with_certificate(v, b, m).has_value());
    }
    SUBCASE("dimension mismatch rejected") {
        SparseMatrix wide(f, 7);
        wide.rows.push_back(make_row(f, {{5, 1}}));
        CHECK_THROWS_AS(in_span_with_certificate(make_row(f, {{0, 1}}), b, wide),
                        std::invalid_argument);
    }
}

TEST_CASE("certificates re-expand exactly on random instances") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(32003)}) {
        Field f(spec);
        SplitMix64 rng(99);
        for (int trial = 0; trial < 5; ++trial) {
            SparseMatrix m = random_matrix(f, rng, 8, 12, 35);
            RowBasis b = row_reduce(m);
            // Build v as a known combination of the rows.
            std::vector<Scalar> coeffs;
            std::vector<Scalar> dense(12, f.zero());
            for (const auto& row : m.rows) {
                Scalar c = f.from_int(static_cast<std::int64_t>(rng.below(9)) - 4);
                coeffs.push_back(c);
                for (const auto& [col, val] : row.entries)
                    dense[static_cast<std::size_t>(col)] =
                        f.add(dense[static_cast<std::size_t>(col)], f.mul(c, val));
            }
            SparseRow v;
            for (std::size_t c = 0; c < dense.size(); ++c)
                if (!f.is_zero(dense[c])) v.entries.emplace_back(static_cast<std::int32_t>(c), dense[c]);
            auto cert = in_span_with_certificate(v, b, m);
            REQUIRE(cert.has_value());
            check_certificate(m, *cert, v);
        }
    }
}

TEST_CASE("streaming span construction matches batch reduction") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                           FieldSpec::prime_field(32003)}) {
        Field f(spec);
        SplitMix64 rng(1234);
        for (int trial = 0; trial < 6; ++trial) {
            SparseMatrix m = random_matrix(f, rng, 15, 12, 30);
            RowBasis batch = row_reduce(m);
            SpanBuilder stream(f, m.ncols);
            for (const auto& row : m.rows) stream.insert(row);
            CHECK(stream.rank() == batch.rank());
            // The RREF snapshot of the streamed span is the same canonical basis.
            CHECK(basis_equal(stream.to_row_basis(), batch));
        }
    }
}

TEST_CASE("span builder express") {
    Field f(FieldSpec::prime_field(5));
    SpanBuilder sb(f, 6, /*track_certificates=*/true);
    sb.insert(make_row(f, {{0, 1}, {1, 1}}));
    sb.insert(make_row(f, {{1, 1}, {2, 1}}));
    sb.insert(make_row(f, {{0, 1}, {2, 4}}));  // dependent: row0 - row1 (mod 5)
    CHECK(sb.rank() == 2);
    CHECK(sb.inserted() == 3);

    auto cert = sb.express(make_row(f, {{0, 2}, {1, 3}, {2, 1}}));  // 2*row0 + row1
    REQUIRE(cert.has_value());
    SparseMatrix originals(f, 6);
    originals.rows.push_back(make_row(f, {{0, 1}, {1, 1}}));
    originals.rows.push_back(make_row(f, {{1, 1}, {2, 1}}));
    originals.rows.push_back(make_row(f, {{0, 1}, {2, 4}}));
    std::vector<Scalar> dense_cert(3, f.zero());
    for (auto& [i, c] : *cert) dense_cert[static_cast<std::size_t>(i)] = c;
    check_certificate(originals, dense_cert, make_row(f, {{0, 2}, {1, 3}, {2, 1}}));

    CHECK_FALSE(sb.express(make_row(f, {{5, 1}})).has_value());
    CHECK_FALSE(sb.saturated());
}

TEST_CASE("reduce returns canonical residues") {
    Field f(FieldSpec::rationals());
    SpanBuilder sb(f, 4);
    sb.insert(make_row(f, {{0, 1}, {1, 1}}));
    SparseRow res = sb.reduce(make_row(f, {{0, 1}, {2, 1}}));
    // Residue has no support on pivot columns.
    REQUIRE(res.entries.size() == 2);
    CHECK(res.entries[0].first == 1);
    CHECK(f.str(res.entries[0].second) == "-1");
    CHECK(res.entries[1].first == 2);
    CHECK(sb.reduce(make_row(f, {{0, 3}, {1, 3}})).empty());
}

TEST_CASE("malformed input rejected") {
    Field f(FieldSpec::rationals());
    SparseMatrix m(f, 3);
    SparseRow bad;
    bad.entries.emplace_back(2, f.one());
    bad.entries.emplace_back(1, f.one());  // out of order
    m.rows.push_back(bad);
    CHECK_THROWS_AS(row_reduce(m), std::invalid_argument);

    SparseMatrix m2(f, 3);
    SparseRow zero_entry;
    zero_entry.entries.emplace_back(0, f.zero());
    m2.rows.push_back(zero_entry);
    CHECK_THROWS_AS(row_reduce(m2), std::invalid_argument);

    SparseMatrix m3(f, 3);
    SparseRow out_of_range;
    out_of_range.entries.emplace_back(3, f.one());
    m3.rows.push_back(out_of_range);
    CHECK_THROWS_AS(row_reduce(m3), std::invalid_argument);
}

TEST_CASE("independent reductions are schedule independent") {
    Field f(FieldSpec::prime_field(32003));
    SplitMix64 rng(5);
    std::vector<SparseMatrix> matrices;
    for (int i = 0; i < 8; ++i) matrices.push_back(random_matrix(f, rng, 20, 16, 30));

    std::vector<RowBasis> sequential;
    for (const auto& m : matrices) sequential.push_back(row_reduce(m));

    std::vector<RowBasis> concurrent(matrices.size(), RowBasis{SparseMatrix(f, 0), {}});
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < matrices.size(); ++i)
        pool.emplace_back([&, i]() { concurrent[i] = row_reduce(matrices[i]); });
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < matrices.size(); ++i)
        CHECK(basis_equal(sequential[i], concurrent[i]));
}
