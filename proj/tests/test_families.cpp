#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apolar/families.hpp"
#include "apolar/util.hpp"

using namespace apolar;

namespace {

// Applies a variable permutation to every exponent vector of a form.
HomogeneousForm permute_variables(const HomogeneousForm& f,
                                  const std::vector<std::int32_t>& perm) {
    HomogeneousForm out(f.context(), f.degree(), f.side());
    for (const auto& [ev, c] : f.terms()) {
        ExponentVector moved;
        moved.e.assign(ev.e.size(), 0);
        for (std::size_t i = 0; i < ev.e.size(); ++i)
            moved.e[static_cast<std::size_t>(perm[i])] = ev.e[i];
        out.add_term(moved, c);
    }
    return out;
}

}  // namespace

TEST_CASE("descriptors") {
    CHECK(family_descriptor(6).kind == FamilyKind::SpecialN6);
    CHECK(family_descriptor(8).kind == FamilyKind::SpecialN8);
    CHECK(family_descriptor(9).kind == FamilyKind::ThreeM);
    CHECK(family_descriptor(9).m == 3);
    CHECK(family_descriptor(10).kind == FamilyKind::ThreeMPlus1);
    CHECK(family_descriptor(10).m == 3);
    CHECK(family_descriptor(11).kind == FamilyKind::ThreeMPlus2);
    CHECK(family_descriptor(11).m == 3);
    CHECK(family_descriptor(18).m == 6);
    for (std::int32_t n : {1, 2, 3, 4, 5, 7}) {
        CHECK_FALSE(family_supported(n));
        CHECK_THROWS_AS(family_descriptor(n), InputError);
        CHECK_THROWS_AS(family_cubic(n, FieldSpec::rationals()), InputError);
    }
}

TEST_CASE("term counts") {
    auto count = [](std::int32_t n) {
        return family_cubic(n, FieldSpec::rationals()).support_size();
    };
    CHECK(count(6) == 8);
    CHECK(count(8) == 8);
    CHECK(count(9) == 12);    // 4m, m=3
    CHECK(count(10) == 15);   // 5m
    CHECK(count(11) == 18);   // 6m
    CHECK(count(12) == 16);
    CHECK(count(13) == 20);
    CHECK(count(14) == 24);
    CHECK(count(18) == 24);
    CHECK(count(19) == 30);
    CHECK(count(20) == 36);
}

TEST_CASE("exact small polynomials") {
    FieldSpec q = FieldSpec::rationals();
    HomogeneousForm f6 = family_cubic(6, q);
    HomogeneousForm expected6 = parse_form(
        f6.context(), Side::Dual,
        "a1*b1*c1 + a2*b2*c2 + a1*a2^2 + b1*b2^2 + c1*c2^2 + a1^3 + b1^3 + c1^3");
    CHECK(f6.equals(expected6));

    HomogeneousForm f8 = family_cubic(8, q);
    HomogeneousForm expected8 = parse_form(
        f8.context(), Side::Dual,
        "a1*b1*c1 + a2*b2*c2 + a1*a2^2 + b1*b2^2 + c1*c2^2 + a1*d*e + b1^2*d + c1^2*e");
    CHECK(f8.equals(expected8));
}

TEST_CASE("wraparound and extra-variable terms") {
    FieldSpec q = FieldSpec::rationals();
    HomogeneousForm f9 = family_cubic(9, q);
    ContextPtr c9 = f9.context();
    for (const char* t : {"a3*a1^2", "b3*b1^2", "c3*c1^2", "a1*a2^2"}) {
        HomogeneousForm mono = parse_form(c9, Side::Dual, t);
        CHECK(c9->field().is_one(f9.coefficient(mono.terms().begin()->first)));
    }

    HomogeneousForm f10 = family_cubic(10, q);
    ContextPtr c10 = f10.context();
    for (const char* t : {"a1*b2*d", "a2*b3*d", "a3*b1*d"}) {
        HomogeneousForm mono = parse_form(c10, Side::Dual, t);
        CHECK(c10->field().is_one(f10.coefficient(mono.terms().begin()->first)));
    }

    HomogeneousForm f11 = family_cubic(11, q);
    ContextPtr c11 = f11.context();
    for (const char* t : {"a1*b2*d", "b1*c2*e", "b3*c1*e"}) {
        HomogeneousForm mono = parse_form(c11, Side::Dual, t);
        CHECK(c11->field().is_one(f11.coefficient(mono.terms().begin()->first)));
    }
}

TEST_CASE("every coefficient is one in every supported characteristic") {
    for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                           FieldSpec::prime_field(3), FieldSpec::prime_field(32003)}) {
        for (std::int32_t n : {6, 8, 9, 12, 13, 14}) {
            HomogeneousForm f = family_cubic(n, spec);
            const Field& field = f.context()->field();
            for (const auto& [ev, c] : f.terms()) CHECK(field.is_one(c));
        }
    }
}

TEST_CASE("cyclic index shift fixes the families with n >= 9") {
    for (std::int32_t n : {9, 10, 11, 12, 14}) {
        HomogeneousForm f = family_cubic(n, FieldSpec::rationals());
        FamilyDescriptor desc = family_descriptor(n);
        std::int32_t m = desc.m;
        std::vector<std::int32_t> shift(static_cast<std::size_t>(n));
        for (std::int32_t block = 0; block < 3; ++block)
            for (std::int32_t i = 0; i < m; ++i)
                shift[static_cast<std::size_t>(block * m + i)] = block * m + (i + 1) % m;
        for (std::int32_t extra = 3 * m; extra < n; ++extra)
            shift[static_cast<std::size_t>(extra)] = extra;
        CHECK(permute_variables(f, shift).equals(f));
    }
}

TEST_CASE("block rotation a->b->c->a fixes the 3m family") {
    for (std::int32_t n : {9, 12}) {
        HomogeneousForm f = family_cubic(n, FieldSpec::rationals());
        std::int32_t m = family_descriptor(n).m;
        std::vector<std::int32_t> rot(static_cast<std::size_t>(n));
        for (std::int32_t i = 0; i < m; ++i) {
            rot[static_cast<std::size_t>(i)] = m + i;          // a_i -> b_i
            rot[static_cast<std::size_t>(m + i)] = 2 * m + i;  // b_i -> c_i
            rot[static_cast<std::size_t>(2 * m + i)] = i;      // c_i -> a_i
        }
        CHECK(permute_variables(f, rot).equals(f));
    }
}

TEST_CASE("variable_index follows the naming convention") {
    CHECK(variable_index("b2", family_descriptor(9)) == 4);
    CHECK(variable_index("d", family_descriptor(10)) == 9);
    CHECK(variable_index("e", family_descriptor(11)) == 10);
    CHECK(variable_index("a1", family_descriptor(18)) == 0);
    CHECK(variable_index("c6", family_descriptor(18)) == 17);
    CHECK(variable_index("d", family_descriptor(8)) == 6);
    CHECK(variable_index("e", family_descriptor(8)) == 7);
    CHECK_THROWS_AS(variable_index("d", family_descriptor(9)), InputError);
    CHECK_THROWS_AS(variable_index("e", family_descriptor(10)), InputError);
    CHECK_THROWS_AS(variable_index("a3", family_descriptor(6)), InputError);
    CHECK_THROWS_AS(variable_index("q1", family_descriptor(9)), InputError);

    // The convention agrees with the ring context name table.
    for (std::int32_t n : {6, 8, 9, 10, 11, 18}) {
        ContextPtr ctx = RingContext::make(n, FieldSpec::rationals());
        FamilyDescriptor desc = family_descriptor(n);
        for (std::int32_t i = 0; i < n; ++i)
            CHECK(variable_index(ctx->name(i), desc) == i);
    }
}

TEST_CASE("random cubic sampling") {
    FieldSpec fp = FieldSpec::prime_field(32003);
    HomogeneousForm a = random_cubic(10, fp, 42);
    HomogeneousForm b = random_cubic(10, fp, 42);
    HomogeneousForm c = random_cubic(10, fp, 43);
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(c));
    CHECK(a.degree() == 3);

    // Rational coefficients honor the documented bound.
    HomogeneousForm q = random_cubic(5, FieldSpec::rationals(), 7);
    const Field& field = q.context()->field();
    for (const auto& [ev, coeff] : q.terms()) {
        const mpq_class& v = field.rational(coeff);
        CHECK(v.get_den() == 1);
        CHECK(v <= 100);
        CHECK(v >= -100);
    }

    // n = 1 yields a multiple of the unique cubic dual monomial.
    HomogeneousForm tiny = random_cubic(1, fp, 3);
    CHECK(tiny.support_size() <= 1);
}

TEST_CASE("family text round-trips through the grammar") {
    for (std::int32_t n : {6, 8, 9, 10, 11, 12}) {
        HomogeneousForm f = family_cubic(n, FieldSpec::rationals());
        CHECK(parse_form(f.context(), Side::Dual, format_form(f)).equals(f));
    }
}

TEST_CASE("auxiliary square generators") {
    FieldSpec q = FieldSpec::rationals();
    auto gens9 = auxiliary_square_generators(family_descriptor(9), q);
    CHECK(gens9.size() == 9);  // 3m monomials
    for (const auto& g : gens9) {
        CHECK(g.degree() == 4);
        CHECK(g.support_size() == 1);
    }
    auto gens10 = auxiliary_square_generators(family_descriptor(10), q);
    CHECK(gens10.size() == 10);  // 3m + the d-term
    auto gens11 = auxiliary_square_generators(family_descriptor(11), q);
    CHECK(gens11.size() == 11);  // 3m + d-term + e-term
    CHECK(auxiliary_square_generators(family_descriptor(6), q).empty());
    CHECK(auxiliary_square_generators(family_descriptor(8), q).empty());

    // Spot-check the wrap of the last index: i=m gives a_m*a_1*a_2^2.
    ContextPtr ctx = gens9.front().context();
    HomogeneousForm wrap = parse_form(ctx, Side::Poly, "a3*a1*a2^2");
    bool found = false;
    for (const auto& g : gens9) found = found || g.equals(wrap);
    CHECK(found);
}

TEST_CASE("macaulay2 export") {
    std::string s6 = macaulay2_script(6, FieldSpec::rationals());
    CHECK(s6.find("kk = QQ;") != std::string::npos);
    CHECK(s6.find("a_1^3 + b_1^3 + c_1^3") != std::string::npos);
    CHECK(s6.find("fromDual(matrix{{F}}, DividedPowers => true)") != std::string::npos);
    CHECK(s6.find("hilbertFunction(5,S/I^2) == 0") != std::string::npos);

    std::string s12 = macaulay2_script(12, FieldSpec::prime_field(3));
    CHECK(s12.find("kk = ZZ/3;") != std::string::npos);
    CHECK(s12.find("m = n//3;") != std::string::npos);

    std::string s13 = macaulay2_script(13, FieldSpec::prime_field(2));
    CHECK(s13.find("m = (n-1)//3;") != std::string::npos);
    CHECK(s13.find("a_m*b_1*d") != std::string::npos);

    std::string s14 = macaulay2_script(14, FieldSpec::rationals());
    CHECK(s14.find("m = (n-2)//3;") != std::string::npos);
    CHECK(s14.find("b_m*c_1*e") != std::string::npos);

    CHECK_THROWS_AS(macaulay2_script(7, FieldSpec::rationals()), InputError);
}
