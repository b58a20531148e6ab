#include "apolar/families.hpp"

#include "apolar/util.hpp"

namespace apolar {

namespace {

// Variable slots under the family convention (0-based block positions).
struct Slots {
    std::int32_t m;

    std::int32_t a(std::int32_t i) const { return wrap(i); }
    std::int32_t b(std::int32_t i) const { return m + wrap(i); }
    std::int32_t c(std::int32_t i) const { return 2 * m + wrap(i); }
    std::int32_t d() const { return 3 * m; }
    std::int32_t e() const { return 3 * m + 1; }

    // 1-based cyclic index into [0, m).
    std::int32_t wrap(std::int32_t i) const {
        std::int32_t r = (i - 1) % m;
        if (r < 0) r += m;
        return r;
    }
};

ExponentVector mono(std::int32_t n, std::initializer_list<std::int32_t> vars) {
    ExponentVector ev;
    ev.e.assign(static_cast<std::size_t>(n), 0);
    for (std::int32_t v : vars) ev.e[static_cast<std::size_t>(v)] += 1;
    return ev;
}

}  // namespace

bool family_supported(std::int32_t n) { return n == 6 || n >= 8; }

FamilyDescriptor family_descriptor(std::int32_t n) {
    if (!family_supported(n))
        throw InputError("no family polynomial for n = " + std::to_string(n) +
                         " (supported: n = 6 and n >= 8)");
    if (n == 6) return FamilyDescriptor{6, FamilyKind::SpecialN6, 2};
    if (n == 8) return FamilyDescriptor{8, FamilyKind::SpecialN8, 2};
    switch (n % 3) {
        case 0: return FamilyDescriptor{n, FamilyKind::ThreeM, n / 3};
        case 1: return FamilyDescriptor{n, FamilyKind::ThreeMPlus1, (n - 1) / 3};
        default: return FamilyDescriptor{n, FamilyKind::ThreeMPlus2, (n - 2) / 3};
    }
}

HomogeneousForm family_cubic(std::int32_t n, const FieldSpec& field) {
    FamilyDescriptor desc = family_descriptor(n);
    ContextPtr ctx = RingContext::make(n, field);
    const Scalar one = ctx->field().one();
    HomogeneousForm f(ctx, 3, Side::Dual);
    Slots s{desc.m};

    if (desc.kind == FamilyKind::SpecialN6 || desc.kind == FamilyKind::SpecialN8) {
        for (std::int32_t i = 1; i <= 2; ++i)
            f.add_term(mono(n, {s.a(i), s.b(i), s.c(i)}), one);
        f.add_term(mono(n, {s.a(1), s.a(2), s.a(2)}), one);
        f.add_term(mono(n, {s.b(1), s.b(2), s.b(2)}), one);
        f.add_term(mono(n, {s.c(1), s.c(2), s.c(2)}), one);
        if (desc.kind == FamilyKind::SpecialN6) {
            f.add_term(mono(n, {s.a(1), s.a(1), s.a(1)}), one);
            f.add_term(mono(n, {s.b(1), s.b(1), s.b(1)}), one);
            f.add_term(mono(n, {s.c(1), s.c(1), s.c(1)}), one);
        } else {
            f.add_term(mono(n, {s.a(1), s.d(), s.e()}), one);
            f.add_term(mono(n, {s.b(1), s.b(1), s.d()}), one);
            f.add_term(mono(n, {s.c(1), s.c(1), s.e()}), one);
        }
        return f;
    }

    for (std::int32_t i = 1; i <= desc.m; ++i) {
        f.add_term(mono(n, {s.a(i), s.b(i), s.c(i)}), one);
        f.add_term(mono(n, {s.a(i), s.a(i + 1), s.a(i + 1)}), one);
        f.add_term(mono(n, {s.b(i), s.b(i + 1), s.b(i + 1)}), one);
        f.add_term(mono(n, {s.c(i), s.c(i + 1), s.c(i + 1)}), one);
        if (desc.kind == FamilyKind::ThreeMPlus1 || desc.kind == FamilyKind::ThreeMPlus2)
            f.add_term(mono(n, {s.a(i), s.b(i + 1), s.d()}), one);
        if (desc.kind == FamilyKind::ThreeMPlus2)
            f.add_term(mono(n, {s.b(i), s.c(i + 1), s.e()}), one);
    }
    return f;
}

HomogeneousForm random_cubic(std::int32_t n, const FieldSpec& field, std::uint64_t seed) {
    if (n < 1) throw InputError("random cubic needs n >= 1");
    ContextPtr ctx = RingContext::make(n, field);
    const Field& f = ctx->field();
    MonomialIndexer idx(ctx, 3);
    SplitMix64 rng(seed);
    HomogeneousForm out(ctx, 3, Side::Dual);
    for (std::int64_t i = 0; i < idx.size(); ++i) {
        Scalar c;
        if (field.kind == FieldKind::PrimeField) {
            c = f.from_residue(rng.below(field.p));
        } else {
            c = f.from_int(static_cast<std::int64_t>(rng.below(201)) - 100);
        }
        out.add_term(idx.at(i), c);
    }
    return out;
}

std::int32_t variable_index(const std::string& name, const FamilyDescriptor& desc) {
    Slots s{desc.m};
    bool has_d = desc.kind == FamilyKind::ThreeMPlus1 || desc.kind == FamilyKind::ThreeMPlus2 ||
                 desc.kind == FamilyKind::SpecialN8;
    bool has_e = desc.kind == FamilyKind::ThreeMPlus2 || desc.kind == FamilyKind::SpecialN8;
    if (name == "d" && has_d) return s.d();
    if (name == "e" && has_e) return s.e();
    if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'b' || name[0] == 'c')) {
        std::int32_t i = 0;
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (name[k] < '0' || name[k] > '9') i = -1;
            if (i < 0) break;
            i = i * 10 + (name[k] - '0');
        }
        if (i >= 1 && i <= desc.m) {
            if (name[0] == 'a') return s.a(i);
            if (name[0] == 'b') return s.b(i);
            return s.c(i);
        }
    }
    throw InputError("variable '" + name + "' does not exist for n = " + std::to_string(desc.n));
}

std::vector<HomogeneousForm> auxiliary_square_generators(const FamilyDescriptor& desc,
                                                         const FieldSpec& field) {
    std::vector<HomogeneousForm> out;
    if (desc.kind == FamilyKind::SpecialN6 || desc.kind == FamilyKind::SpecialN8) return out;
    const std::int32_t n = desc.n;
    ContextPtr ctx = RingContext::make(n, field);
    const Scalar one = ctx->field().one();
    Slots s{desc.m};
    for (std::int32_t i = 1; i <= desc.m; ++i) {
        out.push_back(HomogeneousForm::monomial(
            ctx, Side::Poly, mono(n, {s.a(i), s.a(i + 1), s.a(i + 2), s.a(i + 2)}), one));
        out.push_back(HomogeneousForm::monomial(
            ctx, Side::Poly, mono(n, {s.b(i), s.b(i + 1), s.b(i + 2), s.b(i + 2)}), one));
        out.push_back(HomogeneousForm::monomial(
            ctx, Side::Poly, mono(n, {s.c(i), s.c(i + 1), s.c(i + 2), s.c(i + 2)}), one));
    }
    if (desc.kind == FamilyKind::ThreeMPlus1 || desc.kind == FamilyKind::ThreeMPlus2)
        out.push_back(HomogeneousForm::monomial(
            ctx, Side::Poly, mono(n, {s.a(1), s.b(1), s.c(1), s.d()}), one));
    if (desc.kind == FamilyKind::ThreeMPlus2)
        out.push_back(HomogeneousForm::monomial(
            ctx, Side::Poly, mono(n, {s.a(1), s.b(1), s.c(1), s.e()}), one));
    return out;
}

std::string macaulay2_script(std::int32_t n, const FieldSpec& field) {
    FamilyDescriptor desc = family_descriptor(n);
    std::string kk = field.kind == FieldKind::Rationals
                         ? "kk = QQ;"
                         : "kk = ZZ/" + std::to_string(field.p) + ";";
    std::string s = kk + "\n";
    s += "n = " + std::to_string(n) + ";\n";
    switch (desc.kind) {
        case FamilyKind::SpecialN6:
            s += "S = kk[a_1,a_2,b_1,b_2,c_1,c_2];\n"
                 "F = a_1*b_1*c_1 + a_2*b_2*c_2 + a_1*a_2^2 + b_1*b_2^2 +\n"
                 "    c_1*c_2^2 + a_1^3 + b_1^3 + c_1^3;\n";
            break;
        case FamilyKind::SpecialN8:
            s += "S = kk[a_1,a_2,b_1,b_2,c_1,c_2,d,e];\n"
                 "F = a_1*b_1*c_1 + a_2*b_2*c_2 + a_1*a_2^2 + b_1*b_2^2 +\n"
                 "    c_1*c_2^2 + a_1*d*e + b_1^2*d + c_1^2*e;\n";
            break;
        case FamilyKind::ThreeM:
            s += "m = n//3;\n"
                 "S = kk[a_1..a_m,b_1..b_m,c_1..c_m];\n"
                 "F = 0;\n"
                 "for i in 1..m-1 do F = F + a_i*b_i*c_i + a_i*a_(i+1)^2 +\n"
                 "    b_i*b_(i+1)^2 + c_i*c_(i+1)^2;\n"
                 "F = F + a_m*b_m*c_m + a_m*a_1^2 + b_m*b_1^2 + c_m*c_1^2;\n";
            break;
        case FamilyKind::ThreeMPlus1:
            s += "m = (n-1)//3;\n"
                 "S = kk[a_1..a_m,b_1..b_m,c_1..c_m,d];\n"
                 "F = 0;\n"
                 "for i in 1..m-1 do F = F + a_i*b_i*c_i + a_i*a_(i+1)^2 +\n"
                 "    b_i*b_(i+1)^2 + c_i*c_(i+1)^2 + a_i*b_(i+1)*d;\n"
                 "F = F + a_m*b_m*c_m + a_m*a_1^2 + b_m*b_1^2 + c_m*c_1^2 +\n"
                 "    a_m*b_1*d;\n";
            break;
        case FamilyKind::ThreeMPlus2:
            s += "m = (n-2)//3;\n"
                 "S = kk[a_1..a_m,b_1..b_m,c_1..c_m,d,e];\n"
                 "F = 0;\n"
                 "for i in 1..m-1 do F = F + a_i*b_i*c_i + a_i*a_(i+1)^2 +\n"
                 "    b_i*b_(i+1)^2 + c_i*c_(i+1)^2 + a_i*b_(i+1)*d +\n"
                 "    b_i*c_(i+1)*e;\n"
                 "F = F + a_m*b_m*c_m + a_m*a_1^2 + b_m*b_1^2 + c_m*c_1^2 +\n"
                 "    a_m*b_1*d + b_m*c_1*e;\n";
            break;
    }
    s += "I = ideal fromDual(matrix{{F}}, DividedPowers => true);\n"
         "if (hilbertFunction(0,S/I) == 1 and\n"
         "    hilbertFunction(1,S/I) == n and\n"
         "    hilbertFunction(4,S/I^2) == n and\n"
         "    hilbertFunction(5,S/I^2) == 0)\n"
         "    then print True else print False;\n";
    return s;
}

}  // namespace apolar
