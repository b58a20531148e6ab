#include "apolar/field.hpp"

#include <array>

#include "apolar/util.hpp"

namespace apolar {

namespace {

constexpr std::uint64_t kPrimeBound = 1ULL << 61;

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::invalid_argument("invmod: zero has no inverse");
    // Extended Euclid on signed 128-bit accumulators.
    __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a % p);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("invmod: argument not invertible");
    if (t0 < 0) t0 += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t0);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with this base set.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= kPrimeBound)
        throw InputError("prime field characteristic must be below 2^61, got " +
                         std::to_string(p));
    if (!is_prime_u64(p))
        throw InputError("not a prime: " + std::to_string(p));
    return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty()) throw InputError("missing characteristic in field '" + text + "'");
        std::uint64_t p = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw InputError("bad field descriptor '" + text + "'");
            if (p > (kPrimeBound / 10))
                throw InputError("prime field characteristic must be below 2^61");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return prime_field(p);
    }
    throw InputError("bad field descriptor '" + text + "' (expected 'q' or 'fp:<p>')");
}

std::string FieldSpec::str() const {
    return kind == FieldKind::Rationals ? "q" : "fp:" + std::to_string(p);
}

std::string FieldSpec::display() const {
    return kind == FieldKind::Rationals ? "Q" : "F_" + std::to_string(p);
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::PrimeField) {
        // Re-validate so a hand-built FieldSpec cannot smuggle in a composite.
        if (spec_.p >= kPrimeBound || !is_prime_u64(spec_.p))
            throw InputError("invalid prime field characteristic " + std::to_string(spec_.p));
    }
}

Scalar Field::from_int(std::int64_t v) const {
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = mpq_class(static_cast<long>(v));
    } else {
        std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
        if (r < 0) r += static_cast<std::int64_t>(spec_.p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

bool Field::is_zero(const Scalar& a) const {
    return spec_.kind == FieldKind::Rationals ? a.rat_ == 0 : a.res_ == 0;
}

bool Field::is_one(const Scalar& a) const {
    return spec_.kind == FieldKind::Rationals ? a.rat_ == 1 : a.res_ == 1 % spec_.p;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    return spec_.kind == FieldKind::Rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = a.rat_ + b.rat_;
    } else {
        std::uint64_t r = a.res_ + b.res_;  // p < 2^61, no overflow
        if (r >= spec_.p) r -= spec_.p;
        s.res_ = r;
    }
    return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = a.rat_ - b.rat_;
    } else {
        s.res_ = a.res_ >= b.res_ ? a.res_ - b.res_ : a.res_ + spec_.p - b.res_;
    }
    return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = a.rat_ * b.rat_;
    } else {
        s.res_ = mulmod(a.res_, b.res_, spec_.p);
    }
    return s;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) throw std::invalid_argument("division by zero scalar");
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = a.rat_ / b.rat_;
    } else {
        s.res_ = mulmod(a.res_, invmod(b.res_, spec_.p), spec_.p);
    }
    return s;
}

Scalar Field::neg(const Scalar& a) const {
    Scalar s;
    if (spec_.kind == FieldKind::Rationals) {
        s.rat_ = -a.rat_;
    } else {
        s.res_ = a.res_ == 0 ? 0 : spec_.p - a.res_;
    }
    return s;
}

Scalar Field::inv(const Scalar& a) const { return div(one(), a); }

std::string Field::str(const Scalar& a) const {
    if (spec_.kind == FieldKind::Rationals) return a.rat_.get_str();
    return std::to_string(a.res_);
}

bool Field::is_integer(const Scalar& a) const {
    if (spec_.kind == FieldKind::PrimeField) return true;
    return a.rat_.get_den() == 1;
}

std::uint64_t Field::residue(const Scalar& a) const {
    if (spec_.kind != FieldKind::PrimeField)
        throw std::logic_error("residue() on a rational scalar");
    return a.res_;
}

const mpq_class& Field::rational(const Scalar& a) const {
    if (spec_.kind != FieldKind::Rationals)
        throw std::logic_error("rational() on a prime-field scalar");
    return a.rat_;
}

Scalar Field::from_residue(std::uint64_t r) const {
    if (spec_.kind != FieldKind::PrimeField)
        throw std::logic_error("from_residue() on the rationals");
    Scalar s;
    s.res_ = r % spec_.p;
    return s;
}

Scalar Field::from_rational(mpq_class q) const {
    if (spec_.kind != FieldKind::Rationals)
        throw std::logic_error("from_rational() on a prime field");
    q.canonicalize();
    Scalar s;
    s.rat_ = std::move(q);
    return s;
}

}  // namespace apolar
