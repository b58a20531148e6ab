#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace apolar {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

// Which exact field the computation runs over: the rationals, or a prime
// field F_p with p a prime below 2^61 (so products fit in 128-bit
// intermediates and no multi-precision arithmetic is needed).
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;  // 0 for the rationals

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);  // validates primality and the 2^61 bound

    // Accepts "q" or "fp:<p>"; throws InputError otherwise.
    static FieldSpec parse(const std::string& text);

    std::string str() const;      // "q", "fp:32003" — the machine form
    std::string display() const;  // "Q", "F_32003" — for human-readable output

    std::uint64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // a nonzero mod prime p

// One exact field element. Rationals live in rat_ (always canonical: lowest
// terms, positive denominator — mpq arithmetic maintains this); prime-field
// elements live in res_ as the canonical residue in [0, p). Which half is
// live is decided by the Field the scalar belongs to; all arithmetic and
// inspection go through Field.
class Scalar {
public:
    Scalar() = default;  // zero in either field

private:
    friend class Field;
    mpq_class rat_{0};
    std::uint64_t res_ = 0;
};

class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    FieldKind kind() const { return spec_.kind; }

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t v) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;  // b nonzero
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // a nonzero

    std::string str(const Scalar& a) const;  // "7", "-3/5", residue decimal

    // True when the element is an integer of the field ("2" over Q, every
    // residue over F_p); such elements are the only ones the polynomial text
    // grammar can carry.
    bool is_integer(const Scalar& a) const;

    // Raw representation access for the elimination engines.
    std::uint64_t residue(const Scalar& a) const;
    const mpq_class& rational(const Scalar& a) const;
    Scalar from_residue(std::uint64_t r) const;
    Scalar from_rational(mpq_class q) const;  // canonicalizes

    bool operator==(const Field& other) const { return spec_ == other.spec_; }

private:
    FieldSpec spec_;
};

}  // namespace apolar

#endif
