#pragma once

#include <cstdint>

#include "ldmds/errors.hpp"

namespace ldmds {

bool is_prime(std::uint64_t n);

// Smallest prime >= n.  n must be >= 2 and the result must stay below 2^31.
std::uint32_t smallest_prime_geq(std::uint32_t n);

class FieldElement;

// Prime field GF(q) on residues 0..q-1.  q is restricted to [2, 2^31) so
// that sums fit in uint32 and products fit in uint64 before reduction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t order() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    // Multiplicative inverse.  Throws DivisionByZeroError for a == 0.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Wraps a residue as an element of this field.  Throws InvalidParamsError
    // unless value < q.
    FieldElement element(std::uint32_t value) const;
    // Reduces an arbitrary signed integer into the field.
    FieldElement from_int(std::int64_t value) const;

    bool operator==(const PrimeField& other) const { return q_ == other.q_; }
    bool operator!=(const PrimeField& other) const { return q_ != other.q_; }

private:
    std::uint32_t q_;
};

// Value together with the modulus it lives under.  Arithmetic between
// elements of different fields throws FieldMismatchError.
class FieldElement {
public:
    FieldElement(std::uint32_t value, std::uint32_t modulus);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }
    PrimeField field() const { return PrimeField(modulus_); }

    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

private:
    void require_same_field(const FieldElement& rhs) const;

    std::uint32_t value_;
    std::uint32_t modulus_;
};

} // namespace ldmds
