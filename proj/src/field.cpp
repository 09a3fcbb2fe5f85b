#include "ldmds/field.hpp"

#include <string>

namespace ldmds {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t smallest_prime_geq(std::uint32_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n;
    while (!is_prime(c)) ++c;
    if (c >= (1ull << 31)) {
        throw InvalidParamsError("no admissible prime >= " + std::to_string(n) +
                                 " below 2^31");
    }
    return static_cast<std::uint32_t>(c);
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q >= (1u << 31) || !is_prime(q)) {
        throw InvalidParamsError("field order " + std::to_string(q) +
                                 " is not a prime in [2, 2^31)");
    }
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + q_ - b;
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % q_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const {
    return a == 0 ? 0 : q_ - a;
}

namespace {

// Extended Euclid on (a, q); q prime guarantees gcd 1.
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t q) {
    if (a == 0) {
        throw DivisionByZeroError("inverse of 0 in GF(" + std::to_string(q) + ")");
    }
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
}

} // namespace

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    return mod_inv(a, q_);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t base = a % q_;
    std::uint32_t acc = 1 % q_;
    while (e != 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement PrimeField::element(std::uint32_t value) const {
    if (value >= q_) {
        throw InvalidParamsError("residue " + std::to_string(value) +
                                 " out of range for GF(" + std::to_string(q_) + ")");
    }
    return FieldElement(value, q_);
}

FieldElement PrimeField::from_int(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return FieldElement(static_cast<std::uint32_t>(r), q_);
}

FieldElement::FieldElement(std::uint32_t value, std::uint32_t modulus)
    : value_(value), modulus_(modulus) {
    if (value >= modulus) {
        throw InvalidParamsError("residue " + std::to_string(value) +
                                 " out of range for modulus " + std::to_string(modulus));
    }
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw FieldMismatchError("operands from GF(" + std::to_string(modulus_) +
                                 ") and GF(" + std::to_string(rhs.modulus_) + ")");
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    std::uint32_t s = value_ + rhs.value_;
    return FieldElement(s >= modulus_ ? s - modulus_ : s, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    std::uint32_t d = value_ >= rhs.value_ ? value_ - rhs.value_
                                           : value_ + modulus_ - rhs.value_;
    return FieldElement(d, modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    std::uint64_t p = static_cast<std::uint64_t>(value_) * rhs.value_;
    return FieldElement(static_cast<std::uint32_t>(p % modulus_), modulus_);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inv();
}

FieldElement FieldElement::operator-() const {
    return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::inv() const {
    return FieldElement(mod_inv(value_, modulus_), modulus_);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(rhs);
    return value_ == rhs.value_;
}

} // namespace ldmds
