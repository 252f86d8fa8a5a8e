#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgrass {

/// Raw element encoding in [0, q). For extension fields the value is read
/// base-p as the coefficient vector of a polynomial in the generator x.
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 16;

/// Finite field GF(q), q = p^e <= 16, with full q x q arithmetic tables.
///
/// Instances are interned: `Field::get(q)` always returns the same object, so
/// fields can be compared by address. Fixed moduli (x is primitive in each):
///   GF(4):  x^2 + x + 1
///   GF(8):  x^3 + x + 1
///   GF(9):  x^2 + x + 2
///   GF(16): x^4 + x + 1
class Field {
public:
    static const Field& get(int q);
    static bool is_supported_order(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }
    /// Monic modulus coefficients, lowest degree first (size e+1); {} for prime q.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * kMaxFieldOrder + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * kMaxFieldOrder + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * kMaxFieldOrder + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Throws std::domain_error for a == 0.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t exp) const;

    /// Row `a` of the addition / multiplication table (length kMaxFieldOrder).
    const Elem* add_row(Elem a) const { return &add_[a * kMaxFieldOrder]; }
    const Elem* mul_row(Elem a) const { return &mul_[a * kMaxFieldOrder]; }

    bool characteristic_two() const { return p_ == 2; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(int q);

    int q_;
    int p_;
    int e_;
    std::vector<int> modulus_;
    std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> add_{};
    std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> mul_{};
    std::array<Elem, kMaxFieldOrder> neg_{};
    std::array<Elem, kMaxFieldOrder> inv_{};
};

/// An element bound to its field. Mixing fields is a usage error.
class FieldElement {
public:
    FieldElement(const Field& field, int value);

    const Field& field() const { return *field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    const Field* field_;
    Elem value_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fe_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fe_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fe_mul(a, b); }

/// Decimal rendering of the integer encoding.
std::string to_string(const FieldElement& a);

}  // namespace symgrass
