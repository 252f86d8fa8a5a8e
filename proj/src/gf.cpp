#include "symgrass/gf.hpp"

#include <memory>
#include <mutex>

namespace symgrass {

namespace {

struct Order {
    int p;
    int e;
};

Order factor_order(int q) {
    switch (q) {
        case 2: case 3: case 5: case 7: case 11: case 13: return {q, 1};
        case 4: return {2, 2};
        case 8: return {2, 3};
        case 9: return {3, 2};
        case 16: return {2, 4};
        default:
            throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                        " (need a prime power <= 16)");
    }
}

std::vector<int> fixed_modulus(int q) {
    switch (q) {
        case 4: return {1, 1, 1};
        case 8: return {1, 1, 0, 1};
        case 9: return {2, 1, 1};
        case 16: return {1, 1, 0, 0, 1};
        default: return {};
    }
}

std::vector<int> digits(int v, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Schoolbook product reduced modulo the monic modulus.
int poly_mul(int a, int b, int p, int e, const std::vector<int>& modulus) {
    auto da = digits(a, p, e);
    auto db = digits(b, p, e);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        // x^d = x^(d-e) * x^e and x^e = -(modulus[0..e-1])
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
        prod[d] = 0;
    }
    prod.resize(e);
    return undigits(prod, p);
}

}  // namespace

Field::Field(int q) : q_(q) {
    auto [p, e] = factor_order(q);
    p_ = p;
    e_ = e;
    modulus_ = fixed_modulus(q);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p, e);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p, e);
            std::vector<int> s(e);
            for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            add_[a * kMaxFieldOrder + b] = static_cast<Elem>(undigits(s, p));
            int m = (e == 1) ? (a * b) % p : poly_mul(a, b, p, e, modulus_);
            mul_[a * kMaxFieldOrder + b] = static_cast<Elem>(m);
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) neg_[a] = static_cast<Elem>(b);
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[a] = static_cast<Elem>(b);
        }
    }
}

const Field& Field::get(int q) {
    static std::array<std::unique_ptr<Field>, kMaxFieldOrder + 1> cache;
    static std::mutex mu;
    if (!is_supported_order(q)) factor_order(q);  // throws with a message
    std::lock_guard lock(mu);
    auto& slot = cache[static_cast<std::size_t>(q)];
    if (!slot) slot.reset(new Field(q));
    return *slot;
}

bool Field::is_supported_order(int q) {
    switch (q) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: case 11: case 13: case 16:
            return true;
        default:
            return false;
    }
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t exp) const {
    Elem result = 1;
    Elem base = a;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

FieldElement::FieldElement(const Field& field, int value) : field_(&field) {
    if (value < 0 || value >= field.q())
        throw std::out_of_range("element encoding " + std::to_string(value) + " outside GF(" +
                                std::to_string(field.q()) + ")");
    value_ = static_cast<Elem>(value);
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("field elements from GF(" + std::to_string(a.field().q()) +
                                    ") and GF(" + std::to_string(b.field().q()) + ") mixed");
    return a.field();
}
}  // namespace

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return {f, f.add(a.value(), b.value())};
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return {f, f.sub(a.value(), b.value())};
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return {f, f.mul(a.value(), b.value())};
}

FieldElement fe_neg(const FieldElement& a) { return {a.field(), a.field().neg(a.value())}; }

FieldElement fe_inv(const FieldElement& a) { return {a.field(), a.field().inv(a.value())}; }

std::string to_string(const FieldElement& a) { return std::to_string(a.value()); }

}  // namespace symgrass
