#ifndef DETSIEVE_FIELD_HPP
#define DETSIEVE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detsieve/errors.hpp"
#include "detsieve/rng.hpp"

namespace detsieve {

enum class FieldKind { BinaryExtension, Prime };

class FieldCtx;

// Value of a field element together with the context it lives in.
// All operators check that both operands share a context.
struct FieldElem {
    std::uint64_t bits = 0;
    const FieldCtx* ctx = nullptr;

    bool is_zero() const { return bits == 0; }

    FieldElem operator+(FieldElem other) const;
    FieldElem operator-(FieldElem other) const;
    FieldElem operator*(FieldElem other) const;
    FieldElem& operator+=(FieldElem other) { return *this = *this + other; }
    FieldElem& operator-=(FieldElem other) { return *this = *this - other; }
    FieldElem& operator*=(FieldElem other) { return *this = *this * other; }
    bool operator==(FieldElem other) const;
    bool operator!=(FieldElem other) const { return !(*this == other); }

    FieldElem inv() const;
    FieldElem sqrt() const;
    std::string to_hex() const;
};

// Arithmetic context: GF(2^w) for w <= 64 with an irreducible modulus,
// or a prime field. Contexts are immutable after construction and all
// element operations are pure, so they are safe to share across threads.
class FieldCtx {
 public:
    // Vetted binary defaults (modulus checked irreducible on construction).
    static const FieldCtx& gf2(unsigned width);
    // User override; `modulus_low` encodes the modulus minus the x^w term.
    static FieldCtx gf2_custom(unsigned width, std::uint64_t modulus_low);
    // The fixed 31-bit prime 2^31 - 1.
    static const FieldCtx& prime31();
    static FieldCtx prime_custom(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    unsigned width() const { return width_; }
    std::uint64_t modulus_low() const { return modulus_low_; }
    std::uint64_t prime() const { return prime_; }
    bool char2() const { return kind_ == FieldKind::BinaryExtension; }

    // Field order as a double (2^64 does not fit in uint64); used for
    // failure-probability reporting.
    double order_approx() const;
    bool order_at_least(std::uint64_t n) const;

    FieldElem zero() const { return {0, this}; }
    FieldElem one() const { return {kind_ == FieldKind::Prime && prime_ == 1 ? 0ULL : 1ULL, this}; }
    FieldElem from_bits(std::uint64_t raw) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem inv(FieldElem a) const;
    // Unique square root; binary-extension contexts only.
    FieldElem sqrt(FieldElem a) const;

    // First n canonical pairwise-distinct elements (bit patterns 0,1,2,...).
    std::vector<FieldElem> enumerate_points(std::size_t n) const;

    FieldElem random(Rng& rng) const;
    FieldElem random_nonzero(Rng& rng) const;

    std::string header_line() const;
    std::string to_hex(FieldElem a) const;
    FieldElem from_hex(const std::string& s) const;

    bool operator==(const FieldCtx& other) const;

    static bool is_irreducible_gf2(unsigned width, std::uint64_t modulus_low);

 private:
    FieldCtx(FieldKind kind, unsigned width, std::uint64_t modulus_low, std::uint64_t prime);
    void check(FieldElem a) const;

    FieldKind kind_;
    unsigned width_ = 0;
    std::uint64_t modulus_low_ = 0;
    std::uint64_t prime_ = 0;
};

}  // namespace detsieve

#endif
