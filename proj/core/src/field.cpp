#include "detsieve/field.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#if defined(__x86_64__) || defined(_M_X64)
#include <wmmintrin.h>
#define DETSIEVE_HAVE_PCLMUL 1
#endif

namespace detsieve {
namespace {

struct U128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

U128 clmul_soft(std::uint64_t a, std::uint64_t b) {
    U128 r;
    for (unsigned i = 0; i < 64; ++i) {
        if ((b >> i) & 1ULL) {
            r.lo ^= a << i;
            if (i) r.hi ^= a >> (64 - i);
        }
    }
    return r;
}

#ifdef DETSIEVE_HAVE_PCLMUL
bool pclmul_available() {
    static const bool ok = __builtin_cpu_supports("pclmul");
    return ok;
}

__attribute__((target("pclmul,sse2"))) U128 clmul_hw(std::uint64_t a, std::uint64_t b) {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
    U128 r;
    r.lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
    r.hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(prod, prod)));
    return r;
}
#endif

inline U128 clmul(std::uint64_t a, std::uint64_t b) {
#ifdef DETSIEVE_HAVE_PCLMUL
    if (pclmul_available()) return clmul_hw(a, b);
#endif
    return clmul_soft(a, b);
}

// Reduce a 128-bit carryless product modulo x^64 + L(x), assuming
// deg L < 32 so that two folds suffice.
inline std::uint64_t reduce64(U128 p, std::uint64_t low) {
    U128 t = clmul(p.hi, low);
    std::uint64_t r = p.lo ^ t.lo;
    U128 t2 = clmul(t.hi, low);
    return r ^ t2.lo;
}

// Generic bitwise reduction for widths in (32, 64).
inline std::uint64_t reduce_generic(U128 p, unsigned w, std::uint64_t low) {
    unsigned __int128 x = (static_cast<unsigned __int128>(p.hi) << 64) | p.lo;
    unsigned __int128 f = (static_cast<unsigned __int128>(1) << w) | low;
    for (int bit = 126; bit >= static_cast<int>(w); --bit)
        if ((x >> bit) & 1) x ^= f << (bit - w);
    return static_cast<std::uint64_t>(x);
}

std::uint64_t mersenne31_reduce(std::uint64_t x) {
    const std::uint64_t p = (1ULL << 31) - 1;
    x = (x & p) + (x >> 31);
    x = (x & p) + (x >> 31);
    if (x >= p) x -= p;
    return x;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

FieldCtx::FieldCtx(FieldKind kind, unsigned width, std::uint64_t modulus_low, std::uint64_t prime)
    : kind_(kind), width_(width), modulus_low_(modulus_low), prime_(prime) {}

const FieldCtx& FieldCtx::gf2(unsigned width) {
    // x^4+x+1, x^8+x^4+x^3+x+1, x^16+x^5+x^3+x+1, x^32+x^7+x^3+x^2+1,
    // x^64+x^4+x^3+x+1
    static const FieldCtx w4 = gf2_custom(4, 0x3);
    static const FieldCtx w8 = gf2_custom(8, 0x1b);
    static const FieldCtx w16 = gf2_custom(16, 0x2b);
    static const FieldCtx w32 = gf2_custom(32, 0x8d);
    static const FieldCtx w64 = gf2_custom(64, 0x1b);
    switch (width) {
        case 4: return w4;
        case 8: return w8;
        case 16: return w16;
        case 32: return w32;
        case 64: return w64;
        default: throw UsageError("no vetted GF(2^w) default for width " + std::to_string(width));
    }
}

FieldCtx FieldCtx::gf2_custom(unsigned width, std::uint64_t modulus_low) {
    if (width < 1 || width > 64) throw UsageError("GF(2^w) width must be in [1,64]");
    if (width < 64 && (modulus_low >> width) != 0)
        throw UsageError("modulus low part has degree >= w");
    if (!is_irreducible_gf2(width, modulus_low))
        throw UsageError("modulus is not irreducible of degree w");
    return FieldCtx(FieldKind::BinaryExtension, width, modulus_low, 0);
}

const FieldCtx& FieldCtx::prime31() {
    static const FieldCtx p31(FieldKind::Prime, 0, 0, (1ULL << 31) - 1);
    return p31;
}

FieldCtx FieldCtx::prime_custom(std::uint64_t p) {
    if (p < 2) throw UsageError("prime field order must be >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw UsageError("prime field modulus is composite");
    return FieldCtx(FieldKind::Prime, 0, 0, p);
}

double FieldCtx::order_approx() const {
    if (kind_ == FieldKind::Prime) return static_cast<double>(prime_);
    return std::pow(2.0, static_cast<double>(width_));
}

bool FieldCtx::order_at_least(std::uint64_t n) const {
    if (kind_ == FieldKind::Prime) return prime_ >= n;
    if (width_ >= 64) return true;
    return (1ULL << width_) >= n;
}

FieldElem FieldCtx::from_bits(std::uint64_t raw) const {
    if (kind_ == FieldKind::Prime) return {raw % prime_, this};
    if (width_ < 64) raw &= (1ULL << width_) - 1;
    return {raw, this};
}

void FieldCtx::check(FieldElem a) const {
    if (a.ctx != this) throw UsageError("field element used with mismatched context");
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (kind_ == FieldKind::BinaryExtension) return {a.bits ^ b.bits, this};
    std::uint64_t s = a.bits + b.bits;
    if (s >= prime_) s -= prime_;
    return {s, this};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (kind_ == FieldKind::BinaryExtension) return {a.bits ^ b.bits, this};
    return {a.bits >= b.bits ? a.bits - b.bits : a.bits + prime_ - b.bits, this};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    if (kind_ == FieldKind::BinaryExtension) return a;
    return {a.bits == 0 ? 0 : prime_ - a.bits, this};
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (kind_ == FieldKind::Prime) {
        if (prime_ == (1ULL << 31) - 1)
            return {mersenne31_reduce(a.bits * b.bits), this};
        return {mulmod_u64(a.bits, b.bits, prime_), this};
    }
    U128 p = clmul(a.bits, b.bits);
    if (width_ == 64) return {reduce64(p, modulus_low_), this};
    if (width_ <= 32) {
        // product has degree <= 2w-2 < 64
        std::uint64_t x = p.lo;
        std::uint64_t full = (1ULL << width_) | modulus_low_;
        for (int bit = 2 * static_cast<int>(width_) - 2; bit >= static_cast<int>(width_); --bit)
            if ((x >> bit) & 1ULL) x ^= full << (bit - width_);
        return {x, this};
    }
    return {reduce_generic(p, width_, modulus_low_), this};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    check(a);
    FieldElem result = one();
    FieldElem base = a;
    while (e) {
        if (e & 1ULL) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    if (a.bits == 0) throw UsageError("inverse of zero");
    if (kind_ == FieldKind::Prime) return pow(a, prime_ - 2);
    // a^(2^w - 2)
    if (width_ == 64) {
        // 2^64 - 2 = 2 * (2^63 - 1); square-and-multiply over the fixed exponent
        FieldElem result = one();
        FieldElem base = mul(a, a);  // a^2
        for (unsigned i = 0; i < 63; ++i) {
            result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
    return pow(a, (1ULL << width_) - 2);
}

FieldElem FieldCtx::sqrt(FieldElem a) const {
    check(a);
    if (kind_ != FieldKind::BinaryExtension)
        throw UnsupportedError("sqrt is only defined for binary-extension contexts");
    // a^(2^(w-1)): Frobenius inverse, unique in GF(2^w)
    FieldElem r = a;
    for (unsigned i = 0; i + 1 < width_; ++i) r = mul(r, r);
    return r;
}

std::vector<FieldElem> FieldCtx::enumerate_points(std::size_t n) const {
    if (!order_at_least(n))
        throw CapacityError("requested more interpolation points than field elements");
    std::vector<FieldElem> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<std::uint64_t>(i), this});
    return pts;
}

FieldElem FieldCtx::random(Rng& rng) const {
    if (kind_ == FieldKind::Prime) return {rng.below(prime_), this};
    std::uint64_t v = rng.next();
    if (width_ < 64) v &= (1ULL << width_) - 1;
    return {v, this};
}

FieldElem FieldCtx::random_nonzero(Rng& rng) const {
    FieldElem v;
    do {
        v = random(rng);
    } while (v.is_zero());
    return v;
}

std::string FieldCtx::header_line() const {
    std::ostringstream os;
    if (kind_ == FieldKind::BinaryExtension) {
        os << "field gf2 " << width_ << " " << std::hex << modulus_low_;
    } else {
        os << "field prime " << prime_;
    }
    return os.str();
}

std::string FieldCtx::to_hex(FieldElem a) const {
    check(a);
    std::ostringstream os;
    os << std::hex << a.bits;
    return os.str();
}

FieldElem FieldCtx::from_hex(const std::string& s) const {
    if (s.empty()) throw ParseError("empty field element");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = 10 + c - 'a';
        else if (c >= 'A' && c <= 'F')
            d = 10 + c - 'A';
        else
            throw ParseError("bad hex digit in field element: " + s);
        if (v >> 60) throw ParseError("field element literal too wide: " + s);
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    if (kind_ == FieldKind::BinaryExtension && width_ < 64 && (v >> width_) != 0)
        throw ParseError("field element exceeds representation width: " + s);
    if (kind_ == FieldKind::Prime && v >= prime_)
        throw ParseError("field element exceeds prime modulus: " + s);
    return {v, this};
}

bool FieldCtx::operator==(const FieldCtx& other) const {
    return kind_ == other.kind_ && width_ == other.width_ && modulus_low_ == other.modulus_low_ &&
           prime_ == other.prime_;
}

bool FieldCtx::is_irreducible_gf2(unsigned w, std::uint64_t low) {
    if (w == 0 || w > 64) return false;
    if (w == 1) return true;
    // Work in GF(2)[x]/(f) using a throwaway context-free multiply.
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        U128 p = clmul(a, b);
        if (w == 64) return reduce64(p, low);
        if (w <= 32) {
            std::uint64_t x = p.lo;
            std::uint64_t full = (1ULL << w) | low;
            for (int bit = 2 * static_cast<int>(w) - 2; bit >= static_cast<int>(w); --bit)
                if ((x >> bit) & 1ULL) x ^= full << (bit - w);
            return x;
        }
        return reduce_generic(p, w, low);
    };
    auto frob_iter = [&](std::uint64_t a, unsigned times) {
        for (unsigned i = 0; i < times; ++i) a = mulmod(a, a);
        return a;
    };
    // poly gcd over GF(2); operands have degree <= w so they fit in 128 bits
    auto deg = [](unsigned __int128 v) -> int {
        if (v == 0) return -1;
        int d = 0;
        while (v >>= 1) ++d;
        return d;
    };
    auto polygcd = [&](unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            int da = deg(a), db = deg(b);
            if (da < db) {
                std::swap(a, b);
                continue;
            }
            a ^= b << (da - db);
        }
        return a;
    };
    unsigned __int128 f = (static_cast<unsigned __int128>(1) << w) | low;
    // x^(2^w) == x (mod f)
    if (frob_iter(2, w) != 2) return false;
    for (unsigned d = 1; d < w; ++d) {
        if (w % d != 0) continue;
        bool maximal_proper = true;  // only prime-index subfields matter
        unsigned ratio = w / d;
        for (unsigned q = 2; q * q <= ratio; ++q)
            if (ratio % q == 0) maximal_proper = false;
        if (!maximal_proper && ratio != 1) continue;
        std::uint64_t r = frob_iter(2, d);
        unsigned __int128 g = polygcd(f, static_cast<unsigned __int128>(r ^ 2ULL));
        if (deg(g) > 0) return false;
    }
    return true;
}

FieldElem FieldElem::operator+(FieldElem other) const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->add(*this, other);
}

FieldElem FieldElem::operator-(FieldElem other) const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->sub(*this, other);
}

FieldElem FieldElem::operator*(FieldElem other) const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->mul(*this, other);
}

bool FieldElem::operator==(FieldElem other) const {
    if (ctx != other.ctx) throw UsageError("field element comparison across contexts");
    return bits == other.bits;
}

FieldElem FieldElem::inv() const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->inv(*this);
}

FieldElem FieldElem::sqrt() const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->sqrt(*this);
}

std::string FieldElem::to_hex() const {
    if (!ctx) throw UsageError("uninitialised field element");
    return ctx->to_hex(*this);
}

}  // namespace detsieve
