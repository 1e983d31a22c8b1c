#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gk {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signalled when a computation in U(g) would exceed its declared degree cap.
struct cap_exceeded : error {
    using error::error;
};

enum class RingKind { Integers, Rationals, LocalizedIntegers, GaussianIntegers };

/// One of the supported exact PIDs: ZZ, QQ, ZZ[1/n] (n a product of the
/// listed primes) or ZZ[i].
struct BaseRing {
    RingKind kind = RingKind::Integers;
    std::vector<unsigned long> primes;  // LocalizedIntegers only, sorted, unique

    static BaseRing integers() { return {RingKind::Integers, {}}; }
    static BaseRing rationals() { return {RingKind::Rationals, {}}; }
    static BaseRing localized(std::vector<unsigned long> ps);
    static BaseRing gaussian() { return {RingKind::GaussianIntegers, {}}; }

    bool is_field() const { return kind == RingKind::Rationals; }
    bool operator==(const BaseRing&) const = default;
    std::string name() const;
};

/// Element of any supported ring, stored as exact rational coordinates
/// re + im*i.  im stays zero outside ZZ[i]; ZZ[i] keeps integer coordinates.
struct RingElem {
    mpq_class re, im;

    RingElem() : re(0), im(0) {}
    RingElem(long v) : re(v), im(0) {}
    RingElem(const mpz_class& v) : re(v), im(0) {}
    RingElem(const mpq_class& v) : re(v), im(0) {}
    RingElem(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    RingElem operator+(const RingElem& o) const { return {re + o.re, im + o.im}; }
    RingElem operator-(const RingElem& o) const { return {re - o.re, im - o.im}; }
    RingElem operator-() const { return {-re, -im}; }
    RingElem operator*(const RingElem& o) const {
        if (im == 0 && o.im == 0) return {re * o.re, mpq_class(0)};
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RingElem& operator+=(const RingElem& o) { re += o.re; im += o.im; return *this; }
    RingElem& operator-=(const RingElem& o) { re -= o.re; im -= o.im; return *this; }
    RingElem& operator*=(const RingElem& o) { *this = *this * o; return *this; }
    bool operator==(const RingElem& o) const { return re == o.re && im == o.im; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    RingElem conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
};

std::string to_string(const RingElem& x);
RingElem parse_ring_elem(const std::string& s);

bool in_ring(const BaseRing& R, const RingElem& x);
bool is_unit(const BaseRing& R, const RingElem& x);
RingElem ring_inv(const BaseRing& R, const RingElem& u);

/// Canonical associate: the preferred generator of the ideal (x).
/// ZZ: |x|;  QQ: 1;  ZZ[1/n]: the positive S-free integer part;
/// ZZ[i]: the associate in the first quadrant (re > 0, im >= 0).
RingElem canonical_associate(const BaseRing& R, const RingElem& x);

/// Size function driving Euclidean division (strictly drops on remainders).
mpz_class euclid_size(const BaseRing& R, const RingElem& x);

/// a = q*b + r with euclid_size(r) < euclid_size(b); b nonzero.
std::pair<RingElem, RingElem> divmod(const BaseRing& R, const RingElem& a, const RingElem& b);

/// x/y when y | x in R, nullopt otherwise.
std::optional<RingElem> exact_div(const BaseRing& R, const RingElem& x, const RingElem& y);

/// Canonical residue of x modulo the canonical-associate pivot p.
RingElem reduce_mod(const BaseRing& R, const RingElem& x, const RingElem& p);

RingElem ring_gcd(const BaseRing& R, RingElem a, RingElem b);

/// Supported flat / finite-projective homomorphisms between the base rings.
/// All of them are coordinate inclusions, so element images are literal.
struct RingMap {
    BaseRing source, target;
    bool is_flat = true;
    bool is_finite_projective = false;
    int rank_if_finite = 0;

    static RingMap identity(const BaseRing& R) { return {R, R, true, false, 0}; }
    static RingMap make(const BaseRing& src, const BaseRing& tgt);

    bool is_identity() const { return source == target; }
    RingElem apply(const RingElem& x) const;
    std::string name() const { return source.name() + " -> " + target.name(); }
};

}  // namespace gk
