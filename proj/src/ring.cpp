#include "gk/ring.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

BaseRing BaseRing::localized(std::vector<unsigned long> ps) {
    if (ps.empty()) throw error("localized ring needs at least one prime");
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (unsigned long p : ps)
        if (p < 2) throw error("invalid prime in localization set");
    return {RingKind::LocalizedIntegers, std::move(ps)};
}

std::string BaseRing::name() const {
    switch (kind) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::GaussianIntegers: return "ZZ[i]";
        case RingKind::LocalizedIntegers: {
            std::string s = "ZZ[";
            for (size_t i = 0; i < primes.size(); ++i) {
                if (i) s += ",";
                s += "1/" + std::to_string(primes[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

namespace {

// Strips every prime of S out of |n|; returns the S-free positive part.
mpz_class s_free_part(const mpz_class& n, const std::vector<unsigned long>& S) {
    mpz_class m = abs(n);
    if (m == 0) return m;
    for (unsigned long p : S) {
        mpz_class zp(p);
        while (mpz_divisible_p(m.get_mpz_t(), zp.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), zp.get_mpz_t());
        }
    }
    return m;
}

bool den_is_s_number(const mpq_class& q, const std::vector<unsigned long>& S) {
    return s_free_part(q.get_den(), S) == 1;
}

mpz_class round_nearest(const mpq_class& q) {
    // floor(q + 1/2): deterministic round-half-up
    mpq_class shifted = q + mpq_class(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return r;
}

mpz_class floor_div(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace

std::string to_string(const RingElem& x) {
    std::ostringstream os;
    if (x.im == 0) {
        os << x.re;
    } else if (x.re == 0) {
        if (x.im == 1) os << "i";
        else if (x.im == -1) os << "-i";
        else os << x.im << "i";
    } else {
        os << x.re;
        if (x.im > 0) os << "+";
        if (x.im == 1) os << "i";
        else if (x.im == -1) os << "-i";
        else os << x.im << "i";
    }
    return os.str();
}

RingElem parse_ring_elem(const std::string& s) {
    // accepts "3", "-4/5", "i", "2i", "1+2i", "3/2-i"
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw error("empty ring element literal");
    auto parse_q = [](const std::string& u) -> mpq_class {
        if (u.empty() || u == "+") return mpq_class(1);
        if (u == "-") return mpq_class(-1);
        mpq_class q;
        if (q.set_str(u, 10) != 0) throw error("bad rational literal: " + u);
        q.canonicalize();
        return q;
    };
    size_t ipos = t.find('i');
    if (ipos == std::string::npos) return RingElem(parse_q(t));
    if (ipos + 1 != t.size()) throw error("bad element literal: " + t);
    std::string body = t.substr(0, t.size() - 1);
    // split off a trailing +/- term boundary not at position 0
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '+' &&
            body[k - 1] != '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return RingElem(mpq_class(0), parse_q(body));
    return RingElem(parse_q(body.substr(0, split)), parse_q(body.substr(split)));
}

bool in_ring(const BaseRing& R, const RingElem& x) {
    switch (R.kind) {
        case RingKind::Integers: return x.im == 0 && x.re.get_den() == 1;
        case RingKind::Rationals: return x.im == 0;
        case RingKind::LocalizedIntegers: return x.im == 0 && den_is_s_number(x.re, R.primes);
        case RingKind::GaussianIntegers: return x.re.get_den() == 1 && x.im.get_den() == 1;
    }
    return false;
}

bool is_unit(const BaseRing& R, const RingElem& x) {
    if (x.is_zero() || !in_ring(R, x)) return false;
    switch (R.kind) {
        case RingKind::Integers: return x.re == 1 || x.re == -1;
        case RingKind::Rationals: return true;
        case RingKind::LocalizedIntegers: return s_free_part(x.re.get_num(), R.primes) == 1;
        case RingKind::GaussianIntegers: return x.norm() == 1;
    }
    return false;
}

RingElem ring_inv(const BaseRing& R, const RingElem& u) {
    if (!is_unit(R, u)) throw error("ring_inv: not a unit in " + R.name() + ": " + to_string(u));
    if (R.kind == RingKind::GaussianIntegers) {
        mpq_class n = u.norm();  // 1
        return {u.re / n, -u.im / n};
    }
    return RingElem(mpq_class(1) / u.re);
}

RingElem canonical_associate(const BaseRing& R, const RingElem& x) {
    if (x.is_zero()) return x;
    switch (R.kind) {
        case RingKind::Integers: return RingElem(mpq_class(abs(x.re)));
        case RingKind::Rationals: return RingElem(1);
        case RingKind::LocalizedIntegers: return RingElem(mpq_class(s_free_part(x.re.get_num(), R.primes)));
        case RingKind::GaussianIntegers: {
            RingElem y = x;
            const RingElem iu(mpq_class(0), mpq_class(1));
            for (int k = 0; k < 4; ++k) {
                if (y.re > 0 && y.im >= 0) return y;
                y = y * iu;
            }
            throw error("canonical_associate: unreachable");
        }
    }
    throw error("canonical_associate: bad ring");
}

mpz_class euclid_size(const BaseRing& R, const RingElem& x) {
    if (x.is_zero()) return 0;
    switch (R.kind) {
        case RingKind::Integers: return abs(x.re.get_num());
        case RingKind::Rationals: return 1;
        case RingKind::LocalizedIntegers: return s_free_part(x.re.get_num(), R.primes);
        case RingKind::GaussianIntegers: {
            mpq_class n = x.norm();
            return n.get_num();
        }
    }
    throw error("euclid_size: bad ring");
}

std::pair<RingElem, RingElem> divmod(const BaseRing& R, const RingElem& a, const RingElem& b) {
    if (b.is_zero()) throw error("divmod by zero");
    switch (R.kind) {
        case RingKind::Integers: {
            mpz_class q = round_nearest(a.re / b.re);
            RingElem qe{mpq_class(q)};
            return {qe, a - qe * b};
        }
        case RingKind::Rationals: {
            RingElem q{a.re / b.re};
            return {q, RingElem(0)};
        }
        case RingKind::LocalizedIntegers: {
            mpz_class ma = s_free_part(a.re.get_num(), R.primes);
            mpz_class mb = s_free_part(b.re.get_num(), R.primes);
            if (a.is_zero()) return {RingElem(0), RingElem(0)};
            mpq_class ua = a.re / mpq_class(ma);  // unit
            mpq_class ub = b.re / mpq_class(mb);  // unit
            mpz_class q0 = round_nearest(mpq_class(ma) / mpq_class(mb));
            mpq_class q = ua * mpq_class(q0) / ub;
            RingElem qe{q};
            return {qe, a - qe * b};
        }
        case RingKind::GaussianIntegers: {
            mpq_class n = b.norm();
            RingElem num = a * b.conj();
            mpz_class qr = round_nearest(num.re / n);
            mpz_class qi = round_nearest(num.im / n);
            RingElem q{mpq_class(qr), mpq_class(qi)};
            return {q, a - q * b};
        }
    }
    throw error("divmod: bad ring");
}

std::optional<RingElem> exact_div(const BaseRing& R, const RingElem& x, const RingElem& y) {
    if (y.is_zero()) {
        if (x.is_zero()) return RingElem(0);
        return std::nullopt;
    }
    RingElem q;
    if (R.kind == RingKind::GaussianIntegers) {
        mpq_class n = y.norm();
        RingElem num = x * y.conj();
        q = {num.re / n, num.im / n};
    } else {
        q = RingElem(x.re / y.re);
        if (x.im != 0 || y.im != 0) throw error("exact_div: nonreal element outside ZZ[i]");
    }
    if (!in_ring(R, q)) return std::nullopt;
    return q;
}

RingElem reduce_mod(const BaseRing& R, const RingElem& x, const RingElem& p) {
    if (p.is_zero()) return x;
    switch (R.kind) {
        case RingKind::Integers: {
            mpz_class q = floor_div(x.re / p.re);
            return x - RingElem(mpq_class(q)) * p;
        }
        case RingKind::Rationals: return RingElem(0);
        case RingKind::LocalizedIntegers: {
            // p is a canonical pivot: a positive S-free integer.  The residue is
            // num * den^{-1} mod p lifted to {0..p-1}.
            mpz_class pz = p.re.get_num();
            if (pz == 1) return RingElem(0);
            mpz_class num = x.re.get_num();
            mpz_class den = x.re.get_den();
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
                throw error("reduce_mod: denominator not invertible mod pivot");
            mpz_class r = (num * dinv) % pz;
            if (r < 0) r += pz;
            return RingElem(mpq_class(r));
        }
        case RingKind::GaussianIntegers: {
            mpq_class n = p.norm();
            RingElem num = x * p.conj();
            mpz_class qr = round_nearest(num.re / n);
            mpz_class qi = round_nearest(num.im / n);
            return x - RingElem(mpq_class(qr), mpq_class(qi)) * p;
        }
    }
    throw error("reduce_mod: bad ring");
}

RingElem ring_gcd(const BaseRing& R, RingElem a, RingElem b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(R, a, b);
        a = b;
        b = r;
    }
    return canonical_associate(R, a);
}

RingMap RingMap::make(const BaseRing& src, const BaseRing& tgt) {
    if (src == tgt) return identity(src);
    auto supported = [&]() -> std::optional<RingMap> {
        if (src.kind == RingKind::Integers && tgt.kind == RingKind::Rationals)
            return RingMap{src, tgt, true, false, 0};
        if (src.kind == RingKind::Integers && tgt.kind == RingKind::LocalizedIntegers)
            return RingMap{src, tgt, true, false, 0};
        if (src.kind == RingKind::LocalizedIntegers && tgt.kind == RingKind::Rationals)
            return RingMap{src, tgt, true, false, 0};
        if (src.kind == RingKind::Integers && tgt.kind == RingKind::GaussianIntegers)
            return RingMap{src, tgt, true, true, 2};  // basis {1, i}
        return std::nullopt;
    }();
    if (!supported) throw error("unsupported ring map " + src.name() + " -> " + tgt.name());
    return *supported;
}

RingElem RingMap::apply(const RingElem& x) const {
    if (!in_ring(source, x))
        throw error("ring map applied to element outside " + source.name() + ": " + to_string(x));
    return x;  // all supported maps are coordinate inclusions
}

}  // namespace gk
