#pragma once

// Exact arithmetic in GF(p^e) for prime p and p^e <= 2^20.
//
// Element encoding is the base-p bijection: the integer v in [0, q)
// represents the residue polynomial sum_i digit_i(v) * x^i, so v itself is
// the coefficient vector read in base p.  Prime fields compute directly mod
// p; extension fields reduce modulo a monic irreducible of degree e and run
// multiplicative arithmetic through exp/log tables over a fixed primitive
// element, built once at construction.
//
// Conventions: 0^0 = 1; division and inversion of zero throw.  Elements are
// tagged with their field and mixing structurally different fields throws.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/common.hpp"

namespace lrc {

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) acc = acc * a % m;
        a = a * a % m;
        n >>= 1;
    }
    return acc;
}

// Dense univariate polynomials over GF(p), coefficients low-to-high with no
// trailing zeros.  Just enough for modulus certification and table building.
struct PolyGFp {
    std::uint64_t p;
    std::vector<std::uint32_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
};

inline PolyGFp poly_mul(const PolyGFp& a, const PolyGFp& b) {
    PolyGFp out{a.p, {}};
    if (a.zero() || b.zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = static_cast<std::uint32_t>(
                (out.c[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % a.p);
    out.trim();
    return out;
}

// Remainder of a modulo monic b.  The monic leading term guarantees each
// round cancels the top coefficient, so the loop strictly shrinks a.
inline PolyGFp poly_rem(PolyGFp a, const PolyGFp& b) {
    const std::uint64_t p = a.p;
    while (!a.zero() && a.deg() >= b.deg()) {
        const std::uint64_t lead = a.c.back();
        const std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::uint64_t sub = lead * b.c[i] % p;
            a.c[shift + i] = static_cast<std::uint32_t>((a.c[shift + i] + p - sub) % p);
        }
        a.trim();
    }
    return a;
}

}  // namespace detail

class FieldElement;

class Field {
public:
    static constexpr unsigned max_bits = 20;  // q = p^e must fit in this many bits

    // Empty handle; every operation throws until a real field is assigned.
    Field() = default;

    // Prime field GF(p).
    explicit Field(std::uint64_t p) : Field(p, 1, std::nullopt) {}

    // GF(p^e).  Without an explicit modulus the lexicographically smallest
    // monic irreducible of degree e is chosen (candidates ordered by base-p
    // integer encoding) and certified by exhaustive factor search.
    Field(std::uint64_t p, unsigned e) : Field(p, e, std::nullopt) {}

    Field(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
        if (!detail::is_prime(p))
            throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("field: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > (std::uint64_t{1} << max_bits))
                throw std::invalid_argument("field: p^e exceeds the 2^" + std::to_string(max_bits) +
                                            " size cap");
        }
        auto im = std::make_shared<Impl>();
        im->p = p;
        im->e = e;
        im->q = q;
        if (e == 1) {
            if (modulus && !modulus->empty())
                throw std::invalid_argument("field: a prime field takes no modulus");
        } else {
            im->modulus = modulus ? *modulus : find_default_modulus(p, e);
            validate_modulus(*im);
            build_tables(*im);
        }
        impl_ = std::move(im);
    }

    std::uint64_t q() const { return impl().q; }
    std::uint64_t p() const { return impl().p; }
    unsigned e() const { return impl().e; }

    // Monic modulus, coefficients low-to-high, length e+1; empty for e = 1.
    const std::vector<std::uint32_t>& modulus() const { return impl().modulus; }

    bool valid() const { return impl_ != nullptr; }

    bool same_as(const Field& o) const {
        if (impl_ == o.impl_) return true;
        if (!impl_ || !o.impl_) return false;
        return impl_->p == o.impl_->p && impl_->e == o.impl_->e && impl_->modulus == o.impl_->modulus;
    }

    inline FieldElement element(std::uint64_t v) const;
    inline FieldElement zero() const;
    inline FieldElement one() const;

    // Raw-value arithmetic on values already in [0, q); these are the hot
    // paths used by the matrix kernels, with no per-op tag checks.
    std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const {
        const Impl& im = impl();
        if (im.e == 1) {
            std::uint64_t s = std::uint64_t{a} + b;
            return static_cast<std::uint32_t>(s >= im.q ? s - im.q : s);
        }
        if (im.p == 2) return a ^ b;
        return digitwise(im, a, b, /*sub=*/false);
    }
    std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const {
        const Impl& im = impl();
        if (im.e == 1) return static_cast<std::uint32_t>(a >= b ? a - b : a + im.q - b);
        if (im.p == 2) return a ^ b;
        return digitwise(im, a, b, /*sub=*/true);
    }
    std::uint32_t neg_v(std::uint32_t a) const { return sub_v(0, a); }
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const {
        const Impl& im = impl();
        if (a == 0 || b == 0) return 0;
        if (im.e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % im.q);
        return im.exp[std::size_t{im.log[a]} + im.log[b]];
    }
    std::uint32_t inv_v(std::uint32_t a) const {
        const Impl& im = impl();
        if (a == 0) throw std::invalid_argument("field: inverse of zero");
        if (im.e == 1) return static_cast<std::uint32_t>(detail::pow_mod(a, im.q - 2, im.q));
        const std::uint64_t ord = im.q - 1;
        return im.exp[(ord - im.log[a]) % ord];
    }
    std::uint32_t div_v(std::uint32_t a, std::uint32_t b) const { return mul_v(a, inv_v(b)); }
    // a^n with the 0^0 = 1 convention.
    std::uint32_t pow_v(std::uint32_t a, std::uint64_t n) const {
        const Impl& im = impl();
        if (n == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t ord = im.q - 1;
        if (im.e == 1) return static_cast<std::uint32_t>(detail::pow_mod(a, n % ord == 0 ? ord : n % ord, im.q));
        return im.exp[im.log[a] * (n % ord) % ord];
    }

    inline FieldElement add(const FieldElement& a, const FieldElement& b) const;
    inline FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    inline FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    inline FieldElement div(const FieldElement& a, const FieldElement& b) const;
    inline FieldElement neg(const FieldElement& a) const;
    inline FieldElement inv(const FieldElement& a) const;
    inline FieldElement pow(const FieldElement& a, std::uint64_t n) const;

    // Value of `elem` after confirming it belongs to this field.
    inline std::uint32_t check(const FieldElement& elem) const;

    // Raw value validated against the field size.
    std::uint32_t check_v(std::uint32_t v) const {
        if (v >= impl().q)
            throw std::invalid_argument("field: value " + std::to_string(v) + " out of range for q = " +
                                        std::to_string(impl().q));
        return v;
    }

private:
    struct Impl {
        std::uint64_t p = 0, q = 0;
        unsigned e = 1;
        std::vector<std::uint32_t> modulus;   // empty for e = 1
        std::vector<std::uint32_t> exp, log;  // extension fields only; exp doubled to skip a mod
        std::uint32_t generator = 0;
    };

    const Impl& impl() const {
        if (!impl_) throw std::invalid_argument("field: empty handle");
        return *impl_;
    }

    static std::uint32_t digitwise(const Impl& im, std::uint32_t a, std::uint32_t b, bool sub) {
        const std::uint32_t p = static_cast<std::uint32_t>(im.p);
        std::uint32_t out = 0, mult = 1;
        for (unsigned i = 0; i < im.e; ++i) {
            std::uint32_t da = a % p, db = b % p;
            std::uint32_t d = sub ? (da >= db ? da - db : da + p - db)
                                  : (da + db >= p ? da + db - p : da + db);
            out += d * mult;
            mult *= p;
            a /= p;
            b /= p;
        }
        return out;
    }

    static detail::PolyGFp to_poly(std::uint64_t p, std::uint32_t v) {
        detail::PolyGFp out{p, {}};
        while (v) {
            out.c.push_back(static_cast<std::uint32_t>(v % p));
            v = static_cast<std::uint32_t>(v / p);
        }
        return out;
    }
    static std::uint32_t from_poly(std::uint64_t p, const detail::PolyGFp& a) {
        std::uint64_t v = 0, mult = 1;
        for (std::uint32_t d : a.c) {
            v += d * mult;
            mult *= p;
        }
        return static_cast<std::uint32_t>(v);
    }

    static void validate_modulus(const Impl& im) {
        if (im.modulus.size() != std::size_t{im.e} + 1)
            throw std::invalid_argument("field: modulus must be monic of degree e (e+1 coefficients)");
        for (std::uint32_t c : im.modulus)
            if (c >= im.p) throw std::invalid_argument("field: modulus coefficient out of range");
        if (im.modulus.back() != 1) throw std::invalid_argument("field: modulus must be monic");
        if (!irreducible(im.p, im.modulus))
            throw std::invalid_argument("field: modulus is reducible over GF(" + std::to_string(im.p) + ")");
    }

    // Exhaustive certification: no monic factor of degree 1..e/2.
    static bool irreducible(std::uint64_t p, const std::vector<std::uint32_t>& m) {
        detail::PolyGFp mod{p, m};
        mod.trim();
        const int e = mod.deg();
        for (int dg = 1; dg <= e / 2; ++dg) {
            std::uint64_t count = 1;
            for (int i = 0; i < dg; ++i) count *= p;
            for (std::uint64_t low = 0; low < count; ++low) {
                detail::PolyGFp cand{p, {}};
                std::uint64_t v = low;
                for (int i = 0; i < dg; ++i) {
                    cand.c.push_back(static_cast<std::uint32_t>(v % p));
                    v /= p;
                }
                cand.c.push_back(1);
                if (detail::poly_rem(mod, cand).zero()) return false;
            }
        }
        return true;
    }

    static std::vector<std::uint32_t> find_default_modulus(std::uint64_t p, unsigned e) {
        std::uint64_t lead = 1;
        for (unsigned i = 0; i < e; ++i) lead *= p;
        for (std::uint64_t v = lead; v < 2 * lead; ++v) {
            std::vector<std::uint32_t> c;
            std::uint64_t t = v;
            for (unsigned i = 0; i <= e; ++i) {
                c.push_back(static_cast<std::uint32_t>(t % p));
                t /= p;
            }
            if (irreducible(p, c)) return c;
        }
        throw std::logic_error("field: no irreducible polynomial of requested degree");  // unreachable
    }

    static void build_tables(Impl& im) {
        detail::PolyGFp mod{im.p, im.modulus};
        auto mul_red = [&](std::uint32_t a, std::uint32_t b) {
            return from_poly(im.p, detail::poly_rem(detail::poly_mul(to_poly(im.p, a), to_poly(im.p, b)), mod));
        };
        auto pow_red = [&](std::uint32_t a, std::uint64_t n) {
            std::uint32_t acc = 1;
            while (n) {
                if (n & 1) acc = mul_red(acc, a);
                a = mul_red(a, a);
                n >>= 1;
            }
            return acc;
        };
        const std::uint64_t ord = im.q - 1;
        std::vector<std::uint64_t> primes;
        std::uint64_t t = ord;
        for (std::uint64_t d = 2; d * d <= t; ++d)
            while (t % d == 0) {
                if (primes.empty() || primes.back() != d) primes.push_back(d);
                t /= d;
            }
        if (t > 1) primes.push_back(t);
        std::uint32_t gen = 0;
        for (std::uint32_t g = 2; g < im.q && gen == 0; ++g) {
            bool ok = true;
            for (std::uint64_t pr : primes)
                if (pow_red(g, ord / pr) == 1) {
                    ok = false;
                    break;
                }
            if (ok) gen = g;
        }
        if (gen == 0) throw std::logic_error("field: no primitive element found");  // unreachable
        im.generator = gen;
        im.exp.assign(2 * ord, 1);
        im.log.assign(im.q, 0);
        std::uint32_t cur = 1;
        for (std::uint64_t i = 0; i < ord; ++i) {
            im.exp[i] = cur;
            im.exp[i + ord] = cur;
            im.log[cur] = static_cast<std::uint32_t>(i);
            cur = mul_red(cur, gen);
        }
    }

    friend class FieldElement;
    std::shared_ptr<const Impl> impl_;
};

// A value bound to its field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field& f, std::uint32_t v) : field_(f), value_(v) {}

    std::uint32_t value() const { return value_; }
    const Field& field() const { return field_; }

private:
    Field field_;
    std::uint32_t value_ = 0;
};

inline std::uint32_t Field::check(const FieldElement& elem) const {
    if (!same_as(elem.field())) throw std::invalid_argument("field: element belongs to a different field");
    return elem.value();
}

inline FieldElement Field::element(std::uint64_t v) const {
    if (v >= impl().q)
        throw std::invalid_argument("field: value " + std::to_string(v) + " out of range for q = " +
                                    std::to_string(impl().q));
    return FieldElement(*this, static_cast<std::uint32_t>(v));
}
inline FieldElement Field::zero() const { return FieldElement(*this, (impl(), 0)); }
inline FieldElement Field::one() const { return FieldElement(*this, (impl(), 1)); }

inline FieldElement Field::add(const FieldElement& a, const FieldElement& b) const { return FieldElement(*this, add_v(check(a), check(b))); }
inline FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return FieldElement(*this, sub_v(check(a), check(b))); }
inline FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const { return FieldElement(*this, mul_v(check(a), check(b))); }
inline FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return FieldElement(*this, div_v(check(a), check(b))); }
inline FieldElement Field::neg(const FieldElement& a) const { return FieldElement(*this, neg_v(check(a))); }
inline FieldElement Field::inv(const FieldElement& a) const { return FieldElement(*this, inv_v(check(a))); }
inline FieldElement Field::pow(const FieldElement& a, std::uint64_t n) const { return FieldElement(*this, pow_v(check(a), n)); }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.field().add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.field().sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.field().mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a.field().div(a, b); }
inline FieldElement operator-(const FieldElement& a) { return a.field().neg(a); }
inline bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field().check(b) == a.value();
}
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

// Horner evaluation of sum coeffs[i] x^i.  coeffs must be nonempty and all
// operands must share one field.
inline FieldElement poly_eval(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
    if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
    const Field& f = x.field();
    std::uint32_t acc = 0;
    const std::uint32_t xv = f.check(x);
    for (std::size_t i = coeffs.size(); i > 0; --i) acc = f.add_v(f.mul_v(acc, xv), f.check(coeffs[i - 1]));
    return FieldElement(f, acc);
}

// Coefficients (low-to-high, monic) of prod_i (x - roots[i]); [1] when the
// root list is empty.
inline std::vector<std::uint32_t> poly_from_roots(const Field& f, const std::vector<std::uint32_t>& roots) {
    std::vector<std::uint32_t> c{1};
    for (std::uint32_t r : roots) {
        if (r >= f.q()) throw std::invalid_argument("poly_from_roots: root out of range");
        const std::uint32_t mr = f.neg_v(r);
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add_v(c[i - 1], f.mul_v(mr, c[i]));
        c[0] = f.mul_v(mr, c[0]);
    }
    return c;
}

// Evaluate the monic product prod_i (x - roots[i]) directly at x.
inline std::uint32_t eval_root_product(const Field& f, const std::vector<std::uint32_t>& roots, std::uint32_t x) {
    std::uint32_t acc = 1;
    for (std::uint32_t r : roots) acc = f.mul_v(acc, f.sub_v(x, r));
    return acc;
}

}  // namespace lrc
