#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "gengraph/rational.hpp"

namespace gengraph {

namespace detail {

inline constexpr mpfr_prec_t kIntervalPrec = 256;

/// RAII wrapper for a single mpfr value.
class Mp {
public:
    Mp() { mpfr_init2(x_, kIntervalPrec); }
    Mp(const Mp& o) : Mp() { mpfr_set(x_, o.x_, MPFR_RNDN); }
    Mp(Mp&& o) noexcept {
        mpfr_init2(x_, kIntervalPrec);
        mpfr_swap(x_, o.x_);
    }
    Mp& operator=(Mp o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Mp() { mpfr_clear(x_); }
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

private:
    mpfr_t x_;
};

}  // namespace detail

/// Closed interval [lo, hi] with outward (directed) rounding on every
/// operation, so any derived comparison verdict is rigorous.
class Interval {
public:
    Interval() {
        mpfr_set_zero(lo_.get(), 1);
        mpfr_set_zero(hi_.get(), 1);
    }

    static Interval of_long(long v) {
        Interval r;
        mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
        return r;
    }

    static Interval of_big(const BigInt& v) {
        Interval r;
        const std::string s = v.str();
        mpfr_set_str(r.lo_.get(), s.c_str(), 10, MPFR_RNDD);
        mpfr_set_str(r.hi_.get(), s.c_str(), 10, MPFR_RNDU);
        return r;
    }

    static Interval of_rational(const Rational& q) {
        const Interval n = of_big(num(q)), d = of_big(den(q));
        Interval r;
        mpfr_div(r.lo_.get(), n.lo_.get(), d.hi_.get(), MPFR_RNDD);
        mpfr_div(r.hi_.get(), n.hi_.get(), d.lo_.get(), MPFR_RNDU);
        return r;  // denominators are positive
    }

    static Interval pi() {
        Interval r;
        mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator+(const Interval& o) const {
        Interval r;
        mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator-(const Interval& o) const {
        Interval r;
        mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
        return r;
    }

    Interval operator*(const Interval& o) const {
        Interval r;
        // min/max over the four endpoint products, rounded outward
        detail::Mp c, best_lo, best_hi;
        bool first = true;
        const mpfr_srcptr as[2] = {lo_.get(), hi_.get()};
        const mpfr_srcptr bs[2] = {o.lo_.get(), o.hi_.get()};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_mul(c.get(), a, b, MPFR_RNDD);
                if (first || mpfr_cmp(c.get(), best_lo.get()) < 0)
                    mpfr_set(best_lo.get(), c.get(), MPFR_RNDD);
                mpfr_mul(c.get(), a, b, MPFR_RNDU);
                if (first || mpfr_cmp(c.get(), best_hi.get()) > 0)
                    mpfr_set(best_hi.get(), c.get(), MPFR_RNDU);
                first = false;
            }
        mpfr_set(r.lo_.get(), best_lo.get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), best_hi.get(), MPFR_RNDU);
        return r;
    }

    /// Square root; requires a non-negative lower endpoint.
    Interval sqrt() const {
        if (mpfr_sgn(lo_.get()) < 0)
            throw InvariantError("interval sqrt of a negative value");
        Interval r;
        mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    /// Natural log; requires a positive lower endpoint.
    Interval log() const {
        if (mpfr_sgn(lo_.get()) <= 0)
            throw InvariantError("interval log of a non-positive value");
        Interval r;
        mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    /// Rigorous order tests between intervals.
    bool certainly_le(const Interval& o) const {
        return mpfr_cmp(hi_.get(), o.lo_.get()) <= 0;
    }
    bool certainly_ge(const Interval& o) const {
        return mpfr_cmp(lo_.get(), o.hi_.get()) >= 0;
    }
    bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
    bool contains_zero() const {
        return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
    }

    double lo_approx() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_approx() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

private:
    detail::Mp lo_, hi_;
};

// ---------------------------------------------------------------------------
// Numeric lemma checks (log-space, fully rigorous).
//
//   sqrt(2 pi) n^{n+1/2} e^{-n} e^{1/(12n+1)}  <=  n!  <=  same with e^{1/(12n)}
//   n!/(n-t)! >= (9/10) n^t / e^t              for 1 <= t < n
// ---------------------------------------------------------------------------

namespace detail {

inline Interval log_factorial(long n) {
    Interval s = Interval::of_long(0);
    for (long k = 2; k <= n; ++k) s = s + Interval::of_long(k).log();
    return s;
}

inline Interval half_log_two_pi() {
    const Interval two_pi = Interval::pi() * Interval::of_long(2);
    return two_pi.log() * Interval::of_rational(Rational(1, 2));
}

}  // namespace detail

/// True iff the two-sided factorial sandwich is proven for this n.
inline bool stirling_sandwich_check(long n) {
    if (n < 1) throw InvariantError("stirling_sandwich_check needs n >= 1");
    const Interval ln_n = Interval::of_long(n).log();
    const Interval common = detail::half_log_two_pi() +
                            ln_n * Interval::of_rational(Rational(2 * n + 1, 2)) -
                            Interval::of_long(n);
    const Interval lhs = common + Interval::of_rational(Rational(1, 12 * n + 1));
    const Interval rhs = common + Interval::of_rational(Rational(1, 12 * n));
    const Interval ln_fact = detail::log_factorial(n);
    return lhs.certainly_le(ln_fact) && ln_fact.certainly_le(rhs);
}

/// True iff n!/(n-t)! >= (9/10) n^t e^{-t} is proven.
inline bool factorial_ratio_check(long n, long t) {
    if (!(1 <= t && t < n))
        throw InvariantError("factorial_ratio_check needs 1 <= t < n");
    BigInt falling = 1;
    for (long k = n - t + 1; k <= n; ++k) falling *= k;
    const Interval lhs = Interval::of_big(falling).log();
    const Interval rhs = Interval::of_rational(Rational(9, 10)).log() +
                         Interval::of_long(n).log() * Interval::of_long(t) -
                         Interval::of_long(t);
    return lhs.certainly_ge(rhs);
}

/// Range driver reusing the running log-factorial; returns failing n (or n
/// pairs) — empty means everything is proven.
inline std::vector<long> stirling_range_failures(long n_max) {
    std::vector<long> bad;
    Interval ln_fact = Interval::of_long(0);
    const Interval half_l2pi = detail::half_log_two_pi();
    for (long n = 1; n <= n_max; ++n) {
        if (n >= 2) ln_fact = ln_fact + Interval::of_long(n).log();
        const Interval ln_n = Interval::of_long(n).log();
        const Interval common = half_l2pi +
                                ln_n * Interval::of_rational(Rational(2 * n + 1, 2)) -
                                Interval::of_long(n);
        const Interval lhs = common + Interval::of_rational(Rational(1, 12 * n + 1));
        const Interval rhs = common + Interval::of_rational(Rational(1, 12 * n));
        if (!(lhs.certainly_le(ln_fact) && ln_fact.certainly_le(rhs)))
            bad.push_back(n);
    }
    return bad;
}

inline std::vector<std::pair<long, long>> factorial_ratio_failures(long n_max) {
    std::vector<std::pair<long, long>> bad;
    for (long n = 2; n <= n_max; ++n) {
        BigInt falling = 1;
        Interval ln_falling = Interval::of_long(0);
        const Interval ln_n_t = Interval::of_long(n).log();
        for (long t = 1; t < n; ++t) {
            falling *= (n - t + 1);
            ln_falling = ln_falling + Interval::of_long(n - t + 1).log();
            const Interval rhs = Interval::of_rational(Rational(9, 10)).log() +
                                 ln_n_t * Interval::of_long(t) - Interval::of_long(t);
            if (!ln_falling.certainly_ge(rhs)) bad.emplace_back(n, t);
        }
    }
    return bad;
}

}  // namespace gengraph
