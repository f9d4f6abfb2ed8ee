#pragma once

#include <mpfr.h>

#include <string>

#include "fracdec/rational.hpp"

namespace fracdec {

// Thin RAII wrapper over mpfr_t for the diagnostic bound evaluations, which
// routinely leave double range (exponents of thousands of bits).
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(long i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
    explicit BigFloat(const Rat& r) {
        mpfr_init2(v_, kPrec);
        mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
    }
    explicit BigFloat(const Int& z) {
        mpfr_init2(v_, kPrec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat out; mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN); return out;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat out; mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN); return out;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat out; mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN); return out;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat out; mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN); return out;
    }
    BigFloat operator-() const { BigFloat out; mpfr_neg(out.v_, v_, MPFR_RNDN); return out; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat out; mpfr_pow(out.v_, a.v_, b.v_, MPFR_RNDN); return out;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat out; mpfr_log(out.v_, a.v_, MPFR_RNDN); return out;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat out; mpfr_exp(out.v_, a.v_, MPFR_RNDN); return out;
    }
    friend BigFloat lngamma(const BigFloat& a) {
        BigFloat out; mpfr_lngamma(out.v_, a.v_, MPFR_RNDN); return out;
    }
    friend BigFloat ceil(const BigFloat& a) {
        BigFloat out; mpfr_ceil(out.v_, a.v_); return out;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    std::string str(int digits = 12) const;

private:
    mpfr_t v_;
};

}  // namespace fracdec
