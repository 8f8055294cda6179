#pragma once

// Minimal RAII handle over mpfr_t. Only what the hypergeometric oracles need.

#include <mpfr.h>

#include <utility>

namespace orbsmooth::detail {

class MpfrScalar {
public:
    explicit MpfrScalar(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    MpfrScalar(mpfr_prec_t bits, double value) : MpfrScalar(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }
    MpfrScalar(const MpfrScalar&) = delete;
    MpfrScalar& operator=(const MpfrScalar&) = delete;
    ~MpfrScalar() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    void set(double value) { mpfr_set_d(v_, value, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

}  // namespace orbsmooth::detail
