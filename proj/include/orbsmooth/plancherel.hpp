#pragma once

#include "orbsmooth/orbit_classifier.hpp"
#include "orbsmooth/radial_point.hpp"
#include "orbsmooth/space_catalog.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace orbsmooth {

inline constexpr long kMaxSeriesLength = 10'000'000;
inline constexpr double kVerdictMargin = 0.1;      // delta around the critical exponent -1
inline constexpr double kLogFitMinRSquared = 0.98;
inline constexpr int kMinDyadicBlocks = 8;

// ||mu_{z_1} * ... * mu_{z_k}||_2^2 term for pi_n:  dim V_{pi_n} prod_i |phi_{pi_n}(t_i)|^2.
// Requires 1 <= points.size() <= 3 and n >= 1.
double norm_series_term(const SymmetricSpace& space, long n, std::span<const RadialPoint> points);

struct Checkpoint {
    long N = 0;
    double partial_sum = 0.0;
    double interval_mean = 0.0;  // mean term over (previous checkpoint, N]
};

// Mean term over the dyadic block [2^j, 2^{j+1}).
struct BlockMean {
    int block = 0;
    long first = 0;
    long last = 0;
    double mean = 0.0;
};

struct TermSample {
    long n = 0;
    double term = 0.0;
};

struct SeriesTrace {
    long n_max = 0;
    std::vector<Checkpoint> checkpoints;
    std::vector<BlockMean> block_means;  // complete blocks only
    std::vector<TermSample> terms_sampled;
};

struct SeriesSchedule {
    long n_max = 100'000;
    long n0 = 10;
    double ratio = 1.2589254117941673;  // 10^{1/10}: ten checkpoints per decade
    int threads = 1;
};

// Term generator for generic series: fills terms[i] = a_{first + i}.
using TermBlockFn = std::function<void(long first, std::span<double> terms)>;

// Sums a_1..a_{n_max} in ascending order with Neumaier compensation and
// records checkpoints at ceil(n0 * ratio^k) plus n_max, dyadic block means
// and a sparse log-spaced term sample. Terms are produced in fixed chunks;
// the result does not depend on the thread count.
SeriesTrace accumulate_series(const TermBlockFn& terms, const SeriesSchedule& schedule);

// The Plancherel series of the k-fold product (k = 1..3). The n = 0 term
// (always 1) is left out. Throws std::invalid_argument when n_max exceeds
// kMaxSeriesLength, ratio <= 1, or the point count is outside 1..3.
SeriesTrace partial_sums(const SymmetricSpace& space, std::span<const RadialPoint> points,
                         const SeriesSchedule& schedule);

enum class SeriesVerdict { Convergent, Divergent, Inconclusive };
std::string_view to_string(SeriesVerdict v);

struct SeriesDiagnosis {
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
    double tail_exponent = 0.0;  // block mean ~ c n^{tail_exponent}
    double log_slope = 0.0;      // S_N ~ log_slope * log N + c
    double r_squared = 0.0;      // of the S_N vs log N fit
    int blocks_used = 0;
    int checkpoints_used = 0;
};

// Fits log(block mean) against log n over the last half of the complete
// dyadic blocks and S_N against log N over the last half of the checkpoints.
//   tail_exponent <= -1 - delta                         -> Convergent
//   tail_exponent >= -1 + delta, or log_slope > 0 with
//   r^2 >= kLogFitMinRSquared                           -> Divergent
//   otherwise                                           -> Inconclusive
// Throws std::invalid_argument for fewer than kMinDyadicBlocks blocks.
SeriesDiagnosis diagnose(const SeriesTrace& trace);

struct LogGrowthFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points = 0;
};

// S_N against log N restricted to checkpoints with N in [n_lo, n_hi].
LogGrowthFit fit_log_growth(const SeriesTrace& trace, long n_lo, long n_hi);

struct ConsistencyReport {
    bool agree = false;
    bool closed_form_l2 = false;
    SeriesVerdict expected = SeriesVerdict::Inconclusive;
    SmoothnessVerdict closed_form;
    SeriesDiagnosis diagnosis;
    SeriesTrace trace;
};

// Sums the series, diagnoses it and compares with the closed-form verdict
// (pairs and triples; a single point is compared against l2 of mu_z alone,
// which never holds).
ConsistencyReport crosscheck(const SymmetricSpace& space, std::span<const RadialPoint> points,
                             const SeriesSchedule& schedule, double eps = kDefaultClassifyEps);

// --- SU(2)/SO(2) trigonometric series -------------------------------------

enum class TrigKind { Sine, Cosine };

// Partial sum of sum_{n<=N} sin(nx)/n or cos(nx)/n. Exact multiples of pi
// are reduced exactly, so x = pi gives an exactly zero sine series.
// Throws std::domain_error for the cosine series at x = 0 mod 2 pi and
// std::invalid_argument for N < 1.
double trig_series_reference(const RadialPoint& x, long N, TrigKind kind);

// Pointwise limits: odd 2pi-periodic extension of (pi - x)/2, and the even
// extension of -log(2 sin(x/2)).
double trig_series_limit(const RadialPoint& x, TrigKind kind);

// n (phi_{pi_n}(t))^2 pi sin t - (1 + sin((2n+1)t)) on SU(2)/SO(2), which is
// O(1/n) by the interior Jacobi asymptotics. Requires t in [0.01, pi - 0.01].
double su2_expansion_residual(long n, const RadialPoint& t);

// Exponent of the envelope of |su2_expansion_residual| over n in [n_lo, n_hi]
// (positive: residual ~ n^{-exponent}).
double su2_residual_exponent(const RadialPoint& t, long n_lo, long n_hi);

// Partial sum to N of the terms that separate the two forms of the SU(2)/SO(2)
// series:
//   (1/n)(sin(t1(2n+1)) + 1)(sin(t2(2n+1)) + 1) - (1/n)(sin(t1(2n+1)) sin(t2(2n+1)) + 1)
//   = (1/n)(sin(t1(2n+1)) + sin(t2(2n+1))).
// Converges for t1, t2 away from 0 mod pi.
double su2_reduction_gap(const RadialPoint& t1, const RadialPoint& t2, long N);

}  // namespace orbsmooth
