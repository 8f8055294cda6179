#include "orbsmooth/plancherel.hpp"

#include "orbsmooth/dimension.hpp"
#include "orbsmooth/fitting.hpp"
#include "orbsmooth/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace orbsmooth {

namespace {

constexpr long kChunk = 1L << 15;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_points(std::span<const RadialPoint> points) {
    if (points.empty() || points.size() > 3)
        throw std::invalid_argument("norm series needs between one and three points");
}

std::vector<long> checkpoint_schedule(const SeriesSchedule& s) {
    std::vector<long> out;
    double v = static_cast<double>(std::max<long>(1, s.n0));
    while (true) {
        const long N = static_cast<long>(std::ceil(v - 1e-9));
        if (N >= s.n_max) break;
        if (out.empty() || N > out.back()) out.push_back(N);
        v *= s.ratio;
    }
    out.push_back(s.n_max);
    return out;
}

// Runs fn(lo, hi) over [0, count) split into `threads` contiguous pieces.
template <class Fn>
void parallel_ranges(std::size_t count, int threads, Fn fn) {
    if (threads <= 1 || count < 4096) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t step = (count + threads - 1) / threads;
    for (std::size_t lo = 0; lo < count; lo += step) {
        const std::size_t hi = std::min(count, lo + step);
        pool.emplace_back([=] { fn(lo, hi); });
    }
}

// Streams dim V_{pi_n} prod |phi_{pi_n}(t_i)|^2 in ascending n.
class PlancherelTerms {
public:
    PlancherelTerms(const SymmetricSpace& space, std::span<const RadialPoint> points, int threads)
        : dim_(jacobi_params(space)), threads_(threads) {
        for (const auto& p : points) {
            seqs_.push_back(spherical_sequence(space, p));
            seqs_.back().advance();  // the series starts at n = 1
        }
    }

    void operator()(long first, std::span<double> out) {
        phi_squared_.resize(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            double prod = 1.0;
            for (auto& s : seqs_) {
                if (s.index() != first + static_cast<long>(i))
                    throw std::logic_error("Plancherel terms requested out of order");
                prod *= s.value() * s.value();
                s.advance();
            }
            phi_squared_[i] = prod;
        }
        parallel_ranges(out.size(), threads_, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const long n = first + static_cast<long>(i);
                const double d = dim_(n);
                if (std::isfinite(d) || phi_squared_[i] == 0.0) {
                    out[i] = phi_squared_[i] == 0.0 ? 0.0 : d * phi_squared_[i];
                } else {
                    out[i] = std::exp(dim_.log_value(n) + std::log(phi_squared_[i]));
                }
            }
        });
    }

private:
    SphericalDimension dim_;
    int threads_;
    std::vector<JacobiSequence> seqs_;
    std::vector<double> phi_squared_;
};

SeriesVerdict expected_verdict(bool l2) { return l2 ? SeriesVerdict::Convergent : SeriesVerdict::Divergent; }

void check_su2_point(const RadialPoint& t) {
    if (!(t.t >= 1e-2 && t.t <= std::numbers::pi - 1e-2))
        throw std::domain_error("SU(2)/SO(2) expansion needs t in [0.01, pi - 0.01]");
}

double sin_of_multiple(const RadialPoint& x, long k) {
    if (x.exact) {
        const PiMultiple m = PiMultiple::make(x.exact->num, x.exact->den);
        // Reduce k * num modulo 2 den before forming the angle.
        const std::int64_t period = 2 * m.den;
        std::int64_t r = ((k % period) * (m.num % period)) % period;
        if (r < 0) r += period;
        return RadialPoint::pi_multiple(r, m.den).sin_multiple(1);
    }
    return std::sin(static_cast<double>(k) * x.t);
}

double cos_of_multiple(const RadialPoint& x, long k) {
    if (x.exact) {
        const PiMultiple m = PiMultiple::make(x.exact->num, x.exact->den);
        const std::int64_t period = 2 * m.den;
        std::int64_t r = ((k % period) * (m.num % period)) % period;
        if (r < 0) r += period;
        return RadialPoint::pi_multiple(r, m.den).cos_multiple(1);
    }
    return std::cos(static_cast<double>(k) * x.t);
}

// x reduced to [0, 2 pi), plus whether it sits on the lattice 2 pi Z.
struct ReducedAngle {
    double value;
    bool on_lattice;
};

ReducedAngle reduce_two_pi(const RadialPoint& x) {
    if (x.exact) {
        const std::int64_t period = 2 * x.exact->den;
        std::int64_t r = x.exact->num % period;
        if (r < 0) r += period;
        return {std::numbers::pi * static_cast<double>(r) / static_cast<double>(x.exact->den), r == 0};
    }
    double v = std::fmod(x.t, 2.0 * std::numbers::pi);
    if (v < 0.0) v += 2.0 * std::numbers::pi;
    return {v, v == 0.0};
}

}  // namespace

std::string_view to_string(SeriesVerdict v) {
    switch (v) {
    case SeriesVerdict::Convergent: return "Convergent";
    case SeriesVerdict::Divergent: return "Divergent";
    case SeriesVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

double norm_series_term(const SymmetricSpace& space, long n, std::span<const RadialPoint> points) {
    check_points(points);
    if (n < 1) throw std::invalid_argument("norm_series_term: n must be >= 1");
    double prod = 1.0;
    for (const auto& p : points) {
        const double phi = spherical_function(space, n, p).value;
        prod *= phi * phi;
    }
    return dim_spherical(space, n).dim * prod;
}

SeriesTrace accumulate_series(const TermBlockFn& terms, const SeriesSchedule& schedule) {
    if (schedule.n_max < 1 || schedule.n_max > kMaxSeriesLength)
        throw std::invalid_argument("series length must lie in [1, " + std::to_string(kMaxSeriesLength) + "]");
    if (!(schedule.ratio > 1.0)) throw std::invalid_argument("checkpoint ratio must exceed 1");

    SeriesTrace trace;
    trace.n_max = schedule.n_max;
    const std::vector<long> marks = checkpoint_schedule(schedule);
    std::size_t next_mark = 0;

    CompensatedSum total;
    CompensatedSum interval;
    long interval_start = 1;
    CompensatedSum block;
    int block_index = 0;
    long block_first = 1;
    long block_last = 1;  // 2^{j+1} - 1

    std::vector<double> buffer;
    for (long first = 1; first <= schedule.n_max; first += kChunk) {
        const long last = std::min(schedule.n_max, first + kChunk - 1);
        buffer.assign(static_cast<std::size_t>(last - first + 1), 0.0);
        terms(first, buffer);
        for (std::size_t i = 0; i < buffer.size(); ++i) {
            const long n = first + static_cast<long>(i);
            const double a = buffer[i];
            total.add(a);
            interval.add(a);
            block.add(a);
            if (n == block_last) {
                trace.block_means.push_back(
                    {block_index, block_first, block_last, block.value() / static_cast<double>(block_last - block_first + 1)});
                block = CompensatedSum{};
                ++block_index;
                block_first = block_last + 1;
                block_last = 2 * block_first - 1;
            }
            if (next_mark < marks.size() && n == marks[next_mark]) {
                trace.checkpoints.push_back(
                    {n, total.value(), interval.value() / static_cast<double>(n - interval_start + 1)});
                trace.terms_sampled.push_back({n, a});
                interval = CompensatedSum{};
                interval_start = n + 1;
                ++next_mark;
            }
        }
    }
    return trace;
}

SeriesTrace partial_sums(const SymmetricSpace& space, std::span<const RadialPoint> points,
                         const SeriesSchedule& schedule) {
    check_points(points);
    PlancherelTerms gen(space, points, schedule.threads);
    return accumulate_series([&gen](long first, std::span<double> out) { gen(first, out); }, schedule);
}

SeriesDiagnosis diagnose(const SeriesTrace& trace) {
    if (static_cast<int>(trace.block_means.size()) < kMinDyadicBlocks)
        throw std::invalid_argument("diagnose needs at least " + std::to_string(kMinDyadicBlocks) +
                                    " complete dyadic blocks");
    SeriesDiagnosis d;

    const std::size_t nb = trace.block_means.size();
    std::vector<double> bx, by;
    for (std::size_t i = nb / 2; i < nb; ++i) {
        const auto& b = trace.block_means[i];
        if (!(b.mean > 0.0)) continue;
        bx.push_back(std::log(static_cast<double>(b.first)));
        by.push_back(std::log(b.mean));
    }
    bool have_tail = bx.size() >= 2;
    if (have_tail) {
        d.tail_exponent = fit_line(bx, by).slope;
        d.blocks_used = static_cast<int>(bx.size());
    }

    const std::size_t nc = trace.checkpoints.size();
    std::vector<double> cx, cy;
    for (std::size_t i = nc / 2; i < nc; ++i) {
        cx.push_back(std::log(static_cast<double>(trace.checkpoints[i].N)));
        cy.push_back(trace.checkpoints[i].partial_sum);
    }
    if (cx.size() >= 2) {
        const LineFit f = fit_line(cx, cy);
        d.log_slope = f.slope;
        d.r_squared = f.r_squared;
        d.checkpoints_used = f.points;
    }

    if (have_tail && d.tail_exponent <= -1.0 - kVerdictMargin)
        d.verdict = SeriesVerdict::Convergent;
    else if ((have_tail && d.tail_exponent >= -1.0 + kVerdictMargin) ||
             (d.log_slope > 0.0 && d.r_squared >= kLogFitMinRSquared))
        d.verdict = SeriesVerdict::Divergent;
    else
        d.verdict = SeriesVerdict::Inconclusive;
    return d;
}

LogGrowthFit fit_log_growth(const SeriesTrace& trace, long n_lo, long n_hi) {
    std::vector<double> x, y;
    for (const auto& c : trace.checkpoints) {
        if (c.N < n_lo || c.N > n_hi) continue;
        x.push_back(std::log(static_cast<double>(c.N)));
        y.push_back(c.partial_sum);
    }
    const LineFit f = fit_line(x, y);
    return {f.slope, f.intercept, f.r_squared, f.points};
}

ConsistencyReport crosscheck(const SymmetricSpace& space, std::span<const RadialPoint> points,
                             const SeriesSchedule& schedule, double eps) {
    check_points(points);
    ConsistencyReport r;
    switch (points.size()) {
    case 1: {
        // mu_z alone is singular, so its L2 norm is never finite.
        r.closed_form.classes = {classify_point(space, points[0], eps)};
        r.closed_form.l1 = r.closed_form.l2 = false;
        break;
    }
    case 2: r.closed_form = decide_pair(space, points[0], points[1], eps); break;
    default: r.closed_form = decide_triple(space, points[0], points[1], points[2], eps); break;
    }
    r.closed_form_l2 = r.closed_form.l2;
    r.expected = expected_verdict(r.closed_form_l2);
    r.trace = partial_sums(space, points, schedule);
    r.diagnosis = diagnose(r.trace);
    r.agree = r.diagnosis.verdict == r.expected;
    return r;
}

double trig_series_limit(const RadialPoint& x, TrigKind kind) {
    const ReducedAngle r = reduce_two_pi(x);
    if (kind == TrigKind::Sine) {
        if (r.on_lattice) return 0.0;
        return 0.5 * (std::numbers::pi - r.value);
    }
    if (r.on_lattice) throw std::domain_error("cosine series diverges at x = 0 mod 2 pi");
    return -std::log(2.0 * std::sin(0.5 * r.value));
}

double trig_series_reference(const RadialPoint& x, long N, TrigKind kind) {
    if (N < 1) throw std::invalid_argument("trig_series_reference: N must be >= 1");
    if (kind == TrigKind::Cosine && reduce_two_pi(x).on_lattice)
        throw std::domain_error("cosine series diverges at x = 0 mod 2 pi");
    CompensatedSum sum;
    for (long n = 1; n <= N; ++n) {
        const double v = kind == TrigKind::Sine ? sin_of_multiple(x, n) : cos_of_multiple(x, n);
        sum.add(v / static_cast<double>(n));
    }
    return sum.value();
}

double su2_expansion_residual(long n, const RadialPoint& t) {
    check_su2_point(t);
    if (n < 1) throw std::invalid_argument("su2_expansion_residual: n must be >= 1");
    const SymmetricSpace circle = make_space(Family::AI);
    const double phi = spherical_function(circle, n, t).value;
    const double nn = static_cast<double>(n);
    return nn * phi * phi * std::numbers::pi * t.sin_multiple(1) - (1.0 + sin_of_multiple(t, 2 * n + 1));
}

double su2_residual_exponent(const RadialPoint& t, long n_lo, long n_hi) {
    check_su2_point(t);
    if (n_lo < 1 || n_hi <= n_lo) throw std::invalid_argument("su2_residual_exponent: bad range");
    const SymmetricSpace circle = make_space(Family::AI);
    JacobiSequence seq = spherical_sequence(circle, t);
    while (seq.index() < n_lo) seq.advance();
    const double s = std::numbers::pi * t.sin_multiple(1);
    std::vector<double> residual(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::size_t i = 0; i < residual.size(); ++i) {
        const long n = seq.index();
        const double phi = seq.value();
        residual[i] = static_cast<double>(n) * phi * phi * s - (1.0 + sin_of_multiple(t, 2 * n + 1));
        seq.advance();
    }
    const double theta = std::min(t.t, std::numbers::pi - t.t);
    const long width = static_cast<long>(std::ceil(2.0 * std::numbers::pi / theta));
    const auto maxima = windowed_maxima(residual, n_lo, n_lo, n_hi, 30, width);
    std::vector<double> xs, ys;
    for (const auto& m : maxima) {
        if (m.value <= 0.0) continue;
        xs.push_back(static_cast<double>(m.index));
        ys.push_back(m.value);
    }
    return -fit_power_law(xs, ys).slope;
}

double su2_reduction_gap(const RadialPoint& t1, const RadialPoint& t2, long N) {
    if (N < 1) throw std::invalid_argument("su2_reduction_gap: N must be >= 1");
    CompensatedSum full, reduced;
    for (long n = 1; n <= N; ++n) {
        const double s1 = sin_of_multiple(t1, 2 * n + 1);
        const double s2 = sin_of_multiple(t2, 2 * n + 1);
        const double inv = 1.0 / static_cast<double>(n);
        full.add(inv * (s1 + 1.0) * (s2 + 1.0));
        reduced.add(inv * (s1 * s2 + 1.0));
    }
    return full.value() - reduced.value();
}

}  // namespace orbsmooth
