#include "orbsmooth/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbsmooth {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    fit.points = static_cast<int>(x.size());
    return fit;
}

LineFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_power_law: size mismatch");
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_power_law: non-positive sample");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return fit_line(lx, ly);
}

std::vector<long> log_spaced_indices(long lo, long hi, int count) {
    if (lo < 1 || hi < lo || count < 2) throw std::invalid_argument("log_spaced_indices: bad range");
    std::vector<long> out;
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(hi));
    for (int i = 0; i < count; ++i) {
        const long v = std::lround(std::exp(llo + (lhi - llo) * i / (count - 1)));
        if (out.empty() || v > out.back()) out.push_back(std::clamp(v, lo, hi));
    }
    return out;
}

std::vector<WindowMaximum> windowed_maxima(std::span<const double> values, long first, long lo, long hi,
                                           int windows, long min_width) {
    if (lo < first || hi >= first + static_cast<long>(values.size()) || hi <= lo || windows < 1)
        throw std::invalid_argument("windowed_maxima: window range outside the samples");
    std::vector<long> edges;
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(hi + 1));
    edges.push_back(lo);
    for (int i = 1; i <= windows; ++i) {
        const long e = std::lround(std::exp(llo + (lhi - llo) * i / windows));
        if (e - edges.back() >= min_width || i == windows) edges.push_back(std::min(e, hi + 1));
    }
    if (edges.back() != hi + 1) edges.push_back(hi + 1);

    std::vector<WindowMaximum> out;
    for (std::size_t w = 0; w + 1 < edges.size(); ++w) {
        WindowMaximum best{edges[w], -1.0};
        for (long k = edges[w]; k < edges[w + 1]; ++k) {
            const double v = std::abs(values[static_cast<std::size_t>(k - first)]);
            if (v > best.value) best = {k, v};
        }
        if (best.value >= 0.0 && edges[w + 1] > edges[w]) out.push_back(best);
    }
    return out;
}

}  // namespace orbsmooth
