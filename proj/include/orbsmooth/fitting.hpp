#pragma once

#include <span>
#include <vector>

namespace orbsmooth {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points = 0;
};

// Ordinary least squares y ~ intercept + slope * x.
// Throws std::invalid_argument for fewer than two points or mismatched sizes.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Fits log(y) against log(x); all inputs must be positive.
LineFit fit_power_law(std::span<const double> x, std::span<const double> y);

// Integer sample points spaced evenly in log between lo and hi (inclusive),
// duplicates removed.
std::vector<long> log_spaced_indices(long lo, long hi, int count);

// Maxima of |values[i]| over log-spaced windows; values[i] belongs to index
// first + i. Windows shorter than min_width indices are merged forward.
struct WindowMaximum {
    long index = 0;
    double value = 0.0;
};

std::vector<WindowMaximum> windowed_maxima(std::span<const double> values, long first, long lo, long hi,
                                           int windows, long min_width);

}  // namespace orbsmooth
