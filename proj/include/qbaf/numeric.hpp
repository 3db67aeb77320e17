#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace qbaf {

// Neumaier compensated summation; keeps folds of grid values exact enough that
// branch conditions sitting on round numbers (like an average of exactly 0.5)
// do not flip on accumulation order
inline double stable_sum(const std::vector<double>& values) {
    double sum = 0.0;
    double compensation = 0.0;
    for (double v : values) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            compensation += (sum - t) + v;
        else
            compensation += (v - t) + sum;
        sum = t;
    }
    return sum + compensation;
}

// round half away from zero at `decimals` places; the nudge keeps values that
// are mathematically on a half-way boundary (0.465, 0.50625, ...) rounding up
// even when their double representation lands a few ulps below it
inline double round_to(double v, int decimals) {
    double scale = std::pow(10.0, decimals);
    double scaled = v * scale;
    if (scaled != 0.0) scaled += std::copysign(1e-9, scaled);
    return std::round(scaled) / scale;
}

// shortest decimal that parses back to the same double
inline std::string format_double(double v) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

}  // namespace qbaf
