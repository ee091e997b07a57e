#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vibesep {

inline constexpr double kPi = 3.14159265358979323846;

/// Half-open index range [begin, end) of samples that carry meaningful data.
/// Convolution edges and predictor warm-up regions fall outside it.
struct ValidRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t length() const { return end > begin ? end - begin : 0; }
    bool contains(std::size_t i) const { return i >= begin && i < end; }
    ValidRange intersect(const ValidRange& o) const {
        ValidRange r{std::max(begin, o.begin), std::min(end, o.end)};
        if (r.end < r.begin) r.end = r.begin;
        return r;
    }
    bool operator==(const ValidRange&) const = default;
};

inline double mean(const std::vector<double>& x, ValidRange r) {
    if (r.length() == 0) throw std::invalid_argument("mean: empty range");
    double s = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) s += x[i];
    return s / static_cast<double>(r.length());
}

inline double mean(const std::vector<double>& x) {
    return mean(x, {0, x.size()});
}

/// Mean square (signal power). The paper's ||.||^2 norms are powers, not sums:
/// they sit next to plain variances in the SNR definitions.
inline double mean_square(const std::vector<double>& x, ValidRange r) {
    if (r.length() == 0) throw std::invalid_argument("mean_square: empty range");
    double s = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) s += x[i] * x[i];
    return s / static_cast<double>(r.length());
}

inline double mean_square(const std::vector<double>& x) {
    return mean_square(x, {0, x.size()});
}

inline double variance(const std::vector<double>& x, ValidRange r) {
    const double m = mean(x, r);
    double s = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) {
        const double d = x[i] - m;
        s += d * d;
    }
    return s / static_cast<double>(r.length());
}

inline double variance(const std::vector<double>& x) {
    return variance(x, {0, x.size()});
}

inline double rms(const std::vector<double>& x, ValidRange r) {
    return std::sqrt(mean_square(x, r));
}

inline bool all_finite(const std::vector<double>& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

/// Full linear convolution cropped to the input length, treating filter tap
/// `center` as the zero-delay reference: out[t] = sum_k h[k] * x[t + center - k].
/// Samples outside x are taken as zero.
inline std::vector<double> convolve_same(const std::vector<double>& x,
                                         const std::vector<double>& h,
                                         std::size_t center) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(h.size());
    const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(center);
    std::vector<double> out(x.size(), 0.0);
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        const double hk = h[static_cast<std::size_t>(k)];
        if (hk == 0.0) continue;
        const std::ptrdiff_t shift = c - k;  // out[t] += hk * x[t + shift]
        const std::ptrdiff_t t0 = std::max<std::ptrdiff_t>(0, -shift);
        const std::ptrdiff_t t1 = std::min<std::ptrdiff_t>(n, n - shift);
        for (std::ptrdiff_t t = t0; t < t1; ++t)
            out[static_cast<std::size_t>(t)] += hk * x[static_cast<std::size_t>(t + shift)];
    }
    return out;
}

/// Error thrown by the analysis pipeline, tagged with the stage that failed.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace vibesep
