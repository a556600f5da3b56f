#include "wes/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wes {

Ecdf Ecdf::from_values(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("Ecdf: empty value set");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    Ecdf e;
    const double n = static_cast<double>(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        e.support_.push_back(sorted[i]);
        e.cum_prob_.push_back(static_cast<double>(j) / n);
        i = j;
    }
    return e;
}

Ecdf Ecdf::from_counts(std::span<const std::pair<double, std::uint64_t>> counts) {
    std::vector<std::pair<double, std::uint64_t>> sorted(counts.begin(), counts.end());
    std::erase_if(sorted, [](const auto& p) { return p.second == 0; });
    if (sorted.empty()) throw std::invalid_argument("Ecdf: empty value set");
    std::sort(sorted.begin(), sorted.end());

    std::uint64_t total = 0;
    for (const auto& [x, c] : sorted) total += c;

    Ecdf e;
    std::uint64_t cum = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i].second;
        if (i + 1 < sorted.size() && sorted[i + 1].first == sorted[i].first) continue;
        e.support_.push_back(sorted[i].first);
        e.cum_prob_.push_back(static_cast<double>(cum) / static_cast<double>(total));
    }
    return e;
}

double Ecdf::at(double x) const {
    // last support point <= x
    auto it = std::upper_bound(support_.begin(), support_.end(), x);
    if (it == support_.begin()) return 0.0;
    return cum_prob_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double ks_distance(const Ecdf& f, const Ecdf& g) {
    auto fs = f.support(), gs = g.support();
    double best = 0.0;
    std::size_t i = 0, j = 0;
    double fv = 0.0, gv = 0.0;
    while (i < fs.size() || j < gs.size()) {
        double x;
        if (j == gs.size() || (i < fs.size() && fs[i] <= gs[j]))
            x = fs[i];
        else
            x = gs[j];
        while (i < fs.size() && fs[i] == x) fv = f.cum_prob()[i++];
        while (j < gs.size() && gs[j] == x) gv = g.cum_prob()[j++];
        best = std::max(best, std::abs(fv - gv));
    }
    return best;
}

double rmse(std::span<const double> original, std::span<const double> sampled) {
    if (original.size() != sampled.size())
        throw std::invalid_argument("rmse: length mismatch");
    if (original.empty()) throw std::invalid_argument("rmse: empty input");
    double acc = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        double d = original[i] - sampled[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(original.size()));
}

MeanCi mean_ci(std::span<const double> values, double level) {
    if (values.size() < 2)
        throw std::invalid_argument("mean_ci: need at least two values");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("mean_ci: level must be in (0,1)");

    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double s = std::sqrt(ss / (n - 1.0));

    double t = student_t_quantile(0.5 + level / 2.0, n - 1.0);
    double half = t * s / std::sqrt(n);
    return {mean, mean - half, mean + half};
}

namespace {

// Lentz's continued fraction for the incomplete beta function
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("incomplete_beta: a, b must be > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                   b * std::log1p(-x);
    double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

namespace {

double student_t_cdf(double t, double df) {
    if (t == 0.0) return 0.5;
    double x = df / (df + t * t);
    double p = 0.5 * incomplete_beta(0.5 * df, 0.5, x);
    return t > 0.0 ? 1.0 - p : p;
}

} // namespace

double student_t_quantile(double p, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("student_t_quantile: df must be > 0");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("student_t_quantile: p must be in (0,1)");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -student_t_quantile(1.0 - p, df);

    double hi = 1.0;
    while (student_t_cdf(hi, df) < p) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (student_t_cdf(mid, df) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace wes
