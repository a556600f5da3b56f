#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wes {

/// Empirical cumulative distribution function: a right-continuous step
/// function F(x) = fraction of observations <= x. support is strictly
/// increasing and the final cumulative probability is exactly 1.
class Ecdf {
public:
    static Ecdf from_values(std::span<const double> values);

    /// From (value, multiplicity) pairs; values need not be sorted.
    static Ecdf from_counts(std::span<const std::pair<double, std::uint64_t>> counts);

    double at(double x) const; // right-continuous evaluation

    std::span<const double> support() const noexcept { return support_; }
    std::span<const double> cum_prob() const noexcept { return cum_prob_; }

private:
    std::vector<double> support_;
    std::vector<double> cum_prob_;
};

/// sup_x |F(x) - G(x)|, exact: both step functions are constant between
/// jump points, so the supremum is attained on the union of supports.
double ks_distance(const Ecdf& f, const Ecdf& g);

/// sqrt(mean((original[i] - sampled[i])^2)). Lengths must match.
double rmse(std::span<const double> original, std::span<const double> sampled);

struct MeanCi {
    double mean;
    double lower;
    double upper;
};

/// Student-t confidence interval for the mean: mean +/- t * s / sqrt(n)
/// with n-1 degrees of freedom. Needs at least two values.
MeanCi mean_ci(std::span<const double> values, double level = 0.95);

/// Quantile of Student's t distribution (inverse CDF), df > 0, p in (0,1).
double student_t_quantile(double p, double df);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

} // namespace wes
