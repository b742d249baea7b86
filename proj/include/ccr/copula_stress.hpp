#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/credit_model.hpp"
#include "ccr/portfolio_data.hpp"

namespace ccr {

// Bivariate standard normal CDF P(X <= h, Y <= k) with correlation r.
// |r| < 1 required; callers handle the comonotone limits separately.
// Absolute error below 5e-8 (Gauss-Legendre on the tetrachoric integral).
double bivariate_normal_cdf(double h, double k, double r);

enum class ScenarioSortKey { kTotalExposure };

// Permutation ordering scenarios by ascending total exposure, ties broken by
// original index. perm[i] = original scenario at sorted position i.
std::vector<std::size_t> sort_scenarios(const ExposureMatrix& x,
                                        ScenarioSortKey key = ScenarioSortKey::kTotalExposure);

// Gaussian-copula coupling of the sorted market marginal with the credit
// grid. Cell (i, n) holds the copula mass of rectangle
// [cum_p(i-1), cum_p(i)] x [Z-cell n]. Positive r couples high exposure with
// low Z (the wrong-way direction). r = +-1 are the comonotone/antimonotone
// mass-transport limits; r = 0 is the exact product measure.
Matrix copula_coupling(const std::vector<double>& sorted_p, const CreditGrid& grid, double r);

enum class LossKind { kSystematic, kTotal };

LossKind loss_kind_from_string(const std::string& s);
std::string to_string(LossKind k);

struct RatioCurve {
    std::vector<double> correlations;
    std::vector<double> ratios; // cvar(comparator) / cvar(worst case)
    double alpha = 0.0;
    LossKind loss_kind = LossKind::kSystematic;

    double min_ratio() const;
    double max_ratio() const;
};

// Sweep the copula correlation grid: per r, couple the sorted market marginal
// with the credit grid, flatten against L, take CVaR and divide by the
// worst-case bound. perm comes from sort_scenarios on the ungated exposures.
RatioCurve ratio_curve(const LossSurface& L, const std::vector<std::size_t>& perm,
                       double wcc_cvar, double alpha, const std::vector<double>& r_grid);

} // namespace ccr
