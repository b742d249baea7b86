#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ccr/common.hpp"

namespace ccr {

// Static data of a single counterparty in the single-factor credit model.
struct Counterparty {
    std::string id;
    double pd = 0.0;                    // default probability, in (0,1)
    double rho = 0.0;                   // systematic factor loading, in [0,1)
    double lgd = 1.0;                   // loss given default, in [0,1]
    std::optional<double> ead_override; // fixed exposure-at-default, if any

    void validate() const; // throws ValidationError on range violations
};

// Per-counterparty exposures across M market scenarios with scenario
// probabilities. Exposures are pre-simulated inputs; this class only
// validates and serves them.
class ExposureMatrix {
public:
    ExposureMatrix(std::vector<std::string> counterparty_ids, Matrix exposures,
                   std::vector<double> probs);

    const std::vector<std::string>& counterparty_ids() const { return ids_; }
    const Matrix& exposures() const { return exposures_; }
    const std::vector<double>& probs() const { return probs_; }

    std::size_t n_counterparties() const { return exposures_.rows(); }
    std::size_t n_scenarios() const { return exposures_.cols(); }

    // y_{km} for counterparty k, scenario m.
    double exposure(std::size_t k, std::size_t m) const { return exposures_(k, m); }

    // T_m = sum_k y_{km}
    std::vector<double> scenario_totals() const;
    // EPE_k = sum_m p_m y_{km}
    std::vector<double> mean_exposures() const;
    // Single-scenario matrix with every counterparty at its mean exposure.
    ExposureMatrix collapse_to_epe() const;

private:
    std::vector<std::string> ids_;
    Matrix exposures_; // K x M
    std::vector<double> probs_;
};

enum class ProbsMode { kUniform, kExplicit };

// Exposure CSV: header `counterparty_id,s1,...,sM`, one row per counterparty,
// optional trailing `__probs__,p1,...,pM` row (required in explicit mode).
ExposureMatrix load_exposures(const std::string& path, ProbsMode mode);

// Counterparty CSV: header `counterparty_id,pd,rho,lgd,ead_override`;
// lgd and ead_override may be empty (lgd defaults to 1).
std::vector<Counterparty> load_counterparties(const std::string& path);

struct ConcentrationReport {
    double herfindahl = 0.0;                        // H_N of the top_n largest weights
    double effective_counterparties = 0.0;          // 1 / H_N
    std::size_t top_n = 0;                          // after clamping to K
    std::vector<double> sorted_weights;             // all K weights, decreasing
    std::vector<double> cumulative_exposure_share;  // running share of total, length K
};

// Herfindahl concentration of the top_n largest entries of epe.
// top_n is clamped to the vector length.
ConcentrationReport concentration(const std::vector<double>& epe, std::size_t top_n);

struct ExposureBandRow {
    std::string id;
    double mean = 0.0;
    double p5_pct_of_mean = 0.0;  // 5% weighted quantile as % of mean
    double p95_pct_of_mean = 0.0; // 95% weighted quantile as % of mean
};

struct ExposureBandReport {
    std::vector<ExposureBandRow> rows;       // sorted by decreasing mean exposure
    std::vector<std::string> zero_mean_ids;  // excluded counterparties
};

ExposureBandReport exposure_band_report(const ExposureMatrix& x);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    double mass = 0.0; // probability-weighted scenario mass
};

// Equal-width histogram of per-scenario total exposures.
std::vector<HistogramBin> total_exposure_histogram(const ExposureMatrix& x, std::size_t bins);

// Smallest value whose cumulative weight reaches `level` (lower quantile).
// Weights must be nonnegative and sum to ~1.
double weighted_lower_quantile(std::vector<double> values, std::vector<double> weights,
                               double level);

} // namespace ccr
