#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/portfolio_data.hpp"

namespace ccr {

// Standard normal CDF. Accurate to a few ulp via erfc.
double norm_cdf(double x);
// Standard normal survival function 1 - Phi(x), accurate in the right tail.
double norm_sf(double x);
// Standard normal density.
double norm_pdf(double x);
// Inverse standard normal CDF for p in (0,1). Throws ValidationError at 0/1.
double norm_inv(double p);

// Discretization of the systematic factor Z. Cell n spans
// (boundary[n-1], boundary[n]] with boundary[0] = -inf and boundary[N] = +inf;
// interior boundaries are equally spaced in [z_lo, z_hi] and the tail mass
// beyond that interval is absorbed into the first/last cell.
class CreditGrid {
public:
    CreditGrid(std::vector<double> interior_points, std::vector<double> cell_probs,
               std::vector<double> cell_reps);

    std::size_t n_cells() const { return cell_probs_.size(); }
    const std::vector<double>& interior_points() const { return interior_points_; }
    const std::vector<double>& cell_probs() const { return cell_probs_; }
    const std::vector<double>& cell_reps() const { return cell_reps_; }

    // Lower/upper boundary of cell n (may be +-inf).
    double lower_boundary(std::size_t n) const;
    double upper_boundary(std::size_t n) const;

private:
    std::vector<double> interior_points_; // strictly increasing, size N-1
    std::vector<double> cell_probs_;      // q_n > 0, sums to 1 exactly
    std::vector<double> cell_reps_;       // conditional mean of Z within each cell
};

CreditGrid build_credit_grid(std::size_t n_cells, double z_lo = -5.0, double z_hi = 5.0);

// M x N matrix of systematic losses per (market scenario, credit cell),
// together with both marginals.
struct LossSurface {
    Matrix values;                    // L_{mn} >= 0
    std::vector<double> market_probs; // p, length M
    std::vector<double> credit_probs; // q, length N

    std::size_t n_market() const { return values.rows(); }
    std::size_t n_credit() const { return values.cols(); }
    double max_abs() const;
};

// P(default | Z = z) under the one-factor Gaussian copula.
double conditional_pd(const Counterparty& cp, double z);
double conditional_pd(double pd, double rho, double z);

// L_{mn} = sum_k lgd_k * y_{km} * conditional_pd(k, rep_n).
LossSurface systematic_loss_surface(const ExposureMatrix& x,
                                    const std::vector<Counterparty>& cps,
                                    const CreditGrid& grid);

// Systematic loss for one market scenario at continuous factor value z.
double systematic_loss_at(const ExposureMatrix& x, const std::vector<Counterparty>& cps,
                          std::size_t scenario, double z);

// Creditworthiness index: sqrt(rho) z + sqrt(1-rho) eps.
double cwi(double z, double eps, double rho);

// Realized loss sum_k lgd_k y_k 1{cwi_k <= Phi^-1(pd_k)} for one scenario.
double total_loss(std::span<const double> exposures, const std::vector<Counterparty>& cps,
                  double z, std::span<const double> eps);

struct BaselInputs {
    double ead = 0.0;
    double lgd = 1.0;
    double pd = 0.0;
    double rho = 0.0;
    double maturity_adjustment = 1.0;
    double tail_level = 0.999;

    void validate() const;
};

// EAD * LGD * Phi((Phi^-1(PD) + sqrt(rho) Phi^-1(tail)) / sqrt(1-rho)) * MA.
double basel_capital(const BaselInputs& b);

} // namespace ccr
