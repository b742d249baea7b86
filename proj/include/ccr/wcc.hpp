#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/credit_model.hpp"
#include "ccr/lp_engine.hpp"

namespace ccr {

enum class WccFormulation { kFull, kReduced, kBoth };

WccFormulation wcc_formulation_from_string(const std::string& s);
std::string to_string(WccFormulation f);

// Worst-case joint distribution of (market scenario, credit cell) and the
// tilting measure attaining the CVaR bound.
struct WorstCaseCoupling {
    Matrix psi;              // M x N joint probabilities, marginals (p, q)
    Matrix mu;               // 0 <= mu <= psi, total mass 1 - alpha
    double alpha = 0.0;
    double wcc_cvar = 0.0;   // (1/(1-alpha)) * sum L mu
    WccFormulation formulation = WccFormulation::kReduced;
    double formulation_gap = 0.0; // |full - reduced| objective gap, kBoth only

    struct Certificate {
        LpStatus status = LpStatus::kIterationLimit;
        double objective_value = 0.0;
        double duality_gap = 0.0;
        std::size_t iterations = 0;
        double max_primal_residual = 0.0;
    } certificate;

    std::size_t support_size() const; // cells with mu > 0

    // Throws ValidationError if marginals / mass / bound invariants fail.
    void validate(const std::vector<double>& p, const std::vector<double>& q,
                  const Matrix& losses, double tol_scale = 1.0) const;
};

// The LP exactly as printed: variables (psi row-major, mu row-major),
// rows = M row-sum equalities, N column-sum equalities, total-mu equality,
// then MN cap rows mu_mn - psi_mn <= 0. Objective on mu only (unscaled).
LinearProgram build_full_lp(const LossSurface& L, double alpha);

// Equivalent reduced program over mu alone: row sums <= p, column sums <= q,
// total = 1 - alpha. Any feasible mu extends to a full coupling, so both
// programs share their optimal value.
LinearProgram build_reduced_lp(const LossSurface& L, double alpha);

// Complete a reduced solution to a coupling with exact marginals:
// psi = mu + outer(p - rowsum, q - colsum) / alpha.
Matrix extend_mu_to_psi(const Matrix& mu, const std::vector<double>& p,
                        const std::vector<double>& q);

// Descending-loss greedy fill respecting row/column/total caps. Feasible for
// the reduced LP; a warm-start lower bound on the optimum, exact for 1 x N.
Matrix greedy_upper_start(const LossSurface& L, double alpha);

struct WccOptions {
    SolveOptions lp;
    bool keep_dense_psi = true; // reserved for future sparse output
};

WorstCaseCoupling solve_wcc(const LossSurface& L, double alpha,
                            WccFormulation formulation = WccFormulation::kReduced,
                            const WccOptions& opts = {});

} // namespace ccr
