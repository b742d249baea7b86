#pragma once

#include <string>
#include <vector>

#include "ccr/common.hpp"

namespace ccr {

// Finite loss law: outcomes with nonnegative probabilities summing to ~1.
struct DiscreteDistribution {
    std::vector<double> outcomes;
    std::vector<double> probs;

    void validate() const;
    double mean() const;
};

// Lower alpha-quantile: smallest outcome x with P(L <= x) >= alpha.
double var(const DiscreteDistribution& d, double alpha);

// Tail average above VaR with the VaR atom split fractionally, so that
// cvar(d, alpha) = (1/(1-alpha)) * integral_alpha^1 var_xi dxi exactly
// for step quantile functions.
double cvar(const DiscreteDistribution& d, double alpha);

struct TiltingResult {
    double value = 0.0;
    std::vector<double> weights; // reweighted law G, G_i <= probs_i/(1-alpha)
};

// CVaR via its dual: maximize E_G[L] over laws G with density bounded by
// 1/(1-alpha). Greedy fill of the bound, outcomes taken in decreasing order.
TiltingResult cvar_by_tilting(const DiscreteDistribution& d, double alpha);

enum class EcMode { kCvarMinusEl, kVarMinusEl, kCvar, kVar };

EcMode ec_mode_from_string(const std::string& s);
std::string to_string(EcMode mode);

double economic_capital(const DiscreteDistribution& d, double alpha,
                        EcMode mode = EcMode::kCvarMinusEl);

// alpha = EC_total / EC_epe. No regulatory floor is applied.
double alpha_multiplier(double ec_total, double ec_epe);

} // namespace ccr
