#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/copula_stress.hpp"
#include "ccr/credit_model.hpp"
#include "ccr/risk_measures.hpp"

namespace ccr {

// Counter-based substream generator: every (seed, stream_id, draw_index)
// keys an independent variate sequence, so parallel chunking of draws can
// never reorder the stream.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t draw_index);

    std::uint64_t next_u64();
    // Uniform strictly inside (0,1).
    double next_open01();

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Walker/Vose alias table over the support of a coupling matrix.
// Zero-mass cells are excluded up front and can never be drawn.
class AliasSampler {
public:
    explicit AliasSampler(const Matrix& psi);

    // (m, n) drawn with probability psi_{mn}.
    std::pair<std::size_t, std::size_t> sample(CounterRng& rng) const;

    std::size_t support_size() const { return cells_.size(); }

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells_;
    std::vector<double> threshold_;
    std::vector<std::uint32_t> alias_;
};

// Inverse-CDF draw of a standard normal conditioned to (a, b); a and b may be
// infinite. Falls back to survival-function inversion when the cell mass is
// too small for the direct difference.
double sample_truncated_normal(double a, double b, CounterRng& rng);

struct SimConfig {
    std::size_t n_draws = 0;
    std::uint64_t seed = 0;
    LossKind loss_kind = LossKind::kSystematic;
    std::uint64_t stream_id = 0;

    void validate() const;
};

struct SimResult {
    DiscreteDistribution losses; // empirical law, uniform weights
    // Mean absolute gap between the discretized cell loss L_{mn} and the
    // loss re-evaluated at the drawn Z (systematic mode only).
    double discretization_gap_mean = 0.0;
};

// Three-step simulation: draw a cell from the coupling, draw Z truncated to
// the cell, then evaluate the systematic loss at Z or draw idiosyncratic
// normals and evaluate realized defaults. Deterministic in (seed, stream_id).
SimResult simulate_losses(const Matrix& coupling, const ExposureMatrix& x,
                          const std::vector<Counterparty>& cps, const CreditGrid& grid,
                          const SimConfig& cfg);

} // namespace ccr
