#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ccr/common.hpp"

namespace ccr {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { kEq, kLe, kGe };

// Sparse LP in row form. Objective sense is MAXIMIZE.
// Default variable bounds are [0, +inf).
class LinearProgram {
public:
    struct Entry {
        std::size_t var;
        double coeff;
    };
    struct Row {
        std::vector<Entry> coeffs;
        RowSense sense = RowSense::kEq;
        double rhs = 0.0;
    };

    explicit LinearProgram(std::size_t n_vars);

    std::size_t n_vars() const { return n_vars_; }
    std::size_t n_rows() const { return rows_.size(); }

    void set_objective(std::size_t var, double coeff);
    std::size_t add_row(RowSense sense, double rhs);
    void add_coeff(std::size_t row, std::size_t var, double coeff);
    void set_bounds(std::size_t var, double lo, double hi);

    const std::vector<double>& objective() const { return objective_; }
    const std::vector<Row>& rows() const { return rows_; }
    double lower_bound(std::size_t var) const { return lo_[var]; }
    double upper_bound(std::size_t var) const { return hi_[var]; }

private:
    std::size_t n_vars_;
    std::vector<double> objective_;
    std::vector<Row> rows_;
    std::vector<double> lo_;
    std::vector<double> hi_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::kIterationLimit;
    std::vector<double> primal; // structural variables
    std::vector<double> dual;   // one multiplier per row, maximize sense
    double objective_value = 0.0;
    double duality_gap = 0.0;
    std::size_t iterations = 0;
    double max_primal_residual = 0.0;
};

struct SolveOptions {
    double feas_tol = 1e-9;
    double opt_tol = 1e-8;
    std::size_t max_iters = 0;    // 0 = choose from problem size
    double time_limit_sec = 0.0;  // 0 = unlimited
};

// Two-phase revised simplex with bounded variables. Deterministic
// largest-coefficient pricing with index tie-break; Bland's rule engages
// after a streak of 50 degenerate pivots.
LpSolution solve(const LinearProgram& lp, const SolveOptions& opts = {});

// Independent recomputation of feasibility residuals and the duality gap
// from (lp, sol) alone. Used by tests as the optimality oracle.
struct CertificateReport {
    double max_row_residual = 0.0;
    double max_bound_violation = 0.0;
    double dual_sign_violation = 0.0; // wrong-signed row duals
    double dual_feasibility_violation = 0.0; // reduced costs pointing out of bounds
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double duality_gap = 0.0;
};

CertificateReport check_certificate(const LinearProgram& lp, const LpSolution& sol);

// Fixed-format MPS export. MPS is minimize-by-convention, so the objective
// is negated on write; a comment record documents this.
void export_mps(const LinearProgram& lp, const std::string& path,
                const std::string& name = "CCRBOUND");

} // namespace ccr
