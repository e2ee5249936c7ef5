#pragma once

#include <string>
#include <vector>

namespace swarmconn {

enum class PotentialKind { Linear, PiecewiseNonlinear, CustomTable };

/// Edge weight profile r(.) together with its integral P(rho), the potential
/// accumulated along one edge of length rho. The profile must be
/// nondecreasing with r(0) > 0; both built-in kinds satisfy that by
/// construction and tabulated profiles are validated at load.
///
/// Built-in kinds:
///   Linear              r == 1, P(rho) = rho^2/2.
///   PiecewiseNonlinear  r == 1 up to the spread limit, then grows linearly
///                       as s/spread_limit up to the communication radius and
///                       saturates beyond it. P has matching closed forms,
///                       with breakpoint values taken from the closed branch.
///   CustomTable         piecewise-linear interpolation of (s, r) samples on
///                       [0, S_max]; P integrated by adaptive Simpson, which
///                       is exact for the quadratic integrand each segment
///                       produces.
class PotentialSpec {
public:
    static PotentialSpec linear();
    static PotentialSpec piecewise_nonlinear(double spread_limit, double comm_radius);
    static PotentialSpec custom_table(std::vector<double> s, std::vector<double> r);
    /// Two-column CSV with a header row; strictly increasing s starting at 0.
    static PotentialSpec custom_table_from_csv(const std::string& path);

    PotentialKind kind() const { return kind_; }

    /// r(s). Throws OutOfDomainError for a table queried beyond its last sample.
    double weight(double s) const;
    /// P(rho) = integral of r(s)*s over [0, rho].
    double integral(double rho) const;

    double weight_at_zero() const { return weight(0.0); }
    /// Last tabulated abscissa; +inf for the built-in kinds.
    double domain_max() const;

    /// Breakpoints of the PiecewiseNonlinear kind; zero otherwise.
    double spread_limit() const { return spread_limit_; }
    double comm_radius() const { return comm_radius_; }

    const std::vector<double>& table_s() const { return table_s_; }
    const std::vector<double>& table_r() const { return table_r_; }

private:
    PotentialSpec() = default;

    double table_weight(double s) const;
    double table_integral(double rho) const;

    PotentialKind kind_ = PotentialKind::Linear;
    double spread_limit_ = 0.0;
    double comm_radius_ = 0.0;
    std::vector<double> table_s_;
    std::vector<double> table_r_;
};

}  // namespace swarmconn
