#include "swarmconn/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "swarmconn/errors.hpp"

namespace swarmconn {

PotentialSpec PotentialSpec::linear() {
    PotentialSpec p;
    p.kind_ = PotentialKind::Linear;
    return p;
}

PotentialSpec PotentialSpec::piecewise_nonlinear(double spread_limit, double comm_radius) {
    if (!(spread_limit > 0.0) || !(spread_limit < comm_radius))
        throw std::invalid_argument("piecewise_nonlinear: need 0 < spread limit < comm radius");
    PotentialSpec p;
    p.kind_ = PotentialKind::PiecewiseNonlinear;
    p.spread_limit_ = spread_limit;
    p.comm_radius_ = comm_radius;
    return p;
}

PotentialSpec PotentialSpec::custom_table(std::vector<double> s, std::vector<double> r) {
    if (s.size() != r.size()) throw std::invalid_argument("custom_table: column lengths differ");
    if (s.size() < 2) throw std::invalid_argument("custom_table: need at least two samples");
    if (s.front() != 0.0) throw std::invalid_argument("custom_table: first abscissa must be 0");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!std::isfinite(s[k]) || !std::isfinite(r[k]))
            throw std::invalid_argument("custom_table: non-finite sample");
        if (k > 0 && !(s[k] > s[k - 1]))
            throw std::invalid_argument("custom_table: abscissas must be strictly increasing");
        if (k > 0 && r[k] < r[k - 1])
            throw std::invalid_argument("custom_table: weight samples must be nondecreasing");
    }
    if (!(r.front() > 0.0)) throw std::invalid_argument("custom_table: weight at 0 must be positive");

    PotentialSpec p;
    p.kind_ = PotentialKind::CustomTable;
    p.table_s_ = std::move(s);
    p.table_r_ = std::move(r);

    // Monotonicity holds knot-to-knot, so the interpolant inherits it; the
    // grid pass below is the load-time contract check on the interpolant
    // itself.
    const double s_max = p.table_s_.back();
    double prev = p.table_weight(0.0);
    for (int k = 1; k < 1000; ++k) {
        const double cur = p.table_weight(s_max * k / 999.0);
        if (cur < prev - 1e-12)
            throw std::invalid_argument("custom_table: interpolant is decreasing");
        prev = cur;
    }
    return p;
}

PotentialSpec PotentialSpec::custom_table_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("weight table: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("weight table: empty file " + path);
    // First line is a header; require it to be non-numeric so a missing
    // header cannot silently swallow the first sample.
    {
        std::istringstream probe(line);
        double v;
        if (probe >> v) throw ConfigError("weight table: missing header row in " + path);
    }

    std::vector<double> s, r;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double sv, rv;
        if (!(row >> sv >> rv))
            throw ConfigError("weight table: bad row at line " + std::to_string(line_no) + " of " + path);
        std::string extra;
        if (row >> extra)
            throw ConfigError("weight table: too many columns at line " + std::to_string(line_no) + " of " + path);
        s.push_back(sv);
        r.push_back(rv);
    }
    try {
        return custom_table(std::move(s), std::move(r));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weight table: ") + e.what() + " in " + path);
    }
}

double PotentialSpec::weight(double s) const {
    if (!(s >= 0.0)) throw std::invalid_argument("weight: distance must be nonnegative");
    switch (kind_) {
        case PotentialKind::Linear:
            return 1.0;
        case PotentialKind::PiecewiseNonlinear:
            if (s <= spread_limit_) return 1.0;
            if (s <= comm_radius_) return s / spread_limit_;
            return comm_radius_ / spread_limit_;
        case PotentialKind::CustomTable:
            return table_weight(s);
    }
    return 1.0;  // unreachable
}

double PotentialSpec::table_weight(double s) const {
    if (s > table_s_.back())
        throw OutOfDomainError("weight: distance beyond the tabulated range");
    auto it = std::upper_bound(table_s_.begin(), table_s_.end(), s);
    if (it == table_s_.begin()) return table_r_.front();
    if (it == table_s_.end()) return table_r_.back();
    const std::size_t k = static_cast<std::size_t>(it - table_s_.begin()) - 1;
    const double t = (s - table_s_[k]) / (table_s_[k + 1] - table_s_[k]);
    return table_r_[k] + t * (table_r_[k + 1] - table_r_[k]);
}

double PotentialSpec::integral(double rho) const {
    if (!(rho >= 0.0)) throw std::invalid_argument("integral: distance must be nonnegative");
    switch (kind_) {
        case PotentialKind::Linear:
            return 0.5 * rho * rho;
        case PotentialKind::PiecewiseNonlinear: {
            const double a = spread_limit_;
            const double b = comm_radius_;
            if (rho <= a) return 0.5 * rho * rho;
            if (rho <= b) return 0.5 * a * a + (rho * rho * rho - a * a * a) / (3.0 * a);
            const double at_b = 0.5 * a * a + (b * b * b - a * a * a) / (3.0 * a);
            return at_b + (b / a) * 0.5 * (rho * rho - b * b);
        }
        case PotentialKind::CustomTable:
            return table_integral(rho);
    }
    return 0.0;  // unreachable
}

namespace {

// Adaptive Simpson on [a, b]. The integrand r(s)*s is quadratic between table
// knots, for which a single Simpson panel is already exact; the recursion is
// the stated tolerance contract, not a numerical necessity.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                        double rel_tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    if (depth <= 0 || std::abs(refined - whole) <= rel_tol * std::max(1.0, std::abs(refined)))
        return refined + (refined - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, rel_tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, rel_tol, depth - 1);
}

template <typename F>
double simpson(const F& f, double a, double b, double rel_tol) {
    if (b <= a) return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, rel_tol, 30);
}

}  // namespace

double PotentialSpec::table_integral(double rho) const {
    if (rho > table_s_.back())
        throw OutOfDomainError("integral: distance beyond the tabulated range");
    const auto f = [this](double s) { return table_weight(s) * s; };
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < table_s_.size() && table_s_[k] < rho; ++k) {
        const double hi = std::min(table_s_[k + 1], rho);
        acc += simpson(f, table_s_[k], hi, 1e-8);
    }
    return acc;
}

double PotentialSpec::domain_max() const {
    return kind_ == PotentialKind::CustomTable ? table_s_.back() : std::numeric_limits<double>::infinity();
}

}  // namespace swarmconn
