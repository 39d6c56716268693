#include "dengfan/numeric_oracle.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/morse_model.hpp"
#include "dengfan/sdf_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dengfan {

namespace {

constexpr double kRescaleThreshold = 1e100;
constexpr double kRescaleFactor = 1e-100;

// Effective potential and Numerov constants sampled once per problem.
struct Sampled {
    RadialGrid grid;
    std::vector<double> v_eff;
    double kappa = 0.0;
    double h2_over_kappa = 0.0;
    int l = 0;
};

Sampled sample(const RadialProblem& problem) {
    problem.validate();
    Sampled s;
    s.grid = problem.grid();
    s.kappa = problem.kappa;
    s.l = problem.l;
    s.h2_over_kappa = s.grid.step * s.grid.step / problem.kappa;
    s.v_eff.resize(s.grid.size);
    const double centrifugal = problem.kappa * static_cast<double>(problem.l) * (problem.l + 1);
    for (std::size_t i = 0; i < s.grid.size; ++i) {
        const double r = s.grid.r(i);
        const double v = problem.potential(r) + centrifugal / (r * r);
        if (std::isnan(v)) throw DomainError("radial problem: non-finite potential sample");
        s.v_eff[i] = v;
    }
    return s;
}

// Numerov weight 1 - h^2 (V_eff - E) / (12 kappa).
inline double weight(const Sampled& s, std::size_t i, double energy) {
    return 1.0 - s.h2_over_kappa * (s.v_eff[i] - energy) / 12.0;
}

// First grid index where Numerov is stable. Inside the repulsive core h^2 (V - E)/kappa > 1;
// the regular solution there is negligibly small and is taken as zero.
std::size_t core_start(const Sampled& s, double energy) {
    std::size_t i = 0;
    while (i + 3 < s.grid.size && (!std::isfinite(s.v_eff[i]) || s.h2_over_kappa * (s.v_eff[i] - energy) > 1.0)) {
        ++i;
    }
    return i;
}

void start_outward(const Sampled& s, std::size_t i0, double& y0, double& y1) {
    if (i0 == 0) {
        y0 = std::pow(s.grid.r(0), s.l + 1);
        y1 = std::pow(s.grid.r(1), s.l + 1);
    } else {
        y0 = 0.0;
        y1 = 1e-20;
    }
}

int sign_changes(std::span<const double> y) {
    int count = 0;
    int last = 0;
    for (double v : y) {
        const int sg = (v > 0.0) - (v < 0.0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

int outward_nodes(const Sampled& s, double energy) {
    const std::size_t n = s.grid.size;
    const std::size_t i0 = core_start(s, energy);
    double y_prev = 0.0;
    double y_curr = 0.0;
    start_outward(s, i0, y_prev, y_curr);
    double w_prev = weight(s, i0, energy);
    double w_curr = weight(s, i0 + 1, energy);
    int count = 0;
    int last = (y_curr > 0.0) - (y_curr < 0.0);
    for (std::size_t i = i0 + 1; i + 1 < n; ++i) {
        const double w_next = weight(s, i + 1, energy);
        double y_next = ((12.0 - 10.0 * w_curr) * y_curr - w_prev * y_prev) / w_next;
        if (std::abs(y_next) > kRescaleThreshold) {
            y_next *= kRescaleFactor;
            y_curr *= kRescaleFactor;
        }
        const int sg = (y_next > 0.0) - (y_next < 0.0);
        if (sg != 0) {
            if (last != 0 && sg != last) ++count;
            last = sg;
        }
        y_prev = y_curr;
        y_curr = y_next;
        w_prev = w_curr;
        w_curr = w_next;
    }
    return count;
}

// Fills y[0 .. last] with the regular solution; y is resized to the grid.
void integrate_outward(const Sampled& s, double energy, std::size_t last, std::vector<double>& y) {
    y.assign(s.grid.size, 0.0);
    const std::size_t i0 = core_start(s, energy);
    start_outward(s, i0, y[i0], y[i0 + 1]);
    for (std::size_t i = i0 + 1; i < last; ++i) {
        y[i + 1] = ((12.0 - 10.0 * weight(s, i, energy)) * y[i] - weight(s, i - 1, energy) * y[i - 1])
                   / weight(s, i + 1, energy);
        if (std::abs(y[i + 1]) > kRescaleThreshold) {
            for (std::size_t j = i0; j <= i + 1; ++j) y[j] *= kRescaleFactor;
        }
    }
}

// Fills y[first .. size-1] with the solution decaying at r_max.
void integrate_inward(const Sampled& s, double energy, std::size_t first, std::vector<double>& y) {
    const std::size_t n = s.grid.size;
    y.assign(n, 0.0);
    const double g_end = (s.v_eff[n - 1] - energy) / s.kappa;
    const double q = g_end > 0.0 ? std::sqrt(g_end) : 0.0;
    y[n - 2] = 1e-20;
    y[n - 1] = 1e-20 * std::exp(-q * s.grid.step);
    for (std::size_t i = n - 2; i > first; --i) {
        y[i - 1] = ((12.0 - 10.0 * weight(s, i, energy)) * y[i] - weight(s, i + 1, energy) * y[i + 1])
                   / weight(s, i - 1, energy);
        if (std::abs(y[i - 1]) > kRescaleThreshold) {
            for (std::size_t j = i - 1; j < n; ++j) y[j] *= kRescaleFactor;
        }
    }
}

// Outermost classical turning point, kept away from the grid ends.
std::size_t matching_index(const Sampled& s, double energy) {
    const std::size_t n = s.grid.size;
    std::size_t m = 0;
    for (std::size_t i = n; i-- > 0;) {
        if (s.v_eff[i] < energy) {
            m = i;
            break;
        }
    }
    const std::size_t lo = core_start(s, energy) + 2;
    return std::clamp(m, lo, n - 3);
}

// Difference of logarithmic derivatives (scaled by 2h) of outward and inward solutions at m.
double matching_mismatch(const Sampled& s, double energy, std::size_t m, std::vector<double>& out,
                         std::vector<double>& in) {
    integrate_outward(s, energy, m + 1, out);
    integrate_inward(s, energy, m - 1, in);
    return (out[m + 1] - out[m - 1]) / out[m] - (in[m + 1] - in[m - 1]) / in[m];
}

} // namespace

void RadialProblem::validate() const {
    if (!potential) throw DomainError("radial problem: missing potential");
    if (l < 0) throw DomainError("radial problem: l must be non-negative");
    if (!(kappa > 0.0)) throw DomainError("radial problem: kappa must be positive");
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("radial problem: require 0 < r_min < r_max");
    if (!(step > 0.0)) throw DomainError("radial problem: step must be positive");
    if ((r_max - r_min) / step < 1e4 * (1.0 - 1e-12)) {
        throw DomainError("radial problem: grid must have at least 1e4 intervals");
    }
}

RadialGrid RadialProblem::grid() const {
    const auto intervals = static_cast<std::size_t>(std::llround((r_max - r_min) / step));
    return {r_min, step, intervals + 1};
}

RadialProblem make_radial_problem(std::function<double(double)> potential, int l, double kappa, double alpha,
                                  double r_e, double depth) {
    RadialProblem p;
    p.potential = std::move(potential);
    p.l = l;
    p.kappa = kappa;
    p.r_min = 1e-4;
    p.r_max = std::max(20.0 / alpha, 6.0 * r_e);
    const double span = p.r_max - p.r_min;
    double h = span / 2e4;
    if (depth > 0.0) h = std::min(h, std::sqrt(1e-4 * kappa / depth));
    const double intervals = std::ceil(span / h);
    p.step = span / intervals;
    return p;
}

RadialProblem sdf_radial_problem(const SdfSystem& sys, int l) {
    const SdfPotential pot = sys.potential;
    return make_radial_problem([pot](double r) { return v_sdf(r, pot); }, l, sys.kappa, pot.alpha, pot.r_e, pot.D);
}

RadialProblem morse_radial_problem(const MorsePotential& p, double kappa, int l) {
    return make_radial_problem([p](double r) { return v_morse(r, p) - p.D; }, l, kappa, p.alpha, p.r_e, p.D);
}

int count_nodes(const RadialProblem& problem, double energy) {
    return outward_nodes(sample(problem), energy);
}

ShootingResult solve_bound_state(const RadialProblem& problem, int n_target, const ShootingOptions& options) {
    if (n_target < 0) throw DomainError("solve_bound_state: n must be non-negative");
    const Sampled s = sample(problem);
    const std::size_t n = s.grid.size;

    double lo = *std::min_element(s.v_eff.begin(), s.v_eff.end());
    double hi = s.v_eff[n - 1];
    if (outward_nodes(s, hi) <= n_target) {
        std::ostringstream msg;
        msg << "solve_bound_state: no state with " << n_target << " nodes below " << hi << " eV";
        throw BracketError(msg.str());
    }

    ShootingResult result;
    result.grid = s.grid;
    int it = 0;
    auto bisect_nodes = [&](double width) {
        while (hi - lo > width && it < options.max_iterations) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (outward_nodes(s, mid) > n_target ? hi : lo) = mid;
            ++it;
        }
    };
    bisect_nodes(options.node_bracket_width);

    std::vector<double> out;
    std::vector<double> in;
    const std::size_t m = matching_index(s, hi);
    double f_lo = matching_mismatch(s, lo, m, out, in);
    const double f_hi = matching_mismatch(s, hi, m, out, in);
    if (std::isfinite(f_lo) && std::isfinite(f_hi) && (f_lo > 0.0) != (f_hi > 0.0)) {
        while (hi - lo > options.energy_tolerance && it < options.max_iterations) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            const double f_mid = matching_mismatch(s, mid, m, out, in);
            if ((f_mid > 0.0) == (f_lo > 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
            ++it;
        }
    } else {
        bisect_nodes(options.energy_tolerance);
    }
    result.iterations = it;

    const bool bracket_closed = (hi - lo) <= options.energy_tolerance || std::nextafter(lo, hi) >= hi;
    if (!bracket_closed) {
        std::ostringstream msg;
        msg << "solve_bound_state: no convergence after " << it << " iterations; last bracket [" << lo << ", "
            << hi << "] eV";
        throw ConvergenceError(msg.str());
    }
    result.energy = 0.5 * (lo + hi);

    // Assemble: outward part up to m, inward part scaled to match at m.
    matching_mismatch(s, result.energy, m, out, in);
    const double scale = out[m] / in[m];
    std::vector<double> psi(n, 0.0);
    for (std::size_t i = 0; i <= m; ++i) psi[i] = out[i];
    for (std::size_t i = m + 1; i < n; ++i) psi[i] = in[i] * scale;

    const NormalizationResult norm = normalize_quadrature(psi, s.grid);
    const double inv = 1.0 / std::sqrt(norm.integral);
    const auto first = std::find_if(psi.begin(), psi.end(), [](double v) { return v != 0.0; });
    const double sign = (first != psi.end() && *first < 0.0) ? -1.0 : 1.0;
    for (double& v : psi) v *= sign * inv;

    result.node_count = sign_changes(psi);
    result.wavefunction = std::move(psi);
    result.truncation_estimate = norm.truncation_estimate / norm.integral;
    result.converged = result.node_count == n_target;
    return result;
}

NormalizationResult normalize_quadrature(std::span<const double> samples, const RadialGrid& grid) {
    if (samples.size() != grid.size) throw DomainError("normalize_quadrature: sample count does not match grid");
    NormalizationResult out;
    const std::size_t n = samples.size();
    if (n < 2) return out;

    auto sq = [&](std::size_t i) { return samples[i] * samples[i]; };
    const double h = grid.step;
    const std::size_t intervals = n - 1;
    double sum = 0.0;
    std::size_t simpson_end = intervals;
    if (intervals % 2 == 1) {
        if (intervals >= 3) {
            simpson_end = intervals - 3;
            // Simpson 3/8 on the last three intervals.
            const std::size_t k = simpson_end;
            sum += 3.0 * h / 8.0 * (sq(k) + 3.0 * sq(k + 1) + 3.0 * sq(k + 2) + sq(k + 3));
        } else {
            sum += 0.5 * h * (sq(0) + sq(1));
            simpson_end = 0;
        }
    }
    if (simpson_end >= 2) {
        double inner = sq(0) + sq(simpson_end);
        for (std::size_t i = 1; i < simpson_end; ++i) inner += (i % 2 == 1 ? 4.0 : 2.0) * sq(i);
        sum += h / 3.0 * inner;
    }
    out.integral = sum;

    double peak = 0.0;
    for (double v : samples) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return out;
    const double left = std::abs(samples.front());
    const double right = std::abs(samples.back());
    out.truncated = left > 1e-12 * peak || right > 1e-12 * peak;

    // Left tail: |R| rising from 0 at the origin; right tail: local exponential decay.
    double tail = left * left * grid.r_min;
    if (right > 0.0) {
        const double prev = std::abs(samples[n - 2]);
        const double decay = prev > right ? std::log(prev / right) / h : 0.0;
        tail += decay > 0.0 ? right * right / (2.0 * decay) : right * right * (grid.r_max() - grid.r_min);
    }
    out.truncation_estimate = tail;
    return out;
}

} // namespace dengfan
