#include "cvqkd/keyrate.hpp"

#include <algorithm>
#include <cmath>

#include "cvqkd/errors.hpp"

namespace cvqkd {

namespace {

// Slack for physicality checks; covariance entries are O(V_A^2).
constexpr double physical_tol = 1e-9;

void check_physical(const TwoModeCovariance& gamma) {
    if (gamma.a < 1.0 - physical_tol || gamma.b < 1.0 - physical_tol) {
        throw unphysical_state_error("diagonal covariance blocks below the vacuum limit");
    }
    if (gamma.a * gamma.b - gamma.c * gamma.c < 1.0 - physical_tol * gamma.a * gamma.b) {
        throw unphysical_state_error("covariance matrix violates the uncertainty bound");
    }
}

} // namespace

TwoModeCovariance build_covariance(double modulation_variance, double transmittance,
                                   double excess_noise) {
    if (!(modulation_variance > 0.0)) {
        throw domain_error("modulation variance must be positive");
    }
    if (!(transmittance > 0.0) || transmittance > 1.0) {
        throw domain_error("transmittance must be in (0, 1]");
    }
    const TwoModeCovariance gamma{
        modulation_variance + 1.0,
        transmittance * modulation_variance + 1.0 + transmittance * excess_noise,
        std::sqrt(transmittance *
                  (modulation_variance * modulation_variance + 2.0 * modulation_variance)),
    };
    check_physical(gamma);
    return gamma;
}

double chi_total(double transmittance, double excess_noise) {
    if (!(transmittance > 0.0)) {
        throw domain_error("transmittance must be positive");
    }
    return (1.0 - transmittance) / transmittance + excess_noise;
}

double mutual_information(double modulation_variance, double chi) {
    return 0.5 * std::log2((modulation_variance + 1.0 + chi) / (chi + 1.0));
}

SymplecticPair symplectic_eigenvalues(const TwoModeCovariance& gamma) {
    check_physical(gamma);
    const double a = gamma.a;
    const double b = gamma.b;
    const double c = gamma.c;
    const double delta = a * a + b * b - 2.0 * c * c;
    const double det = a * b - c * c;
    const double disc = delta * delta - 4.0 * det * det;
    if (disc < -physical_tol * delta * delta) {
        throw unphysical_state_error("symplectic discriminant is negative");
    }
    const double root = std::sqrt(std::max(disc, 0.0));
    const double l1 = std::sqrt((delta + root) / 2.0);
    // (delta - root)/2 cancels badly when delta^2 >> 4 det^2; use
    // lambda1 * lambda2 = det instead.
    const double l2 = det / l1;
    if (l2 < 1.0 - 1e-6) {
        throw unphysical_state_error("symplectic eigenvalue below the vacuum limit");
    }
    return {l1, l2};
}

ConditionalState conditional_covariance_homodyne(const TwoModeCovariance& gamma) {
    check_physical(gamma);
    if (!(gamma.b > 0.0)) {
        throw domain_error("Bob's variance must be positive");
    }
    // gamma_A - C (X gamma_B X)^MP C^T with X = diag(1, 0); the pseudo
    // inverse of diag(b, 0) is diag(1/b, 0).
    const double var_x = gamma.a - gamma.c * gamma.c / gamma.b;
    if (var_x < -physical_tol * gamma.a) {
        throw unphysical_state_error("conditional variance is negative");
    }
    const double lambda3 = std::sqrt(gamma.a * std::max(var_x, 0.0));
    return {var_x, gamma.a, lambda3};
}

double g_function(double x) {
    // Tiny negatives from eigenvalue round-off collapse to the x -> 0 limit.
    if (x < 0.0) {
        if (x < -1e-9) {
            throw domain_error("entropy argument must be nonnegative");
        }
        return 0.0;
    }
    if (x == 0.0) {
        return 0.0;
    }
    return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double secret_key_rate(double modulation_variance, double beta, double transmittance,
                       double excess_noise) {
    if (!(beta > 0.0) || beta > 1.0) {
        throw domain_error("reconciliation efficiency must be in (0, 1]");
    }
    const TwoModeCovariance gamma =
        build_covariance(modulation_variance, transmittance, excess_noise);
    const auto [l1, l2] = symplectic_eigenvalues(gamma);
    const double l3 = conditional_covariance_homodyne(gamma).lambda3;
    const double chi = chi_total(transmittance, excess_noise);
    const double info = mutual_information(modulation_variance, chi);
    // Purification: S(E) = S(AB) and S(E|x_B) = S(A|x_B).
    const double holevo =
        g_function((l1 - 1.0) / 2.0) + g_function((l2 - 1.0) / 2.0) - g_function((l3 - 1.0) / 2.0);
    return beta * info - holevo;
}

double tolerable_excess_noise(double modulation_variance, double beta, double transmittance) {
    const auto rate = [&](double eps) {
        return secret_key_rate(modulation_variance, beta, transmittance, eps);
    };
    if (!(rate(0.0) > 0.0)) {
        throw no_positive_rate_error("no positive key rate even at zero excess noise");
    }

    double hi = 0.1;
    int expansions = 0;
    while (rate(hi) > 0.0) {
        hi *= 2.0;
        if (++expansions > 60) {
            throw domain_error("failed to bracket the key-rate root");
        }
    }

    // The solver assumes a monotone decreasing rate over the bracket.
    double previous = rate(0.0);
    for (int i = 1; i <= 8; ++i) {
        const double value = rate(hi * static_cast<double>(i) / 8.0);
        if (value > previous + 1e-12) {
            throw domain_error("key rate is not monotone over the bracket");
        }
        previous = value;
    }

    double lo = 0.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (rate(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace cvqkd
