#pragma once

namespace cvqkd {

// Two-mode Gaussian covariance gamma = [[a I, c sigma_z], [c sigma_z, b I]]
// in shot-noise units.
struct TwoModeCovariance {
    double a;
    double b;
    double c;
};

struct SymplecticPair {
    double lambda1;   // >= lambda2
    double lambda2;
};

struct ConditionalState {
    double var_x;     // a - c^2/b
    double var_p;     // a
    double lambda3;   // sqrt(a (a - c^2/b))
};

// a = V_A + 1, b = T V_A + 1 + T eps, c = sqrt(T (V_A^2 + 2 V_A)).
// Throws unphysical_state_error when a*b - c^2 < 1.
TwoModeCovariance build_covariance(double modulation_variance, double transmittance,
                                   double excess_noise);

// chi = (1 - T)/T + eps, total channel noise referred to the input.
double chi_total(double transmittance, double excess_noise);

// I(A:B) = 1/2 log2((V_A + 1 + chi)/(chi + 1)) in bits.
double mutual_information(double modulation_variance, double chi);

// Closed-form symplectic spectrum of the joint state.
SymplecticPair symplectic_eigenvalues(const TwoModeCovariance& gamma);

// Alice's mode conditioned on an X homodyne of Bob's.
ConditionalState conditional_covariance_homodyne(const TwoModeCovariance& gamma);

// G(x) = (x+1) log2(x+1) - x log2(x); G(0) = 0 by continuity.
double g_function(double x);

// Reverse-reconciliation rate K = beta I(A:B) - S(E:B), bits per pulse.
// Negative rates are returned as-is.
double secret_key_rate(double modulation_variance, double beta, double transmittance,
                       double excess_noise);

// Root of eps -> K(V_A, beta, T, eps); throws no_positive_rate_error when
// K(T, 0) <= 0.
double tolerable_excess_noise(double modulation_variance, double beta, double transmittance);

} // namespace cvqkd
