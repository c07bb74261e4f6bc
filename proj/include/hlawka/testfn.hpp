#pragma once

#include "hlawka/common.hpp"

namespace hlawka {

/// Radial test functions summed over lattices. All variants are
/// semi-admissible: |f(x)| <= b / (1 + ||x||)^(m + delta) with an explicit
/// envelope per variant (compact support makes any delta valid).
struct TestFunction {
    enum class Kind { BallIndicator, Gaussian, RogersStepLog };
    Kind kind;
    double r = 0;    // ball radius / Rogers base radius
    double tau = 0;  // Gaussian rate
    double t = 0;    // Rogers module rank
    int n = 0;       // Rogers field degree (the ambient dimension is n*t)

    static TestFunction ball(double r);
    static TestFunction gaussian(double tau);
    static TestFunction rogers(double r, double t, int n);

    /// Value from the squared norm.
    double eval_sq(double normsq) const;

    /// Radius beyond which f vanishes; infinity for the Gaussian.
    double support_radius() const;

    /// Closed-form integral over R^m.
    double integral(int m) const;

    /// Envelope constants (b, delta) witnessing semi-admissibility in R^m.
    std::pair<double, double> envelope(int m) const;

    std::string describe() const;
};

/// Parses "ball:R", "gauss:TAU", "rogers:R:T:N".
TestFunction parse_test_function(const std::string& text);

}  // namespace hlawka
