#include "hlawka/testfn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hlawka {

TestFunction TestFunction::ball(double r) {
    if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
    TestFunction f;
    f.kind = Kind::BallIndicator;
    f.r = r;
    return f;
}

TestFunction TestFunction::gaussian(double tau) {
    if (tau <= 0) throw std::invalid_argument("Gaussian rate must be positive");
    TestFunction f;
    f.kind = Kind::Gaussian;
    f.tau = tau;
    return f;
}

TestFunction TestFunction::rogers(double r, double t, int n) {
    if (r <= 0 || t < 1 || n < 1) throw std::invalid_argument("bad Rogers parameters");
    TestFunction f;
    f.kind = Kind::RogersStepLog;
    f.r = r;
    f.t = t;
    f.n = n;
    return f;
}

double TestFunction::eval_sq(double normsq) const {
    switch (kind) {
        case Kind::BallIndicator:
            return normsq <= r * r ? 1.0 : 0.0;
        case Kind::Gaussian:
            return std::exp(-tau * normsq);
        case Kind::RogersStepLog: {
            double nt = (double)n * t;
            double norm = std::sqrt(normsq);
            double inner = r * std::exp((1.0 - t) / nt);
            double outer = r * std::exp(1.0 / nt);
            if (norm <= inner) return 1.0 / n;
            if (norm <= outer) return 1.0 / nt - std::log(norm / r);
            return 0.0;
        }
    }
    return 0.0;
}

double TestFunction::support_radius() const {
    switch (kind) {
        case Kind::BallIndicator:
            return r;
        case Kind::Gaussian:
            return std::numeric_limits<double>::infinity();
        case Kind::RogersStepLog:
            return r * std::exp(1.0 / ((double)n * t));
    }
    return 0.0;
}

double TestFunction::integral(int m) const {
    switch (kind) {
        case Kind::BallIndicator:
            return unit_ball_volume(m) * std::pow(r, m);
        case Kind::Gaussian:
            return std::pow(M_PI / tau, m / 2.0);
        case Kind::RogersStepLog: {
            double nt = (double)n * t;
            if (m != (int)std::llround(nt))
                throw std::invalid_argument("Rogers integral: dimension mismatch (m != n*t)");
            return std::exp(1.0) * (1.0 - std::exp(-t)) * std::pow(r, nt) *
                   unit_ball_volume(m) / nt;
        }
    }
    return 0.0;
}

std::pair<double, double> TestFunction::envelope(int m) const {
    switch (kind) {
        case Kind::BallIndicator:
            return {std::pow(1.0 + r, m + 1), 1.0};
        case Kind::Gaussian: {
            // maximize exp(-tau x^2) (1+x)^(m+1) over x >= 0
            double best = 1.0;
            for (double x = 0; x < 60.0; x += 1.0 / 256) {
                double v = std::exp(-tau * x * x) * std::pow(1.0 + x, m + 1);
                best = std::max(best, v);
            }
            return {best * (1 + 1e-9), 1.0};
        }
        case Kind::RogersStepLog:
            return {(1.0 / n) * std::pow(1.0 + support_radius(), m + 1), 1.0};
    }
    return {1.0, 1.0};
}

std::string TestFunction::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::BallIndicator: os << "ball:" << r; break;
        case Kind::Gaussian: os << "gauss:" << tau; break;
        case Kind::RogersStepLog: os << "rogers:" << r << ":" << t << ":" << n; break;
    }
    return os.str();
}

TestFunction parse_test_function(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    std::getline(is, kind, ':');
    auto next = [&](double& out) {
        std::string tok;
        if (!std::getline(is, tok, ':')) throw std::invalid_argument("test function: missing parameter in '" + text + "'");
        out = std::stod(tok);
    };
    if (kind == "ball") {
        double r;
        next(r);
        return TestFunction::ball(r);
    }
    if (kind == "gauss" || kind == "gaussian") {
        double tau;
        next(tau);
        return TestFunction::gaussian(tau);
    }
    if (kind == "rogers") {
        double r, t, n;
        next(r);
        next(t);
        next(n);
        return TestFunction::rogers(r, t, (int)n);
    }
    throw std::invalid_argument("unknown test function '" + text + "'");
}

}  // namespace hlawka
