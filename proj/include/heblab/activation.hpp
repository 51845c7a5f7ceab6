#pragma once

#include <cmath>
#include <numbers>

namespace heblab {

// F(x) = (2/pi) * atan(lambda*pi*x/2): odd, strictly increasing, range (-1,1).
inline double activation(double x, double lambda) {
    return (2.0 / std::numbers::pi) * std::atan(lambda * std::numbers::pi * x / 2.0);
}

// F'(x) = lambda / (1 + (lambda*pi*x/2)^2): even, positive, F'(0) = lambda.
inline double activation_deriv(double x, double lambda) {
    const double q = lambda * std::numbers::pi * x / 2.0;
    return lambda / (1.0 + q * q);
}

// F''(x) = -(lambda^3 pi^2 x / 2) / (1 + (lambda*pi*x/2)^2)^2.
inline double activation_deriv2(double x, double lambda) {
    const double q = lambda * std::numbers::pi * x / 2.0;
    const double d = 1.0 + q * q;
    return -(lambda * lambda * lambda * std::numbers::pi * std::numbers::pi * x / 2.0) / (d * d);
}

}  // namespace heblab
