#include "hr/zonal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hr {

double legendre_p(int degree, double x) {
    if (degree < 0)
        throw std::invalid_argument("Legendre degree must be nonnegative");
    if (degree == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= degree; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    return p1;
}

double zonal_eval(int dimension, int degree, double theta) {
    if (degree < 0)
        throw std::invalid_argument("zonal degree must be nonnegative");
    if (dimension == 2) {
        if (degree == 0) return 1.0 / std::sqrt(2.0 * std::numbers::pi);
        return std::cos(degree * theta) / std::sqrt(std::numbers::pi);
    }
    if (dimension == 3) {
        const double norm = std::sqrt((2.0 * degree + 1.0) / (4.0 * std::numbers::pi));
        return norm * legendre_p(degree, std::cos(theta));
    }
    throw std::invalid_argument("zonal harmonics implemented for N = 2 and N = 3 only");
}

}  // namespace hr
