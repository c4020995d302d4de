#include "secap/model.hpp"

#include <cmath>

namespace secap {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerNumber = 2.71828182845904523536;
}  // namespace

int saturation_number(const SpatialConstraint& constraint) {
    const double m = std::ceil(kPi * kEulerNumber * constraint.radius_wavelengths);
    const auto k = static_cast<long long>(m);
    switch (constraint.dimension) {
        case ApertureDim::Circular2D:
            return static_cast<int>(2 * k + 1);
        case ApertureDim::Spherical3D:
            return static_cast<int>((k + 1) * (k + 1));
    }
    throw std::logic_error("saturation_number: unknown aperture dimension");
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) {
    if (!(x > 0.0)) throw std::domain_error("linear_to_db: argument must be > 0");
    return 10.0 * std::log10(x);
}

}  // namespace secap
