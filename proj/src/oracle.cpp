#include "lidstone/oracle.hpp"

#include <cmath>

#include "lidstone/error.hpp"

namespace lidstone {

ExactModel make_exact_model(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ParameterError("epsilon", "must lie in (0,1]");
    const double root = std::sqrt(1.0 + 4.0 * epsilon);
    ExactModel m;
    m.epsilon = epsilon;
    m.r1 = 2.0 / (1.0 + root);
    // Same root as 2 / (1 - root) without the cancellation in the denominator.
    m.r2 = -(1.0 + root) / (2.0 * epsilon);
    const double e1 = std::exp(m.r1);
    const double e2 = std::exp(m.r2);  // underflows harmlessly to 0 for tiny eps
    m.c2 = (e1 * (0.5 + epsilon) - (1.5 + epsilon)) / (e1 - e2);
    m.c1 = -m.c2 + (0.5 + epsilon);
    return m;
}

double exact_u(const ExactModel& model, double x, int derivative) {
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("x", "must lie in [0,1]");
    if (derivative < 0 || derivative > 4) throw ParameterError("derivative", "must be 0..4");

    const double k = static_cast<double>(derivative);
    const double layer = model.c1 * std::pow(model.r1, k) * std::exp(model.r1 * x) +
                         model.c2 * std::pow(model.r2, k) * std::exp(model.r2 * x);
    switch (derivative) {
        case 0: return layer - (x * x + x + 1.0) / 2.0 - model.epsilon;
        case 1: return layer - x - 0.5;
        case 2: return layer - 1.0;
        default: return layer;
    }
}

double exact_w(double x) { return 0.5 * x * (1.0 - x); }

double exact_f(double) { return 1.0; }

}  // namespace lidstone
