#pragma once

namespace lidstone {

/// Closed-form solution of the model problem (a = b = 1, f = 1):
///
///   u(x) = c1 e^{r1 x} + c2 e^{r2 x} - (x^2 + x + 1)/2 - eps
///
/// where r1, r2 are the roots of eps r^2 + r - 1 = 0 and c1, c2 enforce
/// u(0) = u(1) = 0. The layer term e^{r2 x} sits at x = 0 since r2 < 0.
struct ExactModel {
    double epsilon = 1.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// eps in (0, 1]; throws ParameterError otherwise.
ExactModel make_exact_model(double epsilon);

/// k-th derivative of u (k = 0..4). Throws ParameterError when x is outside
/// [0,1] or k is out of range.
double exact_u(const ExactModel& model, double x, int derivative = 0);

/// Intermediate variable w = -u'' of the decoupled system: x(1-x)/2.
double exact_w(double x);

/// Source term of the model problem: identically 1.
double exact_f(double x);

}  // namespace lidstone
