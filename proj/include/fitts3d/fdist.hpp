#pragma once

namespace fitts3d {

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
// evaluated by continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// Snedecor F distribution with (df1, df2) degrees of freedom.
double f_cdf(double f, double df1, double df2);
// Upper tail P(X > f), computed without cancellation.
double f_survival(double f, double df1, double df2);

} // namespace fitts3d
