#include "rsl/quadrature.hpp"

#include <cmath>

#include "rsl/common.hpp"

namespace rsl {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kron_nodes[8] = {
    0.000000000000000000000000000000000e+00, 2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01, 5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01, 8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01, 9.914553711208126392068546975263285e-01};
constexpr double kron_weights[8] = {
    2.094821410847278280129991748917143e-01, 2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01, 1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01, 1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02, 2.293532201052922496373200805896959e-02};
constexpr double gauss_weights[4] = {
    4.179591836734693877551020408163265e-01, 3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01, 1.294849661688696932706114326790820e-01};

struct Panel {
  double integral;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double kron = kron_weights[0] * fc;
  double gauss = gauss_weights[0] * fc;
  for (int i = 1; i < 8; ++i) {
    double x = h * kron_nodes[i];
    double fsum = f(c - x) + f(c + x);
    kron += kron_weights[i] * fsum;
    if (i % 2 == 0) gauss += gauss_weights[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  // |K15 - G7| overestimates the K15 error by orders of magnitude: safe.
  return Panel{kron, std::fabs(kron - gauss)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double abs_tol,
             double rel_tol, int depth, int max_depth) {
  Panel p = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::fabs(p.integral));
  if (p.error <= tol || depth >= max_depth) return p.integral;
  double c = 0.5 * (a + b);
  return adapt(f, a, c, abs_tol * 0.5, rel_tol, depth + 1, max_depth) +
         adapt(f, c, b, abs_tol * 0.5, rel_tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol, int max_depth) {
  if (!(a <= b)) throw precondition_error("integrate: bad interval");
  if (a == b) return 0.0;
  return adapt(f, a, b, abs_tol, rel_tol, 0, max_depth);
}

}  // namespace rsl
