#pragma once
#include <complex>
#include <string>
#include <vector>

#include "gaborlab/special_functions.hpp"

// Closed-form catalog of entire functions used by the growth and density
// machinery: the constant 1, monomials z^n, quadratic exponentials
// e^{c z^2}, the product function s(z) = (z^2-1) z^{-2} sin(pi z^2 / 2),
// the scaled Mittag-Leffler function E_{1/2}(scale * z), a remove-one-zero
// quotient F(z)/(z - root), and finite products of catalog members.
//
// Catalog members carry their zero sets where those are known in closed
// form; that powers exact Jensen sums and zero-exclusion disks in radial
// scans.  E_{1/2} has infinitely many zeros with no closed form, so it
// reports has_zero_catalog() == false and zero-dependent operations reject
// it.  Evaluation is offered both as a plain complex value (which throws
// once |F| would overflow) and in log-magnitude + phase form, which is what
// every large-radius scan consumes.

namespace gaborlab {

enum class EntireFunctionKind {
    One,
    Monomial,
    ExpQuadratic,
    SFunction,
    MittagLefflerHalf,
    QuotientByLinear,
    Product,
};

struct ZeroPoint {
    std::complex<double> location;
    int multiplicity = 1;
};

struct EntireFunctionSpec {
    EntireFunctionKind kind = EntireFunctionKind::One;
    int n = 0;                        // Monomial degree, 0 <= n <= 16
    std::complex<double> c{0.0, 0.0};  // ExpQuadratic coefficient, |c| <= pi
    double scale = 1.0;               // MittagLefflerHalf argument scale, > 0
    std::complex<double> root{0.0, 0.0};   // QuotientByLinear removed zero
    std::vector<EntireFunctionSpec> children;  // quotient base / product factors

    static EntireFunctionSpec one();
    static EntireFunctionSpec monomial(int n);
    static EntireFunctionSpec exp_quadratic(std::complex<double> c);
    static EntireFunctionSpec s_function();
    static EntireFunctionSpec mittag_leffler_half(double scale);
    // Requires |base(root)| <= 1e-8 (a genuine zero, so the singularity is
    // removable); verified at construction.
    static EntireFunctionSpec quotient_by_linear(EntireFunctionSpec base,
                                                 std::complex<double> root);
    static EntireFunctionSpec product(std::vector<EntireFunctionSpec> factors);

    // Compact grammar string (also accepted by the command-line front end).
    std::string describe() const;
};

// Plain value; throws std::range_error when |F(z)| exceeds exp(700).
std::complex<double> entire_eval(const EntireFunctionSpec& F, std::complex<double> z);

// log|F(z)| and arg F(z); safe at any magnitude the catalog can reach.
LogComplex entire_eval_log(const EntireFunctionSpec& F, std::complex<double> z);

// True when the zero set of F is known in closed form (everything except
// MittagLefflerHalf and combinations containing it).
bool has_zero_catalog(const EntireFunctionSpec& F);

// All zeros with modulus strictly below r, with multiplicities; sorted by
// (modulus, angle).  Throws std::logic_error when has_zero_catalog is false.
std::vector<ZeroPoint> zeros_within(const EntireFunctionSpec& F, double r);

// Distance from z to the nearest zero of F; +infinity for zero-free members.
// Throws std::logic_error when has_zero_catalog is false.
double nearest_zero_distance(const EntireFunctionSpec& F, std::complex<double> z);

}  // namespace gaborlab
