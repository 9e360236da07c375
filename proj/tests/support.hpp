#pragma once
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Shared test helpers: an adaptive Simpson quadrature used as an independent
// oracle against the closed-form inner products and transforms, plus small
// file utilities for inspecting command-line artifacts.

namespace testsupport {

using cplx = std::complex<double>;

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

namespace detail {

inline cplx simpson(double a, double b, cplx fa, cplx fm, cplx fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline cplx adapt(const std::function<cplx(double)>& f, double a, double m, double b, cplx fa,
                  cplx fm, cplx fb, cplx whole, double tol, int depth) {
    if (depth <= 0) throw std::runtime_error("adaptive simpson: recursion depth exhausted");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cplx flm = f(lm), frm = f(rm);
    const cplx left = simpson(a, m, fa, flm, fm);
    const cplx right = simpson(m, b, fm, frm, fb);
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of a complex integrand on [a, b]; `tol` is an
// absolute accuracy target for the whole interval.  The recursion is seeded
// with a forced uniform subdivision: a lone Simpson estimate over the whole
// interval samples just three points and can miss a narrow bump entirely,
// reporting spurious convergence.
inline cplx integrate(const std::function<cplx(double)>& f, double a, double b,
                      double tol = 1e-12) {
    const int cells = 32;
    const double h = (b - a) / cells;
    cplx total = 0.0;
    for (int k = 0; k < cells; ++k) {
        const double x0 = a + k * h;
        const double x1 = (k + 1 == cells) ? b : a + (k + 1) * h;
        const double m = 0.5 * (x0 + x1);
        const cplx fa = f(x0), fm = f(m), fb = f(x1);
        total += detail::adapt(f, x0, m, x1, fa, fm, fb,
                               detail::simpson(x0, x1, fa, fm, fb), tol / cells, 48);
    }
    return total;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// A scratch directory under the test working directory, wiped per use.
inline std::filesystem::path fresh_dir(const std::string& name) {
    std::filesystem::path p = std::filesystem::path("cli_scratch") / name;
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace testsupport
