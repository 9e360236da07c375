// Serial vs. parallel timing of the grid-shaped kernels.  Each kernel runs
// both ways on an identical workload; the parallel pass must also reproduce
// the serial result bitwise (per-index writes, serial reductions), so the
// comparison doubles as a determinism spot check.
#include <chrono>
#include <cstdio>
#include <vector>

#include "gaborlab/bargmann_fock.hpp"
#include "gaborlab/gabor_core.hpp"
#include "gaborlab/indicator_lab.hpp"
#include "gaborlab/phase_space.hpp"
#include "gaborlab/special_functions.hpp"

using namespace gaborlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// run(exec) performs the workload; on the parallel pass it returns whether
// the result matched the serial pass bitwise.
template <typename F>
void bench(const char* name, F&& run) {
    auto t0 = std::chrono::steady_clock::now();
    (void)run(Exec::serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const bool identical = run(Exec::parallel);
    const double tp = seconds_since(t0);
    std::printf("%-24s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, ts, tp,
                ts / tp, identical ? "bitwise-identical" : "MISMATCH");
}

}  // namespace

int main() {
    {
        std::vector<double> ladder;
        for (int r = 10; r <= 60; r += 10) ladder.push_back(r);
        std::vector<double> serial_values;
        bench("angular_density", [&](Exec e) {
            const auto d = angular_density(PointSetSpec::axes_theorem1(), 0.0,
                                           2.0 * 3.14159265358979323846, ladder, e);
            if (e == Exec::serial) {
                serial_values = d.values;
                return true;
            }
            return serial_values == d.values;
        });
    }
    {
        std::vector<double> rs = {5, 10, 15, 20, 25};
        std::vector<GrowthRatioPoint> serial_grid;
        bench("growth_ratio_scan", [&](Exec e) {
            const auto rep = growth_ratio_scan(rs, 2048, 0.3, e);
            if (e == Exec::serial) {
                serial_grid = rep.grid;
                return true;
            }
            for (std::size_t i = 0; i < serial_grid.size(); ++i)
                if (rep.grid[i].excluded != serial_grid[i].excluded ||
                    (!rep.grid[i].excluded && rep.grid[i].ratio != serial_grid[i].ratio))
                    return false;
            return true;
        });
    }
    {
        double serial_sigma = 0.0;
        bench("gram_section", [&](Exec e) {
            const auto sec = gram_section(PointSetSpec::axes_theorem1(), 14.0, e);
            if (e == Exec::serial) {
                serial_sigma = sec.sigma_min;
                return true;
            }
            return sec.sigma_min == serial_sigma;
        });
    }
    {
        double serial_value = 0.0;
        bench("fock_norm_truncated", [&](Exec e) {
            const double v = fock_norm_truncated(EntireFunctionSpec::s_function(), 6.0, e);
            if (e == Exec::serial) {
                serial_value = v;
                return true;
            }
            return v == serial_value;
        });
    }
    {
        std::vector<double> ladder;
        for (int i = 0; i <= 10; ++i) ladder.push_back(10.0 + 1.5 * i);
        std::vector<double> serial_h;
        bench("estimate_indicator", [&](Exec e) {
            const auto prof = estimate_indicator(EntireFunctionSpec::s_function(), 1024, ladder, e);
            if (e == Exec::serial) {
                serial_h = prof.h_values;
                return true;
            }
            return serial_h == prof.h_values;
        });
    }
    return 0;
}
