#include <chrono>
#include <cstdint>
#include <cstdio>

#include <CLI11.hpp>

#include "artin/sweep.hpp"

// Compares the serial reference sweep with the parallel one, checks the
// aggregates agree bit for bit, and prints wall times.

namespace {

bool aggregates_equal(const artin::BoundReport& lhs, const artin::BoundReport& rhs) {
    if (lhs.aggs.size() != rhs.aggs.size()) return false;
    for (std::size_t i = 0; i < lhs.aggs.size(); ++i) {
        const auto& a = lhs.aggs[i];
        const auto& b = rhs.aggs[i];
        if (a.d_exact != b.d_exact || a.t1 != b.t1 || a.t2 != b.t2 || a.term3 != b.term3 ||
            a.a_bound.tight != b.a_bound.tight || a.a_bound.relaxed != b.a_bound.relaxed ||
            a.b_bound.tight != b.b_bound.tight || a.b_bound.relaxed != b.b_bound.relaxed ||
            a.s_x != b.s_x || a.w_x != b.w_x)
            return false;
    }
    return lhs.c_emp_max == rhs.c_emp_max;
}

template <typename F>
double time_seconds(F&& run) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial versus parallel sweep timing"};
    artin::SweepConfig cfg;
    cfg.x = 10000;
    cfg.u = 100;
    int repeat = 3;
    app.add_option("--a", cfg.a, "integer base a");
    app.add_option("--x", cfg.x, "prime range limit");
    app.add_option("--u", cfg.u, "exponent range for D(u)");
    app.add_option("--threads", cfg.threads, "worker threads for the parallel run");
    app.add_option("--repeat", repeat, "timed repetitions");
    CLI11_PARSE(app, argc, argv);

    artin::BoundReport serial_rep, parallel_rep;
    double serial_best = 0.0, parallel_best = 0.0;
    for (int i = 0; i < repeat; ++i) {
        const double s = time_seconds([&] { serial_rep = artin::run_sweep_serial(cfg); });
        const double p = time_seconds([&] { parallel_rep = artin::run_sweep(cfg); });
        if (i == 0 || s < serial_best) serial_best = s;
        if (i == 0 || p < parallel_best) parallel_best = p;
    }

    std::printf("a=%lld x=%llu u=%llu primes=%zu repeat=%d\n", static_cast<long long>(cfg.a),
                static_cast<unsigned long long>(cfg.x), static_cast<unsigned long long>(cfg.u),
                serial_rep.stats.size(), repeat);
    std::printf("%-10s %12s\n", "variant", "best (s)");
    std::printf("%-10s %12.4f\n", "serial", serial_best);
    std::printf("%-10s %12.4f\n", "parallel", parallel_best);
    std::printf("speedup    %12.2fx\n", serial_best / parallel_best);
    if (!aggregates_equal(serial_rep, parallel_rep)) {
        std::printf("MISMATCH: serial and parallel aggregates differ\n");
        return 1;
    }
    std::printf("aggregates identical\n");
    return 0;
}
