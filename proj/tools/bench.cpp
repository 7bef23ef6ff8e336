#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <omp.h>

#include "ffht/transform.hpp"

using namespace ffht;

namespace {

double seconds_per_run(int reps, const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    int64_t p = 39367;  // 2 * 3^9 + 1, so N = 3^7 divides p - 1
    int64_t n = 2187;
    int reps = 3;
    uint64_t seed = 20240915;

    CLI::App app{"timing: serial vs OpenMP transform kernel, naive vs spectral convolution"};
    app.add_option("--p", p, "prime characteristic");
    app.add_option("--n", n, "transform length");
    app.add_option("--reps", reps, "repetitions per measurement");
    app.add_option("--seed", seed, "signal generator seed");
    CLI11_PARSE(app, argc, argv);

    try {
        auto plan = TransformPlan::make_prime(p, n);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int64_t> dist(0, p - 1);

        std::vector<GiElement> g_vals, v_vals;
        for (int64_t i = 0; i < n; ++i) {
            g_vals.push_back({plan->ext().from_int(dist(rng)), plan->ext().from_int(dist(rng))});
            v_vals.push_back({plan->ext().from_int(dist(rng)), plan->ext().from_int(dist(rng))});
        }
        Signal g = make_signal(plan, std::move(g_vals));
        Signal v = make_signal(plan, std::move(v_vals));

        std::cout << "p=" << p << " N=" << n << " reps=" << reps
                  << " threads=" << omp_get_max_threads() << "\n";

        Spectrum ref = forward(*plan, g, Exec::serial);
        Spectrum par = forward(*plan, g, Exec::parallel);
        if (ref.values != par.values) {
            std::cerr << "serial and parallel transforms disagree\n";
            return 1;
        }

        double t_serial =
            seconds_per_run(reps, [&] { (void)forward(*plan, g, Exec::serial); });
        double t_parallel =
            seconds_per_run(reps, [&] { (void)forward(*plan, g, Exec::parallel); });
        std::cout << "forward serial:   " << t_serial << " s\n";
        std::cout << "forward parallel: " << t_parallel << " s  (speedup "
                  << t_serial / t_parallel << ")\n";

        Signal w_naive = convolve_naive(*plan, g, v);
        Signal w_spec = convolve_spectral(*plan, g, v);
        if (w_naive.values != w_spec.values) {
            std::cerr << "naive and spectral convolutions disagree\n";
            return 1;
        }

        double t_naive = seconds_per_run(reps, [&] { (void)convolve_naive(*plan, g, v); });
        double t_spectral =
            seconds_per_run(reps, [&] { (void)convolve_spectral(*plan, g, v); });
        std::cout << "conv naive:       " << t_naive << " s\n";
        std::cout << "conv spectral:    " << t_spectral << " s  (speedup "
                  << t_naive / t_spectral << ")\n";
        return 0;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
