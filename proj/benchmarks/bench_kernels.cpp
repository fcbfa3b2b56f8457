// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce bit-identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cvqkd/core_model.hpp"
#include "cvqkd/estimation.hpp"
#include "cvqkd/rng.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double time_call(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return seconds_since(start);
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-24s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name.c_str(),
                serial_s, parallel_s, serial_s / parallel_s, identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = 20'000'000;
    if (argc > 1) {
        n = std::stoull(argv[1]);
    }
#ifdef _OPENMP
    std::printf("threads: %d, samples: %zu\n", omp_get_max_threads(), n);
#else
    std::printf("threads: 1 (OpenMP disabled), samples: %zu\n", n);
#endif

    const cvqkd::ProtocolParams proto{19.0, 0.95};
    const cvqkd::ChannelParams channel{0.5, 0.01};
    const cvqkd::AttackParams attack{0.3, 0.5};
    const std::uint64_t seed = 42;

    std::vector<double> serial(n);
    std::vector<double> parallel(n);

    const double t_fill_serial =
        time_call([&] { cvqkd::reference::fill_gaussian(serial, 1.0, seed); });
    const double t_fill_parallel = time_call([&] { cvqkd::fill_gaussian(parallel, 1.0, seed); });
    report("fill_gaussian", t_fill_serial, t_fill_parallel, serial == parallel);

    std::vector<double> channel_serial, channel_parallel;
    const double t_chan_serial = time_call(
        [&] { channel_serial = cvqkd::reference::scaled_channel_samples(serial, channel, 1.0, seed); });
    const double t_chan_parallel = time_call(
        [&] { channel_parallel = cvqkd::scaled_channel_samples(parallel, channel, 1.0, seed); });
    report("scaled_channel_samples", t_chan_serial, t_chan_parallel,
           channel_serial == channel_parallel);

    cvqkd::SampleMoments m_serial, m_parallel;
    const double t_mom_serial = time_call(
        [&] { m_serial = cvqkd::reference::accumulate_moments(serial, channel_serial); });
    const double t_mom_parallel =
        time_call([&] { m_parallel = cvqkd::accumulate_moments(parallel, channel_parallel); });
    report("accumulate_moments", t_mom_serial, t_mom_parallel,
           m_serial.saa == m_parallel.saa && m_serial.sab == m_parallel.sab &&
               m_serial.sbb == m_parallel.sbb);

    cvqkd::SampleMoments r_serial, r_parallel;
    const double t_run_serial = time_call(
        [&] { r_serial = cvqkd::reference::attacked_run_moments(proto, channel, attack, n, seed); });
    const double t_run_parallel = time_call(
        [&] { r_parallel = cvqkd::attacked_run_moments(proto, channel, attack, n, seed); });
    report("attacked_run_moments", t_run_serial, t_run_parallel,
           r_serial.saa == r_parallel.saa && r_serial.sab == r_parallel.sab &&
               r_serial.sbb == r_parallel.sbb);

    return 0;
}
