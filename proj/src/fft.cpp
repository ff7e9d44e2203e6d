#include "mixdiff/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mixdiff::fft {

namespace {

std::mutex plan_mutex;
std::map<std::tuple<int, int, bool>, fftw_plan>& plan_cache() {
    static auto* cache = new std::map<std::tuple<int, int, bool>, fftw_plan>();
    return *cache;
}

fftw_plan get_plan(int dim, int m, bool inverse) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(dim, m, inverse);
    auto it = plan_cache().find(key);
    if (it != plan_cache().end()) return it->second;

    // Plan on a throwaway buffer with FFTW_UNALIGNED so the plan can execute
    // on any caller array via fftw_execute_dft.
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(dim == 1 ? m : m * m));
    const int sign = inverse ? FFTW_BACKWARD : FFTW_FORWARD;
    fftw_plan plan = dim == 1
        ? fftw_plan_dft_1d(m, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_2d(m, m, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    plan_cache().emplace(key, plan);
    return plan;
}

}  // namespace

void transform(int dim, int m, std::complex<double>* data, bool inverse) {
    fftw_plan plan = get_plan(dim, m, inverse);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, raw, raw);
}

}  // namespace mixdiff::fft
