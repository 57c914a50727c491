#include "swdv/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace swdv {

double wavenumber(int m, int n, double box_length) {
    return 2.0 * std::numbers::pi * signed_mode(m, n) / box_length;
}

namespace {

// One forward + one backward c2c plan per grid size. Plans are created with
// FFTW_ESTIMATE (reproducible algorithm choice) and FFTW_UNALIGNED so they can
// be executed on any caller buffer via the new-array interface. Plan creation
// is serialized; execution is concurrency-safe.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    const PlanPair& get(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;

        std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
        std::vector<std::complex<double>> b(a.size());
        auto* ap = reinterpret_cast<fftw_complex*>(a.data());
        auto* bp = reinterpret_cast<fftw_complex*>(b.data());
        PlanPair pair;
        pair.fwd = fftw_plan_dft_2d(n, n, ap, bp, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        pair.bwd = fftw_plan_dft_2d(n, n, ap, bp, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        return plans_.emplace(n, pair).first->second;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<int, PlanPair> plans_;
};

} // namespace

Spectrum fft_forward(const ScalarField& f) {
    const Grid2D& grid = f.grid();
    const PlanPair& plans = PlanCache::instance().get(grid.n);

    std::vector<std::complex<double>> in(grid.size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = f[i];

    Spectrum out(grid);
    fftw_execute_dft(plans.fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    const double scale = 1.0 / static_cast<double>(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= scale;
    return out;
}

ScalarField fft_inverse(const Spectrum& s) {
    const Grid2D& grid = s.grid();
    const PlanPair& plans = PlanCache::instance().get(grid.n);

    std::vector<std::complex<double>> in(s.data(), s.data() + s.size());
    std::vector<std::complex<double>> out(s.size());
    fftw_execute_dft(plans.bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    ScalarField f(grid);
    for (std::size_t i = 0; i < out.size(); ++i) f[i] = out[i].real();
    return f;
}

} // namespace swdv
