#include "bs5/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bs5::sim {

void SimConfig::validate() const {
    if (n_species < 3) throw std::invalid_argument("sim: n_species must be >= 3");
    if (burn_in < 0) throw std::invalid_argument("sim: burn_in must be >= 0");
    if (thinning < 1) throw std::invalid_argument("sim: thinning must be >= 1");
    if (n_samples < 1) throw std::invalid_argument("sim: n_samples must be >= 1");
    if (n_replicas < 1) throw std::invalid_argument("sim: n_replicas must be >= 1");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replica) {
    std::uint64_t z = seed + replica * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SimState init(const SimConfig& cfg, int replica) {
    cfg.validate();
    SimState st;
    st.rng.seed(mix_seed(cfg.seed, static_cast<std::uint64_t>(replica)));
    st.fitness.resize(cfg.n_species);
    for (double& f : st.fitness) f = uniform01(st.rng);
    return st;
}

void step(SimState& state) {
    const int n = static_cast<int>(state.fitness.size());
    int nu = 0;
    for (int i = 1; i < n; ++i)
        if (state.fitness[i] < state.fitness[nu]) nu = i;
    state.fitness[(nu + n - 1) % n] = uniform01(state.rng);
    state.fitness[nu] = uniform01(state.rng);
    state.fitness[(nu + 1) % n] = uniform01(state.rng);
    ++state.step_count;
}

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("EmpiricalCDF: empty sample set");
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalCDF::operator()(double x) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalCDF::ks_distance(const std::function<double(double)>& cdf) const {
    const double n = static_cast<double>(samples_.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const double hi = cdf(samples_[i]);
        // left limit, so a step-function reference (e.g. an ECDF) is handled
        const double lo = cdf(std::nextafter(samples_[i], -1.0));
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - hi));
        d = std::max(d, std::abs(lo - static_cast<double>(i) / n));
    }
    return d;
}

double EmpiricalCDF::mean() const {
    double s = 0.0;
    for (double x : samples_) s += x;
    return s / static_cast<double>(samples_.size());
}

EmpiricalCDF run_steady(const SimConfig& cfg) {
    cfg.validate();
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(cfg.n_samples) * cfg.n_replicas *
                    (cfg.pool_sites ? cfg.n_species : 1));
    for (int r = 0; r < cfg.n_replicas; ++r) {
        SimState st = init(cfg, r);
        for (long long i = 0; i < cfg.burn_in; ++i) step(st);
        for (long long s = 0; s < cfg.n_samples; ++s) {
            for (long long i = 0; i < cfg.thinning; ++i) step(st);
            if (cfg.pool_sites)
                samples.insert(samples.end(), st.fitness.begin(), st.fitness.end());
            else
                samples.push_back(st.fitness[0]);
        }
    }
    return EmpiricalCDF(std::move(samples));
}

EmpiricalCDF run_kstep(const SimConfig& cfg, long long k) {
    cfg.validate();
    if (k < 0) throw std::invalid_argument("run_kstep: k must be >= 0");
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(cfg.n_samples) * cfg.n_replicas);
    for (int r = 0; r < cfg.n_replicas; ++r) {
        SimState st = init(cfg, r);
        for (long long s = 0; s < cfg.n_samples; ++s) {
            for (double& f : st.fitness) f = uniform01(st.rng);
            for (long long i = 0; i < k; ++i) step(st);
            samples.push_back(st.fitness[0]);
        }
    }
    return EmpiricalCDF(std::move(samples));
}

}  // namespace bs5::sim
