#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace bs5::sim {

struct SimConfig {
    int n_species = 5;
    std::uint64_t seed = 0;
    long long burn_in = 100000;
    long long n_samples = 1;
    long long thinning = 10;
    int n_replicas = 1;
    bool pool_sites = false;  // record all sites per time point (exchangeable law)

    void validate() const;
};

struct SimState {
    std::vector<double> fitness;
    std::mt19937_64 rng;
    long long step_count = 0;
};

// Uniform draw in [0,1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Decorrelated per-replica seeding (splitmix64 over seed + replica index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t replica);

// Fresh state with i.i.d. uniform fitness values.
SimState init(const SimConfig& cfg, int replica = 0);

// One Bak-Sneppen step: the argmin site (lowest index on ties) and its two
// ring neighbors get fresh uniforms.
void step(SimState& state);

// Empirical CDF over a sorted sample set.
class EmpiricalCDF {
  public:
    explicit EmpiricalCDF(std::vector<double> samples);

    const std::vector<double>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    // Right-continuous step function: fraction of samples <= x.
    double operator()(double x) const;

    // sup over sample points of |ECDF - cdf|, both one-sided gaps.
    double ks_distance(const std::function<double(double)>& cdf) const;

    double mean() const;

  private:
    std::vector<double> samples_;
};

// After burn_in steps, records site-0 fitness (all sites when pool_sites)
// every `thinning` steps until n_samples per replica are collected; pools
// replicas.
EmpiricalCDF run_steady(const SimConfig& cfg);

// n_samples independent chains, each run exactly k steps from a fresh uniform
// start; records site-0 fitness.
EmpiricalCDF run_kstep(const SimConfig& cfg, long long k);

}  // namespace bs5::sim
