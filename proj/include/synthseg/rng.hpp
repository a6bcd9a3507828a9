#pragma once

#include <cstdint>
#include <random>

namespace synthseg {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent per-sample seeds.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline double runif(Rng& rng, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// open (0,1): safe to take logs
inline double runif_open(Rng& rng) {
    double u;
    do {
        u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    } while (u <= 0.0);
    return u;
}

inline int rint(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double rnorm(Rng& rng, double mean = 0.0, double sigma = 1.0) {
    return std::normal_distribution<double>(mean, sigma)(rng);
}

inline bool rbern(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline int rpoisson(Rng& rng, double lambda) {
    return std::poisson_distribution<int>(lambda)(rng);
}

// log of a Gamma(shape, 1) draw, Marsaglia-Tsang. Returned in log space so
// that tiny shapes (e.g. Dirichlet alpha = 0.001) do not underflow to zero.
double sample_log_gamma(Rng& rng, double shape);

} // namespace synthseg
