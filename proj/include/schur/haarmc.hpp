#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "schur/branching.hpp"
#include "schur/numbers.hpp"

namespace schur {

using CMat = std::vector<std::vector<std::complex<double>>>;

struct CosetStructure {
    SubgroupId group = SubgroupId::H2;
    int ambient_dim = 2;
    std::vector<CMat> representatives;  // [0] is the identity
};

CosetStructure coset_structure(SubgroupId id);

struct MCConfig {
    long long samples = 1;
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> x_points;  // each |x| <= 1
};

// counter-based uniform draw on [0, 1); pure function of its key
double rng_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// representative times the embedded circle element e^(i theta)
CMat coset_element(const CosetStructure& c, int coset, double theta);
CMat sample_element(const CosetStructure& c, std::uint64_t seed, std::uint64_t index);

struct MCEstimate {
    std::complex<double> estimate;
    double std_error = 0;
};

MCEstimate empirical_autocorrelation(const CosetStructure& c, const MCConfig& cfg);

// exact-coefficient Schur sum evaluated at the given points; m <= 6
std::complex<double> symbolic_autocorrelation(SubgroupId h,
                                              const std::vector<std::complex<double>>& x);

struct GRat {
    Rat re, im;
};

// exact circle integral of the determinant product at Gaussian-rational points
GRat analytic_autocorrelation(SubgroupId h, const std::vector<GRat>& x);

struct MCReport {
    SubgroupId group = SubgroupId::H2;
    int m = 0;
    std::vector<std::complex<double>> x;
    long long samples = 0;
    std::uint64_t seed = 0;
    std::complex<double> empirical;
    std::complex<double> symbolic;
    double std_error = 0;
    bool pass = false;
};

MCReport mc_check(SubgroupId h, const MCConfig& cfg);

}  // namespace schur
