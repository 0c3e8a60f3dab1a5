#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "schur/numbers.hpp"
#include "schur/partition.hpp"

namespace schur {

enum class Basis { Monomial, Schur };

// Sparse exact symmetric function in num_vars variables: a coefficient map
// over partitions tagged with its basis. Zero coefficients are never stored.
struct SymmetricFunction {
    Basis basis = Basis::Monomial;
    int num_vars = 1;
    std::map<Partition, Rat> coeffs;

    // accumulates and drops the key if the sum is exactly zero
    void add(const Partition& key, const Rat& c);

    bool operator==(const SymmetricFunction&) const = default;
};

// One factor f(x) = c0 + c1 x + c2 x^2 + c3 x^3 applied to every variable,
// together with a rational weight used to form 1/2-combinations of products.
// c0 must be 1.
struct FactorProfile {
    std::array<Rat, 4> per_degree{1, 0, 0, 0};
    Rat weight = 1;
};

// Number of semistandard tableaux of shape la and content mu. Zero when the
// sizes differ or dominance fails. Works for general small shapes; the box
// engine below is the bulk path for 3-column shapes.
Int kostka(const Partition& la, const Partition& mu);

// Expansion of the Schur function indexed by la over monomial symmetric
// functions in m variables. Requires la to fit the (m, 3) box.
SymmetricFunction schur_to_monomial(const Partition& la, int m);

// Number of distinct monomials with a nonzero coefficient; Monomial basis only.
Int monomial_count(const SymmetricFunction& f);

// Exact value at x = (1, ..., 1). For Schur terms this goes through the
// Kostka expansion, so it can be cross-checked against hook_content_dim.
Rat specialize_ones(const SymmetricFunction& f);

Rat evaluate(const SymmetricFunction& f, const std::vector<Rat>& x);
std::complex<double> evaluate(const SymmetricFunction& f,
                              const std::vector<std::complex<double>>& x);

// Monomial expansion of sum_w weight_w * prod_i f_w(x_i). The coefficient of
// m_lambda is the product of per-part factor coefficients, summed over the
// weighted profiles.
SymmetricFunction product_lhs(const std::vector<FactorProfile>& profile, int m);

// Multiplication by prod_i (1 + x_i) in the Schur basis: S_la picks up every
// mu obtained by adding at most one box per row. Unclipped by default; the
// flag restricts the result to the (m, 3) box.
SymmetricFunction pieri_multiply(const SymmetricFunction& f, bool clip_to_box = false);

// Expands prod_{i<=m} prod_{j<=g} (1 + x_i t_j) and the paired-Schur sum over
// the (m, g) box as coefficient maps over (x-partition, t-partition) pairs and
// compares them exactly, for both sign variants. Guard: m, g <= 5.
bool dual_cauchy_check(int m, int g);

// Product formula for the value of the Schur function at (1, ..., 1) in m
// variables; independent of the Kostka route.
Int hook_content_dim(const Partition& la, int m);

// Number of distinct rearrangements of mu padded with zeros to m entries.
Int permutation_count(const Partition& mu, int m);

// K_{lambda mu} for every lambda, mu in the (m, 3) box at once. States are the
// transpose triples (c1 >= c2 >= c3), c1 <= m, i.e. column lengths of lambda;
// one horizontal-strip transition is applied per content grid point
// mu = (3^j, 2^k, 1^l). Backs schur_to_monomial and identity verification.
class StripSweep {
public:
    explicit StripSweep(int m);

    int num_vars() const { return m_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const std::vector<std::array<int, 3>>& states() const { return states_; }
    int state_index(int c1, int c2, int c3) const;
    int state_index(const Partition& lambda_prime) const;

    // visit(j, k, l, K) where K[state_index(lambda')] = K_{lambda, (3^j 2^k 1^l)};
    // called once per content in the box, in a fixed deterministic order.
    void run(const std::function<void(int, int, int, const std::vector<Int>&)>& visit) const;

    // dst[s] = sum of src over predecessors of s under adding a horizontal
    // strip of the given size; serial and OpenMP paths give identical values.
    void apply_strip(int strip_size, const std::vector<Int>& src,
                     std::vector<Int>& dst, bool parallel) const;

private:
    int m_;
    std::vector<std::array<int, 3>> states_;
    std::vector<int> index_;  // dense (m+1)^3 lookup
};

}  // namespace schur
