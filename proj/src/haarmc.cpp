#include "schur/haarmc.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "schur/parallel.hpp"
#include "schur/symfunc.hpp"

namespace schur {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Exact representative matrices over the Gaussian integers

struct GInt {
    int re = 0, im = 0;
};

using ExactMat = std::array<std::array<GInt, 3>, 3>;

ExactMat gmatmul(const ExactMat& a, const ExactMat& b, int dim) {
    ExactMat out{};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            GInt acc;
            for (int k = 0; k < dim; ++k) {
                const GInt &x = a[r][k], &y = b[k][c];
                acc.re += x.re * y.re - x.im * y.im;
                acc.im += x.re * y.im + x.im * y.re;
            }
            out[r][c] = acc;
        }
    return out;
}

std::vector<ExactMat> exact_representatives(SubgroupId id) {
    const int dim = subgroup_ambient(id);
    ExactMat ident{}, rot{}, quarter{};
    for (int i = 0; i < dim; ++i) ident[i][i] = {1, 0};
    // the plane rotation swapping the circle coordinates
    rot = ident;
    rot[0][0] = {0, 0};
    rot[1][1] = {0, 0};
    rot[0][1] = {1, 0};
    rot[1][0] = {-1, 0};
    // the scalar i on the circle coordinates
    quarter = ident;
    quarter[0][0] = {0, 1};
    quarter[1][1] = {0, 1};
    switch (id) {
        case SubgroupId::U1_IN_U2:
        case SubgroupId::U1_IN_U3: return {ident};
        case SubgroupId::H2:
        case SubgroupId::H3: return {ident, rot};
        case SubgroupId::H24_PRIME:
        case SubgroupId::H34_PRIME: return {ident, quarter};
        case SubgroupId::H24:
        case SubgroupId::H34:
            return {ident, rot, quarter, gmatmul(quarter, rot, dim)};
    }
    throw std::invalid_argument("bad subgroup id");
}

// t-exponent the circle element carries in each column
int column_exponent(int col) { return col == 0 ? 1 : (col == 1 ? -1 : 0); }

// ---------------------------------------------------------------------------
// Laurent polynomials in t with Gaussian-rational coefficients

GRat gadd(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }

GRat gmul(const GRat& a, const GRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using Laurent = std::map<int, GRat>;

void laccum(Laurent& dst, int exponent, const GRat& c) {
    if (c.re == 0 && c.im == 0) return;
    auto [it, fresh] = dst.try_emplace(exponent, c);
    if (!fresh) {
        it->second = gadd(it->second, c);
        if (it->second.re == 0 && it->second.im == 0) dst.erase(it);
    }
}

Laurent lmul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) laccum(out, ea + eb, gmul(ca, cb));
    return out;
}

Laurent lscale(const Laurent& a, const GRat& s) {
    Laurent out;
    for (const auto& [e, c] : a) laccum(out, e, gmul(c, s));
    return out;
}

// characteristic coefficients of rep * diag(t, 1/t, 1) as Laurent polynomials
std::array<Laurent, 3> char_laurents(const ExactMat& rep, int dim) {
    auto entry = [&](int r, int c) {
        Laurent l;
        laccum(l, column_exponent(c), {Rat(rep[r][c].re), Rat(rep[r][c].im)});
        return l;
    };
    std::array<Laurent, 3> out;
    for (int r = 0; r < dim; ++r) {
        Laurent d = entry(r, r);
        for (const auto& [e, c] : d) laccum(out[0], e, c);
    }
    auto minor2 = [&](int r, int s) {
        Laurent m = lmul(entry(r, r), entry(s, s));
        for (const auto& [e, c] : lmul(entry(r, s), entry(s, r)))
            laccum(m, e, {-c.re, -c.im});
        return m;
    };
    if (dim == 2) {
        out[1] = minor2(0, 1);
    } else {
        for (const auto& pair : {std::pair{0, 1}, {0, 2}, {1, 2}})
            for (const auto& [e, c] : minor2(pair.first, pair.second)) laccum(out[1], e, c);
        // cofactor expansion along the first row
        for (int c = 0; c < 3; ++c) {
            const int c1 = c == 0 ? 1 : 0, c2 = c == 2 ? 1 : 2;
            Laurent sub = lmul(entry(1, c1), entry(2, c2));
            for (const auto& [e, v] : lmul(entry(1, c2), entry(2, c1)))
                laccum(sub, e, {-v.re, -v.im});
            Laurent piece = lmul(entry(0, c), sub);
            for (const auto& [e, v] : piece)
                laccum(out[2], e, c == 1 ? GRat{-v.re, -v.im} : v);
        }
    }
    return out;
}

bool is_constant(const std::array<Laurent, 3>& cs) {
    for (const auto& l : cs)
        for (const auto& [e, c] : l)
            if (e != 0) return false;
    return true;
}

GRat constant_coeff(const Laurent& l) {
    auto it = l.find(0);
    return it == l.end() ? GRat{} : it->second;
}

std::complex<double> to_complex(const GRat& g) {
    return {g.re.convert_to<double>(), g.im.convert_to<double>()};
}

void check_config(const MCConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("need at least one sample");
    if (cfg.x_points.empty()) throw std::invalid_argument("need at least one point");
    for (const auto& x : cfg.x_points)
        if (std::abs(x) > 1.0 + 1e-12)
            throw std::invalid_argument("points must lie in the closed unit disc");
}

// determinant product for one drawn circle element, dim 2 or 3
std::complex<double> det_product(const ExactMat& rep, int dim,
                                 const std::vector<std::complex<double>>& x, double theta) {
    const std::complex<double> t = std::polar(1.0, theta);
    std::complex<double> M[3][3];
    const std::complex<double> col[3] = {t, std::conj(t), 1.0};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            M[r][c] = std::complex<double>(rep[r][c].re, rep[r][c].im) * col[c];
    std::complex<double> c1, c2, c3;
    if (dim == 2) {
        c1 = M[0][0] + M[1][1];
        c2 = M[0][0] * M[1][1] - M[0][1] * M[1][0];
        c3 = 0;
    } else {
        c1 = M[0][0] + M[1][1] + M[2][2];
        c2 = M[0][0] * M[1][1] - M[0][1] * M[1][0] + M[0][0] * M[2][2] -
             M[0][2] * M[2][0] + M[1][1] * M[2][2] - M[1][2] * M[2][1];
        c3 = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
             M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
             M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    }
    std::complex<double> prod = 1;
    for (const auto& xi : x) prod *= 1.0 + xi * (c1 + xi * (c2 + xi * c3));
    return prod;
}

}  // namespace

double rng_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t z = mix64(seed ^ mix64(stream ^ mix64(index)));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

CosetStructure coset_structure(SubgroupId id) {
    CosetStructure out;
    out.group = id;
    out.ambient_dim = subgroup_ambient(id);
    for (const auto& rep : exact_representatives(id)) {
        CMat m(out.ambient_dim, std::vector<std::complex<double>>(out.ambient_dim));
        for (int r = 0; r < out.ambient_dim; ++r)
            for (int c = 0; c < out.ambient_dim; ++c)
                m[r][c] = {static_cast<double>(rep[r][c].re), static_cast<double>(rep[r][c].im)};
        out.representatives.push_back(std::move(m));
    }
    return out;
}

CMat coset_element(const CosetStructure& c, int coset, double theta) {
    if (coset < 0 || coset >= static_cast<int>(c.representatives.size()))
        throw std::invalid_argument("coset index out of range");
    CMat m = c.representatives[coset];
    const std::complex<double> t = std::polar(1.0, theta);
    const std::complex<double> col[3] = {t, std::conj(t), 1.0};
    for (int r = 0; r < c.ambient_dim; ++r)
        for (int j = 0; j < c.ambient_dim; ++j) m[r][j] *= col[j];
    return m;
}

CMat sample_element(const CosetStructure& c, std::uint64_t seed, std::uint64_t index) {
    const int count = static_cast<int>(c.representatives.size());
    const double u = rng_uniform(seed, 0x5e1ec7ull, 2 * index);
    const int coset = std::min(count - 1, static_cast<int>(u * count));
    const double theta = kTwoPi * rng_uniform(seed, 0x5e1ec7ull, 2 * index + 1);
    return coset_element(c, coset, theta);
}

MCEstimate empirical_autocorrelation(const CosetStructure& c, const MCConfig& cfg) {
    check_config(cfg);
    const auto reps = exact_representatives(c.group);
    const int dim = c.ambient_dim;
    const long long strata = static_cast<long long>(reps.size());
    const long long per_stratum = std::max<long long>(1, cfg.samples / strata);
    const double weight = 1.0 / static_cast<double>(strata);

    std::complex<double> estimate = 0;
    double se2_re = 0, se2_im = 0;

    for (size_t s = 0; s < reps.size(); ++s) {
        const auto cs = char_laurents(reps[s], dim);
        if (is_constant(cs)) {
            // determinant does not depend on the circle angle; exact value
            std::complex<double> prod = 1;
            const auto c1 = to_complex(constant_coeff(cs[0]));
            const auto c2 = to_complex(constant_coeff(cs[1]));
            const auto c3 = to_complex(constant_coeff(cs[2]));
            for (const auto& xi : cfg.x_points) prod *= 1.0 + xi * (c1 + xi * (c2 + xi * c3));
            estimate += weight * prod;
            continue;
        }
        // fixed shard plan; partials merged in shard order so the result does
        // not depend on the worker count
        const long long shard = 65536;
        const long long num_shards = (per_stratum + shard - 1) / shard;
        struct Partial {
            std::complex<double> sum{0, 0};
            double sq_re = 0, sq_im = 0;
        };
        std::vector<Partial> partials(static_cast<size_t>(num_shards));
        const int threads = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
        for (long long sh = 0; sh < num_shards; ++sh) {
            Partial p;
            const long long lo = sh * shard;
            const long long hi = std::min(per_stratum, lo + shard);
            for (long long k = lo; k < hi; ++k) {
                const double theta =
                    kTwoPi * rng_uniform(cfg.seed, static_cast<std::uint64_t>(s), k);
                const std::complex<double> v = det_product(reps[s], dim, cfg.x_points, theta);
                p.sum += v;
                p.sq_re += v.real() * v.real();
                p.sq_im += v.imag() * v.imag();
            }
            partials[static_cast<size_t>(sh)] = p;
        }
        Partial total;
        for (const auto& p : partials) {
            total.sum += p.sum;
            total.sq_re += p.sq_re;
            total.sq_im += p.sq_im;
        }
        const double n = static_cast<double>(per_stratum);
        const std::complex<double> mean = total.sum / n;
        estimate += weight * mean;
        if (per_stratum > 1) {
            const double var_re =
                std::max(0.0, (total.sq_re - n * mean.real() * mean.real()) / (n - 1));
            const double var_im =
                std::max(0.0, (total.sq_im - n * mean.imag() * mean.imag()) / (n - 1));
            se2_re += weight * weight * var_re / n;
            se2_im += weight * weight * var_im / n;
        }
    }
    return {estimate, std::sqrt(std::max(se2_re, se2_im))};
}

std::complex<double> symbolic_autocorrelation(SubgroupId h,
                                              const std::vector<std::complex<double>>& x) {
    const int m = static_cast<int>(x.size());
    if (m < 1 || m > 6) throw std::invalid_argument("symbolic evaluation limited to 6 points");
    const int g = subgroup_ambient(h);
    StripSweep sweep(m);
    std::vector<std::pair<int, long long>> weights;
    for (const auto& la : enumerate_box(BoxShape(m, g))) {
        const Partition lp = transpose(la);
        const long long mult = multiplicity(h, lp);
        if (mult != 0) weights.emplace_back(sweep.state_index(lp), mult);
    }
    SymmetricFunction expanded;
    expanded.basis = Basis::Monomial;
    expanded.num_vars = m;
    sweep.run([&](int j, int k, int l, const std::vector<Int>& kostka_col) {
        Int total = 0;
        for (const auto& [state, mult] : weights) total += mult * kostka_col[state];
        if (total == 0) return;
        std::vector<int> parts;
        parts.insert(parts.end(), j, 3);
        parts.insert(parts.end(), k, 2);
        parts.insert(parts.end(), l, 1);
        expanded.coeffs.emplace(Partition(std::move(parts)), Rat(total));
    });
    return evaluate(expanded, x);
}

GRat analytic_autocorrelation(SubgroupId h, const std::vector<GRat>& x) {
    if (x.empty()) throw std::invalid_argument("need at least one point");
    const auto reps = exact_representatives(h);
    const int dim = subgroup_ambient(h);
    GRat acc;
    for (const auto& rep : reps) {
        const auto cs = char_laurents(rep, dim);
        Laurent prod;
        laccum(prod, 0, {Rat(1), Rat(0)});
        for (const auto& xi : x) {
            Laurent factor;
            laccum(factor, 0, {Rat(1), Rat(0)});
            GRat power = xi;
            for (int d = 0; d < 3; ++d) {
                for (const auto& [e, c] : lscale(cs[d], power)) laccum(factor, e, c);
                power = gmul(power, xi);
            }
            prod = lmul(prod, factor);
        }
        acc = gadd(acc, constant_coeff(prod));
    }
    const Rat count(static_cast<int>(reps.size()));
    return {acc.re / count, acc.im / count};
}

MCReport mc_check(SubgroupId h, const MCConfig& cfg) {
    MCReport rep;
    rep.group = h;
    rep.m = static_cast<int>(cfg.x_points.size());
    rep.x = cfg.x_points;
    rep.samples = cfg.samples;
    rep.seed = cfg.seed;
    const CosetStructure c = coset_structure(h);
    const MCEstimate est = empirical_autocorrelation(c, cfg);
    rep.empirical = est.estimate;
    rep.std_error = est.std_error;
    rep.symbolic = symbolic_autocorrelation(h, cfg.x_points);
    const double tol = std::max(4.0 * est.std_error, 1e-2);
    rep.pass = std::abs(rep.empirical.real() - rep.symbolic.real()) <= tol &&
               std::abs(rep.empirical.imag() - rep.symbolic.imag()) <= tol;
    return rep;
}

}  // namespace schur
