#include "schur/branching.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace schur {

namespace {

// Congruence tables. Row index is z reduced, column index is b (or b')
// reduced. Transcribed by hand; ensure_validated() cross-checks every entry
// against the brute-force counts before first use.

constexpr int kTau[4][4] = {
    {1, 1, 0, 0},
    {1, 0, -1, 0},
    {0, -1, -1, 0},
    {0, 0, 0, 0},
};

constexpr int kKappa[2][4][4] = {
    {{3, -2, 1, 0}, {2, -4, 2, 0}, {1, -2, 3, 0}, {0, 0, 0, 0}},
    {{-1, 2, 1, 0}, {-2, 4, -2, 0}, {1, 2, -1, 0}, {0, 0, 0, 0}},
};

// pairs (x, y); the dot convention is (x, y).(b', z) = x b' + y z
constexpr int kEta[2][2][2][2] = {
    {{{2, 2}, {0, 1}}, {{1, 2}, {1, 1}}},
    {{{0, 0}, {2, 1}}, {{1, 0}, {1, 1}}},
};

constexpr int kXi[2][4][4] = {
    {{8, 0, 4, 0}, {6, -3, 2, 1}, {4, -4, 4, 0}, {2, 1, 2, 1}},
    {{0, 6, 0, 2}, {0, 5, -4, 1}, {0, 2, -4, 2}, {0, 1, 0, 1}},
};

constexpr int kAlpha[2][2][2][2] = {
    {{{1, 1}, {-1, 0}}, {{0, 1}, {0, 0}}},
    {{{-1, -1}, {1, 0}}, {{0, -1}, {0, 0}}},
};

constexpr int kBeta[2][4][4] = {
    {{4, 1, 2, -1}, {3, 0, -1, 0}, {2, -3, 0, -1}, {1, 0, 1, 0}},
    {{0, 3, -2, 1}, {1, 0, -3, 0}, {-2, -1, -4, 1}, {-1, 0, -1, 0}},
};

constexpr int kBetaTilde[2][2][2] = {
    {{2, -1}, {1, 0}},
    {{-2, 1}, {-1, 0}},
};

constexpr int kBetaHat[2][4][4] = {
    {{0, 3, -2, 1}, {1, 0, -3, 0}, {-2, -1, -4, 1}, {-1, 0, -1, 0}},
    {{4, 1, 2, -1}, {3, 0, -1, 0}, {2, -3, 0, -1}, {1, 0, 1, 0}},
};

void check_descriptor(const PhiDescriptor& d) {
    if (d.b < 0 || d.a < d.b || d.epsilon < 0 || d.epsilon > 1 || d.b < d.epsilon)
        throw std::invalid_argument("need a >= b >= epsilon with epsilon in {0,1}");
}

long long exact_div(long long num, int den, const char* what) {
    if (num % den != 0) {
        std::ostringstream msg;
        msg << what << " produced non-integer " << num << "/" << den
            << "; table data is corrupt";
        throw std::logic_error(msg.str());
    }
    return num / den;
}

int tau_raw(int z, int b) { return kTau[z % 4][b % 4]; }

long long ceil_half(long long v) { return (v + 1) / 2; }

// the four closed forms on a base descriptor, before startup validation
long long mod2_closed(int z, int bp) { return ceil_half(static_cast<long long>(z + 1) * (bp + 1)); }

long long mod4_closed(int z, int bp) {
    return exact_div(mod2_closed(z, bp) + tau_raw(z, bp), 2, "half-sum form");
}

long long sum4_closed(int eps, int z, int bp) {
    return exact_div(static_cast<long long>(z + 1) * (bp + 1) + kKappa[eps][z % 4][bp % 4], 4,
                     "quarter form");
}

long long both44_closed(int eps, int z, int bp) {
    const int* eta = kEta[eps][z % 2][bp % 2];
    const long long dot = static_cast<long long>(eta[0]) * bp + static_cast<long long>(eta[1]) * z;
    return exact_div(static_cast<long long>(bp) * z + dot + kXi[eps][z % 4][bp % 4], 8,
                     "eighth form");
}

long long omega_raw(OmegaKind kind, int eps, int z, int bp) {
    const int* al = kAlpha[eps][z % 2][bp % 2];
    const long long dot = static_cast<long long>(al[0]) * bp + static_cast<long long>(al[1]) * z;
    switch (kind) {
        case OmegaKind::OMEGA:
            return exact_div(dot + kBeta[eps][z % 4][bp % 4], 4, "omega");
        case OmegaKind::OMEGA_TILDE:
            return exact_div(dot + kBetaTilde[eps][z % 2][bp % 2], 2, "omega tilde");
        case OmegaKind::OMEGA_HAT:
            return exact_div(-dot + kBetaHat[eps][z % 4][bp % 4], 4, "omega hat");
    }
    throw std::logic_error("unreachable");
}

TableValidationReport validate_range(int max_a) {
    TableValidationReport rep;
    auto fail = [&](const PhiDescriptor& d, const char* name, long long got, long long want) {
        if (rep.ok) {
            std::ostringstream msg;
            msg << name << " mismatch at (a=" << d.a << ", b=" << d.b << ", eps=" << d.epsilon
                << "): closed form " << got << ", oracle " << want;
            rep.ok = false;
            rep.first_mismatch = msg.str();
        }
    };
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= a; ++b)
            for (int eps = 0; eps <= (b >= 1 ? 1 : 0); ++eps) {
                const PhiDescriptor d{a, b, eps};
                const int z = a - b, bp = b - eps;
                ++rep.cases_checked;
                struct Check {
                    PhiFilter filter;
                    const char* name;
                    long long closed;
                } checks[] = {
                    {PhiFilter::MOD2, "parity count", mod2_closed(z, bp)},
                    {PhiFilter::MOD4, "difference-mod-4 count", mod4_closed(z, bp)},
                    {PhiFilter::SUM4, "sum-mod-4 count", sum4_closed(eps, z, bp)},
                    {PhiFilter::BOTH44, "double congruence count", both44_closed(eps, z, bp)},
                };
                for (const auto& c : checks) {
                    const long long oracle = phi_count(d, c.filter);
                    if (c.closed != oracle) fail(d, c.name, c.closed, oracle);
                }
                // step-four recurrences
                const PhiDescriptor up{a + 4, b + 4, eps};
                const long long sum4_step =
                    phi_count(up, PhiFilter::SUM4) - phi_count(d, PhiFilter::SUM4);
                if (sum4_step != z + 1) fail(d, "sum-mod-4 step", sum4_step, z + 1);
                const long long both_step =
                    phi_count(up, PhiFilter::BOTH44) - phi_count(d, PhiFilter::BOTH44);
                const long long want =
                    exact_div(z + kEta[eps][z % 2][bp % 2][0], 2, "double congruence step");
                if (both_step != want) fail(d, "double congruence step", both_step, want);
            }
    return rep;
}

std::once_flag g_validated;

void ensure_validated() {
    std::call_once(g_validated, [] {
        TableValidationReport rep = validate_range(20);
        if (!rep.ok) throw std::logic_error("table self-check failed: " + rep.first_mismatch);
    });
}

// Restriction of the two-variable irrep with highest weight (a, b) to the
// diagonal circle, conjugated by a coset representative. Representatives are
// signed permutation matrices over the Gaussian integers, so each monomial
// basis vector of Sym^(a-b) maps to a single monomial and the invariant
// dimension is a finite exact sum.
struct GaussInt {
    long long re = 0, im = 0;
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

GaussInt gpow(GaussInt base, int e) {
    GaussInt r{1, 0};
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

struct CosetRep2 {
    int image[2];      // index of the basis vector each e_i lands on
    GaussInt coef[2];  // unit scalar picked up
    GaussInt det;
};

std::vector<CosetRep2> coset_reps_2(SubgroupId id) {
    const CosetRep2 ident{{0, 1}, {{1, 0}, {1, 0}}, {1, 0}};
    const CosetRep2 rot{{1, 0}, {{-1, 0}, {1, 0}}, {1, 0}};
    const CosetRep2 scale{{0, 1}, {{0, 1}, {0, 1}}, {-1, 0}};
    const CosetRep2 both{{1, 0}, {{0, -1}, {0, 1}}, {-1, 0}};
    switch (id) {
        case SubgroupId::U1_IN_U2: return {ident};
        case SubgroupId::H2: return {ident, rot};
        case SubgroupId::H24_PRIME: return {ident, scale};
        case SubgroupId::H24: return {ident, scale, rot, both};
        default: throw std::invalid_argument("not a two-variable subgroup");
    }
}

long long invariant_dim_2(SubgroupId id, int a, int b) {
    const int n = a - b;
    GaussInt total{0, 0};
    const auto reps = coset_reps_2(id);
    for (const auto& r : reps) {
        // e1 gains t, e2 gains 1/t; v_j = e1^(n-j) e2^j
        GaussInt trace{0, 0};
        for (int j = 0; j <= n; ++j) {
            const int t_power = (n - j) - j;
            if (t_power != 0) continue;
            // image monomial must be v_j again
            const int img_e1 = r.image[0], img_e2 = r.image[1];
            const int img_count_e1 = (img_e1 == 0 ? n - j : 0) + (img_e2 == 0 ? j : 0);
            if (img_count_e1 != n - j) continue;
            GaussInt c = gpow(r.coef[0], n - j) * gpow(r.coef[1], j);
            trace += c;
        }
        trace = trace * gpow(r.det, b);
        total += trace;
    }
    if (total.im != 0 || total.re % static_cast<long long>(reps.size()) != 0 || total.re < 0)
        throw std::logic_error("coset average is not a dimension");
    return total.re / static_cast<long long>(reps.size());
}

}  // namespace

const char* subgroup_name(SubgroupId id) {
    switch (id) {
        case SubgroupId::U1_IN_U2: return "U1_IN_U2";
        case SubgroupId::H2: return "H2";
        case SubgroupId::H24_PRIME: return "H24_PRIME";
        case SubgroupId::H24: return "H24";
        case SubgroupId::U1_IN_U3: return "U1_IN_U3";
        case SubgroupId::H3: return "H3";
        case SubgroupId::H34_PRIME: return "H34_PRIME";
        case SubgroupId::H34: return "H34";
    }
    throw std::invalid_argument("bad subgroup id");
}

SubgroupId parse_subgroup(const std::string& name) {
    for (SubgroupId id :
         {SubgroupId::U1_IN_U2, SubgroupId::H2, SubgroupId::H24_PRIME, SubgroupId::H24,
          SubgroupId::U1_IN_U3, SubgroupId::H3, SubgroupId::H34_PRIME, SubgroupId::H34})
        if (name == subgroup_name(id)) return id;
    throw std::invalid_argument("unknown subgroup: " + name);
}

int subgroup_ambient(SubgroupId id) {
    switch (id) {
        case SubgroupId::U1_IN_U2:
        case SubgroupId::H2:
        case SubgroupId::H24_PRIME:
        case SubgroupId::H24: return 2;
        default: return 3;
    }
}

std::vector<std::pair<int, int>> phi_set(const PhiDescriptor& d) {
    check_descriptor(d);
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(d.a - d.b + 1) * (d.b - d.epsilon + 1));
    for (int q = d.epsilon; q <= d.b; ++q)
        for (int p = d.a; p >= d.b; --p) out.emplace_back(p, q);
    return out;
}

long long phi_count(const PhiDescriptor& d, PhiFilter filter) {
    check_descriptor(d);
    long long count = 0;
    for (int p = d.b; p <= d.a; ++p)
        for (int q = d.epsilon; q <= d.b; ++q) {
            bool keep = false;
            switch (filter) {
                case PhiFilter::MOD2: keep = (p - q) % 2 == 0; break;
                case PhiFilter::MOD4: keep = (p - q) % 4 == 0; break;
                case PhiFilter::SUM4: keep = (p + q) % 4 == 0; break;
                case PhiFilter::BOTH44: keep = (p - q) % 4 == 0 && (p + q) % 4 == 0; break;
            }
            if (keep) ++count;
        }
    return count;
}

int tau(int z, int b) {
    if (z < 0 || b < 0) throw std::invalid_argument("tau needs non-negative arguments");
    ensure_validated();
    return tau_raw(z, b);
}

long long omega(OmegaKind kind, int epsilon, int z, int b_prime) {
    if (z < 0 || b_prime < 0 || epsilon < 0 || epsilon > 1)
        throw std::invalid_argument("omega needs z, b' >= 0 and epsilon in {0,1}");
    ensure_validated();
    return omega_raw(kind, epsilon, z, b_prime);
}

long long multiplicity(SubgroupId id, const Partition& lambda_prime) {
    ensure_validated();
    const int g = subgroup_ambient(id);
    if (lambda_prime.length() > g)
        throw std::invalid_argument("partition has more rows than the ambient group");
    const int a = lambda_prime.part(0), b = lambda_prime.part(1), c = lambda_prime.part(2);
    long long value = 0;
    switch (id) {
        case SubgroupId::U1_IN_U2: value = (a - b) % 2 == 0; break;
        case SubgroupId::H2: value = (a - b) % 4 == 0; break;
        case SubgroupId::H24_PRIME: value = (a + b) % 4 == 0; break;
        case SubgroupId::H24: value = (a + b) % 4 == 0 && (a - b) % 4 == 0; break;
        case SubgroupId::U1_IN_U3: value = mod2_closed(a - b, b - c); break;
        case SubgroupId::H3: value = mod4_closed(a - b, b - c); break;
        case SubgroupId::H34_PRIME: {
            const G3Decomposition d = g3_decompose(lambda_prime);
            value = sum4_closed(d.epsilon, d.z, d.b_prime);
            break;
        }
        case SubgroupId::H34: {
            const G3Decomposition d = g3_decompose(lambda_prime);
            value = both44_closed(d.epsilon, d.z, d.b_prime);
            break;
        }
    }
    if (value < 0) throw std::logic_error("negative multiplicity; table data is corrupt");
    return value;
}

long long multiplicity_oracle(SubgroupId id, const Partition& lambda_prime) {
    const int g = subgroup_ambient(id);
    if (lambda_prime.length() > g)
        throw std::invalid_argument("partition has more rows than the ambient group");
    const int a = lambda_prime.part(0), b = lambda_prime.part(1), c = lambda_prime.part(2);
    switch (id) {
        case SubgroupId::U1_IN_U2:
        case SubgroupId::H2:
        case SubgroupId::H24_PRIME:
        case SubgroupId::H24: return invariant_dim_2(id, a, b);
        case SubgroupId::U1_IN_U3: return phi_count({a - c, b - c, 0}, PhiFilter::MOD2);
        case SubgroupId::H3: return phi_count({a - c, b - c, 0}, PhiFilter::MOD4);
        case SubgroupId::H34_PRIME: {
            const G3Decomposition d = g3_decompose(lambda_prime);
            return phi_count({d.z + d.b_prime + d.epsilon, d.b_prime + d.epsilon, d.epsilon},
                             PhiFilter::SUM4);
        }
        case SubgroupId::H34: {
            const G3Decomposition d = g3_decompose(lambda_prime);
            return phi_count({d.z + d.b_prime + d.epsilon, d.b_prime + d.epsilon, d.epsilon},
                             PhiFilter::BOTH44);
        }
    }
    throw std::invalid_argument("bad subgroup id");
}

TableValidationReport validate_tables(int max_a) {
    if (max_a < 8) throw std::invalid_argument("validation range too small to be meaningful");
    return validate_range(max_a);
}

}  // namespace schur
