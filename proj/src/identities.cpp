#include "schur/identities.hpp"

#include <chrono>
#include <stdexcept>

#include "schur/branching.hpp"

namespace schur {

namespace {

// how the Schur coefficient at lambda' is computed
enum class CoeffKind {
    ALWAYS_ONE,
    TWO_ALT,        // (-1)^((a-b)/2) when a == b mod 2
    TWO_ALT_COLS,   // (-1)^b when a == b mod 2
    TWO_EVEN,       // (-1)^((a-b)/2) when a+b == 0 mod 4
    TWO_ODD,        // (-1)^((a-b)/2) when a+b == 2 mod 4
    TWO_STAIR,      // a-b+1
    THREE_TAU,
    THREE_OMEGA,
    THREE_OMEGA_TILDE,
    THREE_OMEGA_HAT,
};

struct IdentityDef {
    const char* name;
    int columns;
    std::vector<FactorProfile> profile;
    CoeffKind kind;
    bool negate_odd;  // extra (-1)^|lambda| on every coefficient
    IdentityTag flip;
};

FactorProfile factor(int c1, int c2, int c3, Rat weight = 1) {
    FactorProfile p;
    p.per_degree = {Rat(1), Rat(c1), Rat(c2), Rat(c3)};
    p.weight = weight;
    return p;
}

const Rat kHalf(1, 2);

const std::vector<IdentityDef>& catalog() {
    static const std::vector<IdentityDef> defs = {
        {"G1_PLUS", 1, {factor(1, 0, 0)}, CoeffKind::ALWAYS_ONE, false, IdentityTag::G1_MINUS},
        {"G1_MINUS", 1, {factor(-1, 0, 0)}, CoeffKind::ALWAYS_ONE, true, IdentityTag::G1_PLUS},
        {"G2_PLUS", 2, {factor(0, 1, 0)}, CoeffKind::TWO_ALT, false, IdentityTag::G2_MINUS},
        {"G2_MINUS", 2, {factor(0, -1, 0)}, CoeffKind::TWO_ALT_COLS, false, IdentityTag::G2_PLUS},
        {"G2_EVEN", 2, {factor(0, 1, 0, kHalf), factor(0, -1, 0, kHalf)}, CoeffKind::TWO_EVEN,
         false, IdentityTag::G2_EVEN},
        {"G2_ODD", 2, {factor(0, 1, 0, kHalf), factor(0, -1, 0, -kHalf)}, CoeffKind::TWO_ODD,
         false, IdentityTag::G2_ODD},
        {"G2_SQUARE_PLUS", 2, {factor(2, 1, 0)}, CoeffKind::TWO_STAIR, false,
         IdentityTag::G2_SQUARE_MINUS},
        {"G2_SQUARE_MINUS", 2, {factor(-2, 1, 0)}, CoeffKind::TWO_STAIR, true,
         IdentityTag::G2_SQUARE_PLUS},
        {"G3_C", 3, {factor(1, 1, 1)}, CoeffKind::THREE_TAU, false, IdentityTag::G3_C_MINUS},
        {"G3_C_MINUS", 3, {factor(-1, 1, -1)}, CoeffKind::THREE_TAU, true, IdentityTag::G3_C},
        {"G3_D", 3, {factor(1, 1, 1, kHalf), factor(1, -1, -1, kHalf)}, CoeffKind::THREE_OMEGA,
         false, IdentityTag::G3_D_MINUS},
        {"G3_D_MINUS", 3, {factor(-1, 1, -1, kHalf), factor(-1, -1, 1, kHalf)},
         CoeffKind::THREE_OMEGA, true, IdentityTag::G3_D},
        {"G3_F", 3, {factor(1, -1, -1)}, CoeffKind::THREE_OMEGA_TILDE, false,
         IdentityTag::G3_F_MINUS},
        {"G3_F_MINUS", 3, {factor(-1, -1, 1)}, CoeffKind::THREE_OMEGA_TILDE, true,
         IdentityTag::G3_F},
        {"G3_G", 3, {factor(1, 1, 1, kHalf), factor(1, -1, -1, -kHalf)},
         CoeffKind::THREE_OMEGA_HAT, false, IdentityTag::G3_G_MINUS},
        {"G3_G_MINUS", 3, {factor(-1, 1, -1, kHalf), factor(-1, -1, 1, -kHalf)},
         CoeffKind::THREE_OMEGA_HAT, true, IdentityTag::G3_G},
    };
    return defs;
}

const IdentityDef& def_for(IdentityTag tag) { return catalog()[static_cast<size_t>(tag)]; }

void check_id(const IdentityId& id) {
    if (id.m < 1) throw std::invalid_argument("need at least one variable");
}

long long schur_coeff(const IdentityDef& def, const Partition& lp) {
    const int a = lp.part(0), b = lp.part(1), c = lp.part(2);
    long long value = 0;
    switch (def.kind) {
        case CoeffKind::ALWAYS_ONE: value = 1; break;
        case CoeffKind::TWO_ALT:
            if ((a - b) % 2 == 0) value = (a - b) % 4 == 0 ? 1 : -1;
            break;
        case CoeffKind::TWO_ALT_COLS:
            if ((a - b) % 2 == 0) value = b % 2 == 0 ? 1 : -1;
            break;
        case CoeffKind::TWO_EVEN:
            if ((a + b) % 4 == 0) value = (a - b) % 4 == 0 ? 1 : -1;
            break;
        case CoeffKind::TWO_ODD:
            if ((a + b) % 4 == 2) value = (a - b) % 4 == 0 ? 1 : -1;
            break;
        case CoeffKind::TWO_STAIR: value = a - b + 1; break;
        case CoeffKind::THREE_TAU: value = tau(a - b, b - c); break;
        case CoeffKind::THREE_OMEGA:
        case CoeffKind::THREE_OMEGA_TILDE:
        case CoeffKind::THREE_OMEGA_HAT: {
            const G3Decomposition d = g3_decompose(lp);
            const OmegaKind kind = def.kind == CoeffKind::THREE_OMEGA ? OmegaKind::OMEGA
                                   : def.kind == CoeffKind::THREE_OMEGA_TILDE
                                       ? OmegaKind::OMEGA_TILDE
                                       : OmegaKind::OMEGA_HAT;
            value = omega(kind, d.epsilon, d.z, d.b_prime);
            break;
        }
    }
    if (def.negate_odd && lp.size() % 2 != 0) value = -value;
    return value;
}

}  // namespace

const char* identity_tag_name(IdentityTag tag) { return def_for(tag).name; }

IdentityTag parse_identity_tag(const std::string& name) {
    for (IdentityTag tag : all_identity_tags())
        if (name == identity_tag_name(tag)) return tag;
    throw std::invalid_argument("unknown identity: " + name);
}

const std::vector<IdentityTag>& all_identity_tags() {
    static const std::vector<IdentityTag> tags = [] {
        std::vector<IdentityTag> v;
        for (size_t i = 0; i < catalog().size(); ++i) v.push_back(static_cast<IdentityTag>(i));
        return v;
    }();
    return tags;
}

int identity_columns(IdentityTag tag) { return def_for(tag).columns; }

SymmetricFunction build_lhs(const IdentityId& id) {
    check_id(id);
    return product_lhs(def_for(id.tag).profile, id.m);
}

SymmetricFunction build_rhs(const IdentityId& id) {
    check_id(id);
    const IdentityDef& def = def_for(id.tag);
    SymmetricFunction out;
    out.basis = Basis::Schur;
    out.num_vars = id.m;
    for (const auto& la : enumerate_box(BoxShape(id.m, def.columns))) {
        const long long c = schur_coeff(def, transpose(la));
        if (c != 0) out.coeffs.emplace(la, Rat(c));
    }
    return out;
}

IdentityId sign_flip(const IdentityId& id) {
    check_id(id);
    return {def_for(id.tag).flip, id.m};
}

IdentityReport verify(const IdentityId& id) {
    check_id(id);
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.identity = id;

    SymmetricFunction lhs = build_lhs(id);
    SymmetricFunction rhs = build_rhs(id);
    rep.schur_term_count = static_cast<long long>(rhs.coeffs.size());
    for (const auto& [la, c] : rhs.coeffs)
        if (c < 0) ++rep.negative_coeff_count;
    rep.lhs_monomial_count = monomial_count(lhs);
    rep.ones_specialization = specialize_ones(lhs);

    // one sweep of the box produces every Kostka column; the right side in
    // monomial coordinates is then a dot product per content point
    StripSweep sweep(id.m);
    std::vector<std::pair<int, Rat>> weights;
    weights.reserve(rhs.coeffs.size());
    for (const auto& [la, c] : rhs.coeffs) weights.emplace_back(sweep.state_index(transpose(la)), c);

    auto record = [&](const Partition& mu, const Rat& l, const Rat& r) {
        if (l == r) return;
        if (rep.discrepancies.size() < 20)
            rep.discrepancies.push_back({mu, l, r});
        else
            ++rep.discrepancies_truncated;
    };
    sweep.run([&](int j, int k, int l, const std::vector<Int>& kostka_col) {
        Rat rhs_val = 0;
        for (const auto& [state, c] : weights) {
            const Int& kv = kostka_col[state];
            if (kv != 0) rhs_val += c * Rat(kv);
        }
        std::vector<int> parts;
        parts.insert(parts.end(), j, 3);
        parts.insert(parts.end(), k, 2);
        parts.insert(parts.end(), l, 1);
        const Partition mu{std::move(parts)};
        auto it = lhs.coeffs.find(mu);
        record(mu, it == lhs.coeffs.end() ? Rat(0) : it->second, rhs_val);
    });
    rep.equal = rep.discrepancies.empty() && rep.discrepancies_truncated == 0;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

}  // namespace schur
