#include "doctest.h"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/branching.hpp"

using namespace schur;

namespace {

std::vector<Partition> two_row_partitions(int max_a) {
    std::vector<Partition> out;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= a; ++b) out.push_back(Partition{a, b});
    return out;
}

std::vector<Partition> three_row_partitions(int max_a) {
    std::vector<Partition> out;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) out.push_back(Partition{a, b, c});
    return out;
}

Partition shifted(const Partition& p, int rows, int t) {
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) parts.push_back(p.part(i) + t);
    return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("index set enumeration") {
    const auto full = phi_set({3, 2, 0});
    REQUIRE(full.size() == 6);
    const std::set<std::pair<int, int>> got(full.begin(), full.end());
    const std::set<std::pair<int, int>> want{{3, 0}, {2, 0}, {3, 1}, {2, 1}, {3, 2}, {2, 2}};
    CHECK(got == want);

    CHECK(phi_set({3, 2, 1}).size() == 4);
    CHECK(phi_set({0, 0, 0}) == std::vector<std::pair<int, int>>{{0, 0}});

    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= a; ++b)
            for (int eps = 0; eps <= (b >= 1 ? 1 : 0); ++eps) {
                const auto pairs = phi_set({a, b, eps});
                CHECK(static_cast<int>(pairs.size()) == (a - b + 1) * (b - eps + 1));
                for (const auto& [p, q] : pairs) {
                    CHECK(a >= p);
                    CHECK(p >= b);
                    CHECK(b >= q);
                    CHECK(q >= eps);
                }
            }

    CHECK_THROWS_AS(phi_set({2, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(phi_set({3, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(phi_set({3, 0, 1}), std::invalid_argument);
}

TEST_CASE("filtered counts") {
    CHECK(phi_count({7, 2, 0}, PhiFilter::SUM4) == 5);
    CHECK(phi_count({7, 2, 0}, PhiFilter::BOTH44) == 3);
    CHECK(phi_count({11, 6, 0}, PhiFilter::SUM4) == 11);
    CHECK(phi_count({11, 6, 0}, PhiFilter::BOTH44) == 6);
    CHECK(phi_count({3, 2, 0}, PhiFilter::MOD2) == 3);
    CHECK(phi_count({0, 0, 0}, PhiFilter::MOD2) == 1);

    // counting over the enumerated set reproduces phi_count
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b)
            for (int eps = 0; eps <= (b >= 1 ? 1 : 0); ++eps) {
                const PhiDescriptor d{a, b, eps};
                long long mod2 = 0, mod4 = 0, sum4 = 0, both = 0;
                for (const auto& [p, q] : phi_set(d)) {
                    if ((p - q) % 2 == 0) ++mod2;
                    if ((p - q) % 4 == 0) ++mod4;
                    if ((p + q) % 4 == 0) ++sum4;
                    if ((p - q) % 4 == 0 && (p + q) % 4 == 0) ++both;
                }
                CHECK(phi_count(d, PhiFilter::MOD2) == mod2);
                CHECK(phi_count(d, PhiFilter::MOD4) == mod4);
                CHECK(phi_count(d, PhiFilter::SUM4) == sum4);
                CHECK(phi_count(d, PhiFilter::BOTH44) == both);
                CHECK(both <= mod4);
                CHECK(mod4 <= mod2);
            }
}

TEST_CASE("tau values") {
    CHECK(tau(0, 0) == 1);
    CHECK(tau(1, 2) == -1);
    CHECK(tau(2, 1) == -1);
    CHECK(tau(1, 1) == 0);
    for (int b = 0; b <= 7; ++b) {
        CHECK(tau(3, b) == 0);
        CHECK(tau(b, 3) == 0);
    }
    for (int z = 0; z <= 11; ++z)
        for (int b = 0; b <= 11; ++b) {
            CHECK(tau(z, b) >= -1);
            CHECK(tau(z, b) <= 1);
            CHECK(tau(z + 4, b) == tau(z, b));
            CHECK(tau(z, b + 4) == tau(z, b));
            CHECK(tau(z, b) == tau(b, z));
        }
    CHECK_THROWS_AS(tau(-1, 0), std::invalid_argument);
}

TEST_CASE("omega values") {
    CHECK(omega(OmegaKind::OMEGA, 0, 0, 0) == 1);
    CHECK(omega(OmegaKind::OMEGA, 0, 2, 9) == -3);
    CHECK(omega(OmegaKind::OMEGA, 1, 1, 2) == -1);
    CHECK(omega(OmegaKind::OMEGA_TILDE, 0, 0, 0) == 1);
    CHECK(omega(OmegaKind::OMEGA_TILDE, 1, 0, 0) == -1);
    CHECK(omega(OmegaKind::OMEGA_HAT, 1, 0, 0) == 1);
    CHECK_THROWS_AS(omega(OmegaKind::OMEGA, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(omega(OmegaKind::OMEGA, 0, -1, 0), std::invalid_argument);
}

TEST_CASE("omega family linear relations") {
    for (int eps = 0; eps <= 1; ++eps)
        for (int z = 0; z <= 13; ++z)
            for (int bp = 0; bp <= 13; ++bp) {
                const long long w = omega(OmegaKind::OMEGA, eps, z, bp);
                CHECK(omega(OmegaKind::OMEGA_TILDE, eps, z, bp) == 2 * w - tau(z, bp));
                CHECK(omega(OmegaKind::OMEGA_HAT, eps, z, bp) == tau(z, bp) - w);
            }
}

TEST_CASE("subgroup naming") {
    for (SubgroupId id :
         {SubgroupId::U1_IN_U2, SubgroupId::H2, SubgroupId::H24_PRIME, SubgroupId::H24,
          SubgroupId::U1_IN_U3, SubgroupId::H3, SubgroupId::H34_PRIME, SubgroupId::H34})
        CHECK(parse_subgroup(subgroup_name(id)) == id);
    CHECK(subgroup_ambient(SubgroupId::H24) == 2);
    CHECK(subgroup_ambient(SubgroupId::H34) == 3);
    CHECK_THROWS_AS(parse_subgroup("H5"), std::invalid_argument);
}

TEST_CASE("closed multiplicities match the trace and count oracles") {
    for (SubgroupId id :
         {SubgroupId::U1_IN_U2, SubgroupId::H2, SubgroupId::H24_PRIME, SubgroupId::H24}) {
        for (const auto& lp : two_row_partitions(18)) {
            const long long closed = multiplicity(id, lp);
            CHECK(closed == multiplicity_oracle(id, lp));
            CHECK(closed >= 0);
        }
    }
    for (SubgroupId id :
         {SubgroupId::U1_IN_U3, SubgroupId::H3, SubgroupId::H34_PRIME, SubgroupId::H34}) {
        for (const auto& lp : three_row_partitions(12)) {
            const long long closed = multiplicity(id, lp);
            CHECK(closed == multiplicity_oracle(id, lp));
            CHECK(closed >= 0);
        }
    }
}

TEST_CASE("worked multiplicities") {
    CHECK(multiplicity(SubgroupId::H2, Partition{4}) == 1);
    CHECK(multiplicity(SubgroupId::H2, Partition{2}) == 0);
    CHECK(multiplicity(SubgroupId::H2, Partition{1, 1}) == 1);
    CHECK(multiplicity(SubgroupId::U1_IN_U2, Partition{3, 1}) == 1);
    CHECK(multiplicity(SubgroupId::U1_IN_U2, Partition{2, 1}) == 0);
    CHECK(multiplicity(SubgroupId::H24_PRIME, Partition{2, 2}) == 1);
    CHECK(multiplicity(SubgroupId::H24, Partition{3, 1}) == 0);
    CHECK(multiplicity(SubgroupId::U1_IN_U3, Partition{2}) == 2);
    CHECK(multiplicity(SubgroupId::H3, Partition{2}) == 1);
    CHECK(multiplicity(SubgroupId::H34_PRIME, Partition{7, 2}) == 5);
    CHECK(multiplicity(SubgroupId::H34, Partition{7, 2}) == 3);
    CHECK(multiplicity(SubgroupId::H34_PRIME, Partition{11, 6}) == 11);
    CHECK(multiplicity(SubgroupId::H34, Partition{11, 6}) == 6);
    CHECK_THROWS_AS(multiplicity(SubgroupId::H2, Partition{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("determinant twists shift the weight") {
    for (const auto& lp : two_row_partitions(10)) {
        CHECK(multiplicity(SubgroupId::U1_IN_U2, shifted(lp, 2, 1)) ==
              multiplicity(SubgroupId::U1_IN_U2, lp));
        CHECK(multiplicity(SubgroupId::H2, shifted(lp, 2, 1)) ==
              multiplicity(SubgroupId::H2, lp));
        CHECK(multiplicity(SubgroupId::H24_PRIME, shifted(lp, 2, 2)) ==
              multiplicity(SubgroupId::H24_PRIME, lp));
        CHECK(multiplicity(SubgroupId::H24, shifted(lp, 2, 2)) ==
              multiplicity(SubgroupId::H24, lp));
    }
    for (const auto& lp : three_row_partitions(8)) {
        CHECK(multiplicity(SubgroupId::U1_IN_U3, shifted(lp, 3, 1)) ==
              multiplicity(SubgroupId::U1_IN_U3, lp));
        CHECK(multiplicity(SubgroupId::H3, shifted(lp, 3, 1)) ==
              multiplicity(SubgroupId::H3, lp));
        CHECK(multiplicity(SubgroupId::H34_PRIME, shifted(lp, 3, 2)) ==
              multiplicity(SubgroupId::H34_PRIME, lp));
        CHECK(multiplicity(SubgroupId::H34, shifted(lp, 3, 2)) ==
              multiplicity(SubgroupId::H34, lp));
    }
}

TEST_CASE("odd degree invariants vanish in the ambient-two groups") {
    for (SubgroupId id :
         {SubgroupId::U1_IN_U2, SubgroupId::H2, SubgroupId::H24_PRIME, SubgroupId::H24})
        for (const auto& lp : two_row_partitions(15))
            if (lp.size() % 2 == 1) CHECK(multiplicity(id, lp) == 0);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(validate_tables(7), std::invalid_argument);
    const TableValidationReport rep = validate_tables(12);
    CHECK(rep.ok);
    CHECK(rep.cases_checked == 169);
    CHECK(rep.first_mismatch.empty());
}
