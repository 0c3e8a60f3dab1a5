#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

// The eight restriction targets. The first four sit inside U(2), the rest
// inside U(3).
enum class SubgroupId {
    U1_IN_U2,
    H2,
    H24_PRIME,
    H24,
    U1_IN_U3,
    H3,
    H34_PRIME,
    H34,
};

const char* subgroup_name(SubgroupId id);
SubgroupId parse_subgroup(const std::string& name);
int subgroup_ambient(SubgroupId id);

struct PhiDescriptor {
    int a = 0;
    int b = 0;
    int epsilon = 0;
};

enum class PhiFilter { MOD2, MOD4, SUM4, BOTH44 };

// all (p, q) with a >= p >= b >= q >= epsilon
std::vector<std::pair<int, int>> phi_set(const PhiDescriptor& d);

// brute-force cardinality under the congruence filter; the oracle every
// closed form is checked against
long long phi_count(const PhiDescriptor& d, PhiFilter filter);

enum class OmegaKind { OMEGA, OMEGA_TILDE, OMEGA_HAT };

int tau(int z, int b);
long long omega(OmegaKind kind, int epsilon, int z, int b_prime);

long long multiplicity(SubgroupId id, const Partition& lambda_prime);
long long multiplicity_oracle(SubgroupId id, const Partition& lambda_prime);

struct TableValidationReport {
    bool ok = true;
    long long cases_checked = 0;
    std::string first_mismatch;
};

// exhaustive oracle sweep over all descriptors with a <= max_a, plus the
// step-four recurrences; max_a >= 8 required
TableValidationReport validate_tables(int max_a);

}  // namespace schur
