#pragma once

#include <string>
#include <vector>

#include "schur/numbers.hpp"
#include "schur/partition.hpp"
#include "schur/symfunc.hpp"

namespace schur {

enum class IdentityTag {
    G1_PLUS,
    G1_MINUS,
    G2_PLUS,
    G2_MINUS,
    G2_EVEN,
    G2_ODD,
    G2_SQUARE_PLUS,
    G2_SQUARE_MINUS,
    G3_C,
    G3_C_MINUS,
    G3_D,
    G3_D_MINUS,
    G3_F,
    G3_F_MINUS,
    G3_G,
    G3_G_MINUS,
};

const char* identity_tag_name(IdentityTag tag);
IdentityTag parse_identity_tag(const std::string& name);
const std::vector<IdentityTag>& all_identity_tags();

// number of columns in the partition box the right side runs over
int identity_columns(IdentityTag tag);

struct IdentityId {
    IdentityTag tag;
    int m = 1;
};

struct Discrepancy {
    Partition monomial;
    Rat lhs;
    Rat rhs;
};

struct IdentityReport {
    IdentityId identity;
    bool equal = false;
    long long schur_term_count = 0;
    long long negative_coeff_count = 0;
    Int lhs_monomial_count;
    Rat ones_specialization;
    double elapsed_ms = 0;
    std::vector<Discrepancy> discrepancies;  // capped at 20 rows
    long long discrepancies_truncated = 0;
};

SymmetricFunction build_lhs(const IdentityId& id);
SymmetricFunction build_rhs(const IdentityId& id);
IdentityReport verify(const IdentityId& id);
IdentityId sign_flip(const IdentityId& id);

}  // namespace schur
