#include "schur/cli.hpp"

#include <complex>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schur/branching.hpp"
#include "schur/haarmc.hpp"
#include "schur/identities.hpp"
#include "schur/parallel.hpp"
#include "schur/symfunc.hpp"

namespace schur {

namespace {

using nlohmann::json;

std::vector<std::complex<double>> parse_points(const std::string& text) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad point: " + item);
        out.emplace_back(v, 0.0);
    }
    if (out.empty()) throw std::invalid_argument("need at least one point");
    return out;
}

json sym_to_json(const SymmetricFunction& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.coeffs)
        terms.push_back({{"partition", p.to_string()},
                         {"coeff_num", numerator(c).str()},
                         {"coeff_den", denominator(c).str()}});
    return {{"basis", f.basis == Basis::Monomial ? "monomial" : "schur"},
            {"num_vars", f.num_vars},
            {"terms", terms}};
}

json report_to_json(const IdentityReport& rep) {
    json disc = json::array();
    for (const auto& d : rep.discrepancies)
        disc.push_back({{"partition", d.monomial.to_string()},
                        {"lhs", d.lhs.str()},
                        {"rhs", d.rhs.str()}});
    return {{"identity", {{"tag", identity_tag_name(rep.identity.tag)}, {"m", rep.identity.m}}},
            {"equal", rep.equal},
            {"schur_term_count", rep.schur_term_count},
            {"negative_coeff_count", rep.negative_coeff_count},
            {"lhs_monomial_count", rep.lhs_monomial_count.str()},
            {"ones_specialization", rep.ones_specialization.str()},
            {"elapsed_ms", rep.elapsed_ms},
            {"discrepancies", disc},
            {"discrepancies_truncated", rep.discrepancies_truncated}};
}

void print_report_text(std::ostream& out, const IdentityReport& rep) {
    out << "identity " << identity_tag_name(rep.identity.tag) << " m=" << rep.identity.m
        << ": " << (rep.equal ? "equal" : "NOT EQUAL")
        << " schur_terms=" << rep.schur_term_count
        << " negative_terms=" << rep.negative_coeff_count
        << " lhs_monomials=" << rep.lhs_monomial_count.str()
        << " ones=" << rep.ones_specialization.str() << " elapsed_ms=" << std::fixed
        << std::setprecision(1) << rep.elapsed_ms << "\n";
    for (const auto& d : rep.discrepancies)
        out << "  at (" << d.monomial.to_string() << "): lhs=" << d.lhs.str()
            << " rhs=" << d.rhs.str() << "\n";
    if (rep.discrepancies_truncated > 0)
        out << "  ... " << rep.discrepancies_truncated << " more rows\n";
    out.unsetf(std::ios::fixed);
}

json mc_to_json(const MCReport& rep) {
    json xs = json::array();
    for (const auto& x : rep.x) xs.push_back({x.real(), x.imag()});
    return {{"group", subgroup_name(rep.group)},
            {"m", rep.m},
            {"x", xs},
            {"samples", rep.samples},
            {"seed", rep.seed},
            {"empirical", {rep.empirical.real(), rep.empirical.imag()}},
            {"symbolic", {rep.symbolic.real(), rep.symbolic.imag()}},
            {"std_error", rep.std_error},
            {"pass", rep.pass}};
}

void print_mc_text(std::ostream& out, const MCReport& rep) {
    out << "group " << subgroup_name(rep.group) << " m=" << rep.m
        << " samples=" << rep.samples << " seed=" << rep.seed << "\n"
        << "  empirical " << rep.empirical.real() << (rep.empirical.imag() < 0 ? " - " : " + ")
        << std::abs(rep.empirical.imag()) << "i\n"
        << "  symbolic  " << rep.symbolic.real() << (rep.symbolic.imag() < 0 ? " - " : " + ")
        << std::abs(rep.symbolic.imag()) << "i\n"
        << "  std_error " << rep.std_error << " => " << (rep.pass ? "pass" : "FAIL") << "\n";
}

struct AllOutcome {
    std::string check;
    bool pass = false;
    std::string detail;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification of determinant-product Schur expansions"};
    app.require_subcommand(1);

    std::string format = "text";
    int threads = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--threads", threads, "worker threads, 0 = hardware")
            ->envname("SCHUR_AUTOCORR_THREADS");
    };

    auto* cmd_verify = app.add_subcommand("verify", "check one identity at one size");
    std::string identity_name;
    int m = 1;
    cmd_verify->add_option("--identity", identity_name, "identity tag")->required();
    cmd_verify->add_option("--m", m, "number of variables")->required();
    add_common(cmd_verify);

    auto* cmd_tables = app.add_subcommand("tables", "exhaustive table cross-check");
    bool validate = false;
    int max_a = 20;
    cmd_tables->add_flag("--validate", validate, "run the oracle sweep");
    cmd_tables->add_option("--max-a", max_a, "largest first part to test");
    add_common(cmd_tables);

    auto* cmd_mult = app.add_subcommand("multiplicity", "trivial-component multiplicity");
    std::string group_name, lambda_text;
    cmd_mult->add_option("--group", group_name, "subgroup name")->required();
    cmd_mult->add_option("--lambda", lambda_text, "transpose partition, comma separated")
        ->required();
    add_common(cmd_mult);

    auto* cmd_kostka = app.add_subcommand("kostka", "tableau count for shape and content");
    std::string shape_text, content_text;
    cmd_kostka->add_option("--shape", shape_text, "shape partition")->required();
    cmd_kostka->add_option("--content", content_text, "content partition")->required();
    add_common(cmd_kostka);

    auto* cmd_dim = app.add_subcommand("dim", "dimension of one Schur polynomial");
    std::string dim_lambda;
    int num_vars = 1;
    cmd_dim->add_option("--lambda", dim_lambda, "partition")->required();
    cmd_dim->add_option("--vars", num_vars, "number of variables")->required();
    add_common(cmd_dim);

    auto* cmd_expand = app.add_subcommand("expand", "Schur polynomial in the monomial basis");
    std::string expand_lambda;
    int expand_vars = 1;
    cmd_expand->add_option("--lambda", expand_lambda, "partition")->required();
    cmd_expand->add_option("--vars", expand_vars, "number of variables")->required();
    add_common(cmd_expand);

    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo versus symbolic autocorrelation");
    std::string mc_group, x_text;
    long long samples = 1000000;
    std::uint64_t seed = 0;
    cmd_mc->add_option("--group", mc_group, "subgroup name")->required();
    cmd_mc->add_option("--x", x_text, "points, comma separated")->required();
    cmd_mc->add_option("--samples", samples, "draws across all cosets");
    cmd_mc->add_option("--seed", seed, "RNG seed");
    add_common(cmd_mc);

    auto* cmd_all = app.add_subcommand("all", "every identity, the tables, and a MC pass");
    int all_max_m = 8;
    int all_max_a = 20;
    long long all_samples = 100000;
    std::uint64_t all_seed = 1;
    cmd_all->add_option("--max-m", all_max_m, "largest variable count for identities");
    cmd_all->add_option("--max-a", all_max_a, "table sweep bound");
    cmd_all->add_option("--samples", all_samples, "MC draws per group");
    cmd_all->add_option("--seed", all_seed, "MC seed");
    add_common(cmd_all);

    try {
        std::vector<const char*> argv;
        argv.push_back("schur_autocorr");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        set_threads(threads);

        if (cmd_verify->parsed()) {
            const IdentityId id{parse_identity_tag(identity_name), m};
            const IdentityReport rep = verify(id);
            if (format == "json")
                out << report_to_json(rep).dump(2) << "\n";
            else
                print_report_text(out, rep);
            return rep.equal ? 0 : 1;
        }

        if (cmd_tables->parsed()) {
            (void)validate;  // sweeping is the only action
            const TableValidationReport rep = validate_tables(max_a);
            if (format == "json")
                out << json{{"ok", rep.ok},
                            {"cases_checked", rep.cases_checked},
                            {"first_mismatch", rep.first_mismatch}}
                           .dump(2)
                    << "\n";
            else if (rep.ok)
                out << "checked " << rep.cases_checked << " descriptors: all closed forms match\n";
            else
                out << "FAIL: " << rep.first_mismatch << "\n";
            return rep.ok ? 0 : 1;
        }

        if (cmd_mult->parsed()) {
            const SubgroupId group = parse_subgroup(group_name);
            const Partition lp = Partition::parse(lambda_text);
            const long long closed = multiplicity(group, lp);
            const long long oracle = multiplicity_oracle(group, lp);
            if (format == "json") {
                json j{{"group", subgroup_name(group)},
                       {"lambda_prime", lp.to_string()},
                       {"multiplicity", closed},
                       {"oracle_multiplicity", oracle}};
                if (subgroup_ambient(group) == 3) {
                    const G3Decomposition d = g3_decompose(lp);
                    j["decomposition"] = {{"k", d.k},
                                          {"epsilon", d.epsilon},
                                          {"z", d.z},
                                          {"b_prime", d.b_prime}};
                }
                out << j.dump(2) << "\n";
            } else {
                out << closed << "\n";
                if (closed != oracle)
                    out << "ORACLE DISAGREES: " << oracle << "\n";
            }
            return closed == oracle ? 0 : 1;
        }

        if (cmd_kostka->parsed()) {
            const Int value = kostka(Partition::parse(shape_text), Partition::parse(content_text));
            if (format == "json")
                out << json{{"shape", Partition::parse(shape_text).to_string()},
                            {"content", Partition::parse(content_text).to_string()},
                            {"kostka", value.str()}}
                           .dump(2)
                    << "\n";
            else
                out << value.str() << "\n";
            return 0;
        }

        if (cmd_dim->parsed()) {
            const Partition la = Partition::parse(dim_lambda);
            const Int dim = hook_content_dim(la, num_vars);
            json j{{"lambda", la.to_string()},
                   {"num_vars", num_vars},
                   {"dimension", dim.str()}};
            std::string monomials;
            if (la.part(0) <= 3 && la.length() <= num_vars) {
                const SymmetricFunction f = schur_to_monomial(la, num_vars);
                monomials = monomial_count(f).str();
                j["monomial_count"] = monomials;
            }
            if (format == "json")
                out << j.dump(2) << "\n";
            else {
                out << dim.str() << "\n";
                if (!monomials.empty()) out << "monomials: " << monomials << "\n";
            }
            return 0;
        }

        if (cmd_expand->parsed()) {
            const Partition la = Partition::parse(expand_lambda);
            const SymmetricFunction f = schur_to_monomial(la, expand_vars);
            if (format == "json")
                out << sym_to_json(f).dump(2) << "\n";
            else
                for (const auto& [p, c] : f.coeffs)
                    out << c.str() << " * m(" << p.to_string() << ")\n";
            return 0;
        }

        if (cmd_mc->parsed()) {
            MCConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.x_points = parse_points(x_text);
            const MCReport rep = mc_check(parse_subgroup(mc_group), cfg);
            if (format == "json")
                out << mc_to_json(rep).dump(2) << "\n";
            else
                print_mc_text(out, rep);
            return rep.pass ? 0 : 1;
        }

        if (cmd_all->parsed()) {
            std::vector<AllOutcome> outcomes;
            auto add = [&](std::string check, bool pass, std::string detail = "") {
                outcomes.push_back({std::move(check), pass, std::move(detail)});
            };
            const int upper = std::min(all_max_m, 10);
            for (IdentityTag tag : all_identity_tags())
                for (int mm = 1; mm <= upper; ++mm) {
                    const IdentityReport rep = verify({tag, mm});
                    add(std::string("verify ") + identity_tag_name(tag) + " m=" +
                            std::to_string(mm),
                        rep.equal);
                }
            if (all_max_m >= 20)
                for (IdentityTag tag : {IdentityTag::G3_C, IdentityTag::G3_D}) {
                    const IdentityReport rep = verify({tag, 20});
                    add(std::string("verify ") + identity_tag_name(tag) + " m=20", rep.equal);
                }
            const TableValidationReport tables = validate_tables(all_max_a);
            add("tables max_a=" + std::to_string(all_max_a), tables.ok, tables.first_mismatch);
            bool cauchy = true;
            for (int mm = 1; mm <= 3; ++mm)
                for (int gg = 1; gg <= 3; ++gg) cauchy = cauchy && dual_cauchy_check(mm, gg);
            add("paired expansion m,g<=3", cauchy);
            for (SubgroupId group :
                 {SubgroupId::U1_IN_U2, SubgroupId::H2, SubgroupId::H24_PRIME, SubgroupId::H24,
                  SubgroupId::U1_IN_U3, SubgroupId::H3, SubgroupId::H34_PRIME, SubgroupId::H34}) {
                MCConfig cfg;
                cfg.samples = all_samples;
                cfg.seed = all_seed;
                cfg.x_points = {{0.3, 0.0}, {-0.2, 0.0}};
                const MCReport rep = mc_check(group, cfg);
                std::ostringstream detail;
                detail << "emp=" << rep.empirical.real() << " sym=" << rep.symbolic.real()
                       << " se=" << rep.std_error;
                add(std::string("mc ") + subgroup_name(group), rep.pass, detail.str());
            }
            bool all_ok = true;
            for (const auto& o : outcomes) all_ok = all_ok && o.pass;
            if (format == "json") {
                json rows = json::array();
                for (const auto& o : outcomes)
                    rows.push_back({{"check", o.check}, {"pass", o.pass}, {"detail", o.detail}});
                out << json{{"pass", all_ok}, {"checks", rows}}.dump(2) << "\n";
            } else {
                for (const auto& o : outcomes) {
                    out << (o.pass ? "PASS " : "FAIL ") << o.check;
                    if (!o.detail.empty()) out << "  (" << o.detail << ")";
                    out << "\n";
                }
                out << (all_ok ? "all checks passed" : "FAILURES PRESENT") << "\n";
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace schur
