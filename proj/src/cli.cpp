#include "pgrl/cli.hpp"

#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "pgrl/io.hpp"

namespace pgrl {

namespace {

void emit(const json& j, std::ostream& out, const std::string& json_path) {
    std::string text = j.dump(2) + "\n";
    out << text;
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw ParseError("cannot write " + json_path);
        f << text;
    }
}

MatAlgebra algebra_from_file(const std::string& path, bool unital) {
    return generate_algebra(parse_matrix_file(path), unital);
}

FiniteMatrixGroup group_from_file(const std::string& path) {
    std::vector<Matrix> gens = parse_matrix_file(path);
    return FiniteMatrixGroup(PrimeModulus(gens.at(0).modulus()), std::move(gens));
}

int run_zero_ideal(const std::string& gens_path, bool unital, const std::string& verify_path,
                   uint64_t seed, const std::string& json_path, std::ostream& out) {
    MatAlgebra alg = algebra_from_file(gens_path, unital);

    if (!verify_path.empty()) {
        std::ifstream in(verify_path);
        if (!in) throw ParseError("cannot open " + verify_path);
        json loaded;
        try {
            in >> loaded;
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad certificate JSON: ") + e.what());
        }
        ZeroIdealCertificate cert = certificate_from_json(loaded);
        bool ok = verify_certificate(alg, cert);
        json j = {{"command", "zero-ideal"}, {"mode", "verify"},   {"ok", ok},
                  {"n", alg.matrix_size()},  {"p", alg.modulus()}, {"dim_A", alg.dim()},
                  {"k", cert.k},             {"codim", cert.final_codim}, {"seed", seed}};
        emit(j, out, json_path);
        return ok ? 0 : 1;
    }

    ZeroIdealResult res = extract_zero_ideal(alg);
    json j = certificate_to_json(alg, res.certificate);
    j["command"] = "zero-ideal";
    j["mode"] = "extract";
    j["seed"] = seed;
    emit(j, out, json_path);
    return 0;
}

int run_closure(const std::string& gens_path, bool unital, uint64_t seed,
                const std::string& json_path, std::ostream& out) {
    MatAlgebra alg = algebra_from_file(gens_path, unital);
    json basis = json::array();
    for (const Matrix& m : alg.basis()) basis.push_back(matrix_to_json(m));
    json j = {{"command", "closure"},
              {"p", alg.modulus()},
              {"n", alg.matrix_size()},
              {"dim", alg.dim()},
              {"unital", alg.unital()},
              {"commutative", is_commutative(alg)},
              {"basis", basis},
              {"seed", seed}};
    emit(j, out, json_path);
    return 0;
}

int run_omega_index(const std::string& gens_path, uint64_t p, uint64_t seed,
                    const std::string& json_path, std::ostream& out) {
    FiniteMatrixGroup g = group_from_file(gens_path);
    if (g.prime() != p) {
        throw ParseError("--p disagrees with the matrix file modulus");
    }
    OmegaIndexResult r = omega_index_check(g);
    json j = {{"command", "omega-index"},
              {"p", g.prime()},
              {"n", g.degree()},
              {"order", g.order()},
              {"index", r.index},
              {"bound", pow_sat(g.prime(), g.degree())},
              {"ok", r.bound_ok},
              {"seed", seed}};
    emit(j, out, json_path);
    return r.bound_ok ? 0 : 1;
}

int run_abelian_type(const std::string& gens_path, uint64_t seed, const std::string& json_path,
                     std::ostream& out) {
    FiniteMatrixGroup g = group_from_file(gens_path);
    FiniteAbelianType type = abelian_type(g);
    json factors = json::array();
    for (auto [f, mult] : type.factors) factors.push_back({f, mult});
    json j = {{"command", "abelian-type"},
              {"p", g.prime()},
              {"n", g.degree()},
              {"order", g.order()},
              {"type", factors},
              {"type_string", type.to_string()},
              {"d", type.min_generators()},
              {"seed", seed}};
    emit(j, out, json_path);
    return 0;
}

int run_verbal_index(const std::string& gens_path, uint64_t seed, const std::string& json_path,
                     std::ostream& out) {
    FiniteMatrixGroup g = group_from_file(gens_path);
    json j = {{"command", "verbal-index"},
              {"p", g.prime()},
              {"n", g.degree()},
              {"order", g.order()},
              {"index", verbal_w_index(g)},
              {"seed", seed}};
    emit(j, out, json_path);
    return 0;
}

int run_build_group(const std::string& form_path, const std::string& check, uint64_t seed,
                    const std::string& json_path, std::ostream& out) {
    VectorForm form = parse_form_file(form_path);
    json checks = json::object();
    bool ok = true;

    if (check == "all" || check == "commutators") {
        bool good = true;
        for (uint32_t i = 0; i < form.n && good; ++i) {
            for (uint32_t j = i + 1; j < form.n && good; ++j) {
                GroupElement c = group_commutator({ring_basis_a(form, i)},
                                                  {ring_basis_a(form, j)}, form);
                for (uint32_t comp = 0; comp < form.k; ++comp) {
                    if (c.s.b[comp] != form.mats[comp].at(i, j)) good = false;
                }
            }
        }
        checks["commutators"] = good;
        ok = ok && good;
    }
    if (check == "all" || check == "exponent") {
        // (1 + p s)^(p^(r-1)) = 1 for sampled s.
        std::mt19937_64 rng(splitmix64(seed));
        uint64_t exp = 1;
        for (uint32_t i = 0; i + 1 < form.r; ++i) exp *= form.p;
        bool good = true;
        for (int iter = 0; iter < 200 && good; ++iter) {
            NilRingElement s = ring_zero(form);
            for (uint32_t i = 0; i < form.n; ++i) {
                s.a[i] = static_cast<uint32_t>(rng() % form.modulus);
            }
            for (uint32_t c = 0; c < form.k; ++c) {
                s.b[c] = static_cast<uint32_t>(rng() % form.modulus);
            }
            GroupElement shifted{ring_scale(s, form.p, form)};
            good = group_pow(shifted, exp, form) == group_identity(form);
        }
        checks["exponent"] = good;
        ok = ok && good;
    }
    if (check == "all" || check == "quotient") {
        bool good = quotient_type_check(form);
        checks["quotient"] = good;
        ok = ok && good;
    }

    json j = {{"command", "build-group"}, {"p", form.p}, {"r", form.r}, {"n", form.n},
              {"k", form.k},              {"checks", checks}, {"ok", ok}, {"seed", seed}};
    emit(j, out, json_path);
    return ok ? 0 : 1;
}

int run_isotropy_maxdim(const std::string& form_path, uint64_t seed,
                        const std::string& json_path, std::ostream& out) {
    VectorForm form = parse_form_file(form_path);
    IsotropicResult r = max_isotropic_dim(form);
    json j = {{"command", "isotropy"},
              {"mode", "max-dim"},
              {"p", form.p},
              {"n", form.n},
              {"k", form.k},
              {"max_isotropic_dim", r.dim},
              {"witness", subspace_to_json(r.witness)},
              {"seed", seed}};
    emit(j, out, json_path);
    return 0;
}

int run_isotropy_search(uint32_t n, uint32_t k, uint64_t p, uint64_t trials, uint64_t seed,
                        bool exhaustive, const std::string& json_path, std::ostream& out) {
    FormSearchReport report = random_form_search(n, k, PrimeModulus(p), trials, seed, exhaustive);
    json j = search_report_to_json(report);
    j["command"] = "isotropy";
    j["mode"] = "search";
    // Success is reported, never asserted: absence of a witness at small
    // parameters is not a failure of anything checkable here.
    emit(j, out, json_path);
    return 0;
}

int emit_report(const BuilderReport& report, const std::string& target, uint64_t seed,
                const std::string& json_path, std::ostream& out) {
    json j = report_to_json(report);
    j["command"] = "verify";
    j["target"] = target;
    j["seed"] = seed;
    emit(j, out, json_path);
    return report.ok() ? 0 : 1;
}

int run_bounds(uint32_t k, std::optional<uint32_t> n, uint64_t seed,
               const std::string& json_path, std::ostream& out) {
    BoundTable table = bound_table(k, n);
    json j = bound_table_to_json(table);
    j["command"] = "bounds";
    j["seed"] = seed;
    emit(j, out, json_path);
    return (!table.chain_checked || table.chain_ok) ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations on commutative matrix algebras, their zero ideals "
                 "and unit groups, p-groups built from alternating forms, and "
                 "isotropic-subspace searches"};
    app.require_subcommand(1);

    std::string gens_path, form_path, verify_path, json_path, check = "all";
    uint64_t seed = 0, p_flag = 2, trials = 100;
    uint32_t n_flag = 0, k_flag = 0, m_flag = 0;
    bool unital = false, exhaustive = false, max_dim_mode = false;

    CLI::App* zero = app.add_subcommand("zero-ideal",
                                        "extract a square-zero ideal with certificate");
    zero->add_option("--gens", gens_path, "matrix file of algebra generators")->required();
    zero->add_flag("--unital", unital, "adjoin the identity");
    zero->add_option("--verify", verify_path, "re-check a certificate JSON instead");
    zero->add_option("--json", json_path, "also write the report here");
    zero->add_option("--seed", seed, "echoed in the report");

    CLI::App* closure = app.add_subcommand("closure", "multiplicative closure of generators");
    closure->add_option("--gens", gens_path)->required();
    closure->add_flag("--unital", unital);
    closure->add_option("--json", json_path);
    closure->add_option("--seed", seed);

    CLI::App* omega = app.add_subcommand("omega-index",
                                         "|A : Omega_1(O_p(A))| against p^n for abelian A");
    omega->add_option("--gens", gens_path)->required();
    omega->add_option("--p", p_flag, "field prime (must match the file)")->required();
    omega->add_option("--json", json_path);
    omega->add_option("--seed", seed);

    CLI::App* atype = app.add_subcommand("abelian-type", "invariant factors of an abelian group");
    atype->add_option("--gens", gens_path)->required();
    atype->add_option("--json", json_path);
    atype->add_option("--seed", seed);

    CLI::App* verbal = app.add_subcommand("verbal-index", "|P : w(P)| for w = x^(p^2)[y,z]");
    verbal->add_option("--gens", gens_path)->required();
    verbal->add_option("--json", json_path);
    verbal->add_option("--seed", seed);

    CLI::App* build = app.add_subcommand("build-group", "group 1 + S from an alternating form");
    build->add_option("--form", form_path, "form file")->required();
    build->add_option("--check", check, "all|commutators|exponent|quotient")
        ->check(CLI::IsMember({"all", "commutators", "exponent", "quotient"}));
    build->add_option("--json", json_path);
    build->add_option("--seed", seed);

    CLI::App* iso = app.add_subcommand("isotropy",
                                       "isotropic subspaces: random search or exhaustive max");
    iso->add_option("--form", form_path, "form file (with --max-dim)");
    iso->add_flag("--max-dim", max_dim_mode, "exhaustive maximum for --form");
    iso->add_option("--n", n_flag);
    iso->add_option("--k", k_flag);
    iso->add_option("--p", p_flag);
    iso->add_option("--trials", trials);
    iso->add_option("--seed", seed);
    iso->add_flag("--exhaustive", exhaustive, "run every trial instead of stopping early");
    iso->add_option("--json", json_path);

    CLI::App* verify = app.add_subcommand("verify", "example families and their formulas");
    verify->require_subcommand(1);
    CLI::App* v13 = verify->add_subcommand("example13", "V x| H with two maximal abelians");
    v13->add_option("--m", m_flag)->required();
    v13->add_option("--p", p_flag)->required();
    CLI::App* vpat = verify->add_subcommand("pattern", "unipotent pattern group");
    vpat->add_option("--n", n_flag)->required();
    vpat->add_option("--p", p_flag)->required();
    CLI::App* vsyl = verify->add_subcommand("sylow-frattini", "d(Phi(UT(n, p)))");
    vsyl->add_option("--n", n_flag)->required();
    vsyl->add_option("--p", p_flag)->required();
    verify->add_subcommand("d16", "dihedral rank evidence");
    verify->add_subcommand("all", "the whole sanity suite");
    verify->add_option("--json", json_path);
    verify->add_option("--seed", seed);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the rank-bound table");
    bounds_cmd->add_option("--k", k_flag, "rank of the elementary abelian normal subgroup")
        ->required();
    CLI::Option* n_opt = bounds_cmd->add_option("--n", n_flag, "GL degree / log_p of |G|");
    bounds_cmd->add_option("--json", json_path);
    bounds_cmd->add_option("--seed", seed);

    std::vector<const char*> argv;
    argv.push_back("pgrl");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(zero)) {
            return run_zero_ideal(gens_path, unital, verify_path, seed, json_path, out);
        }
        if (app.got_subcommand(closure)) {
            return run_closure(gens_path, unital, seed, json_path, out);
        }
        if (app.got_subcommand(omega)) {
            return run_omega_index(gens_path, p_flag, seed, json_path, out);
        }
        if (app.got_subcommand(atype)) {
            return run_abelian_type(gens_path, seed, json_path, out);
        }
        if (app.got_subcommand(verbal)) {
            return run_verbal_index(gens_path, seed, json_path, out);
        }
        if (app.got_subcommand(build)) {
            return run_build_group(form_path, check, seed, json_path, out);
        }
        if (app.got_subcommand(iso)) {
            if (max_dim_mode) {
                if (form_path.empty()) throw ParseError("--max-dim needs --form");
                return run_isotropy_maxdim(form_path, seed, json_path, out);
            }
            if (n_flag == 0 || k_flag == 0) throw ParseError("search mode needs --n and --k");
            return run_isotropy_search(n_flag, k_flag, p_flag, trials, seed, exhaustive,
                                       json_path, out);
        }
        if (app.got_subcommand(verify)) {
            if (verify->got_subcommand("example13")) {
                return emit_report(build_example_semidirect(m_flag, PrimeModulus(p_flag)).report,
                                   "example13", seed, json_path, out);
            }
            if (verify->got_subcommand("pattern")) {
                return emit_report(build_pattern_group(n_flag, PrimeModulus(p_flag)).report,
                                   "pattern", seed, json_path, out);
            }
            if (verify->got_subcommand("sylow-frattini")) {
                return emit_report(sylow_frattini_check(n_flag, PrimeModulus(p_flag)).report,
                                   "sylow-frattini", seed, json_path, out);
            }
            if (verify->got_subcommand("d16")) {
                return emit_report(build_d16_power_evidence(), "d16", seed, json_path, out);
            }
            return emit_report(sanity_suite(), "all", seed, json_path, out);
        }
        if (app.got_subcommand(bounds_cmd)) {
            std::optional<uint32_t> n;
            if (n_opt->count() > 0) n = n_flag;
            return run_bounds(k_flag, n, seed, json_path, out);
        }
    } catch (const InternalInvariantViolation& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "unknown subcommand\n";
    return 2;
}

int dispatch(const std::vector<std::string>& args) {
    return dispatch(args, std::cout, std::cerr);
}

} // namespace pgrl
