#include "hilb/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilb/acceptance.hpp"
#include "hilb/factorization.hpp"
#include "hilb/generators.hpp"
#include "hilb/principal.hpp"
#include "hilb/schur.hpp"
#include "hilb/version.hpp"

namespace hilb {
namespace cli {

namespace {

using nlohmann::json;

json tool_block() { return json{{"name", kToolName}, {"version", kToolVersion}}; }

json certificate(const std::string& kind, json inputs, json outcome, double seconds) {
    json j;
    j["tool"] = tool_block();
    j["kind"] = kind;
    j["inputs"] = std::move(inputs);
    j["outcome"] = std::move(outcome);
    j["timings"] = json{{"seconds", seconds}};
    return j;
}

void write_artifact(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write artifact: " + path);
    out << j.dump(2) << "\n";
    std::cout << "artifact: " << path << "\n";
}

json config_json(const PointConfig& cfg) {
    json points = json::array();
    for (const auto& pt : cfg.points) {
        json row = json::array();
        for (const auto& x : pt) row.push_back(to_string(x));
        points.push_back(row);
    }
    return json{{"d", cfg.d}, {"points", points}};
}

json poly_json(const Poly& p) { return json::parse(poly_to_json(p)); }

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::pair<Rational, Rational> parse_projective(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DomainError("projective parameter must look like a:b");
    return {parse_rational(s.substr(0, colon)), parse_rational(s.substr(colon + 1))};
}

std::vector<std::pair<Rational, Rational>> parse_anchors(const std::string& s) {
    std::vector<std::pair<Rational, Rational>> anchors;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) anchors.push_back(parse_projective(tok));
    return anchors;
}

void apply_worker_env() {
    if (const char* env = std::getenv("HILB_WORKERS")) {
        int workers = std::atoi(env);
        if (workers > 0) omp_set_num_threads(workers);
    }
}

int cmd_generators(int d, const std::string& stage, const std::string& out) {
    GeneratorSet set;
    if (stage == "raw")
        set = all_generators(d);
    else if (stage == "eliminated")
        set = eliminate_linear(d);
    else if (stage == "q")
        set = substitute_q(d, eliminate_linear(d));
    else
        throw CLI::ValidationError("--stage must be raw, eliminated or q");

    json gens = json::array();
    for (const auto& [idx, g] : set.gens)
        gens.push_back(json{{"a", idx.a}, {"j", idx.j}, {"i", idx.i}, {"k", idx.k}, {"poly", poly_json(g)}});
    json outcome{{"d", d}, {"stage", stage}, {"count", set.gens.size()}, {"generators", gens}};
    std::cout << "generators d=" << d << " stage=" << stage << " count=" << set.gens.size() << "\n";
    write_artifact(out, certificate("ledger", json{{"d", d}, {"stage", stage}}, outcome, 0.0));
    return 0;
}

int cmd_identities(int d, const std::string& out) {
    double start = omp_get_wtime();
    IdentityReport trace = verify_trace_identity(d);
    IdentityReport cyclic = verify_cyclic_identity(d);
    bool antisym = true;
    for (int a = 0; a <= d && antisym; ++a)
        for (int j = 1; j <= d && antisym; ++j)
            for (int i = 1; i <= d && antisym; ++i)
                for (int k = i + 1; k <= d && antisym; ++k)
                    antisym = (generator_raw(d, a, j, i, k) + generator_raw(d, a, j, k, i)).is_zero();
    bool c0 = true;
    std::string c0_failure;
    for (int j = 1; j <= d && c0; ++j)
        for (int i = 1; i <= d && c0; ++i)
            for (int k = i + 1; k <= d && c0; ++k)
                for (int u = 1; u <= d && c0; ++u) {
                    IdentityReport r = verify_c0_generation(d, j, i, k, u);
                    if (!r.pass) {
                        c0 = false;
                        c0_failure = r.failures.front();
                    }
                }
    bool pass = trace.pass && cyclic.pass && antisym && c0;

    std::cout << "identity suite d=" << d << "\n"
              << "  antisymmetry      " << (antisym ? "pass" : "FAIL") << "\n"
              << "  trace (eq1)       " << (trace.pass ? "pass" : "FAIL") << "\n"
              << "  cyclic (eq2)      " << (cyclic.pass ? "pass" : "FAIL") << "\n"
              << "  C(0;..) generated " << (c0 ? "pass" : "FAIL") << "\n";
    json outcome{{"d", d},
                 {"antisymmetry", antisym},
                 {"trace", trace.pass},
                 {"cyclic", cyclic.pass},
                 {"c0_generation", c0},
                 {"pass", pass}};
    write_artifact(out, certificate("identity-suite", json{{"d", d}}, outcome, omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_schur(int d, const std::string& dim_parts, const std::string& sym2_parts, bool ledger,
              const std::string& out) {
    double start = omp_get_wtime();
    json outcome;
    bool pass = true;
    if (!dim_parts.empty()) {
        Partition lam = parse_partition(dim_parts);
        Integer dim = hook_content_dim(lam, d);
        std::cout << "dim S_" << lam.str() << "(C^" << d << ") = " << dim.get_str() << "\n";
        outcome["dim"] = dim.get_str();
        outcome["lambda"] = lam.parts();
    } else if (!sym2_parts.empty()) {
        Partition lam = parse_partition(sym2_parts);
        Decomposition dec = sym2_decompose_by_character(lam, d);
        json summands = json::array();
        std::cout << "Sym^2 S_" << lam.str() << "(C^" << d << ") =\n";
        for (const auto& [mu, mult] : dec) {
            std::cout << "  " << mu.str() << " x" << mult << "\n";
            summands.push_back(json{{"lambda", mu.parts()}, {"multiplicity", mult}});
        }
        outcome["summands"] = summands;
    } else if (ledger) {
        LedgerReport rep = verify_dimension_ledger(d, /*include_rank_check=*/d <= 6);
        pass = rep.pass;
        json checks = json::array();
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "  (" << c.lhs << " vs " << c.rhs << ")\n";
            checks.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
        }
        outcome["checks"] = checks;
        outcome["pass"] = pass;
    } else {
        throw CLI::ValidationError("schur needs one of --dim, --sym2, --ledger");
    }
    write_artifact(out, certificate("ledger", json{{"d", d}}, outcome, omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_sample(int d, int n, std::uint64_t seed, long height, const std::string& out) {
    double start = omp_get_wtime();
    cached_generators(d);
    std::vector<int> bad(n, 0);
    std::vector<PointConfig> cfgs(n);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        cfgs[s] = sample_spanning(d, Rng::derive(seed, s), height);
        if (!verify_on_chart(interpolate(cfgs[s])).pass) bad[s] = 1;
    }
    int failures = 0;
    json samples = json::array();
    for (int s = 0; s < n; ++s) {
        failures += bad[s];
        samples.push_back(json{{"seed", Rng::derive(seed, s)}, {"config", config_json(cfgs[s])}, {"on_chart", bad[s] == 0}});
    }
    bool pass = failures == 0;
    std::cout << "sample d=" << d << " n=" << n << " seed=" << seed << ": " << (n - failures) << "/" << n
              << " interpolated configurations satisfy all chart equations\n";
    write_artifact(out, certificate("identity-suite",
                                    json{{"d", d}, {"n", n}, {"seed", seed}, {"height", height}},
                                    json{{"samples", samples}, {"pass", pass}}, omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_membership(const std::string& poly_path, int d, int n, std::uint64_t seed, const std::string& out) {
    double start = omp_get_wtime();
    std::ifstream in(poly_path);
    if (!in) throw CLI::ValidationError("cannot read polynomial file " + poly_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Poly poly = poly_from_json(buf.str());
    cached_generators(d);
    MembershipVerdict v = membership_sample_test(poly, d, n, seed);
    json outcome{{"samples", v.samples}, {"vanishes_on_all_samples", v.vanishes_everywhere}};
    if (v.counterexample) {
        outcome["counterexample"] = config_json(*v.counterexample);
        outcome["value"] = to_string(*v.counterexample_value);
    }
    std::cout << "membership d=" << d << " n=" << n << ": "
              << (v.vanishes_everywhere ? "vanishes on all samples (evidence of membership)"
                                        : "counterexample found (not in the ideal)")
              << "\n";
    write_artifact(out, certificate("identity-suite", json{{"d", d}, {"n", n}, {"seed", seed}, {"poly", poly_path}},
                                    outcome, omp_get_wtime() - start));
    return 0;  // either verdict is a valid outcome
}

int cmd_jacobian(int d, int n, std::uint64_t seed, const std::string& out) {
    double start = omp_get_wtime();
    cached_generators(d);
    const int expected = static_cast<int>(coord_count(d)) - d * (d + 1);
    std::vector<int> ranks(n, -1);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        PointConfig cfg = sample_spanning(d, Rng::derive(seed, s));
        ranks[s] = jacobian_rank_interpolated(cfg, Exec::Serial);
    }
    bool pass = true;
    json rank_list = json::array();
    for (int r : ranks) {
        rank_list.push_back(r);
        if (r != expected) pass = false;
    }
    std::cout << "jacobian d=" << d << " samples=" << n << " expected rank " << expected << ": "
              << (pass ? "constant and as expected" : "MISMATCH") << "\n";
    write_artifact(out, certificate("jacobian", json{{"d", d}, {"n", n}, {"seed", seed}},
                                    json{{"expected", expected}, {"ranks", rank_list}, {"pass", pass}},
                                    omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_curve(int d, const std::string& anchors_str, const std::string& at, int limit_anchor,
              const std::string& out) {
    double start = omp_get_wtime();
    CurveSpec spec = CurveSpec::make(d, parse_anchors(anchors_str));
    cached_generators(d);
    json outcome;
    bool pass = true;
    if (limit_anchor >= 0) {
        ProjectorCoords lim = curve_limit(spec, limit_anchor);
        pass = verify_on_chart(lim).pass;
        json values = json::array();
        for (const auto& v : lim.values) values.push_back(to_string(v));
        outcome = json{{"limit_anchor", limit_anchor}, {"coords", values}, {"on_chart", pass}};
        std::cout << "curve limit at anchor " << limit_anchor << ": finite, "
                  << (pass ? "on chart" : "OFF CHART") << "\n";
    } else {
        auto [alpha, beta] = parse_projective(at);
        PointConfig cfg = curve_eval(spec, alpha, beta);
        ProjectorCoords coords = interpolate(cfg);
        auto center = center_map(coords);
        bool origin = true;
        for (const auto& x : center) origin = origin && (x == 0);
        pass = origin && verify_on_chart(coords).pass;
        outcome = json{{"at", at}, {"config", config_json(cfg)}, {"center_is_origin", origin}, {"on_chart", pass}};
        std::cout << "curve at [" << at << "]: center " << (origin ? "= origin" : "!= origin") << ", "
                  << (pass ? "on chart" : "OFF CHART") << "\n";
    }
    write_artifact(out, certificate("curve", json{{"d", d}, {"anchors", anchors_str}}, outcome,
                                    omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_m_matrix(bool verify, const std::string& export_path, const std::string& out) {
    double start = omp_get_wtime();
    const auto& m = fact::extract_m();
    bool pass = true;
    if (verify) {
        pass = fact::verify_factorization(m);
        std::cout << "M = 90x115 with " << m.entries.size() << " signed-variable entries; M u = C "
                  << (pass ? "holds symbolically" : "FAILS") << "\n";
    }
    if (!export_path.empty()) {
        std::ofstream f(export_path);
        f << m_matrix_to_json(m) << "\n";
        std::cout << "exported M to " << export_path << "\n";
    }
    write_artifact(out, certificate("factorization", json{{"verify", verify}},
                                    json{{"rows", 90}, {"cols", 115}, {"entries", m.entries.size()}, {"pass", pass}},
                                    omp_get_wtime() - start));
    return pass ? 0 : 1;
}

int cmd_minor_find(std::uint64_t seed, const std::string& out) {
    double start = omp_get_wtime();
    fact::MinorSelection sel = fact::find_nonsingular_minor(seed);
    std::cout << "nonsingular 90x90 minor found (seed " << seed << "), columns:";
    for (int c : sel.columns) std::cout << " " << c;
    std::cout << "\n";
    write_artifact(out, certificate("minor-nonvanishing", json{{"seed", seed}},
                                    json{{"columns", sel.columns}}, omp_get_wtime() - start));
    return 0;
}

int cmd_minor_certify(const std::string& cols_path, int n, std::uint64_t seed, const std::string& out) {
    double start = omp_get_wtime();
    const auto& m = fact::extract_m();
    fact::MinorSelection sel;
    if (cols_path.empty()) {
        sel = fact::find_nonsingular_minor(seed);
    } else {
        std::ifstream in(cols_path);
        if (!in) throw CLI::ValidationError("cannot read column file " + cols_path);
        json j = json::parse(in);
        sel.columns = j.at("columns").get<std::vector<int>>();
    }
    fact::VanishingCertificate cert = fact::vanish_on_principal(m, sel, n, seed);
    json samples = json::array();
    for (const auto& s : cert.samples)
        samples.push_back(json{{"seed", s.seed},
                               {"config", config_json(s.config)},
                               {"det_zero", s.det_zero},
                               {"seconds", s.seconds}});
    json outcome{{"columns", sel.columns}, {"samples", samples}, {"pass", cert.pass}};
    if (cert.counterexample_det) outcome["counterexample_det"] = to_string(*cert.counterexample_det);
    std::cout << "minor vanishing certificate: " << (cert.pass ? "all " : "FAILED; not all ") << n
              << " P_8 sample determinants are exactly zero\n";
    write_artifact(out, certificate("minor-vanishing", json{{"n", n}, {"seed", seed}}, outcome,
                                    omp_get_wtime() - start));
    return cert.pass ? 0 : 1;
}

int cmd_reproduce_all(std::uint64_t seed, const std::string& out) {
    acceptance::Summary s = acceptance::run_all(seed);
    json results = json::array();
    std::cout << "acceptance suite, seed " << seed << "\n";
    for (const auto& r : s.results) {
        std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.number << "  "
                  << r.name << "  [" << std::fixed << std::setprecision(1) << r.seconds << "s]\n";
        results.push_back(json{{"criterion", r.number},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
    }
    std::cout << (s.pass ? "ALL CRITERIA PASS" : "FALSIFICATION: at least one criterion failed") << "\n";
    write_artifact(out, certificate("identity-suite", json{{"seed", seed}},
                                    json{{"pass", s.pass}, {"criteria", results}}, 0.0));
    return s.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    apply_worker_env();
    CLI::App app{"exact local equations of the Hilbert scheme of points near m^2"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    // generators
    auto* gen = app.add_subcommand("generators", "build the chart generators C(a;j,(i,k))");
    int gen_d = 8;
    std::string gen_stage = "raw", gen_out = "hilb-generators.json";
    gen->add_option("--d", gen_d, "dimension")->check(CLI::Range(3, 12));
    gen->add_option("--stage", gen_stage, "raw | eliminated | q");
    gen->add_option("--out", gen_out, "artifact path");

    // schur
    auto* schur = app.add_subcommand("schur", "partition dimensions, Sym^2 decompositions, ledger");
    int schur_d = 8;
    std::string schur_dim, schur_sym2, schur_out = "hilb-schur.json";
    bool schur_ledger = false;
    schur->add_option("d", schur_d, "dimension (rank of GL)")->required();
    schur->add_option("--dim", schur_dim, "partition, comma separated, e.g. 3,1,0");
    schur->add_option("--sym2", schur_sym2, "partition for Sym^2 decomposition (d <= 4)");
    schur->add_flag("--ledger", schur_ledger, "run the dimension ledger");
    schur->add_option("--out", schur_out, "artifact path");

    // identities
    auto* ident = app.add_subcommand("identities", "exact identity suite for one d");
    int ident_d = 4;
    std::string ident_out = "hilb-identities.json";
    ident->add_option("--d", ident_d, "dimension")->check(CLI::Range(3, 12));
    ident->add_option("--out", ident_out, "artifact path");

    // sample
    auto* sample = app.add_subcommand("sample", "seeded spanning configurations and chart closure");
    int sample_d = 8, sample_n = 50;
    std::uint64_t sample_seed = 1;
    long sample_height = 20;
    std::string sample_out = "hilb-sample.json";
    sample->add_option("--d", sample_d, "dimension")->check(CLI::Range(2, 12));
    sample->add_option("--n", sample_n, "number of samples");
    sample->add_option("--seed", sample_seed, "64-bit seed");
    sample->add_option("--height", sample_height, "integer coordinate height bound");
    sample->add_option("--out", sample_out, "artifact path");

    // membership
    auto* member = app.add_subcommand("membership", "sampled ideal membership test for a polynomial");
    std::string member_poly;
    int member_d = 8, member_n = 20;
    std::uint64_t member_seed = 1;
    std::string member_out = "hilb-membership.json";
    member->add_option("--poly", member_poly, "polynomial JSON file")->required();
    member->add_option("--d", member_d, "dimension")->check(CLI::Range(2, 12));
    member->add_option("--n", member_n, "number of samples");
    member->add_option("--seed", member_seed, "64-bit seed");
    member->add_option("--out", member_out, "artifact path");

    // jacobian
    auto* jac = app.add_subcommand("jacobian", "exact Jacobian rank at interpolated samples");
    int jac_d = 8, jac_n = 20;
    std::uint64_t jac_seed = 1;
    std::string jac_out = "hilb-jacobian.json";
    jac->add_option("--d", jac_d, "dimension")->check(CLI::Range(3, 12));
    jac->add_option("--n", jac_n, "number of samples");
    jac->add_option("--seed", jac_seed, "64-bit seed");
    jac->add_option("--out", jac_out, "artifact path");

    // curve
    auto* curve = app.add_subcommand("curve", "rational curve through the balanced configuration");
    int curve_d = 3, curve_limit_anchor = -1;
    std::string curve_anchors = "0:1,1:0,2:1", curve_at = "1:1", curve_out = "hilb-curve.json";
    curve->add_option("--d", curve_d, "dimension")->check(CLI::Range(2, 12));
    curve->add_option("--anchors", curve_anchors, "d anchors a:b, comma separated");
    curve->add_option("--at", curve_at, "projective parameter a:b to evaluate at");
    curve->add_option("--limit", curve_limit_anchor, "anchor index for the collision limit");
    curve->add_option("--out", curve_out, "artifact path");

    // m-matrix
    auto* mm = app.add_subcommand("m-matrix", "extract and verify the 90x115 factorization matrix");
    bool mm_verify = false;
    std::string mm_export, mm_out = "hilb-m-matrix.json";
    mm->add_flag("--verify", mm_verify, "verify M u = C symbolically");
    mm->add_option("--export", mm_export, "write M (entries + legends) to this path");
    mm->add_option("--out", mm_out, "artifact path");

    // minor
    auto* minor = app.add_subcommand("minor", "90x90 minor search and vanishing certificates");
    bool minor_find = false, minor_certify = false;
    std::string minor_cols, minor_out = "hilb-minor.json";
    int minor_n = 20;
    std::uint64_t minor_seed = 1;
    minor->add_flag("--find", minor_find, "find a nonsingular 90x90 minor");
    minor->add_flag("--certify", minor_certify, "certify vanishing on P_8 samples");
    minor->add_option("--cols", minor_cols, "column selection JSON (from --find)");
    minor->add_option("--n", minor_n, "number of P_8 samples");
    minor->add_option("--seed", minor_seed, "64-bit seed");
    minor->add_option("--out", minor_out, "artifact path");

    // reproduce-all
    auto* rep = app.add_subcommand("reproduce-all", "run the whole acceptance suite");
    std::uint64_t rep_seed = 1;
    std::string rep_out = "hilb-reproduce-all.json";
    rep->add_option("--seed", rep_seed, "64-bit seed");
    rep->add_option("--out", rep_out, "artifact path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generators(gen_d, gen_stage, gen_out);
        if (schur->parsed()) return cmd_schur(schur_d, schur_dim, schur_sym2, schur_ledger, schur_out);
        if (ident->parsed()) return cmd_identities(ident_d, ident_out);
        if (sample->parsed()) return cmd_sample(sample_d, sample_n, sample_seed, sample_height, sample_out);
        if (member->parsed()) return cmd_membership(member_poly, member_d, member_n, member_seed, member_out);
        if (jac->parsed()) return cmd_jacobian(jac_d, jac_n, jac_seed, jac_out);
        if (curve->parsed()) return cmd_curve(curve_d, curve_anchors, curve_at, curve_limit_anchor, curve_out);
        if (mm->parsed()) return cmd_m_matrix(mm_verify, mm_export, mm_out);
        if (minor->parsed()) {
            if (minor_find && !minor_certify) return cmd_minor_find(minor_seed, minor_out);
            if (minor_certify) return cmd_minor_certify(minor_cols, minor_n, minor_seed, minor_out);
            throw CLI::ValidationError("minor needs --find or --certify");
        }
        if (rep->parsed()) return cmd_reproduce_all(rep_seed, rep_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "falsification or contract violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cli
}  // namespace hilb
