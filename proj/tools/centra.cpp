// Command-line surface: validation, cohomology, algebra constructions,
// centre computations, full centres, and the verification suites. Every
// command emits a JSON report (timing in a separate field) and exits
// nonzero unless all checks passed.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "centra/centra.hpp"

using namespace centra;

namespace {

struct GlobalOpts {
    std::string field_spec;
    std::uint64_t seed = 1;
    std::size_t bound = 4096;
    std::string out_path;
    std::string cache_dir;
    int instances = 100;
};

bool g_pass = true;
std::chrono::steady_clock::time_point g_start;

void emit(const GlobalOpts& opts, const std::string& command, json result, bool pass) {
    double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - g_start)
            .count();
    json full{{"command", command}, {"status", pass ? "pass" : "fail"}, {"result", result}};
    full["timing_ms"] = elapsed; // deterministic content lives outside this field
    std::cout << full.dump(2) << std::endl;
    if (!opts.out_path.empty()) write_json_file(opts.out_path, full);
    g_pass = pass;
}

FieldSpec field_or(const GlobalOpts& opts, FieldSpec fallback) {
    if (opts.field_spec.empty()) return fallback;
    return field_from_string(opts.field_spec);
}

Group load_group_arg(const std::string& spec) {
    // catalog name or a path to a JSON file
    for (const std::string& name : catalog_names())
        if (name == spec) return catalog_group(spec);
    if (spec.rfind(".json") != std::string::npos) return group_from_json(load_json_file(spec));
    return catalog_group(spec); // C5, C6 and friends
}

json subgroup_names(const Group& g, const Subgroup& h) {
    json names = json::array();
    for (unsigned e : h.elems) names.push_back(g.names[e]);
    return names;
}

std::optional<Cache> make_cache(const GlobalOpts& opts) {
    if (opts.cache_dir.empty()) return std::nullopt;
    return Cache(opts.cache_dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact full-centre computations for group-theoretical categories"};
    app.require_subcommand(1);
    GlobalOpts opts;
    app.add_option("--field", opts.field_spec, "scalar field: rationals or cyclotomic:m");
    app.add_option("--seed", opts.seed, "seed for randomized suites");
    app.add_option("--bound", opts.bound, "size bound for linear solves");
    app.add_option("--out", opts.out_path, "write the JSON report to this path");
    app.add_option("--cache", opts.cache_dir, "content-addressed cache directory");
    app.add_option("--instances", opts.instances, "rounds for randomized suites");

    std::function<void()> run;

    // ---- group ----
    auto* grp = app.add_subcommand("group", "group table operations");
    {
        auto* validate = grp->add_subcommand("validate", "validate a Cayley table file");
        auto file = std::make_shared<std::string>();
        validate->add_option("file", *file)->required();
        validate->callback([&, file] {
            run = [&, file] {
                Group g = group_from_json(load_json_file(*file));
                json result{{"order", g.n}, {"names", g.names}};
                emit(opts, "group validate", result, true);
            };
        });
        auto* catalog = grp->add_subcommand("catalog", "list or dump catalog groups");
        auto name = std::make_shared<std::string>();
        catalog->add_option("--group", *name);
        catalog->callback([&, name] {
            run = [&, name] {
                if (name->empty()) {
                    emit(opts, "group catalog", json{{"groups", catalog_names()}}, true);
                } else {
                    emit(opts, "group catalog", group_to_json(catalog_group(*name)), true);
                }
            };
        });
    }

    // ---- cohomology ----
    auto* coh = app.add_subcommand("cohomology", "second cohomology with mu_m coefficients");
    {
        auto* h2 = coh->add_subcommand("h2", "elementary divisors of H^2(H, mu_m)");
        auto gname = std::make_shared<std::string>();
        auto modulus = std::make_shared<unsigned>(0);
        h2->add_option("--group", *gname)->required();
        h2->add_option("--modulus", *modulus)->required();
        h2->callback([&, gname, modulus] {
            run = [&, gname, modulus] {
                Group h = load_group_arg(*gname);
                json key{{"op", "h2"}, {"group", group_to_json(h)}, {"modulus", *modulus}};
                auto cache = make_cache(opts);
                json divisors;
                if (cache) {
                    if (auto hit = cache->lookup(key)) {
                        emit(opts, "cohomology h2", {{"divisors", *hit}, {"cache", "hit"}}, true);
                        return;
                    }
                }
                divisors = json::array();
                for (const Int& d : cohomology_group(h, *modulus,
                                                     static_cast<unsigned>(opts.bound)))
                    divisors.push_back(d.get_str());
                if (cache) cache->store(key, divisors);
                emit(opts, "cohomology h2", {{"divisors", divisors}}, true);
            };
        });
        auto* reps = coh->add_subcommand("reps", "one cocycle per cohomology class");
        auto gname2 = std::make_shared<std::string>();
        auto modulus2 = std::make_shared<unsigned>(0);
        reps->add_option("--group", *gname2)->required();
        reps->add_option("--modulus", *modulus2)->required();
        reps->callback([&, gname2, modulus2] {
            run = [&, gname2, modulus2] {
                Group h = load_group_arg(*gname2);
                json out = json::array();
                for (const Cocycle2& c : cocycle_representatives(
                         h, *modulus2, static_cast<unsigned>(opts.bound)))
                    out.push_back(cocycle_to_json(c));
                emit(opts, "cohomology reps", {{"classes", out.size()}, {"representatives", out}},
                     true);
            };
        });
        auto* iscob = coh->add_subcommand("is-coboundary", "strict mod-m coboundary test");
        auto file = std::make_shared<std::string>();
        auto kstar = std::make_shared<bool>(false);
        iscob->add_option("file", *file)->required();
        iscob->add_flag("--kstar", *kstar, "test triviality in H^2(H, k*) instead");
        iscob->callback([&, file, kstar] {
            run = [&, file, kstar] {
                Cocycle2 c = cocycle_from_json(load_json_file(*file));
                json result;
                if (*kstar) {
                    auto w = is_coboundary_kstar(c);
                    result["coboundary"] = w.has_value();
                    if (w) {
                        result["witness"] = w->f;
                        result["witness_modulus"] = w->modulus;
                    }
                } else {
                    auto w = is_coboundary(c);
                    result["coboundary"] = w.has_value();
                    if (w) result["witness"] = *w;
                }
                emit(opts, "cohomology is-coboundary", result, true);
            };
        });
    }

    // ---- algebra ----
    auto* alg = app.add_subcommand("algebra", "graded algebras in C(G)");
    {
        auto* check = alg->add_subcommand("check", "axiom checker");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file)->required();
        check->callback([&, file] {
            run = [&, file] {
                GradedAlgebra a = graded_algebra_from_json(load_json_file(*file));
                Report r = check_graded_algebra(a);
                emit(opts, "algebra check", report_to_json(r), r.pass());
            };
        });
        auto* skew = alg->add_subcommand("skew", "build k[H,gamma] inside C(G)");
        auto gname = std::make_shared<std::string>();
        auto sub = std::make_shared<std::string>("all");
        auto gamma_file = std::make_shared<std::string>();
        skew->add_option("--group", *gname)->required();
        skew->add_option("--subgroup", *sub, "comma-separated element names, or 'all'");
        skew->add_option("--gamma", *gamma_file)->required();
        skew->callback([&, gname, sub, gamma_file] {
            run = [&, gname, sub, gamma_file] {
                Group g = load_group_arg(*gname);
                Subgroup h = subgroup_from_json(g, json(*sub));
                Cocycle2 gamma = cocycle_from_json(load_json_file(*gamma_file));
                FieldSpec field = field_or(opts, FieldSpec::cyclotomic(gamma.modulus));
                GradedAlgebra a = skew_group_algebra(g, h, gamma, field);
                emit(opts, "algebra skew", graded_algebra_to_json(a), true);
            };
        });
        auto* amp = alg->add_subcommand("amplify", "End(W) (x) A");
        auto afile = std::make_shared<std::string>();
        auto wfile = std::make_shared<std::string>();
        amp->add_option("algebra", *afile)->required();
        amp->add_option("space", *wfile)->required();
        amp->callback([&, afile, wfile] {
            run = [&, afile, wfile] {
                GradedAlgebra a = graded_algebra_from_json(load_json_file(*afile));
                GradedSpace w = graded_space_from_json(load_json_file(*wfile));
                GradedAlgebra out = matrix_amplification(a, w);
                emit(opts, "algebra amplify", graded_algebra_to_json(out), true);
            };
        });
        auto* sep = alg->add_subcommand("separable", "trace-form nondegeneracy");
        auto file2 = std::make_shared<std::string>();
        sep->add_option("file", *file2)->required();
        sep->callback([&, file2] {
            run = [&, file2] {
                GradedAlgebra a = graded_algebra_from_json(load_json_file(*file2));
                SeparabilityResult r = separability_check(a);
                json result{{"nondegenerate", r.nondegenerate}, {"gram", matrix_to_json(r.gram)}};
                if (r.radical_witness) result["radical_witness"] = vec_to_json(*r.radical_witness);
                emit(opts, "algebra separable", result, true);
            };
        });
    }

    // ---- centre ----
    auto* cen = app.add_subcommand("centre", "algebras and objects in Z(G)");
    {
        auto* check = cen->add_subcommand("check", "centre-algebra axiom checker");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file)->required();
        check->callback([&, file] {
            run = [&, file] {
                CentreAlgebra c = centre_algebra_from_json(load_json_file(*file));
                Report r = check_centre_algebra(c);
                emit(opts, "centre check", report_to_json(r), r.pass());
            };
        });
        auto* comm = cen->add_subcommand("commutative", "commutativity in Z(G)");
        auto file2 = std::make_shared<std::string>();
        comm->add_option("file", *file2)->required();
        comm->callback([&, file2] {
            run = [&, file2] {
                CentreAlgebra c = centre_algebra_from_json(load_json_file(*file2));
                emit(opts, "centre commutative", json{{"commutative", is_commutative(c)}}, true);
            };
        });
        auto* makea = cen->add_subcommand("make-A", "A(H,F,gamma,eps)");
        auto gname = std::make_shared<std::string>();
        auto hspec = std::make_shared<std::string>();
        auto fspec = std::make_shared<std::string>();
        auto gamma_file = std::make_shared<std::string>();
        auto eps_file = std::make_shared<std::string>();
        makea->add_option("--group", *gname)->required();
        makea->add_option("--H", *hspec)->required();
        makea->add_option("--F", *fspec, "defaults to H");
        makea->add_option("--gamma", *gamma_file)->required();
        makea->add_option("--epsilon", *eps_file, "required when F != H");
        makea->callback([&, gname, hspec, fspec, gamma_file, eps_file] {
            run = [&, gname, hspec, fspec, gamma_file, eps_file] {
                Group g = load_group_arg(*gname);
                Subgroup h = subgroup_from_json(g, json(*hspec));
                Cocycle2 gamma = cocycle_from_json(load_json_file(*gamma_file));
                FieldSpec field = field_or(opts, FieldSpec::cyclotomic(gamma.modulus));
                MakeAData data;
                if (fspec->empty() || *fspec == *hspec) {
                    data = make_A_full(g, field, h, gamma);
                } else {
                    Subgroup f = subgroup_from_json(g, json(*fspec));
                    if (eps_file->empty())
                        throw validation_error("make-A: --epsilon required when F != H");
                    json ej = load_json_file(*eps_file);
                    SubgroupGroup hg = subgroup_group(g, h);
                    EpsilonTable eps;
                    eps.h = hg.group;
                    eps.modulus = ej.at("modulus").get<unsigned>();
                    for (const auto& nm : ej.at("f"))
                        eps.f_elems.push_back(hg.group.index_of(nm.get<std::string>()));
                    std::sort(eps.f_elems.begin(), eps.f_elems.end());
                    for (const auto& row : ej.at("table"))
                        for (const auto& v : row) eps.table.push_back(v.get<int>());
                    data = make_A(g, field, h, f, gamma, eps);
                }
                emit(opts, "centre make-A", centre_algebra_to_json(data.algebra), true);
            };
        });
        auto* lc = cen->add_subcommand("left-centre", "C_l(B) under a convention");
        auto file3 = std::make_shared<std::string>();
        auto conv = std::make_shared<std::string>("rep");
        lc->add_option("file", *file3)->required();
        lc->add_option("--convention", *conv)->check(CLI::IsMember({"graded", "rep"}));
        lc->callback([&, file3, conv] {
            run = [&, file3, conv] {
                CentreAlgebra b = centre_algebra_from_json(load_json_file(*file3));
                SubCentreResult r =
                    left_centre(b, *conv == "graded" ? Convention::graded : Convention::rep);
                json result{{"dimension", r.algebra.dim()},
                            {"algebra", centre_algebra_to_json(r.algebra)},
                            {"inclusion", matrix_to_json(r.inclusion)}};
                emit(opts, "centre left-centre", result, true);
            };
        });
        auto* tr = cen->add_subcommand("trace", "categorical trace of an endomorphism");
        auto xfile = std::make_shared<std::string>();
        auto ffile = std::make_shared<std::string>();
        tr->add_option("object", *xfile)->required();
        tr->add_option("endo", *ffile, "JSON matrix of scalars")->required();
        tr->callback([&, xfile, ffile] {
            run = [&, xfile, ffile] {
                CentreObject x = centre_object_from_json(load_json_file(*xfile));
                Mat f = matrix_from_json(x.field, load_json_file(*ffile));
                Scalar t = trace_endo(x, f);
                emit(opts, "centre trace", json{{"trace", scalar_to_string(t)}}, true);
            };
        });
        auto* pure = cen->add_subcommand("pure-check", "nondegeneracy of tr(fg) pairing");
        auto xfile2 = std::make_shared<std::string>();
        auto yfile2 = std::make_shared<std::string>();
        pure->add_option("X", *xfile2)->required();
        pure->add_option("Y", *yfile2)->required();
        pure->callback([&, xfile2, yfile2] {
            run = [&, xfile2, yfile2] {
                CentreObject x = centre_object_from_json(load_json_file(*xfile2));
                CentreObject y = centre_object_from_json(load_json_file(*yfile2));
                PurePairing p = pure_pairing_check(x, y);
                json result{{"nondegenerate", p.nondegenerate},
                            {"dim_hom_xy", p.dim_xy},
                            {"dim_hom_yx", p.dim_yx},
                            {"gram", matrix_to_json(p.gram)}};
                emit(opts, "centre pure-check", result, true);
            };
        });
    }

    // ---- full-centre ----
    auto* fc = app.add_subcommand("full-centre", "compute Z(A)");
    {
        auto graded_file = std::make_shared<std::string>();
        auto rep_file = std::make_shared<std::string>();
        fc->add_option("--graded", *graded_file, "graded algebra file");
        fc->add_option("--g-algebra", *rep_file, "G-algebra file");
        fc->callback([&, graded_file, rep_file] {
            run = [&, graded_file, rep_file] {
                if (graded_file->empty() == rep_file->empty())
                    throw validation_error("full-centre: give exactly one of --graded/--g-algebra");
                FullCentreResult r;
                if (!graded_file->empty()) {
                    GradedAlgebra a = graded_algebra_from_json(load_json_file(*graded_file));
                    r = full_centre_graded(a, opts.bound);
                } else {
                    GAlgebra a = g_algebra_from_json(load_json_file(*rep_file));
                    r = full_centre_repg(a, opts.bound);
                }
                json dims = json::object();
                const Group& g = r.centre.group();
                for (unsigned f = 0; f < g.n; ++f)
                    if (!r.per_degree[f].empty())
                        dims[g.names[f]] = r.per_degree[f].size();
                json result{{"dimension", r.centre.dim()},
                            {"dimensions_per_degree", dims},
                            {"centre", centre_algebra_to_json(r.centre)},
                            {"evaluation", matrix_to_json(r.evaluation)}};
                emit(opts, "full-centre", result, true);
            };
        });
    }

    // ---- rep ----
    auto* rw = app.add_subcommand("rep", "algebras in Rep(G)");
    {
        auto* check = rw->add_subcommand("check", "G-algebra axiom checker");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file)->required();
        check->callback([&, file] {
            run = [&, file] {
                GAlgebra a = g_algebra_from_json(load_json_file(*file));
                Report r = check_g_algebra(a);
                emit(opts, "rep check", report_to_json(r), r.pass());
            };
        });
        auto* induce = rw->add_subcommand("induce", "ind_H^G(E)");
        auto gname = std::make_shared<std::string>();
        auto sub = std::make_shared<std::string>();
        auto efile = std::make_shared<std::string>();
        induce->add_option("--group", *gname)->required();
        induce->add_option("--subgroup", *sub)->required();
        induce->add_option("algebra", *efile)->required();
        induce->callback([&, gname, sub, efile] {
            run = [&, gname, sub, efile] {
                Group g = load_group_arg(*gname);
                Subgroup h = subgroup_from_json(g, json(*sub));
                GAlgebra e = g_algebra_from_json(load_json_file(*efile));
                InducedAlgebra a = induced_algebra(g, h, e);
                emit(opts, "rep induce", g_algebra_to_json(a.algebra), true);
            };
        });
        auto* mkA = rw->add_subcommand("make-AHgamma", "ind_H^G(End(V)) for a projective rep");
        auto gname2 = std::make_shared<std::string>();
        auto sub2 = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();
        auto builtin = std::make_shared<std::string>();
        mkA->add_option("--group", *gname2)->required();
        mkA->add_option("--subgroup", *sub2)->required();
        mkA->add_option("--rep-file", *rfile, "projective rep JSON");
        mkA->add_option("--rep", *builtin, "builtin rep: trivial or pauli");
        mkA->callback([&, gname2, sub2, rfile, builtin] {
            run = [&, gname2, sub2, rfile, builtin] {
                Group g = load_group_arg(*gname2);
                Subgroup h = subgroup_from_json(g, json(*sub2));
                SubgroupGroup hg = subgroup_group(g, h);
                ProjectiveRep r;
                if (!rfile->empty()) {
                    r = projective_rep_from_json(load_json_file(*rfile));
                } else if (*builtin == "pauli") {
                    r = pauli_rep(hg.group, field_or(opts, FieldSpec::cyclotomic(2)));
                } else {
                    r = trivial_rep(hg.group, field_or(opts, FieldSpec::rationals()));
                }
                InducedAlgebra a = make_A_H_gamma(g, h, r);
                emit(opts, "rep make-AHgamma", g_algebra_to_json(a.algebra), true);
            };
        });
    }

    // ---- classify ----
    auto* cls = app.add_subcommand("classify", "classify an algebra in Z(G)");
    {
        auto file = std::make_shared<std::string>();
        cls->add_option("file", *file)->required();
        cls->callback([&, file] {
            run = [&, file] {
                CentreAlgebra c = centre_algebra_from_json(load_json_file(*file));
                Classification k = classify_centre_algebra(c);
                const Group& g = c.group();
                json result{{"H", subgroup_names(g, k.h)},
                            {"F", subgroup_names(g, k.f)},
                            {"gamma", cocycle_to_json(k.gamma)},
                            {"report", report_to_json(k.report)}};
                emit(opts, "classify", result, k.report.pass());
            };
        });
    }

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "verification suites");
    {
        auto* cp = ver->add_subcommand("cp", "full centre satisfies (cp) with a unique factorization");
        auto graded_file = std::make_shared<std::string>();
        auto rep_file = std::make_shared<std::string>();
        cp->add_option("--graded", *graded_file);
        cp->add_option("--g-algebra", *rep_file);
        cp->callback([&, graded_file, rep_file] {
            run = [&, graded_file, rep_file] {
                Report r{"cp", {}};
                if (!graded_file->empty()) {
                    GradedAlgebra a = graded_algebra_from_json(load_json_file(*graded_file));
                    FullCentreResult f = full_centre_graded(a, opts.bound);
                    r.add("cp_for_evaluation", verify_cp_graded(f.centre.obj, f.evaluation, a));
                    UniversalMapResult u = universal_map_graded(f.centre.obj, f.evaluation, a, f);
                    r.merge(u.report);
                } else if (!rep_file->empty()) {
                    GAlgebra a = g_algebra_from_json(load_json_file(*rep_file));
                    FullCentreResult f = full_centre_repg(a, opts.bound);
                    r.add("cp_for_evaluation", verify_cp_rep(f.centre.obj, f.evaluation, a));
                    UniversalMapResult u = universal_map_rep(f.centre.obj, f.evaluation, a, f);
                    r.merge(u.report);
                } else {
                    throw validation_error("verify cp: give --graded or --g-algebra");
                }
                emit(opts, "verify cp", report_to_json(r), r.pass());
            };
        });
        auto* th = ver->add_subcommand("theorem", "Z(A) = C_l(R(A))");
        auto gfile = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();
        auto conv = std::make_shared<std::string>("matched");
        th->add_option("--graded", *gfile);
        th->add_option("--g-algebra", *rfile);
        th->add_option("--convention", *conv)->check(CLI::IsMember({"matched", "graded", "rep"}));
        th->callback([&, gfile, rfile, conv] {
            run = [&, gfile, rfile, conv] {
                Report r;
                if (!gfile->empty()) {
                    GradedAlgebra a = graded_algebra_from_json(load_json_file(*gfile));
                    Convention c = *conv == "rep" ? Convention::rep : Convention::graded;
                    r = verify_theorem_fullcentre_graded(a, c, opts.bound);
                } else if (!rfile->empty()) {
                    GAlgebra a = g_algebra_from_json(load_json_file(*rfile));
                    Convention c = *conv == "graded" ? Convention::graded : Convention::rep;
                    r = verify_theorem_fullcentre_rep(a, c, opts.bound);
                } else {
                    throw validation_error("verify theorem: give --graded or --g-algebra");
                }
                emit(opts, "verify theorem", report_to_json(r), r.pass());
            };
        });
        auto* mo = ver->add_subcommand("morita", "Z(A) = Z(End(W) (x) A)");
        auto afile = std::make_shared<std::string>();
        auto wfile = std::make_shared<std::string>();
        mo->add_option("algebra", *afile)->required();
        mo->add_option("space", *wfile)->required();
        mo->callback([&, afile, wfile] {
            run = [&, afile, wfile] {
                GradedAlgebra a = graded_algebra_from_json(load_json_file(*afile));
                GradedSpace w = graded_space_from_json(load_json_file(*wfile));
                Report r = verify_morita(a, w, opts.bound);
                emit(opts, "verify morita", report_to_json(r), r.pass());
            };
        });
        auto* adj = ver->add_subcommand("adjunction", "triangles, Hom-dims, monoidality");
        auto gname = std::make_shared<std::string>();
        auto realization = std::make_shared<std::string>("graded");
        adj->add_option("--group", *gname)->required();
        adj->add_option("--realization", *realization)->check(CLI::IsMember({"graded", "rep"}));
        adj->callback([&, gname, realization] {
            run = [&, gname, realization] {
                Group g = load_group_arg(*gname);
                FieldSpec field = field_or(opts, FieldSpec::cyclotomic(g.exponent()));
                Report r = check_adjunction(
                    g, field, *realization == "rep" ? Convention::rep : Convention::graded,
                    opts.seed, opts.instances);
                emit(opts, "verify adjunction", report_to_json(r), r.pass());
            };
        });
        auto* ax = ver->add_subcommand("axioms", "braiding/duality/twist/trace suites");
        auto gname2 = std::make_shared<std::string>();
        ax->add_option("--group", *gname2)->required();
        ax->callback([&, gname2] {
            run = [&, gname2] {
                Group g = load_group_arg(*gname2);
                FieldSpec field = field_or(opts, FieldSpec::cyclotomic(g.exponent()));
                Report r = check_structural_axioms(g, field, opts.seed, opts.instances);
                emit(opts, "verify axioms", report_to_json(r), r.pass());
            };
        });
        auto* mx = ver->add_subcommand("matrix", "the default verification matrix");
        auto suite = std::make_shared<std::string>("default");
        mx->add_option("--suite", *suite)->check(CLI::IsMember({"default", "small"}));
        mx->callback([&, suite] {
            run = [&, suite] {
                Report r = run_verify_matrix(*suite == "default");
                emit(opts, "verify matrix", report_to_json(r), r.pass());
            };
        });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        g_start = std::chrono::steady_clock::now();
        if (run) run();
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_pass ? 0 : 1;
}
