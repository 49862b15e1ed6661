// derivlab: exact classifier for polynomial derivations.
//
// Exit codes (stable contract):
//   0  success; for `classify`: Im D is a Mathieu-Zhao space
//   2  input error (parse failure, missing rule, bad flags)
//   3  classify: NotMZ
//   4  classify: ConditionalNotMZ
//   5  classify: Unknown or NotSimple-only
//   6  resource limit refused (bounds too large)

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "derivlab/derivlab.hpp"
#include "derivlab/report.hpp"

using namespace derivlab;
using nlohmann::json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

DegreeBounds bounds_from_flags(const ContextPtr& ctx,
                               const std::vector<std::string>& max_deg,
                               unsigned dflt) {
    DegreeBounds b = DegreeBounds::uniform(ctx, dflt);
    for (const auto& spec : max_deg) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw input_error("--max-deg expects <var>=<n>: " + spec);
        std::string var = spec.substr(0, eq);
        int n = std::stoi(spec.substr(eq + 1));
        if (n < 0) throw input_error("--max-deg bound must be >= 0");
        b.max_exp[ctx->index_of(var)] = static_cast<unsigned>(n);
    }
    return b;
}

void emit(const json& report, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

ContextPtr x_context() { return make_context({"x"}, 0); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivlab: simplicity and Mathieu-Zhao classification of "
                 "polynomial derivations over Q"};
    app.require_subcommand(1);

    std::string seed_opt; // accepted for interface stability; the CLI
                          // commands themselves are deterministic
    app.add_option("--seed", seed_opt,
                   "seed echo for randomized tooling (DERIVLAB_SEED fallback)");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify Im D");
    std::string cl_spec;
    bool cl_assume = false, cl_json = false, cl_ext = false;
    int cl_check = -1;
    classify_cmd->add_option("-d,--derivation", cl_spec, "derivation spec")
        ->required();
    classify_cmd->add_flag("--assume-simple", cl_assume,
                           "accept simplicity as a hypothesis where undecidable");
    classify_cmd->add_option("--check-witness", cl_check,
                             "verify the witness at uniform bounds N");
    classify_cmd->add_flag("--extensions", cl_ext,
                           "enable beyond-paper locally-finite rule");
    classify_cmd->add_flag("--json", cl_json, "JSON output");

    // simple
    auto* simple_cmd = app.add_subcommand("simple", "decide simplicity");
    std::string si_spec;
    bool si_json = false;
    simple_cmd->add_option("-d,--derivation", si_spec)->required();
    simple_cmd->add_flag("--json", si_json);

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "compute D(f)");
    std::string ap_spec, ap_f;
    bool ap_json = false;
    apply_cmd->add_option("-d,--derivation", ap_spec)->required();
    apply_cmd->add_option("-f", ap_f, "polynomial")->required();
    apply_cmd->add_flag("--json", ap_json);

    // preimage
    auto* pre_cmd = app.add_subcommand("preimage", "solve D(f) = g within bounds");
    std::string pr_spec, pr_g;
    std::vector<std::string> pr_bounds;
    bool pr_json = false;
    pre_cmd->add_option("-d,--derivation", pr_spec)->required();
    pre_cmd->add_option("-g", pr_g, "target polynomial")->required();
    pre_cmd->add_option("--max-deg", pr_bounds, "per-variable bound <var>=<n>");
    pre_cmd->add_flag("--json", pr_json);

    // kernel
    auto* ker_cmd = app.add_subcommand("kernel", "bounded kernel of D");
    std::string ke_spec;
    std::vector<std::string> ke_bounds;
    bool ke_json = false;
    ker_cmd->add_option("-d,--derivation", ke_spec)->required();
    ker_cmd->add_option("--max-deg", ke_bounds, "per-variable bound <var>=<n>");
    ker_cmd->add_flag("--json", ke_json);

    // ode
    auto* ode_cmd = app.add_subcommand(
        "ode", "polynomial solvability of z' = a z + sum k_j b_j");
    std::string od_a;
    std::vector<std::string> od_bs;
    bool od_json = false;
    ode_cmd->add_option("-a", od_a, "coefficient a(x)")->required();
    ode_cmd->add_option("-b", od_bs, "right-hand side(s) b(x), repeatable")
        ->required();
    ode_cmd->add_flag("--json", od_json);

    // resonances
    auto* res_cmd =
        app.add_subcommand("resonances", "non-negative relations sum l_i a_i = 0");
    std::vector<std::string> rs_as;
    unsigned rs_bound = 10;
    bool rs_json = false;
    res_cmd->add_option("-a", rs_as, "a_i(x), repeatable")->required();
    res_cmd->add_option("--bound", rs_bound, "max |l| (default 10)");
    res_cmd->add_flag("--json", rs_json);

    CLI11_PARSE(app, argc, argv);

    try {
        Timer timer;
        if (*classify_cmd) {
            Derivation D = parse_derivation(cl_spec);
            ClassifyOptions opts;
            opts.assume_simple = cl_assume;
            opts.extensions = cl_ext;
            if (cl_check >= 0)
                opts.check_bounds = DegreeBounds::uniform(
                    D.context(), static_cast<unsigned>(cl_check));
            Verdict v = classify(D, opts);

            std::vector<std::string> cites;
            if (!v.rule.empty()) cites.push_back(v.rule);
            if (v.not_simple && v.rule != "Prop 3.7")
                cites.push_back("Prop 3.7");
            json rep = make_report("classify", to_json(v), cites, timer.ms());
            rep["derivation"] = render(D);

            std::string human = "status: " + std::string(to_string(v.status));
            if (!v.rule.empty()) human += "  [" + v.rule + "]";
            human += "\n";
            if (v.witness) human += "witness not in Im D: " + render(*v.witness) + "\n";
            if (v.not_simple) human += "annotation: D is not simple (Prop 3.7)\n";
            if (!v.note.empty()) human += "note: " + v.note + "\n";
            if (v.certificate) {
                human += std::string("witness check: ") +
                         (v.certificate->outcome ==
                                  BoundedCertificate::Outcome::Feasible
                              ? "FEASIBLE (CONTRADICTION)"
                              : "infeasible-within-bounds") +
                         "\n";
            }
            emit(rep, cl_json, human);
            switch (v.status) {
                case MzStatus::MZ: return 0;
                case MzStatus::NotMZ: return 3;
                case MzStatus::ConditionalNotMZ: return 4;
                default: return 5;
            }
        }
        if (*simple_cmd) {
            Derivation D = parse_derivation(si_spec);
            auto F = as_shamsuddin(D);
            if (!F) throw input_error(
                "simplicity is decided for Shamsuddin derivations only");
            SimplicityVerdict v = is_simple_shamsuddin(*F);
            json rep = make_report("simple", to_json(v),
                                   {"Lemma 2.1", "[6] Thm 3.1/3.2"}, timer.ms());
            rep["derivation"] = render(D);
            std::string human =
                std::string(v.simple ? "simple" : "not simple") + "\n";
            if (v.failing_group)
                human += "failing group: " + std::to_string(*v.failing_group) + "\n";
            human += "reason: " + v.reason + "\n";
            emit(rep, si_json, human);
            return 0;
        }
        if (*apply_cmd) {
            Derivation D = parse_derivation(ap_spec);
            Polynomial f = parse_poly(ap_f, D.context());
            Polynomial out = D.apply(f);
            json rep = make_report("apply", json{{"image", render(out)}}, {},
                                   timer.ms());
            rep["derivation"] = render(D);
            emit(rep, ap_json, render(out) + "\n");
            return 0;
        }
        if (*pre_cmd) {
            Derivation D = parse_derivation(pr_spec);
            Polynomial g = parse_poly(pr_g, D.context());
            DegreeBounds b = bounds_from_flags(D.context(), pr_bounds, 6);
            BoundedCertificate cert = preimage_bounded(D, g, b);
            json rep = make_report("preimage", to_json(cert), {}, timer.ms());
            rep["derivation"] = render(D);
            std::string human;
            if (cert.outcome == BoundedCertificate::Outcome::Feasible) {
                human = "feasible\nf = " + render(*cert.preimage) + "\n";
                human += "verify D(f) = " + render(D.apply(*cert.preimage)) + "\n";
            } else {
                human = "infeasible-within-bounds\n";
            }
            emit(rep, pr_json, human);
            return 0;
        }
        if (*ker_cmd) {
            Derivation D = parse_derivation(ke_spec);
            DegreeBounds b = bounds_from_flags(D.context(), ke_bounds, 6);
            auto basis = kernel_bounded(D, b);
            json arr = json::array();
            std::string human;
            for (const auto& p : basis) {
                arr.push_back(render(p));
                human += render(p) + "\n";
            }
            if (basis.empty()) human = "trivial (constants only)\n";
            json rep = make_report("kernel", json{{"basis", arr}}, {}, timer.ms());
            rep["derivation"] = render(D);
            emit(rep, ke_json, human);
            return 0;
        }
        if (*ode_cmd) {
            ContextPtr ctx = x_context();
            Polynomial a = parse_poly(od_a, ctx);
            std::vector<Polynomial> bs;
            for (const auto& s : od_bs) bs.push_back(parse_poly(s, ctx));
            json result;
            std::string human;
            if (bs.size() == 1) {
                auto z = solve_ode(a, bs[0]);
                result["solvable"] = z.has_value();
                if (z) {
                    result["z"] = render(*z);
                    human = "z = " + render(*z) + "\n";
                } else {
                    human = "no polynomial solution\n";
                }
            } else {
                SolvableSubspace S = solvable_subspace(a, bs);
                result = to_json(S);
                human = "solvable subspace dimension " +
                        std::to_string(S.dimension) + "\n";
            }
            emit(make_report("ode", result, {}, timer.ms()), od_json, human);
            return 0;
        }
        if (*res_cmd) {
            ContextPtr ctx = x_context();
            std::vector<Polynomial> as;
            for (const auto& s : rs_as) as.push_back(parse_poly(s, ctx));
            ResonanceSet R = positive_resonances(as, rs_bound);
            std::string human = "kernel dimension " +
                                std::to_string(R.kernel_dimension) + "\n";
            for (const auto& l : R.relations) {
                human += "(";
                for (std::size_t i = 0; i < l.size(); ++i) {
                    if (i) human += ",";
                    human += std::to_string(l[i]);
                }
                human += ")\n";
            }
            emit(make_report("resonances", to_json(R), {}, timer.ms()), rs_json,
                 human);
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 6;
    }
    return 2;
}
