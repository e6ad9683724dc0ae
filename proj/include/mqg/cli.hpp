/*
   Copyright 2026 The mqg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Command-line front end. Exit codes: 0 success, 1 verification failure,
   2 usage error (bad flags, illegal parameters, unreadable input).
*/

#ifndef MQG_CLI_HPP
#define MQG_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqg/cocycle.hpp"
#include "mqg/corep.hpp"
#include "mqg/majid_algebra.hpp"
#include "mqg/serialize.hpp"
#include "mqg/shuffle.hpp"

namespace mqg::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

inline Json report_json(const VerificationReport& r) {
    Json j{{"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) {
        j["failed_identity"] = r.failed_identity;
        j["witness"] = r.witness;
    }
    return j;
}

struct Params {
    int n = 0, s = 0;
    long long q_exp = 0;
};

inline void add_params(CLI::App* cmd, Params& p, bool required = true) {
    auto* n = cmd->add_option("--n", p.n, "cycle order n (>= 2)");
    auto* s = cmd->add_option("--s", p.s, "cocycle index 0 <= s < n");
    auto* q = cmd->add_option("--q-exp", p.q_exp, "q = zeta_N^e, N = n^2 if s != 0 else n");
    if (required) {
        n->required();
        s->required();
        q->required();
    }
}

}  // namespace detail

/// Parses argv-style arguments (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pointed Majid algebras on the cyclic quiver: construction, verification, corepresentations", "mqg"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    detail::Params P;

    auto* classify_cmd = app.add_subcommand("classify", "list every (s, q) family for a given n");
    classify_cmd->add_option("--n", P.n, "cycle order n (>= 2)")->required();

    std::string export_path;
    auto* build_cmd = app.add_subcommand("build", "build M(n,s,q)");
    detail::add_params(build_cmd, P);
    build_cmd->add_option("--export", export_path, "write the structure to this JSON file");

    std::string import_path, suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "verify the Majid algebra axioms");
    detail::add_params(verify_cmd, P, false);
    verify_cmd->add_option("--import", import_path, "verify an exported structure instead of rebuilding");
    verify_cmd->add_option("--suite", suite, "bialgebra | antipode | all")
        ->check(CLI::IsMember({"bialgebra", "antipode", "all"}));

    std::vector<std::string> factors;
    auto* product_cmd = app.add_subcommand("product", "product of two paths in the path algebra");
    detail::add_params(product_cmd, P);
    product_cmd->add_option("paths", factors, "two path literals: p(i,l), g^i or X_i")->required()->expected(2);

    std::string check = "all";
    auto* cocycle_cmd = app.add_subcommand("cocycle", "check the 3-cocycle and the induced 2-cocycle");
    cocycle_cmd->add_option("--n", P.n, "cycle order n")->required();
    cocycle_cmd->add_option("--s", P.s, "cocycle index 0 <= s < n")->required();
    cocycle_cmd->add_option("--check", check, "pentagon | sigma | all")->check(CLI::IsMember({"pentagon", "sigma", "all"}));

    int d_arg = 0;
    auto* indec_cmd = app.add_subcommand("indec", "indecomposable corepresentations of the truncation at length d");
    indec_cmd->add_option("--n", P.n, "cycle order n")->required();
    indec_cmd->add_option("--d", d_arg, "truncation length d")->required();

    std::string in_path;
    auto* decompose_cmd = app.add_subcommand("decompose", "decompose a module into interval modules");
    decompose_cmd->add_option("--in", in_path, "module JSON file")->required();

    std::string alg_path, left_lit, right_lit, object_lit;
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two interval comodules");
    tensor_cmd->add_option("--alg", alg_path, "algebra JSON file")->required();
    tensor_cmd->add_option("--left", left_lit, "left factor I(i,l)")->required();
    tensor_cmd->add_option("--right", right_lit, "right factor I(j,m)")->required();

    auto* fpdim_cmd = app.add_subcommand("fpdim", "Frobenius-Perron dimension of an interval comodule");
    fpdim_cmd->add_option("--alg", alg_path, "algebra JSON file")->required();
    fpdim_cmd->add_option("--object", object_lit, "object I(i,l)")->required();

    std::string out_path, format = "json";
    auto* export_cmd = app.add_subcommand("export", "write the full structure of M(n,s,q)");
    detail::add_params(export_cmd, P);
    export_cmd->add_option("--out", out_path, "output file")->required();
    export_cmd->add_option("--format", format, "document format (json)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    try {
        if (classify_cmd->parsed()) {
            auto entries = classify(P.n);
            if (as_json) {
                Json arr = Json::array();
                for (const auto& e : entries)
                    arr.push_back(Json{{"n", e.n},
                                       {"s", e.s},
                                       {"q_exp", e.q_exp},
                                       {"conductor", e.conductor},
                                       {"d", e.d},
                                       {"dim", e.dim},
                                       {"is_hopf", e.is_hopf},
                                       {"trivial", e.trivial}});
                out << arr.dump(2) << "\n";
            } else {
                out << "   n    s  q_exp    d   dim  hopf\n";
                for (const auto& e : entries)
                    out << std::setw(4) << e.n << std::setw(5) << e.s << std::setw(7) << e.q_exp << std::setw(5) << e.d
                        << std::setw(6) << e.dim << "  " << (e.is_hopf ? "yes" : "no") << (e.trivial ? "  (group algebra)" : "")
                        << "\n";
            }
            return kOk;
        }

        if (build_cmd->parsed() || export_cmd->parsed()) {
            MajidAlgebra M = build(P.n, P.s, P.q_exp);
            if (export_cmd->parsed()) {
                detail::write_file(out_path, export_algebra(M, parse_export_format(format)));
                if (!as_json) out << "wrote " << out_path << "\n";
                else out << Json{{"written", out_path}, {"dim", M.dim()}}.dump() << "\n";
                return kOk;
            }
            if (!export_path.empty()) detail::write_file(export_path, export_algebra(M));
            Json summary{{"n", M.n()},         {"s", M.s()},     {"q_exp", M.q_exp()},   {"conductor", M.conductor()},
                         {"d", M.d()},         {"dim", M.dim()}, {"is_hopf", M.s() == 0}, {"deformation", to_json(M.params().deformation_for(M.q()))}};
            if (as_json)
                out << summary.dump(2) << "\n";
            else
                out << "M(" << M.n() << "," << M.s() << ",zeta_" << M.conductor() << "^" << M.q_exp() << "): d = " << M.d()
                    << ", dim = " << M.dim() << (M.s() == 0 ? ", Hopf" : "") << "\n";
            return kOk;
        }

        if (verify_cmd->parsed()) {
            std::optional<MajidAlgebra> M;
            if (!import_path.empty()) {
                M = import_algebra(detail::read_file(import_path));
            } else {
                if (verify_cmd->count("--n") == 0 || verify_cmd->count("--s") == 0 || verify_cmd->count("--q-exp") == 0) {
                    err << "usage error: verify needs --import FILE or all of --n, --s, --q-exp\n";
                    return kUsage;
                }
                M = build(P.n, P.s, P.q_exp);
            }
            Json report = Json::object();
            bool ok = true;
            if (suite == "bialgebra" || suite == "all") {
                VerificationReport r = verify_quasi_bialgebra(*M);
                report["bialgebra"] = detail::report_json(r);
                ok = ok && r.passed;
            }
            if (suite == "antipode" || suite == "all") {
                VerificationReport r;
                try {
                    r = verify_antipode(*M);
                } catch (const StructuralError& e) {
                    r = VerificationReport::failure(e.what(), {});
                }
                report["antipode"] = detail::report_json(r);
                ok = ok && r.passed;
            }
            report["passed"] = ok;
            if (as_json) {
                out << report.dump(2) << "\n";
            } else {
                for (const auto& [k, v] : report.items()) {
                    if (k == "passed") continue;
                    out << k << ": " << (v["passed"].get<bool>() ? "PASS" : "FAIL") << " (" << v["checks"] << " checks)";
                    if (!v["passed"].get<bool>()) {
                        out << " " << v["failed_identity"].get<std::string>() << " at";
                        for (const auto& w : v["witness"]) out << " " << w.get<std::string>();
                    }
                    out << "\n";
                }
            }
            return ok ? kOk : kVerificationFailed;
        }

        if (product_cmd->parsed()) {
            QuiverAlgebra A = make_quiver_algebra(P.n, P.s, P.q_exp);
            Path a = parse_path(factors[0], P.n), b = parse_path(factors[1], P.n);
            PathProduct pr = closed_form_product(A, a, b);
            if (as_json)
                out << Json{{"left", a.to_string()}, {"right", b.to_string()}, {"coeff", to_json(pr.coeff)}, {"path", pr.path.to_string()}}
                           .dump(2)
                    << "\n";
            else
                out << a.to_string() << " * " << b.to_string() << " = (" << pr.coeff.to_string() << ") * "
                    << pr.path.to_string() << "\n";
            return kOk;
        }

        if (cocycle_cmd->parsed()) {
            CocycleParams p(P.n, P.s);
            CocycleReport r;
            if (check == "pentagon" || check == "all") r = pentagon_check(p);
            if (r.passed && (check == "sigma" || check == "all")) r = sigma_check(p);
            Json j{{"passed", r.passed}};
            if (!r.passed) {
                j["failed_identity"] = r.failed_identity;
                j["counterexample"] = *r.counterexample;
            }
            out << j.dump() << "\n";
            return r.passed ? kOk : kVerificationFailed;
        }

        if (indec_cmd->parsed()) {
            if (P.n < 1 || d_arg < 1) throw ParameterError("indec needs n >= 1 and d >= 1");
            Json arr = Json::array();
            for (const auto& I : indecomposables(P.n, d_arg)) {
                CycleModule X = interval_module(P.n, d_arg, I);
                bool uni = uniserial_check(X);
                if (as_json)
                    arr.push_back(Json{{"object", I.to_string()}, {"dims", X.dims}, {"uniserial", uni}, {"projective", I.length == d_arg}});
                else
                    out << I.to_string() << "  dims " << Json(X.dims).dump() << (uni ? "  uniserial" : "")
                        << (I.length == d_arg ? "  projective" : "") << "\n";
            }
            if (as_json) out << arr.dump(2) << "\n";
            return kOk;
        }

        if (decompose_cmd->parsed()) {
            CycleModule X = module_from_json(Json::parse(detail::read_file(in_path)));
            auto parts = decompose(X);
            if (as_json) {
                Json arr = Json::array();
                for (const auto& [I, m] : parts) arr.push_back(Json{{"object", I.to_string()}, {"multiplicity", m}});
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& [I, m] : parts) out << I.to_string() << " x " << m << "\n";
            }
            return kOk;
        }

        if (tensor_cmd->parsed() || fpdim_cmd->parsed()) {
            MajidAlgebra M = import_algebra(detail::read_file(alg_path));
            auto module_of = [&](const std::string& lit) {
                IntervalModule I = parse_interval(lit);
                return interval_module(M.n(), M.d(), I);
            };
            if (tensor_cmd->parsed()) {
                CycleModule T = comodule_tensor(M, module_of(left_lit), module_of(right_lit));
                auto parts = decompose(T);
                Json j{{"left", parse_interval(left_lit).to_string()}, {"right", parse_interval(right_lit).to_string()}, {"dims", T.dims}};
                Json arr = Json::array();
                for (const auto& [I, m] : parts) arr.push_back(Json{{"object", I.to_string()}, {"multiplicity", m}});
                j["decomposition"] = arr;
                Json phi = Json::array();
                for (int a = 0; a < M.n(); ++a)
                    for (int b = 0; b < M.n(); ++b)
                        for (int c = 0; c < M.n(); ++c)
                            phi.push_back(Json{{"a", a}, {"b", b}, {"c", c}, {"coeff", to_json(M.phi(a, b, c))}});
                j["reassociator_on_grouplikes"] = phi;
                if (as_json) {
                    out << j.dump(2) << "\n";
                } else {
                    out << j["left"].get<std::string>() << " (x) " << j["right"].get<std::string>() << " =";
                    bool first = true;
                    for (const auto& [I, m] : parts) {
                        out << (first ? " " : " + ") << (m > 1 ? std::to_string(m) + " " : "") << I.to_string();
                        first = false;
                    }
                    out << "\n";
                }
                return kOk;
            }
            CycleModule X = module_of(object_lit);
            FPDimension fp = fp_dimension(compute_fusion(M), grothendieck_class(X));
            Json j{{"object", parse_interval(object_lit).to_string()}, {"class", grothendieck_class(X)}, {"value", fp.value}};
            j["certificate"] = fp.certificate ? Json(*fp.certificate) : Json(nullptr);
            if (as_json)
                out << j.dump(2) << "\n";
            else
                out << "FPdim " << j["object"].get<std::string>() << " = " << std::setprecision(12) << fp.value
                    << (fp.certificate ? " (exact " + std::to_string(*fp.certificate) + ")" : "") << "\n";
            return kOk;
        }
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidConductor& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotAComodule& e) {
        err << "not a comodule: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace mqg::cli

#endif  // MQG_CLI_HPP
