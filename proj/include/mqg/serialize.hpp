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
   JSON forms.

     CycloNum     {"conductor": N, "num": [c_0, ..., c_{phi(N)-1}], "den": D}
                  integers that do not fit in 64 bits are written as decimal strings
     MajidAlgebra {"n", "s", "q_exp", "conductor", "d", "dim", "basis", "mult",
                   "antipode", "alpha", "beta", "phi_s_on_grouplikes"}
     CycleModule  {"n", "d", "dims", "arrows"}; arrows[i] is a list of rows
*/

#ifndef MQG_SERIALIZE_HPP
#define MQG_SERIALIZE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqg/bimodule.hpp"
#include "mqg/corep.hpp"
#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"
#include "mqg/majid_algebra.hpp"

namespace mqg {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
    return Json(z.get_str());
}

inline mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("malformed big integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw FormatError("expected an integer");
}

inline Json to_json(const CycloNum& x) {
    Json num = Json::array();
    for (const auto& c : x.numerators()) num.push_back(integer_to_json(c));
    return Json{{"conductor", x.conductor()}, {"num", num}, {"den", integer_to_json(x.denominator())}};
}

inline CycloNum cyclo_from_json(const Json& j) {
    try {
        std::vector<mpz_class> num;
        for (const auto& c : j.at("num")) num.push_back(integer_from_json(c));
        return CycloNum::from_parts(j.at("conductor").get<long long>(), std::move(num), integer_from_json(j.at("den")));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed cyclotomic number: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

inline Json to_json(const MajidAlgebra& M) {
    const int D = M.dim(), n = M.n();
    auto name = [&](int idx) { return M.basis(idx).to_string(); };
    Json basis = Json::array();
    for (int a = 0; a < D; ++a) basis.push_back(name(a));

    Json mult = Json::array();
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            const BasisTerm& t = M.product(a, b);
            mult.push_back(Json{{"a", name(a)},
                                {"b", name(b)},
                                {"c", t.target >= 0 ? Json(name(t.target)) : Json(nullptr)},
                                {"coeff", to_json(t.coeff)}});
        }
    Json antipode = Json::array();
    for (int a = 0; a < D; ++a) {
        const BasisTerm& t = M.antipode(a);
        antipode.push_back(Json{
            {"a", name(a)}, {"c", t.target >= 0 ? Json(name(t.target)) : Json(nullptr)}, {"coeff", to_json(t.coeff)}});
    }
    Json alpha = Json::array(), beta = Json::array(), phi = Json::array();
    for (int a = 0; a < n; ++a) {
        alpha.push_back(Json{{"a", name(a)}, {"coeff", to_json(M.alpha(a))}});
        beta.push_back(Json{{"a", name(a)}, {"coeff", to_json(M.beta(a))}});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                phi.push_back(Json{{"a", name(a)}, {"b", name(b)}, {"c", name(c)}, {"coeff", to_json(M.phi(a, b, c))}});

    return Json{{"n", n},
                {"s", M.s()},
                {"q_exp", M.q_exp()},
                {"conductor", M.conductor()},
                {"d", M.d()},
                {"dim", D},
                {"basis", basis},
                {"mult", mult},
                {"antipode", antipode},
                {"alpha", alpha},
                {"beta", beta},
                {"phi_s_on_grouplikes", phi}};
}

inline MajidAlgebra algebra_from_json(const Json& j) {
    try {
        AlgebraHeader h{j.at("n").get<int>(), j.at("s").get<int>(), j.at("q_exp").get<long long>(),
                        j.at("conductor").get<int>(), j.at("d").get<int>()};
        if (h.n < 2 || h.d < 1) throw FormatError("document has invalid n or d");
        const int D = h.n * h.d;
        if (j.at("dim").get<int>() != D) throw FormatError("dim does not equal n*d");
        auto index_of = [&](const Json& name) {
            if (name.is_null()) return -1;
            Path p = parse_path(name.get<std::string>(), h.n);
            if (p.length >= h.d) throw FormatError(p.to_string() + " is not a basis element");
            return p.length * h.n + p.source;
        };
        const Json& basis = j.at("basis");
        if (static_cast<int>(basis.size()) != D) throw FormatError("basis has the wrong length");
        for (int a = 0; a < D; ++a)
            if (index_of(basis[a]) != a) throw FormatError("basis is not in canonical order");

        std::vector<BasisTerm> mult(static_cast<size_t>(D) * D);
        const Json& jm = j.at("mult");
        if (jm.size() != mult.size()) throw FormatError("multiplication table has the wrong size");
        for (const auto& e : jm) {
            int a = index_of(e.at("a")), b = index_of(e.at("b"));
            mult[static_cast<size_t>(a) * D + b] = {cyclo_from_json(e.at("coeff")), index_of(e.at("c"))};
        }
        std::vector<BasisTerm> antipode(D);
        for (const auto& e : j.at("antipode")) antipode.at(index_of(e.at("a"))) = {cyclo_from_json(e.at("coeff")), index_of(e.at("c"))};
        std::vector<CycloNum> alpha(h.n), beta(h.n), phi(static_cast<size_t>(h.n) * h.n * h.n);
        for (const auto& e : j.at("alpha")) alpha.at(index_of(e.at("a"))) = cyclo_from_json(e.at("coeff"));
        for (const auto& e : j.at("beta")) beta.at(index_of(e.at("a"))) = cyclo_from_json(e.at("coeff"));
        for (const auto& e : j.at("phi_s_on_grouplikes")) {
            int a = index_of(e.at("a")), b = index_of(e.at("b")), c = index_of(e.at("c"));
            if (a >= h.n || b >= h.n || c >= h.n) throw FormatError("reassociator given off the group-likes");
            phi.at((static_cast<size_t>(a) * h.n + b) * h.n + c) = cyclo_from_json(e.at("coeff"));
        }
        return MajidAlgebra(h, std::move(mult), std::move(antipode), std::move(alpha), std::move(beta), std::move(phi));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed algebra document: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw FormatError(std::string("malformed algebra document: ") + e.what());
    }
}

enum class ExportFormat { Json };

inline ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::Json;
    throw FormatError("unknown export format '" + name + "'");
}

inline std::string export_algebra(const MajidAlgebra& M, ExportFormat format = ExportFormat::Json) {
    switch (format) {
        case ExportFormat::Json:
            return to_json(M).dump(1) + "\n";
    }
    throw FormatError("unknown export format");
}

inline MajidAlgebra import_algebra(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

// ---------------------------------------------------------------------------

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const CycleModule& X) {
    Json arrows = Json::array();
    for (const auto& a : X.arrows) arrows.push_back(to_json(a));
    return Json{{"n", X.n}, {"d", X.d}, {"dims", X.dims}, {"arrows", arrows}};
}

inline CycleModule module_from_json(const Json& j) {
    try {
        CycleModule X;
        X.n = j.at("n").get<int>();
        X.d = j.at("d").get<int>();
        X.dims = j.at("dims").get<std::vector<int>>();
        if (X.n < 1 || static_cast<int>(X.dims.size()) != X.n) throw FormatError("dims must have n entries");
        const Json& arrows = j.at("arrows");
        if (static_cast<int>(arrows.size()) != X.n) throw FormatError("arrows must have n entries");
        for (int i = 0; i < X.n; ++i) {
            int rows = X.dims[(i + 1) % X.n], cols = X.dims[i];
            Matrix m(rows, cols);
            const Json& jr = arrows[i];
            // an empty list stands for any matrix with a zero dimension
            if (rows * cols > 0 || !jr.empty()) {
                if (static_cast<int>(jr.size()) != rows) throw FormatError("arrow " + std::to_string(i) + " has the wrong row count");
                for (int r = 0; r < rows; ++r) {
                    if (static_cast<int>(jr[r].size()) != cols)
                        throw FormatError("arrow " + std::to_string(i) + " has the wrong column count");
                    for (int c = 0; c < cols; ++c) {
                        const Json& x = jr[r][c];
                        m(r, c) = x.is_number_integer() ? CycloNum(x.get<long long>()) : cyclo_from_json(x);
                    }
                }
            }
            X.arrows.push_back(std::move(m));
        }
        validate(X);
        return X;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed module document: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

/// Action tables keyed by ["g^a", "X_i"].
inline Json to_json(const ArrowBimodule& B) {
    const int n = B.n();
    Json left = Json::array(), right = Json::array();
    for (int a = 0; a < n; ++a)
        for (int i = 1; i <= n; ++i) {
            const ActionEntry& l = B.left(a, i);
            left.push_back(Json{{"key", Json::array({"g^" + std::to_string(a), "X_" + std::to_string(i)})},
                                {"arrow", "X_" + std::to_string(l.arrow)},
                                {"coeff", to_json(l.scalar.value())}});
            const ActionEntry& r = B.right(i, a);
            right.push_back(Json{{"key", Json::array({"g^" + std::to_string(a), "X_" + std::to_string(i)})},
                                 {"arrow", "X_" + std::to_string(r.arrow)},
                                 {"coeff", to_json(r.scalar.value())}});
        }
    return Json{{"n", n},
                {"s", B.params().s()},
                {"conductor", B.conductor()},
                {"q", to_json(B.q())},
                {"deformation", to_json(B.deformation())},
                {"left", left},
                {"right", right}};
}

}  // namespace mqg

#endif  // MQG_SERIALIZE_HPP
