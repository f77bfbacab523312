#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "alg2/classify.hpp"
#include "alg2/errata.hpp"
#include "alg2/f2.hpp"
#include "alg2/iso.hpp"
#include "alg2/jordan.hpp"
#include "alg2/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

alg2::FieldSpec field_from_text(const std::string& text) {
    if (text == "Q") return alg2::FieldSpec::rational();
    if (text == "F2") return alg2::FieldSpec::prime(2);
    if (text.rfind("F", 0) == 0) {
        std::string digits = text.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return alg2::FieldSpec::prime(std::stoull(digits));
    }
    throw alg2::bad_argument_error("unsupported field \"" + text + "\"");
}

alg2::BasisChange matrix_from_rows(const alg2::FieldSpec& f,
                                   const std::vector<std::vector<std::string>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw alg2::bad_argument_error("a basis change is a 2x2 matrix of scalar strings");
    return alg2::BasisChange(
        alg2::Scalar::parse(f, rows[0][0]), alg2::Scalar::parse(f, rows[0][1]),
        alg2::Scalar::parse(f, rows[1][0]), alg2::Scalar::parse(f, rows[1][1]));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact classification of 2-dimensional algebras over Q and prime fields";

    // Translators run newest-first: the subclass must be registered after
    // the base so malformed input surfaces as ValueError.
    py::register_exception<alg2::error>(m, "DomainError", PyExc_RuntimeError);
    py::register_exception<alg2::parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<alg2::Algebra>(m, "Algebra")
        .def("__eq__", [](const alg2::Algebra& a, const alg2::Algebra& b) { return a == b; })
        .def("__repr__",
             [](const alg2::Algebra& a) {
                 return "Algebra(" + alg2::algebra_to_json(a).dump() + ")";
             })
        .def("to_dict", [](const alg2::Algebra& a) { return json_to_py(alg2::algebra_to_json(a)); })
        .def("to_json", [](const alg2::Algebra& a) { return alg2::algebra_to_json(a).dump(); });

    m.def("parse_algebra", &alg2::algebra_from_json_text, py::arg("json_text"),
          "Parse an algebra from its JSON document text.");
    m.def(
        "algebra",
        [](const std::string& field, const std::vector<std::vector<std::string>>& table) {
            alg2::FieldSpec f = field_from_text(field);
            if (table.size() != 4)
                throw alg2::bad_argument_error(
                    "table must list the four products e1e1, e1e2, e2e1, e2e2");
            auto vec = [&](const std::vector<std::string>& pair) {
                if (pair.size() != 2)
                    throw alg2::bad_argument_error("each product is a pair of scalar strings");
                return alg2::Vector2{alg2::Scalar::parse(f, pair[0]),
                                     alg2::Scalar::parse(f, pair[1])};
            };
            return alg2::Algebra::from_products(f, vec(table[0]), vec(table[1]), vec(table[2]),
                                                vec(table[3]));
        },
        py::arg("field"), py::arg("table"),
        "Build an algebra from a field name ('Q', 'F2', 'F5', ...) and four products.");
    m.def(
        "catalog",
        [](const std::string& family, const std::map<std::string, std::string>& params,
           const std::string& field) {
            alg2::FieldSpec f = field_from_text(field);
            if (family.size() == 2 && family[0] == 'J') {
                if (!f.is_rational())
                    throw alg2::bad_argument_error("the Jordan catalog is materialized over Q");
                return alg2::jordan_catalog_algebra(family[1] - '0');
            }
            alg2::Family fam = alg2::family_from_name(family);
            std::vector<alg2::Scalar> ordered;
            auto remaining = params;
            for (const std::string& name : alg2::family_param_names(fam)) {
                auto it = remaining.find(name);
                if (it == remaining.end())
                    throw alg2::bad_argument_error(family + " needs parameter " + name);
                ordered.push_back(alg2::Scalar::parse(f, it->second));
                remaining.erase(it);
            }
            if (!remaining.empty())
                throw alg2::bad_argument_error("unknown parameter \"" + remaining.begin()->first +
                                               "\" for " + family);
            return alg2::representative(fam, f, ordered);
        },
        py::arg("family"), py::arg("params") = std::map<std::string, std::string>{},
        py::arg("field") = "Q", "Materialize a family representative.");

    m.def(
        "multiply",
        [](const alg2::Algebra& A, const std::pair<std::string, std::string>& x,
           const std::pair<std::string, std::string>& y) {
            alg2::Vector2 vx{alg2::Scalar::parse(A.field(), x.first),
                             alg2::Scalar::parse(A.field(), x.second)};
            alg2::Vector2 vy{alg2::Scalar::parse(A.field(), y.first),
                             alg2::Scalar::parse(A.field(), y.second)};
            alg2::Vector2 r = alg2::multiply(A, vx, vy);
            return std::pair(r.x1.render(), r.x2.render());
        },
        py::arg("algebra"), py::arg("x"), py::arg("y"));
    m.def(
        "transform",
        [](const alg2::Algebra& A, const std::vector<std::vector<std::string>>& matrix) {
            return alg2::transform(A, matrix_from_rows(A.field(), matrix));
        },
        py::arg("algebra"), py::arg("matrix"));

    m.def("idempotents", [](const alg2::Algebra& A) {
        alg2::IdempotentSet idem = alg2::idempotents(A);
        py::dict out;
        if (idem.is_finite()) {
            out["kind"] = "finite";
            py::list pts;
            for (const alg2::Vector2& v : idem.points())
                pts.append(py::make_tuple(v.x1.render(), v.x2.render()));
            out["points"] = pts;
        } else if (idem.is_line()) {
            out["kind"] = "line";
            out["base"] = py::make_tuple(idem.line().base.x1.render(),
                                         idem.line().base.x2.render());
            out["direction"] = py::make_tuple(idem.line().direction.x1.render(),
                                              idem.line().direction.x2.render());
        } else {
            out["kind"] = "plane";
        }
        return out;
    });
    m.def("fingerprint", [](const alg2::Algebra& A) {
        alg2::InvariantFingerprint fp = alg2::fingerprint(A);
        py::dict out;
        out["commutative"] = fp.commutative;
        out["anticommutative"] = fp.anticommutative;
        out["associative"] = fp.associative;
        out["unital"] = fp.unital;
        out["image_dim"] = fp.image_dim;
        out["square_map_rank"] = fp.square_map_rank;
        if (fp.skew_trivial) out["skew_trivial"] = *fp.skew_trivial;
        if (fp.profile_kind == alg2::InvariantFingerprint::ProfileKind::count)
            out["idempotent_profile"] = py::make_tuple("count", fp.idempotent_count);
        else if (fp.profile_kind == alg2::InvariantFingerprint::ProfileKind::line)
            out["idempotent_profile"] = py::make_tuple("line");
        else
            out["idempotent_profile"] = py::make_tuple("plane");
        return out;
    });
    m.def("classify", [](const alg2::Algebra& A) {
        return json_to_py(alg2::classification_to_json(alg2::classify(A)));
    });
    m.def("representative", [](const alg2::Algebra& A) {
        return alg2::representative(alg2::classify(A).label);
    });
    m.def(
        "isomorphic",
        [](const alg2::Algebra& A, const alg2::Algebra& B) -> py::object {
            auto witness = alg2::isomorphic_bruteforce(A, B);
            if (!witness) return py::none();
            const alg2::BasisChange& w = witness->matrix;
            py::list rows;
            py::list r1, r2;
            r1.append(w.a().render());
            r1.append(w.b().render());
            r2.append(w.c().render());
            r2.append(w.d().render());
            rows.append(r1);
            rows.append(r2);
            return rows;
        },
        py::arg("a"), py::arg("b"),
        "Brute-force isomorphism witness over a small prime field, or None.");

    m.def("enumerate_f2", []() {
        alg2::f2::OrbitSummary summary = alg2::f2::enumerate_orbits();
        py::dict out;
        out["class_count"] = summary.class_count;
        py::dict hist;
        for (auto [size, count] : summary.histogram) hist[py::int_(size)] = count;
        out["histogram"] = hist;
        out["burnside_fixed_points"] = py::cast(summary.burnside_fixed_points);
        out["burnside_balanced"] = summary.burnside_balanced;
        py::list orbits;
        for (const alg2::f2::OrbitRecord& rec : summary.orbits) {
            py::dict o;
            o["representative"] = alg2::f2::seq_render(rec.representative);
            o["size"] = rec.members.size();
            o["isotropy"] = rec.isotropy_name;
            orbits.append(o);
        }
        out["orbits"] = orbits;
        return out;
    });
    m.def(
        "enumerate_fq",
        [](std::uint64_t p, bool expensive, unsigned threads) {
            alg2::OrbitPartition part =
                alg2::classify_exhaustive(alg2::FieldSpec::prime(p), expensive, threads);
            py::dict out;
            out["class_count"] = part.class_count;
            py::dict hist;
            for (auto [size, count] : part.size_histogram) hist[py::int_(size)] = count;
            out["histogram"] = hist;
            if (part.burnside_class_count) out["burnside_class_count"] = *part.burnside_class_count;
            return out;
        },
        py::arg("p"), py::arg("expensive") = false, py::arg("threads") = 0);

    m.def("is_jordan", [](const alg2::Algebra& A) {
        return json_to_py(alg2::jordan_report_json(A));
    });
    m.def("errata", []() { return json_to_py(alg2::errata_json()); });
}
