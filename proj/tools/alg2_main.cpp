#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "alg2/classify.hpp"
#include "alg2/errata.hpp"
#include "alg2/f2.hpp"
#include "alg2/iso.hpp"
#include "alg2/jordan.hpp"
#include "alg2/json_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitMalformedInput = 2;

struct OutputOptions {
    bool compact = false;
    std::string out_path;
};

void emit(const OutputOptions& opt, const std::string& text) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw alg2::bad_argument_error("cannot open output path " + opt.out_path);
        f << text;
        return;
    }
    std::cout << text;
}

void emit_json(const OutputOptions& opt, const json& doc) {
    emit(opt, opt.compact ? doc.dump() + "\n" : doc.dump(2) + "\n");
}

alg2::Algebra load_algebra(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw alg2::parse_error("cannot read input file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return alg2::algebra_from_json_text(ss.str());
}

alg2::FieldSpec parse_field_flag(const std::string& text) {
    if (text == "Q") return alg2::FieldSpec::rational();
    if (text == "F2") return alg2::FieldSpec::prime(2);
    if (text.rfind("Fp:", 0) == 0) {
        std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw alg2::bad_argument_error("unsupported field \"" + text + "\"");
        return alg2::FieldSpec::prime(std::stoull(digits));
    }
    throw alg2::bad_argument_error("unsupported field \"" + text + "\"");
}

json idempotents_json(const alg2::Algebra& A) {
    alg2::IdempotentSet idem = alg2::idempotents(A);
    json out;
    if (idem.is_finite()) {
        out["kind"] = "finite";
        json pts = json::array();
        for (const alg2::Vector2& v : idem.points())
            pts.push_back(json::array({v.x1.render(), v.x2.render()}));
        out["points"] = pts;
    } else if (idem.is_line()) {
        const alg2::IdempotentLine& line = idem.line();
        out["kind"] = "line";
        out["base"] = json::array({line.base.x1.render(), line.base.x2.render()});
        out["direction"] =
            json::array({line.direction.x1.render(), line.direction.x2.render()});
    } else {
        out["kind"] = "plane";
    }
    return out;
}

json fingerprint_json(const alg2::InvariantFingerprint& fp) {
    json out{{"commutative", fp.commutative},
             {"anticommutative", fp.anticommutative},
             {"associative", fp.associative},
             {"unital", fp.unital},
             {"image_dim", fp.image_dim},
             {"square_map_rank", fp.square_map_rank}};
    if (fp.skew_trivial) out["skew_trivial"] = *fp.skew_trivial;
    switch (fp.profile_kind) {
        case alg2::InvariantFingerprint::ProfileKind::count:
            out["idempotent_profile"] = {{"kind", "count"}, {"count", fp.idempotent_count}};
            break;
        case alg2::InvariantFingerprint::ProfileKind::line:
            out["idempotent_profile"] = {{"kind", "line"}};
            break;
        case alg2::InvariantFingerprint::ProfileKind::plane:
            out["idempotent_profile"] = {{"kind", "plane"}};
            break;
    }
    return out;
}

json f2_summary_json(const alg2::f2::OrbitSummary& summary) {
    json hist = json::object();
    for (auto [size, count] : summary.histogram) hist[std::to_string(size)] = count;
    json orbits = json::array();
    for (const alg2::f2::OrbitRecord& rec : summary.orbits) {
        json members = json::array();
        for (const alg2::f2::Seq4& s : rec.members) members.push_back(alg2::f2::seq_render(s));
        orbits.push_back({{"representative", alg2::f2::seq_render(rec.representative)},
                          {"size", rec.members.size()},
                          {"isotropy", rec.isotropy_name},
                          {"members", members}});
    }
    return json{{"class_count", summary.class_count},
                {"histogram", hist},
                {"burnside_fixed_points", summary.burnside_fixed_points},
                {"burnside_balanced", summary.burnside_balanced},
                {"orbits", orbits},
                {"errata", alg2::errata_json()}};
}

std::string f2_table_text(const alg2::f2::OrbitSummary& summary) {
    std::string out;
    for (const alg2::f2::OrbitRecord& rec : summary.orbits) {
        out += alg2::f2::seq_render(rec.representative);
        out += " size=" + std::to_string(rec.members.size());
        out += " isotropy=" + rec.isotropy_name;
        out += " members=";
        for (std::size_t i = 0; i < rec.members.size(); ++i) {
            if (i) out += ",";
            out += alg2::f2::seq_render(rec.members[i]);
        }
        out += "\n";
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact classification of 2-dimensional algebras over Q and prime fields"};
    app.require_subcommand(1);
    OutputOptions opt;
    app.add_flag("--json", opt.compact, "compact single-line JSON output");
    app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");

    std::string in_file, in_file_b, field_text = "Q", family_text;
    std::vector<std::string> param_texts;
    bool expensive = false;
    unsigned threads = 0;
    std::uint64_t fq_p = 3;

    CLI::App* classify_cmd = app.add_subcommand("classify", "canonical family of an algebra file");
    classify_cmd->add_option("file", in_file, "algebra JSON file")->required();

    CLI::App* iso_cmd = app.add_subcommand("iso", "brute-force isomorphism test over F_q");
    iso_cmd->add_option("fileA", in_file, "first algebra JSON file")->required();
    iso_cmd->add_option("fileB", in_file_b, "second algebra JSON file")->required();

    CLI::App* enumf2 = app.add_subcommand("enumerate-f2", "orbit classification of all 256 F2 tables");
    bool f2_text = false;
    enumf2->add_flag("--text", f2_text, "line-oriented orbit table instead of JSON");

    CLI::App* enumfq = app.add_subcommand("enumerate-fq", "orbit classification of all q^8 tables");
    enumfq->add_option("-p,--p", fq_p, "field size (2, 3, or 5)");
    enumfq->add_flag("--expensive", expensive, "allow the F5 run");
    enumfq->add_option("--threads", threads, "worker threads (0 = hardware)");
    bool fq_text = false;
    enumfq->add_flag("--text", fq_text, "line-oriented orbit report instead of JSON");

    CLI::App* jordan_cmd = app.add_subcommand("jordan", "Jordan identity verdict for an algebra file");
    jordan_cmd->add_option("file", in_file, "algebra JSON file")->required();

    CLI::App* idem_cmd = app.add_subcommand("idempotents", "idempotent locus of an algebra file");
    idem_cmd->add_option("file", in_file, "algebra JSON file")->required();

    CLI::App* fp_cmd = app.add_subcommand("fingerprint", "isomorphism invariants of an algebra file");
    fp_cmd->add_option("file", in_file, "algebra JSON file")->required();

    CLI::App* cat_cmd = app.add_subcommand("catalog", "materialize a family representative");
    cat_cmd->add_option("family", family_text, "family name (Zero, Mu1..Mu18, Mu13K, Mu15K, Mu18K, J1..J6)")
        ->required();
    cat_cmd->add_option("--param", param_texts, "family parameter, name=value");
    cat_cmd->add_option("--field", field_text, "Q, F2, or Fp:<p>");

    app.parse(argc, argv);

    if (*classify_cmd) {
        alg2::Classification c = alg2::classify(load_algebra(in_file));
        emit_json(opt, alg2::classification_to_json(c));
    } else if (*iso_cmd) {
        alg2::Algebra A = load_algebra(in_file), B = load_algebra(in_file_b);
        auto witness = alg2::isomorphic_bruteforce(A, B);
        json out{{"isomorphic", witness.has_value()}};
        if (witness) {
            const alg2::BasisChange& m = witness->matrix;
            out["witness"] = json::array({json::array({m.a().render(), m.b().render()}),
                                          json::array({m.c().render(), m.d().render()})});
        }
        emit_json(opt, out);
    } else if (*enumf2) {
        alg2::f2::OrbitSummary summary = alg2::f2::enumerate_orbits();
        if (f2_text) {
            emit(opt, f2_table_text(summary));
        } else {
            emit_json(opt, f2_summary_json(summary));
        }
    } else if (*enumfq) {
        alg2::OrbitPartition part =
            alg2::classify_exhaustive(alg2::FieldSpec::prime(fq_p), expensive, threads);
        if (fq_text) {
            emit(opt, alg2::orbit_report_text(part));
        } else {
            json hist = json::object();
            for (auto [size, count] : part.size_histogram) hist[std::to_string(size)] = count;
            json out{{"field", alg2::field_to_json(part.field)},
                     {"class_count", part.class_count},
                     {"histogram", hist}};
            if (part.burnside_class_count) out["burnside_class_count"] = *part.burnside_class_count;
            emit_json(opt, out);
        }
    } else if (*jordan_cmd) {
        emit_json(opt, alg2::jordan_report_json(load_algebra(in_file)));
    } else if (*idem_cmd) {
        emit_json(opt, idempotents_json(load_algebra(in_file)));
    } else if (*fp_cmd) {
        emit_json(opt, fingerprint_json(alg2::fingerprint(load_algebra(in_file))));
    } else if (*cat_cmd) {
        alg2::FieldSpec field = parse_field_flag(field_text);
        alg2::Algebra rep = [&]() {
            if (family_text.size() == 2 && family_text[0] == 'J') {
                if (!field.is_rational())
                    throw alg2::bad_argument_error("the Jordan catalog is materialized over Q");
                return alg2::jordan_catalog_algebra(family_text[1] - '0');
            }
            alg2::Family fam = alg2::family_from_name(family_text);
            auto names = alg2::family_param_names(fam);
            std::map<std::string, alg2::Scalar> given;
            for (const std::string& text : param_texts) {
                auto eq = text.find('=');
                if (eq == std::string::npos)
                    throw alg2::bad_argument_error("parameter \"" + text +
                                                   "\" is not of the form name=value");
                std::string key = text.substr(0, eq);
                given.emplace(key, alg2::Scalar::parse(field, text.substr(eq + 1)));
            }
            std::vector<alg2::Scalar> params;
            for (const std::string& name : names) {
                auto it = given.find(name);
                if (it == given.end())
                    throw alg2::bad_argument_error(family_text + " needs --param " + name +
                                                   "=<value>");
                params.push_back(it->second);
                given.erase(it);
            }
            if (!given.empty())
                throw alg2::bad_argument_error("unknown parameter \"" + given.begin()->first +
                                               "\" for " + family_text);
            return alg2::representative(fam, field, params);
        }();
        emit_json(opt, alg2::algebra_to_json(rep));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        try {
            return run(argc, argv);
        } catch (const CLI::ParseError& e) {
            CLI::App dummy;
            int code = dummy.exit(e);
            return code == 0 ? kExitOk : kExitMalformedInput;
        }
    } catch (const alg2::parse_error& e) {
        nlohmann::json err{{"error", {{"kind", "malformed_input"}, {"what", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return kExitMalformedInput;
    } catch (const alg2::error& e) {
        nlohmann::json err{{"error", {{"kind", "domain_error"}, {"what", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", {{"kind", "internal"}, {"what", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return kExitDomainError;
    }
}
