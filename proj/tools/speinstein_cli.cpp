// Command-line front end: Einstein metric computations on the compact
// symplectic groups Sp(n). Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <speinstein/json_io.hpp>
#include <speinstein/solver.hpp>
#include <speinstein/structure.hpp>
#include <speinstein/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace speinstein;

double tolerance_default() {
    if (const char* env = std::getenv("SP_EINSTEIN_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid SP_EINSTEIN_TOL\n";
    }
    return default_einstein_tol;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    os << text;
    return 0;
}

std::string render_verify(const verify_report& rep) {
    std::ostringstream os;
    for (const auto& line : rep.lines) {
        os << (line.pass ? "[PASS] " : "[FAIL] ") << rep.case_name << ": " << line.name;
        if (!line.detail.empty()) os << " — " << line.detail;
        os << '\n';
    }
    os << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.case_name << ")\n";
    return os.str();
}

std::string h_sign_table(int kmax, int lmax) {
    std::ostringstream os;
    os << "h(0) for k (rows) and l (columns) in 1.." << kmax << " x 1.." << lmax << ":\n";
    for (int k = 1; k <= kmax; ++k) {
        for (int l = 1; l <= lmax; ++l) os << (l > 1 ? " " : "") << h_at_zero_closed_form(k, l);
        os << '\n';
    }
    os << "h(1) for the same grid:\n";
    for (int k = 1; k <= kmax; ++k) {
        for (int l = 1; l <= lmax; ++l) os << (l > 1 ? " " : "") << h_at_one_closed_form(k, l);
        os << '\n';
    }
    return os.str();
}

std::string pattern_string(const std::vector<int>& pattern) {
    if (pattern.empty()) return "-";
    std::string s = "(";
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pattern[i]);
    }
    return s + ")";
}

std::array<double, 6> metric6_from_json(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.size() != 6)
        throw std::invalid_argument("expected an array of 6 metric scales");
    std::array<double, 6> y{};
    for (std::size_t i = 0; i < 6; ++i) y[i] = arr[i].get<double>();
    return y;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein metrics on compact symplectic groups Sp(n)"};
    app.require_subcommand(1);

    int k = 1, l = 2;
    int k1 = 1, k2 = 1, k3 = 2;
    int count_n = 4;
    int n1 = 1, n2 = 2;
    int starts = 200;
    double tol = tolerance_default();
    double class_tol = default_classifier_tol;
    std::string format = "json";
    std::string out_path;
    std::string verify_case;
    std::string input_path;
    std::vector<double> y_flat;
    bool with_general = false;

    auto add_common = [&out_path](CLI::App* sub) {
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* sym = app.add_subcommand("solve-symmetric",
                                       "exact-pipeline Einstein metrics on Sp(2k+l)");
    sym->add_option("--k", k, "rank of the two equal factors")->required();
    sym->add_option("--l", l, "rank of the third factor")->required();
    sym->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sym->add_option("--class-tol", class_tol, "relative tolerance of the naturally-reductive classifier");
    add_common(sym);

    CLI::App* gen = app.add_subcommand("solve-general",
                                       "multistart Newton search on sp(k1+k2+k3)");
    gen->add_option("--k1", k1)->required();
    gen->add_option("--k2", k2)->required();
    gen->add_option("--k3", k3)->required();
    gen->add_option("--starts", starts, "number of multistart grid points");
    gen->add_option("--tol", tol, "Einstein residual tolerance (default from SP_EINSTEIN_TOL or 1e-9)");
    gen->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--class-tol", class_tol, "relative tolerance of the naturally-reductive classifier");
    add_common(gen);

    CLI::App* ver = app.add_subcommand("verify", "run a named verification case");
    ver->add_option("--case", verify_case, "lemma43 | existence-grid | ricci-crosscheck | transcription")
        ->required()
        ->check(CLI::IsMember({"lemma43", "existence-grid", "ricci-crosscheck", "transcription"}));
    add_common(ver);

    CLI::App* cnt = app.add_subcommand("count",
                                       "guaranteed number of non-naturally reductive Einstein metrics on Sp(n)");
    cnt->add_option("--n", count_n)->required();
    add_common(cnt);

    CLI::App* mods = app.add_subcommand("modules",
                                        "sign-involution module decomposition of sp(2*n1*n2)");
    mods->add_option("--n1", n1)->required();
    mods->add_option("--n2", n2)->required();
    add_common(mods);

    CLI::App* ric = app.add_subcommand("ricci", "evaluate Ricci components of a metric from a JSON file");
    ric->add_option("--input", input_path, "JSON file {\"shape\":[k1,k2,k3],\"y\":[...6]}")->required();
    ric->add_flag("--general", with_general, "also evaluate through the structure-constant path");
    add_common(ric);

    CLI::App* cls = app.add_subcommand("classify", "naturally-reductive classification of metrics");
    cls->add_option("--input", input_path, "solution document produced by a solve command");
    cls->add_option("--y", y_flat, "six metric scales")->expected(6);
    cls->add_option("--class-tol", class_tol, "relative tolerance of the classifier");
    add_common(cls);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sym->parsed()) {
            if (k < 1 || l < 1) throw std::invalid_argument("k and l must be >= 1");
            solution_set set = solve_symmetric(k, l, class_tol);
            json_fields params = {{"k", std::to_string(k)}, {"l", std::to_string(l)}};
            std::string text = format == "csv" ? solution_csv(set)
                                               : solution_document("solve-symmetric", params, set);
            return emit(text, out_path);
        }

        if (gen->parsed()) {
            triple_shape shape(k1, k2, k3);
            if (starts < 1) throw std::invalid_argument("starts must be >= 1");
            solution_set set = solve_general(shape, starts, tol, class_tol);
            json_fields params = {
                {"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"k3", std::to_string(k3)},
                {"starts", std::to_string(starts)}, {"tol", format_double(tol)},
            };
            std::string text = format == "csv" ? solution_csv(set)
                                               : solution_document("solve-general", params, set);
            return emit(text, out_path);
        }

        if (ver->parsed()) {
            verify_report rep = run_verify_case(verify_case);
            std::string text = render_verify(rep);
            if (verify_case == "transcription") text += h_sign_table(6, 6);
            int rc = emit(text, out_path);
            if (rc != 0) return rc;
            return rep.pass() ? 0 : 1;
        }

        if (cnt->parsed()) {
            int value = count_lower_bound(count_n);  // throws for n < 4
            return emit(std::to_string(value) + "\n", out_path);
        }

        if (mods->parsed()) {
            decomposition dec = enumerate_sign_modules(n1, n2);
            std::ostringstream os;
            os << "label\tpattern\tdim\n";
            for (const auto& m : dec.modules)
                os << m.label << '\t' << pattern_string(m.sign_pattern) << '\t' << m.dim() << '\n';
            os << "total modules: " << dec.module_count() << '\n';
            os << "total dimension: " << dec.total_dim() << '\n';
            auto absent = absent_sign_patterns(n1, n2);
            os << "absent patterns:";
            if (absent.empty()) {
                os << " none";
            } else {
                for (std::size_t i = 0; i < absent.size(); ++i)
                    os << (i ? ", " : " ") << pattern_string(absent[i]);
            }
            os << '\n';
            return emit(os.str(), out_path);
        }

        if (ric->parsed()) {
            std::ifstream is(input_path);
            if (!is) throw std::invalid_argument("cannot read " + input_path);
            nlohmann::json doc = nlohmann::json::parse(is);
            triple_shape shape(doc.at("shape").at(0).get<int>(), doc.at("shape").at(1).get<int>(),
                               doc.at("shape").at(2).get<int>());
            std::array<double, 6> y = metric6_from_json(doc.at("y"));
            ricci_vector rc = ricci_closed_form(shape, metric_params(y.begin(), y.end()));
            json_fields fields = {
                {"command", "\"ricci\""},
                {"params", json_object({{"shape", "[" + std::to_string(shape.k1) + ","
                                                       + std::to_string(shape.k2) + ","
                                                       + std::to_string(shape.k3) + "]"}})},
                {"y", json_double_array(y.begin(), y.end())},
                {"components", json_double_array(rc.components.begin(), rc.components.end())},
                {"lambda", format_double(rc.einstein_constant())},
                {"residual", format_double(rc.residual())},
            };
            if (with_general) {
                decomposition dec = decompose_triple(shape);
                structure_table table = compute_table(dec);
                ricci_vector rg = ricci_general(table, metric_params(y.begin(), y.end()));
                double diff = 0.0;
                for (std::size_t i = 0; i < 6; ++i)
                    diff = std::max(diff, std::abs(rg.components[i] - rc.components[i]));
                fields.push_back({"general_components",
                                  json_double_array(rg.components.begin(), rg.components.end())});
                fields.push_back({"max_path_difference", format_double(diff)});
            }
            return emit(json_object(fields) + "\n", out_path);
        }

        if (cls->parsed()) {
            if (!input_path.empty()) {
                std::ifstream is(input_path);
                if (!is) throw std::invalid_argument("cannot read " + input_path);
                nlohmann::json doc = nlohmann::json::parse(is);
                bool round_trip = true;
                std::string results = "[";
                bool first = true;
                for (const auto& entry : doc.at("solutions")) {
                    std::array<double, 6> y = metric6_from_json(entry.at("y"));
                    int got = classify(y, class_tol);
                    bool consistent = got == entry.at("nr_case").get<int>()
                                   && (got != 0) == entry.at("naturally_reductive").get<bool>();
                    round_trip = round_trip && consistent;
                    if (!first) results += ",";
                    first = false;
                    results += json_object({
                        {"y", json_double_array(y.begin(), y.end())},
                        {"nr_case", std::to_string(got)},
                        {"naturally_reductive", got != 0 ? "true" : "false"},
                        {"consistent", consistent ? "true" : "false"},
                    });
                }
                results += "]";
                std::string text = json_object({
                                       {"command", "\"classify\""},
                                       {"params", json_object({{"tol", format_double(class_tol)}})},
                                       {"results", results},
                                       {"round_trip", round_trip ? "true" : "false"},
                                   })
                                 + "\n";
                int rc = emit(text, out_path);
                if (rc != 0) return rc;
                return round_trip ? 0 : 1;
            }
            if (y_flat.size() != 6)
                throw std::invalid_argument("classify needs --input or six values via --y");
            std::array<double, 6> y{};
            std::copy(y_flat.begin(), y_flat.end(), y.begin());
            int got = classify(y, class_tol);
            std::string text = json_object({
                                   {"command", "\"classify\""},
                                   {"params", json_object({{"tol", format_double(class_tol)}})},
                                   {"y", json_double_array(y.begin(), y.end())},
                                   {"nr_case", std::to_string(got)},
                                   {"naturally_reductive", got != 0 ? "true" : "false"},
                               })
                             + "\n";
            return emit(text, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
