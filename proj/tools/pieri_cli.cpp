#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pieri/betti.hpp"
#include "pieri/classical.hpp"
#include "pieri/complex.hpp"
#include "pieri/golden.hpp"
#include "pieri/json_io.hpp"
#include "pieri/olver.hpp"
#include "pieri/straighten.hpp"

using namespace pieri;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : text) {
        if (isdigit(ch) || ch == '-') {
            cur += ch;
        } else if (!cur.empty()) {
            vals.push_back(std::stoi(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) vals.push_back(std::stoi(cur));
    return vals;
}

std::vector<Partition> parse_relations(const std::string& text) {
    std::vector<Partition> out;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            if (!cur.empty()) out.push_back(Partition::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(Partition::parse(cur));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path);
    f << text;
}

GroupType parse_type(const std::string& t, int rank) {
    if (t == "B" || t == "b") return {Family::B, rank};
    if (t == "C" || t == "c") return {Family::C, rank};
    if (t == "D" || t == "d") return {Family::D, rank};
    throw CLI::ValidationError("--type must be one of B, C, D");
}

std::string complex_output(const EquivariantComplex& c, const std::string& format, bool diagrams,
                           int degree_bound) {
    if (format == "json") {
        json j = to_json(c);
        if (degree_bound >= 0) {
            j["euler"] = to_json(verify_euler(c, degree_bound));
            auto spec = CokernelSpec::make(c.generator(), c.relations(), c.n);
            json ck = json::array();
            for (auto& [p, d] : cokernel_character(spec, degree_bound))
                ck.push_back({{"partition", to_json(p)}, {"degree", d}});
            j["cokernel"] = ck;
        }
        return j.dump(2);
    }
    std::string out = render_text(c, diagrams);
    if (degree_bound >= 0) {
        auto eu = verify_euler(c, degree_bound);
        out += std::string("euler: ") + (eu.divisible ? "divisible" : "NOT divisible") +
               (eu.finite_length ? ", finite length" : ", not finite length") + "\n";
        for (int d = 0; d < (int)eu.quotient.size() && d <= degree_bound; ++d)
            if (!eu.quotient[d].is_zero())
                out += "  H_" + std::to_string(d) + " = " + eu.quotient[d].str() + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pieri: equivariant resolutions, Betti tables, and their decompositions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    if (const char* cap = std::getenv("PIERI_SIZE_CAP")) {
        try {
            set_schur_module_size_cap(std::stoll(cap));
        } catch (...) {
            std::cerr << "warning: ignoring unparsable PIERI_SIZE_CAP\n";
        }
    }

    std::string format = "text", out_path;
    long long seed = 0;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to a file");
    app.add_option("--seed", seed, "accepted for harness compatibility; all computations are deterministic");

    // resolve
    auto* cmd_resolve = app.add_subcommand("resolve", "resolution of a cokernel of Pieri maps");
    int n = 0, degree_bound = -1, effort = 1;
    std::string alpha_s, betas_s, beta_s, e_s, weight_s, type_s = "B", table_path, order_s;
    bool do_minimize = false, diagrams = false, use_bottom = false, exterior = false;
    cmd_resolve->add_option("--n,--rank", n, "number of variables")->required();
    cmd_resolve->add_option("--alpha", alpha_s, "generator partition, e.g. \"(3,1,0)\"")->required();
    cmd_resolve->add_option("--betas", betas_s, "relations, ';' separated")->required();
    cmd_resolve->add_flag("--minimize", do_minimize, "cancel mapping-cone repetitions exactly");
    cmd_resolve->add_option("--effort", effort, "work bound for exact cancellation");
    cmd_resolve->add_option("--degree-bound", degree_bound, "also print the Hilbert quotient/cokernel");
    cmd_resolve->add_flag("--diagrams", diagrams, "draw ASCII Young diagrams (column convention)");

    // pure
    auto* cmd_pure = app.add_subcommand("pure", "pure resolution (column-one strip) or jump family");
    cmd_pure->add_option("--n,--rank", n, "number of variables")->required();
    cmd_pure->add_option("--alpha", alpha_s, "generator partition");
    cmd_pure->add_option("--beta", beta_s, "relation partition (boxes in column 1)");
    cmd_pure->add_option("--e", e_s, "jump sequence \"(0,e1,...,en)\" for the whole family");
    cmd_pure->add_flag("--diagrams", diagrams, "draw ASCII Young diagrams");
    cmd_pure->add_option("--degree-bound", degree_bound, "also print the Hilbert quotient");

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "Boij-Soderberg decomposition of a Betti table");
    cmd_dec->add_option("--table", table_path, "JSON table file")->required();
    cmd_dec->add_flag("--bottom", use_bottom, "pivot on bottom degree sequences");
    cmd_dec->add_option("--effort", effort, "positivity search bound");

    // olver
    auto* cmd_olver = app.add_subcommand("olver", "explicit Pieri inclusion matrix");
    cmd_olver->add_option("--n,--rank", n, "number of variables")->required();
    cmd_olver->add_option("--beta", beta_s, "source partition")->required();
    cmd_olver->add_option("--alpha", alpha_s, "target partition")->required();
    cmd_olver->add_option("--order", order_s, "box removal order, e.g. \"(2,1)\"");
    cmd_olver->add_flag("--exterior", exterior, "project to the exterior power instead");
    int slice_degree = -1;
    cmd_olver->add_option("--degree", slice_degree, "emit the induced degree-d slice instead");

    // bott
    auto* cmd_bott = app.add_subcommand("bott", "dotted Weyl action normal form");
    cmd_bott->add_option("--type", type_s, "family B, C or D")->required();
    cmd_bott->add_option("--rank", n, "rank")->required();
    cmd_bott->add_option("--weight", weight_s, "integral weight, e.g. \"(2,-1,0)\"")->required();

    // classical-terms
    auto* cmd_ct = app.add_subcommand("classical-terms", "orthosymplectic resolution terms");
    cmd_ct->add_option("--type", type_s, "family B, C or D")->required();
    cmd_ct->add_option("--rank", n, "rank")->required();
    cmd_ct->add_option("--alpha", alpha_s, "generator partition")->required();
    cmd_ct->add_option("--betas", betas_s, "relations, ';' separated")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the worked-example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_resolve) {
            auto spec = CokernelSpec::make(Partition::parse(alpha_s), parse_relations(betas_s), n);
            EquivariantComplex c = resolve(spec);
            if (do_minimize) c = minimize(c, effort);
            emit(complex_output(c, format, diagrams, degree_bound), out_path);
        } else if (*cmd_pure) {
            if (!e_s.empty()) {
                auto family = pure_family(parse_ints(e_s), n);
                std::string out;
                if (format == "json") {
                    json arr = json::array();
                    for (auto& c : family) arr.push_back(to_json(c));
                    out = arr.dump(2);
                } else {
                    for (auto& c : family) out += complex_output(c, format, diagrams, degree_bound);
                }
                emit(out, out_path);
            } else {
                if (alpha_s.empty() || beta_s.empty())
                    throw CLI::ValidationError("pure needs --alpha and --beta, or --e");
                auto c = pure_resolution(Partition::parse(alpha_s), Partition::parse(beta_s), n);
                emit(complex_output(c, format, diagrams, degree_bound), out_path);
            }
        } else if (*cmd_dec) {
            std::ifstream f(table_path);
            if (!f) throw std::invalid_argument("cannot open " + table_path);
            json j = json::parse(f);
            bool equivariant = false;
            for (auto& e : j.at("entries"))
                if (e.contains("schur")) equivariant = true;
            std::string out;
            if (equivariant) {
                auto dec = bs_decompose_equivariant(equivariant_table_from_json(j), effort, use_bottom);
                if (format == "json") {
                    out = to_json(dec).dump(2);
                } else {
                    for (auto& s : dec.steps)
                        out += "coefficient (" + s.coefficient.num().str() + ") / (" +
                               s.coefficient.den().str() + ")  " + verdict_str(s.verdict) + "\n";
                    out += dec.success() ? "exact decomposition\n"
                                         : "FAILED at entry (" + std::to_string(dec.failure->i) + "," +
                                               std::to_string(dec.failure->j) + "), certificate weight " +
                                               weight_str(dec.failure->certificate_weight) + "\n";
                }
            } else {
                auto dec = bs_decompose_numeric(betti_from_json(j), use_bottom);
                if (format == "json") {
                    out = to_json(dec).dump(2);
                } else {
                    for (auto& s : dec.steps) {
                        out += "coefficient " + s.coefficient.str() + " * pure(";
                        for (size_t i = 0; i < s.degrees.size(); ++i)
                            out += (i ? "," : "") + std::to_string(s.degrees[i]);
                        out += ")\n";
                    }
                    out += dec.success() ? "exact decomposition\n" : "nonzero residual\n";
                    if (!dec.success()) out += dec.residual.str();
                }
            }
            emit(out, out_path);
        } else if (*cmd_olver) {
            Partition beta = Partition::parse(beta_s), alpha = Partition::parse(alpha_s);
            std::vector<int> order = parse_ints(order_s);
            PieriInclusion inc = exterior ? pieri_inclusion_exterior(beta, alpha, n, order)
                                          : pieri_inclusion(beta, alpha, n, order);
            LinearMap m = slice_degree >= 0 ? induced_degree_map(inc, slice_degree) : inc.to_linear_map();
            std::string out;
            if (format == "json") {
                out = to_json(m).dump(2);
            } else {
                for (auto& [r, c, v] : m.triples()) out += r + "\t" + c + "\t" + v + "\n";
            }
            emit(out, out_path);
        } else if (*cmd_bott) {
            GroupType g = parse_type(type_s, n);
            BottResult r = dotted_bott(g, parse_weight(weight_s, n));
            if (format == "json") {
                emit(to_json(r).dump(2), out_path);
            } else {
                emit(r.zero ? "zero\n"
                            : "H^" + std::to_string(r.degree) + " with highest weight " +
                                  weight_str(r.weight) + (r.dualized ? " (dualized)" : "") + "\n",
                     out_path);
            }
        } else if (*cmd_ct) {
            GroupType g = parse_type(type_s, n);
            auto terms = sheaf_pieri_terms(g, Partition::parse(alpha_s), parse_relations(betas_s));
            if (format == "json") {
                emit(to_json(terms).dump(2), out_path);
            } else {
                std::string out;
                for (auto& t : terms.terms)
                    out += "degree " + std::to_string(t.hom_degree) + ", twist " +
                           std::to_string(t.internal_degree) + ", H^" + std::to_string(t.grade) + ": " +
                           weight_str(t.weight) + "\n";
                out += terms.minimal_claim ? "minimal\n" : "no minimality claim\n";
                emit(out, out_path);
            }
        } else if (*cmd_verify) {
            auto report = run_golden_checks();
            std::string out;
            if (format == "json") {
                json arr = json::array();
                for (auto& [name, ok] : report.results) arr.push_back({{"name", name}, {"pass", ok}});
                out = json{{"results", arr}, {"passed", report.passed}, {"failed", report.failed}}.dump(2);
            } else {
                for (auto& [name, ok] : report.results)
                    out += std::string(ok ? "PASS" : "FAIL") + "  " + name + "\n";
                out += std::to_string(report.passed) + " passed, " + std::to_string(report.failed) +
                       " failed\n";
            }
            emit(out, out_path);
            return report.failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
