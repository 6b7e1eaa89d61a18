#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccx/complexes.hpp"
#include "ccx/graph.hpp"
#include "ccx/hseries.hpp"
#include "ccx/macaulay.hpp"
#include "ccx/verification.hpp"

namespace {

using nlohmann::json;

ccx::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ccx::ParseError(path + ": cannot open");
    try {
        return ccx::Graph::parse(in);
    } catch (const std::exception& e) {
        throw ccx::ParseError(path + ": " + e.what());
    }
}

ccx::SignedArrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ccx::ParseError(path + ": cannot open");
    try {
        return ccx::SignedArrangement::parse(in);
    } catch (const std::exception& e) {
        throw ccx::ParseError(path + ": " + e.what());
    }
}

ccx::IntSeq parse_int_list(const std::string& s) {
    ccx::IntSeq out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ccx::ParseError("empty entry in integer list");
        out.emplace_back(item);
    }
    if (out.empty()) throw ccx::ParseError("empty integer list");
    return out;
}

json seq_json(const ccx::IntSeq& s) {
    json a = json::array();
    for (const auto& v : s) a.push_back(v.str());
    return a;
}

struct Output {
    std::string format = "table";
    void emit(const json& j, const std::string& table) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << table;
    }
};

void print_hreport(const Output& out, const ccx::HVectorReport& r) {
    json j{{"kind", ccx::to_string(r.kind)},
           {"n", r.n},
           {"d", r.d},
           {"h", seq_json(r.values)}};
    std::ostringstream t;
    t << "kind: " << ccx::to_string(r.kind) << "  n=" << r.n << "  d=" << r.d
      << "\nh = " << ccx::seq_to_string(r.values) << "\n";
    out.emit(j, t.str());
}

int run_ledger(const Output& out, const ccx::VerificationLedger& ledger) {
    out.emit(json::parse(ledger.to_json()), ledger.to_table());
    return ledger.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring complexes, h-vectors, and convex-ear inequalities"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    std::string graph_file, arr_file, chi_spec, int_list, corrupt;
    int max_n = 6, vertex = 1;
    std::uint64_t seed = 0;
    bool dump_faces = false, betti = false;

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial");
    chromatic->add_option("graph-file", graph_file)->required();

    auto* hv = app.add_subcommand("hvector", "h-vector extraction formulas");
    hv->require_subcommand(1);
    auto* hv_color = hv->add_subcommand("color");
    hv_color->add_option("graph-file", graph_file)->required();
    auto* hv_unip = hv->add_subcommand("unipolar");
    hv_unip->add_option("graph-file", graph_file)->required();
    auto* hv_bn = hv->add_subcommand("bn");
    hv_bn->add_option("arrangement-file", arr_file)->required();
    auto* hv_mat = hv->add_subcommand("matroid");
    hv_mat->add_option("--chi", chi_spec,
                       "coefficients, highest degree first, comma-separated")
        ->required();

    auto* cx = app.add_subcommand("complex", "direct complex construction");
    cx->require_subcommand(1);
    auto* cx_color = cx->add_subcommand("color");
    cx_color->add_option("graph-file", graph_file)->required();
    auto* cx_unip = cx->add_subcommand("unipolar");
    cx_unip->add_option("graph-file", graph_file)->required();
    cx_unip->add_option("--vertex", vertex, "excluded vertex")
        ->capture_default_str();
    auto* cx_bn = cx->add_subcommand("bn");
    cx_bn->add_option("arrangement-file", arr_file)->required();
    for (auto* c : {cx_color, cx_unip, cx_bn}) {
        c->add_flag("--dump-faces", dump_faces);
        if (c != cx_bn) c->add_flag("--betti", betti);
    }

    auto* check = app.add_subcommand("check", "sequence checks");
    check->require_subcommand(1);
    auto* check_m = check->add_subcommand("mvector");
    check_m->add_option("ints", int_list, "comma-separated integers")->required();
    auto* check_ced = check->add_subcommand("ced");
    check_ced->add_option("ints", int_list, "comma-separated integers")
        ->required();

    auto* cp = app.add_subcommand("charpoly", "characteristic polynomial");
    cp->add_option("arrangement-file", arr_file)->required();

    auto* vp = app.add_subcommand("verify-paper", "reproduce source examples");
    vp->add_option("--corrupt", corrupt,
                   "perturb the named stored expected value (testing aid)");
    auto* vb = app.add_subcommand("verify-bridges",
                                  "direct-vs-formula cross-validation");
    auto* vi = app.add_subcommand("verify-inequalities",
                                  "convex-ear inequality suites");
    for (auto* v : {vb, vi}) {
        v->add_option("--max-n", max_n)->capture_default_str();
        v->add_option("--seed", seed)->capture_default_str();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*chromatic) {
            auto g = load_graph(graph_file);
            auto p = ccx::chromatic_polynomial(g);
            out.emit(json{{"chromatic", p.to_string()}}, p.to_string() + "\n");
            return 0;
        }
        if (*hv_color) {
            auto g = load_graph(graph_file);
            print_hreport(out, ccx::extract_color_h(ccx::chromatic_polynomial(g),
                                                    g.n()));
            return 0;
        }
        if (*hv_unip) {
            auto g = load_graph(graph_file);
            print_hreport(
                out, ccx::extract_unipolar_h(ccx::chromatic_polynomial(g), g.n()));
            return 0;
        }
        if (*hv_bn) {
            auto a = load_arrangement(arr_file);
            auto [chi, r] = ccx::char_poly(a);
            print_hreport(out, ccx::extract_bn_h(chi, r, a.n()));
            return 0;
        }
        if (*hv_mat) {
            auto coeffs = parse_int_list(chi_spec);
            std::reverse(coeffs.begin(), coeffs.end());
            ccx::Polynomial chi(std::move(coeffs));
            print_hreport(out, ccx::extract_matroid_h(chi, chi.degree() + 1));
            return 0;
        }
        if (*cx_color || *cx_unip) {
            auto g = load_graph(graph_file);
            auto faces = *cx_color ? ccx::build_coloring_complex(g)
                                   : ccx::build_unipolar_complex(g, vertex);
            auto s = ccx::summarize(faces);
            json j{{"dim", s.dim},
                   {"f", seq_json(s.f)},
                   {"h", seq_json(s.h)},
                   {"pure", s.pure},
                   {"faces", faces.size()}};
            std::ostringstream t;
            t << "dim=" << s.dim << " faces=" << faces.size()
              << " pure=" << (s.pure ? "yes" : "no")
              << "\nf = " << ccx::seq_to_string(s.f)
              << "\nh = " << ccx::seq_to_string(s.h) << "\n";
            if (betti) {
                auto b = ccx::reduced_betti(faces);
                j["betti"] = seq_json(b);
                t << "betti (from dim -1) = " << ccx::seq_to_string(b) << "\n";
            }
            if (dump_faces) {
                json fl = json::array();
                for (const auto& f : faces) {
                    fl.push_back(ccx::face_to_string(f));
                    t << ccx::face_to_string(f) << "\n";
                }
                j["face-list"] = fl;
            }
            out.emit(j, t.str());
            return 0;
        }
        if (*cx_bn) {
            auto a = load_arrangement(arr_file);
            auto cells = ccx::build_bn_restriction(a);
            auto s = ccx::summarize(cells);
            json j{{"dim", s.dim},
                   {"f", seq_json(s.f)},
                   {"h", seq_json(s.h)},
                   {"pure", s.pure},
                   {"cells", cells.size()}};
            std::ostringstream t;
            t << "dim=" << s.dim << " cells=" << cells.size()
              << " pure=" << (s.pure ? "yes" : "no")
              << "\nf = " << ccx::seq_to_string(s.f)
              << "\nh = " << ccx::seq_to_string(s.h) << "\n";
            if (dump_faces) {
                json fl = json::array();
                for (const auto& c : cells) {
                    fl.push_back(ccx::face_to_string(c));
                    t << ccx::face_to_string(c) << "\n";
                }
                j["face-list"] = fl;
            }
            out.emit(j, t.str());
            return 0;
        }
        if (*check_m) {
            auto seq = parse_int_list(int_list);
            auto v = ccx::is_m_vector(seq);
            json j{{"sequence", seq_json(seq)}, {"m-vector", v.ok}};
            std::ostringstream t;
            t << ccx::seq_to_string(seq) << " is "
              << (v.ok ? "an M-vector" : "not an M-vector");
            if (v.witness) {
                j["witness"] = *v.witness;
                t << " (witness index " << *v.witness << ")";
            }
            t << "\n";
            out.emit(j, t.str());
            return 0;
        }
        if (*check_ced) {
            auto seq = parse_int_list(int_list);
            auto rep = ccx::ced_conditions(seq);
            json j{{"sequence", seq_json(seq)},
                   {"monotone", rep.monotone_ok},
                   {"symmetric", rep.symmetric_ineq_ok},
                   {"g-m-vector", rep.g_is_m_vector},
                   {"g", seq_json(rep.g)}};
            std::ostringstream t;
            t << ccx::seq_to_string(seq) << "\n(1) monotone:  "
              << (rep.monotone_ok ? "true" : "false") << "\n(2) symmetric: "
              << (rep.symmetric_ineq_ok ? "true" : "false")
              << "\n(3) g M-vector: " << (rep.g_is_m_vector ? "true" : "false")
              << "  g = " << ccx::seq_to_string(rep.g) << "\n";
            if (rep.first_failure) {
                j["first-failure"] = *rep.first_failure;
                t << "first failure: " << *rep.first_failure << "\n";
            }
            out.emit(j, t.str());
            return 0;
        }
        if (*cp) {
            auto a = load_arrangement(arr_file);
            auto [chi, r] = ccx::char_poly(a);
            out.emit(json{{"chi", chi.to_string()}, {"rank", r}},
                     chi.to_string() + "  (rank " + std::to_string(r) + ")\n");
            return 0;
        }
        if (*vp) return run_ledger(out, ccx::verify_paper_examples(corrupt));
        if (*vb) return run_ledger(out, ccx::verify_bridges(max_n, seed));
        if (*vi) return run_ledger(out, ccx::verify_inequalities(max_n, seed));
    } catch (const ccx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
