#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "skewkit/skewkit.h"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 holds, 1 property fails, 2 invalid input, 3 internal error.
int exit_code(skk_status s) {
    switch (s) {
        case SKK_OK: return 0;
        case SKK_PROPERTY_FAILS: return 1;
        case SKK_INVALID_INPUT: return 2;
        default: return 3;
    }
}

struct Text {
    char* p = nullptr;
    ~Text() { skk_string_free(p); }
    std::string str() const { return p ? p : ""; }
    json parsed() const { return p ? json::parse(p) : json(); }
};

using DiagramPtr = std::unique_ptr<skk_diagram, decltype(&skk_diagram_free)>;

// An argument is inline JSON unless it names a readable file.
std::string load(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int report_error(skk_status s, const std::string& what) {
    std::cerr << "skewkit: " << what << ": " << skk_last_error() << "\n";
    return exit_code(s);
}

DiagramPtr diagram(const std::string& arg, skk_status& st) {
    skk_diagram* d = nullptr;
    st = skk_diagram_from_json(load(arg).c_str(), &d);
    return DiagramPtr(d, skk_diagram_free);
}

std::string partition_text(const json& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i].get<int>());
    return s + ")";
}

std::string expansion_text(const json& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms) {
        long long c = t["coeff"].get<long long>();
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a) + " ";
        s += "s" + partition_text(t["partition"]);
        first = false;
    }
    return s;
}

std::string diagram_text(const json& d) {
    return partition_text(d["lambda"]) + "/" + partition_text(d["mu"]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewkit: skew Schur functions, compositions and skew-equivalence"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "output format (expand defaults to json, the rest to text)")
        ->check(CLI::IsMember({"text", "json"}));

    std::string dj, aj, bj, ej, wj, kind = "nw", matrix, subset, out_path, suite = "paper-examples";
    bool verify = false, show_matrix = false;
    int max_cells = 12, workers = 1, factor_cap = 14;

    auto* expand = app.add_subcommand("expand", "Schur expansion of a skew diagram");
    expand->add_option("--diagram", dj, "diagram JSON or file")->required();

    auto* equal = app.add_subcommand("equal", "test skew-equivalence of two diagrams");
    equal->add_option("--a", aj, "first diagram")->required();
    equal->add_option("--b", bj, "second diagram")->required();

    auto* compose = app.add_subcommand("compose", "compose D with E along W");
    compose->add_option("--d", dj, "outer diagram D")->required();
    compose->add_option("--e", ej, "inner diagram E")->required();
    compose->add_option("--w", wj, "anchor spec for W (\"empty\", a W diagram, or {\"ne\":..,\"sw\":..})");
    compose->add_flag("--verify", verify, "also check the main identity");

    auto* hyp = app.add_subcommand("hypotheses", "check Hypotheses I-V for E and W");
    hyp->add_option("--e", ej, "diagram E")->required();
    hyp->add_option("--w", wj, "anchor spec for W");

    auto* hg = app.add_subcommand("hg", "Hamel-Goulden determinant of an outside decomposition");
    hg->add_option("--diagram", dj, "connected diagram")->required();
    hg->add_option("--kind", kind, "nw, se or jt")->check(CLI::IsMember({"nw", "se", "jt"}));
    hg->add_flag("--show-matrix", show_matrix, "print the strip matrix");

    auto* syl = app.add_subcommand("sylvester", "check Sylvester's determinant identity");
    syl->add_option("--matrix", matrix, "square integer matrix as JSON")->required();
    syl->add_option("--subset", subset, "0-based index subset as JSON");

    auto* classes = app.add_subcommand("classes", "skew-equivalence classes of connected diagrams");
    classes->add_option("--max-cells", max_cells, "largest cell count")->check(CLI::PositiveNumber);
    classes->add_option("--out", out_path, "write the JSON report here");
    classes->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));

    auto* ver = app.add_subcommand("verify", "run a built-in example suite");
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"paper-examples"}));

    auto* rend = app.add_subcommand("render", "draw a diagram");
    rend->add_option("--diagram", dj, "diagram JSON or file")->required();

    auto* fac = app.add_subcommand("factor", "search for factorizations F = D o_W E");
    fac->add_option("--diagram", dj, "connected diagram F")->required();
    fac->add_option("--max-cells", factor_cap, "refuse larger F")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const bool as_json = format == "json";
    skk_status st = SKK_OK;

    try {
        if (*expand) {
            auto d = diagram(dj, st);
            if (st) return report_error(st, "diagram");
            Text t;
            if ((st = skk_expand(d.get(), &t.p))) return report_error(st, "expand");
            if (format == "text") std::cout << expansion_text(t.parsed()) << "\n";
            else std::cout << t.str() << "\n";
            return 0;
        }
        if (*equal) {
            auto a = diagram(aj, st);
            if (st) return report_error(st, "--a");
            auto b = diagram(bj, st);
            if (st) return report_error(st, "--b");
            Text t;
            st = skk_equal(a.get(), b.get(), &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "equal");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else if (r["equivalent"].get<bool>()) {
                std::cout << "equivalent\n" << r["fingerprint"].dump() << "\n";
            } else {
                auto& f = r["first_difference"];
                std::cout << "not equivalent\ncoefficient of s" << partition_text(f["partition"]) << ": "
                          << f["a"].get<long long>() << " vs " << f["b"].get<long long>() << "\n";
            }
            return exit_code(st);
        }
        if (*compose) {
            auto d = diagram(dj, st);
            if (st) return report_error(st, "--d");
            auto e = diagram(ej, st);
            if (st) return report_error(st, "--e");
            std::string anchor = wj.empty() ? "empty" : load(wj);
            skk_diagram* raw = nullptr;
            Text t;
            st = skk_compose(d.get(), e.get(), anchor.c_str(), verify, &raw, &t.p);
            DiagramPtr F(raw, skk_diagram_free);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "compose");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                Text pic;
                skk_render(F.get(), &pic.p);
                std::cout << diagram_text(r["result"]) << "  (" << r["cells"].get<int>() << " cells, case "
                          << r["case"].get<std::string>() << ")\n"
                          << pic.str();
                if (r.contains("identity")) {
                    auto& id = r["identity"];
                    std::cout << "identity " << (id["holds"].get<bool>() ? "holds" : "FAILS");
                    if (id["holds"].get<bool>())
                        std::cout << " with sign " << id["sign"].get<int>() << " (expected "
                                  << id["expected_sign"].get<int>() << ")";
                    std::cout << "\n";
                }
            }
            return exit_code(st);
        }
        if (*hyp) {
            auto e = diagram(ej, st);
            if (st) return report_error(st, "--e");
            std::string anchor = wj.empty() ? "empty" : load(wj);
            Text t;
            st = skk_hypotheses(e.get(), anchor.c_str(), &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "hypotheses");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                std::cout << "W = " << diagram_text(r["placement"]["W"]) << ", case "
                          << r["placement"]["case"].get<std::string>() << "\n";
                for (auto name : {"I", "II", "III", "IV", "V"}) {
                    bool h = r[name]["holds"].get<bool>();
                    std::cout << name << ": " << (h ? "holds" : "fails") << "  " << r[name]["witness"].get<std::string>();
                    if (std::string(name) == "V" && !r["V_required"].get<bool>()) std::cout << " (not required)";
                    std::cout << "\n";
                }
            }
            return exit_code(st);
        }
        if (*hg) {
            auto d = diagram(dj, st);
            if (st) return report_error(st, "diagram");
            Text t;
            st = skk_hamel_goulden(d.get(), kind.c_str(), show_matrix, &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "hg");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                std::cout << r["kind"].get<std::string>() << " decomposition, " << r["size"].get<int>()
                          << " ribbons:";
                for (auto& iv : r["intervals"]) std::cout << " [" << iv[0].get<int>() << "," << iv[1].get<int>() << "]";
                std::cout << "\n";
                if (r.contains("matrix"))
                    for (auto& row : r["matrix"]) {
                        for (auto& s : row) {
                            std::string k = s["kind"].get<std::string>();
                            std::cout << "  θ[" << s["p"].get<int>() << "," << s["q"].get<int>() << "]";
                            if (k == "ribbon") std::cout << "=" << diagram_text(s["shape"]);
                            else std::cout << "=" << (k == "empty" ? "1" : "0");
                        }
                        std::cout << "\n";
                    }
                std::cout << "det = s_D: " << (r["det_equals_s_D"].get<bool>() ? "yes" : "NO") << "\n";
            }
            return exit_code(st);
        }
        if (*syl) {
            Text t;
            st = skk_sylvester(load(matrix).c_str(), subset.empty() ? nullptr : subset.c_str(), &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "sylvester");
            auto r = t.parsed();
            if (as_json) std::cout << r.dump() << "\n";
            else std::cout << "Sylvester identity " << (r["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
            return exit_code(st);
        }
        if (*classes) {
            Text t;
            st = skk_classes(max_cells, workers, &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "classes");
            auto r = t.parsed();
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "skewkit: cannot write " << out_path << "\n";
                    return 2;
                }
                out << r.dump(2) << "\n";
            }
            if (as_json && out_path.empty()) {
                std::cout << r.dump() << "\n";
            } else {
                std::size_t nontrivial = 0, largest = 0;
                for (auto& c : r["classes"]) {
                    largest = std::max(largest, c["members"].size());
                    nontrivial += c["members"].size() > 1;
                }
                std::cout << r["classes"].size() << " classes up to " << max_cells << " cells, " << nontrivial
                          << " with more than one member, largest " << largest << "\n";
                for (auto& f : r["findings"]) std::cout << "FINDING " << f.dump() << "\n";
            }
            return exit_code(st);
        }
        if (*ver) {
            Text t;
            st = skk_verify_suite(suite.c_str(), &t.p);
            if (st > SKK_PROPERTY_FAILS) return report_error(st, "verify");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                for (auto& c : r["cases"]) {
                    std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
                    if (!c["pass"].get<bool>()) std::cout << ": " << c["detail"].get<std::string>();
                    std::cout << "\n";
                }
            }
            return exit_code(st);
        }
        if (*rend) {
            auto d = diagram(dj, st);
            if (st) return report_error(st, "diagram");
            Text t;
            if ((st = skk_render(d.get(), &t.p))) return report_error(st, "render");
            std::cout << t.str();
            return 0;
        }
        if (*fac) {
            auto d = diagram(dj, st);
            if (st) return report_error(st, "diagram");
            Text t;
            st = skk_factorizations(d.get(), factor_cap, &t.p);
            if (st) return report_error(st, "factor");
            auto r = t.parsed();
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                auto line = [](const json& f) {
                    return diagram_text(f["D"]) + " o_" + diagram_text(f["W"]) + " " + diagram_text(f["E"]) +
                           (f["trivial"].get<bool>() ? "  (trivial)" : "");
                };
                for (auto& f : r["all"]) std::cout << line(f) << "\n";
                for (auto& f : r["minimal"]) std::cout << "minimal: " << line(f) << "\n";
            }
            return 0;
        }
    } catch (const json::exception& e) {
        std::cerr << "skewkit: malformed report: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
