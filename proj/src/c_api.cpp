#include "skewkit/skewkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "skewkit/composition.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/json_io.hpp"
#include "skewkit/example_suite.hpp"
#include "skewkit/ribbon.hpp"

using namespace skewkit;

struct skk_diagram {
    SkewDiagram d;
};

namespace {

thread_local std::string g_last_error;

skk_status fail(skk_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put(char** out, const json& j) {
    if (out) *out = dup(j.dump());
}

// Runs body, mapping exceptions onto status codes.
template <class F>
skk_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const InvalidInput& e) {
        return fail(SKK_INVALID_INPUT, e.what());
    } catch (const json::exception& e) {
        return fail(SKK_INVALID_INPUT, std::string("bad JSON: ") + e.what());
    } catch (const std::overflow_error& e) {
        return fail(SKK_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(SKK_INTERNAL, e.what());
    } catch (...) {
        return fail(SKK_INTERNAL, "unknown error");
    }
}

#define SKK_REQUIRE(p)                                                    \
    do {                                                                  \
        if (!(p)) return fail(SKK_INVALID_INPUT, #p " must not be null"); \
    } while (0)

WPlacement anchor_of(const SkewDiagram& E, const char* anchor) {
    return placement_from_string(E, anchor ? anchor : "");
}

json identity_json(const IdentityResult& r) {
    return json{{"holds", r.holds},
                {"sign", r.sign},
                {"expected_sign", r.expected_sign},
                {"sign_matches", r.sign_matches},
                {"lhs_terms", r.lhs.terms().size()}};
}

}  // namespace

extern "C" {

const char* skk_last_error(void) { return g_last_error.c_str(); }

const char* skk_version(void) { return "0.1.0"; }

void skk_string_free(char* s) { std::free(s); }

skk_status skk_diagram_from_json(const char* text, skk_diagram** out) {
    SKK_REQUIRE(text);
    SKK_REQUIRE(out);
    return guarded([&] {
        *out = new skk_diagram{diagram_from_string(text)};
        return SKK_OK;
    });
}

void skk_diagram_free(skk_diagram* d) { delete d; }

skk_status skk_diagram_to_json(const skk_diagram* d, char** out) {
    SKK_REQUIRE(d);
    SKK_REQUIRE(out);
    return guarded([&] {
        put(out, diagram_to_json(d->d));
        return SKK_OK;
    });
}

skk_status skk_diagram_size(const skk_diagram* d, size_t* out) {
    SKK_REQUIRE(d);
    SKK_REQUIRE(out);
    *out = d->d.size();
    return SKK_OK;
}

skk_status skk_render(const skk_diagram* d, char** out) {
    SKK_REQUIRE(d);
    SKK_REQUIRE(out);
    return guarded([&] {
        *out = dup(render(d->d));
        return SKK_OK;
    });
}

skk_status skk_expand(const skk_diagram* d, char** out) {
    SKK_REQUIRE(d);
    SKK_REQUIRE(out);
    return guarded([&] {
        put(out, schur_to_json(skew_schur(d->d)));
        return SKK_OK;
    });
}

skk_status skk_equal(const skk_diagram* a, const skk_diagram* b, char** report) {
    SKK_REQUIRE(a);
    SKK_REQUIRE(b);
    return guarded([&] {
        auto fa = skew_schur(a->d), fb = skew_schur(b->d);
        if (fa == fb) {
            put(report, json{{"equivalent", true}, {"fingerprint", schur_to_json(fa)}});
            return SKK_OK;
        }
        // first partition, in fingerprint order, where the coefficients differ
        auto ia = fa.terms().begin(), ib = fb.terms().begin();
        Partition at;
        while (true) {
            if (ib == fb.terms().end() || (ia != fa.terms().end() && ia->first < ib->first)) {
                at = ia->first;
                break;
            }
            if (ia == fa.terms().end() || ib->first < ia->first) {
                at = ib->first;
                break;
            }
            if (ia->second != ib->second) {
                at = ia->first;
                break;
            }
            ++ia;
            ++ib;
        }
        put(report, json{{"equivalent", false},
                         {"first_difference", {{"partition", at}, {"a", fa.coeff(at)}, {"b", fb.coeff(at)}}}});
        return SKK_PROPERTY_FAILS;
    });
}

skk_status skk_compose(const skk_diagram* d, const skk_diagram* e, const char* anchor, int verify,
                       skk_diagram** out, char** report) {
    SKK_REQUIRE(d);
    SKK_REQUIRE(e);
    return guarded([&] {
        auto pl = anchor_of(e->d, anchor);
        auto hyp = check_hypotheses(pl);
        if (!hyp.overall_I_to_IV()) {
            std::string why = "hypotheses fail:";
            static const char* names[4] = {"I", "II", "III", "IV"};
            for (int i = 0; i < 4; ++i)
                if (!hyp.h[i]) why += std::string(" ") + names[i] + " (" + hyp.why[i] + ")";
            return fail(SKK_INVALID_INPUT, why);
        }
        auto F = compose(d->d, pl);
        json rep{{"result", diagram_to_json(F)}, {"cells", F.size()}, {"case", std::string(1, case_letter(pl.kase))}};
        skk_status st = SKK_OK;
        if (verify) {
            auto r = verify_main_identity(d->d, pl);
            rep["identity"] = identity_json(r);
            rep["hypothesis_V"] = hyp.h[4];
            if (!r.holds || !r.sign_matches) st = SKK_PROPERTY_FAILS;
        }
        put(report, rep);
        if (out) *out = new skk_diagram{F};
        return st;
    });
}

skk_status skk_hypotheses(const skk_diagram* e, const char* anchor, char** report) {
    SKK_REQUIRE(e);
    return guarded([&] {
        auto pl = anchor_of(e->d, anchor);
        auto rep = check_hypotheses(pl);
        json j = hypotheses_to_json(rep);
        j["placement"] = placement_to_json(pl);
        put(report, j);
        return rep.overall_I_to_V() ? SKK_OK : SKK_PROPERTY_FAILS;
    });
}

skk_status skk_hamel_goulden(const skk_diagram* d, const char* kind, int show_matrix, char** report) {
    SKK_REQUIRE(d);
    return guarded([&] {
        if (!is_connected(d->d)) throw InvalidInput("Hamel-Goulden needs a connected diagram");
        auto dec = decompose(d->d, parse_kind(kind ? kind : "nw"));
        auto hg = hamel_goulden(d->d, dec);
        bool ok = hg.det == skew_schur(d->d);
        json j{{"kind", kind_name(dec.kind)}, {"size", hg.matrix.size()}, {"det_equals_s_D", ok}};
        json iv = json::array();
        for (auto [p, q] : dec.intervals) iv.push_back({p, q});
        j["intervals"] = iv;
        if (show_matrix) {
            json m = json::array();
            for (auto& row : hg.entries) {
                json r = json::array();
                for (auto& s : row) r.push_back(strip_interval_to_json(s));
                m.push_back(r);
            }
            j["matrix"] = m;
        }
        j["det"] = schur_to_json(hg.det);
        put(report, j);
        return ok ? SKK_OK : SKK_PROPERTY_FAILS;
    });
}

skk_status skk_sylvester(const char* matrix_json, const char* subset_json, char** report) {
    SKK_REQUIRE(matrix_json);
    return guarded([&] {
        json mj = json::parse(matrix_json);
        if (!mj.is_array() || mj.empty()) throw InvalidInput("matrix must be a nonempty array of rows");
        Matrix<long long> m;
        for (auto& row : mj) {
            if (!row.is_array() || row.size() != mj.size()) throw InvalidInput("matrix must be square");
            std::vector<long long> r;
            for (auto& x : row) {
                if (!x.is_number_integer()) throw InvalidInput("matrix entries must be integers");
                r.push_back(x.get<long long>());
            }
            m.push_back(std::move(r));
        }
        std::vector<int> s;
        if (subset_json && *subset_json) {
            json sj = json::parse(subset_json);
            if (!sj.is_array()) throw InvalidInput("subset must be an array of indices");
            for (auto& x : sj) s.push_back(x.get<int>());
        }
        std::function<bool(const long long&)> is0 = [](const long long& x) { return x == 0; };
        bool ok = sylvester_check<long long>(m, s, 0LL, 1LL, is0);
        put(report, json{{"holds", ok}, {"det", det_int(m)}});
        return ok ? SKK_OK : SKK_PROPERTY_FAILS;
    });
}

skk_status skk_classes(int max_cells, int workers, char** report) {
    return guarded([&] {
        if (max_cells < 1) throw InvalidInput("max cells must be positive");
        auto classes = classify(max_cells, workers);
        json list = json::array();
        json findings = json::array();
        for (auto& cls : classes) {
            list.push_back(class_to_json(cls));
            if (!is_power_of_two(cls.members.size()))
                findings.push_back({{"kind", "class size not a power of two"}, {"class", class_to_json(cls)}});
            auto chk = check_class_invariants(cls);
            if (!chk.ok) findings.push_back({{"kind", "invariant mismatch"}, {"detail", chk.detail}});
        }
        put(report, json{{"max_cells", max_cells}, {"classes", list}, {"findings", findings}});
        return findings.empty() ? SKK_OK : SKK_PROPERTY_FAILS;
    });
}

skk_status skk_verify_suite(const char* suite, char** report) {
    return guarded([&] {
        std::string name = suite ? suite : "paper-examples";
        if (name != "paper-examples") throw InvalidInput("unknown suite '" + name + "'");
        json cases = json::array();
        bool all = true;
        for (auto& c : run_example_suite()) {
            all = all && c.pass;
            cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        put(report, json{{"suite", name}, {"pass", all}, {"cases", cases}});
        return all ? SKK_OK : SKK_PROPERTY_FAILS;
    });
}

skk_status skk_factorizations(const skk_diagram* f, int max_cells, char** report) {
    SKK_REQUIRE(f);
    return guarded([&] {
        auto rep = factorizations(f->d, max_cells > 0 ? max_cells : 14);
        auto row = [](const Factorization& x) {
            return json{{"D", diagram_to_json(x.D)},
                        {"W", diagram_to_json(x.W)},
                        {"E", diagram_to_json(x.E)},
                        {"trivial", x.trivial},
                        {"w_diagonals", x.w_diagonals},
                        {"e_diagonals", x.e_diagonals}};
        };
        json all = json::array(), minimal = json::array();
        for (auto& x : rep.all) all.push_back(row(x));
        for (auto& x : rep.minimal) minimal.push_back(row(x));
        put(report, json{{"all", all}, {"minimal", minimal}});
        return SKK_OK;
    });
}

}  // extern "C"
