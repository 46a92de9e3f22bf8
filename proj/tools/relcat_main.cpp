#include <CLI11.hpp>
#include <json.hpp>

#include "relcat/classify.hpp"
#include "relcat/harness.hpp"
#include "relcat/hocolim_cat.hpp"

#include <fstream>
#include <iostream>

using namespace relcat;
using nlohmann::ordered_json;

namespace {

int fail(bool as_json, const std::string& kind, const std::string& what) {
    if (as_json) {
        ordered_json j;
        j["error"]["kind"] = kind;
        j["error"]["message"] = what;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << what << "\n";
    }
    return 2;
}

ordered_json bisimplicial_json(const TruncatedBisimplicialSet& w) {
    ordered_json j;
    j["outer_bound"] = w.outer_bound;
    ordered_json levels = ordered_json::array();
    for (int n = 0; n <= w.outer_bound; ++n) {
        ordered_json l;
        l["n"] = n;
        ordered_json counts = ordered_json::array();
        ordered_json nondegenerate = ordered_json::array();
        for (int k = 0; k <= w.level[n].bound(); ++k) {
            counts.push_back(w.level[n].count(k));
            nondegenerate.push_back(w.level[n].nondegenerate_count(k));
        }
        l["simplices"] = counts;
        l["nondegenerate"] = nondegenerate;
        ordered_json degrees = ordered_json::array();
        for (int k = 0; k <= w.level[n].bound(); ++k) {
            ordered_json deg = ordered_json::array();
            for (int s = 0; s < w.level[n].count(k); ++s) {
                ordered_json e;
                e["key"] = w.level[n].key(k, s);
                if (k > 0) {
                    ordered_json faces = ordered_json::array();
                    for (int i = 0; i <= k; ++i) faces.push_back(w.level[n].face(k, s, i));
                    e["faces"] = faces;
                }
                e["degenerate"] = w.level[n].is_degenerate(k, s);
                deg.push_back(e);
            }
            degrees.push_back(deg);
        }
        l["degrees"] = degrees;
        levels.push_back(l);
    }
    j["levels"] = levels;
    return j;
}

InsertDirection parse_direction(const std::string& s) {
    if (s == "forward") return InsertDirection::Forward;
    if (s == "paper-literal") return InsertDirection::PaperLiteral;
    throw Error("insert-direction must be forward or paper-literal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite relative categories: classification diagrams, gluings, certificates"};
    app.require_subcommand(1);

    Bounds bounds = Bounds::defaults();
    bool as_json = false;

    std::string file;
    std::string emit;
    std::string direction = "forward";

    auto* validate = app.add_subcommand("validate", "check a category file");
    validate->add_option("file", file)->required();
    validate->add_flag("--json", as_json);

    int lcc_n = bounds.n_outer, lcc_m = bounds.n_inner;
    auto* lcc = app.add_subcommand("lcc", "emit the classification diagram of a category");
    lcc->add_option("file", file)->required();
    lcc->add_option("--n", lcc_n, "outer truncation");
    lcc->add_option("--m", lcc_m, "inner truncation");
    lcc->add_option("--emit", emit, "output path (stdout when omitted)");
    lcc->add_flag("--json", as_json);

    int segal_n = 2, segal_m = 2;
    auto* segal = app.add_subcommand("segal", "check strictness of a Segal comparison");
    segal->add_option("file", file)->required();
    segal->add_option("--n", segal_n, "which Segal map (builds outer truncation n)");
    segal->add_option("--m", segal_m, "inner truncation");
    segal->add_flag("--json", as_json);

    int baut_k = bounds.hdeg;
    auto* baut = app.add_subcommand("baut", "compare classification levels with the automorphism model");
    baut->add_option("file", file)->required();
    baut->add_option("--hdeg", baut_k, "homology degree bound");
    baut->add_flag("--json", as_json);

    auto* hoco = app.add_subcommand("hocolim", "glue a diagram of relative categories");
    hoco->add_option("diagram", file)->required();
    hoco->add_option("--emit", emit, "write the glued category to this path");
    hoco->add_option("--insert-direction", direction)->check(CLI::IsMember({"forward", "paper-literal"}));
    hoco->add_option("--max-word-length", bounds.max_word_length);
    hoco->add_option("--max-completion-passes", bounds.max_completion_passes);
    hoco->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "certify the gluing against the levelwise homotopy colimit");
    verify->add_option("diagram", file)->required();
    verify->add_option("--n", bounds.n_outer, "outer truncation");
    verify->add_option("--m", bounds.n_inner, "inner truncation");
    verify->add_option("--hdeg", bounds.hdeg, "homology degree bound");
    verify->add_option("--insert-direction", direction)->check(CLI::IsMember({"forward", "paper-literal"}));
    verify->add_option("--max-word-length", bounds.max_word_length);
    verify->add_option("--max-completion-passes", bounds.max_completion_passes);
    verify->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            RelativeCategory rc = parse_relcat(file);
            if (as_json) {
                ordered_json j;
                j["file"] = file;
                j["valid"] = true;
                j["objects"] = rc.cat.num_objects();
                j["morphisms"] = rc.cat.num_morphisms();
                int marked = 0;
                for (bool b : rc.marked) marked += b;
                j["marked"] = marked;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << file << ": valid (" << rc.cat.num_objects() << " objects, "
                          << rc.cat.num_morphisms() << " morphisms)\n";
            }
            return 0;
        }
        if (*lcc) {
            RelativeCategory rc = parse_relcat(file);
            ClassificationDiagram cd = classification_diagram(rc, file, lcc_n, lcc_m, bounds);
            ordered_json j = bisimplicial_json(cd.w);
            j["source"] = file;
            if (emit.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(emit);
                if (!out) throw Error("cannot write " + emit);
                out << j.dump(2) << "\n";
                std::cout << "wrote " << emit << "\n";
            }
            return 0;
        }
        if (*segal) {
            RelativeCategory rc = parse_relcat(file);
            ClassificationDiagram cd = classification_diagram(rc, file, segal_n, segal_m, bounds);
            SegalReport rep = segal_check(cd.w, segal_n);
            if (as_json) {
                ordered_json j;
                j["file"] = file;
                j["n"] = rep.n;
                j["strict_iso"] = rep.strict_iso;
                j["level_counts"] = rep.level_counts;
                j["product_counts"] = rep.product_counts;
                if (!rep.strict_iso) j["counterexample"] = rep.counterexample;
                std::cout << j.dump(2) << "\n";
            } else if (rep.strict_iso) {
                std::cout << file << ": Segal map n=" << rep.n
                          << " is a strict degreewise isomorphism\n";
            } else {
                std::cout << file << ": Segal map n=" << rep.n << " FAILS: " << rep.counterexample
                          << "\n";
            }
            return rep.strict_iso ? 0 : 1;
        }
        if (*baut) {
            RelativeCategory rc = parse_relcat(file);
            Bounds b = bounds;
            if (b.n_inner < baut_k + 1) b.n_inner = baut_k + 1;
            BautReport rep = baut_certify(rc, file, baut_k, b);
            if (as_json) {
                ordered_json j;
                j["file"] = file;
                j["hdeg"] = baut_k;
                ordered_json levels = ordered_json::array();
                for (const auto& lr : rep.levels) {
                    ordered_json e;
                    e["level"] = lr.level;
                    e["pi0_classification"] = lr.pi0_lc;
                    e["pi0_model"] = lr.pi0_model;
                    ordered_json hl = ordered_json::array(), hm = ordered_json::array();
                    for (const auto& g : lr.h_lc) hl.push_back(homology_to_json(g));
                    for (const auto& g : lr.h_model) hm.push_back(homology_to_json(g));
                    e["h_classification"] = hl;
                    e["h_model"] = hm;
                    e["pass"] = lr.pass;
                    levels.push_back(e);
                }
                j["levels"] = levels;
                j["pass"] = rep.pass;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& lr : rep.levels) {
                    std::cout << file << ": level " << lr.level << " pi0 " << lr.pi0_lc << "/"
                              << lr.pi0_model << (lr.pass ? " PASS" : " FAIL") << "\n";
                    for (size_t k = 0; k < lr.h_lc.size(); ++k)
                        std::cout << "  H_" << k << ": " << lr.h_lc[k].to_string() << " vs "
                                  << lr.h_model[k].to_string() << "\n";
                }
            }
            return rep.pass ? 0 : 1;
        }
        if (*hoco) {
            DiagramOfRelCats d = parse_diagram(file);
            HocolimCategory h = hocolim_category(d, bounds, parse_direction(direction));
            if (!emit.empty()) {
                std::ofstream out(emit);
                if (!out) throw Error("cannot write " + emit);
                out << serialize_relcat(h.relcat);
            }
            int marked = 0;
            for (bool b : h.relcat.marked) marked += b;
            if (as_json) {
                ordered_json j;
                j["diagram"] = file;
                j["objects"] = h.relcat.cat.num_objects();
                j["morphisms"] = h.relcat.cat.num_morphisms();
                j["marked"] = marked;
                j["confluent"] = h.confluence.confluent;
                j["completion_passes"] = h.confluence.passes_used;
                if (!emit.empty()) j["emitted"] = emit;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << file << ": glued category has " << h.relcat.cat.num_objects()
                          << " objects, " << h.relcat.cat.num_morphisms() << " morphisms ("
                          << marked << " marked)";
                if (!emit.empty()) std::cout << "; wrote " << emit;
                std::cout << "\n";
            }
            return 0;
        }
        if (*verify) {
            DiagramOfRelCats d = parse_diagram(file);
            VerificationReport rep = verify_theorem(d, file, bounds, parse_direction(direction));
            if (as_json) {
                std::cout << rep.to_json().dump(2) << "\n";
            } else {
                std::cout << file << ": levels";
                for (const auto& lc : rep.levels)
                    std::cout << " " << lc.level << (lc.cert.pass ? ":pass" : ":FAIL");
                std::cout << (rep.certificates_pass ? " => PASS" : " => FAIL") << "\n";
            }
            return rep.certificates_pass ? 0 : 1;
        }
    } catch (const ParseError& e) {
        return fail(as_json, "parse", e.what());
    } catch (const BudgetError& e) {
        return fail(as_json, "budget", e.what());
    } catch (const NonConfluentError& e) {
        return fail(as_json, "rewriting", e.what());
    } catch (const Error& e) {
        return fail(as_json, "invalid", e.what());
    } catch (const std::exception& e) {
        return fail(as_json, "internal", e.what());
    }
    return 2;
}
