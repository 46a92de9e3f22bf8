/* Acceptance suite: one line per criterion, exit 0 only if all pass.
 *
 *   A1  Segal strictness on every bundled category, n = 2 and 3
 *   A2  automorphism-decomposition certificate, levels 0 and 1, torsion seen
 *   A3  gluing vs levelwise homotopy colimit on five diagrams
 *   A4  construction laws: duplicates, composite connectors, marking fixpoint,
 *       variance mirroring
 *   A5  integer linear algebra against independent oracles
 *   A6  degenerate inputs, corrupted files, direction-flip invariance
 */

#include "oracles.hpp"
#include "relcat/classify.hpp"
#include "relcat/harness.hpp"
#include "relcat/hocolim_cat.hpp"
#include "relcat/homology.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace relcat;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Criterion {
    std::string name;
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count() /
           1000.0;
}

const char* kCategoryFixtures[] = {
    "terminal.relcat",       "discrete2.relcat",      "arrow_marked.relcat",
    "arrow_unmarked.relcat", "zmod2.relcat",          "idempotent.relcat",
    "cofiber_source.relcat", "cofiber_target.relcat", "orbit_points.relcat",
    "pushout_apex.relcat"};

const char* kDiagramFixtures[] = {"terminal_index.diagram", "discrete2_index.diagram",
                                  "pushout_points.diagram", "cofiber.diagram",
                                  "orbit_coequalizer.diagram"};

int run_cli(const std::string& args) {
    std::string cmd = std::string(RELCAT_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    Bounds base = Bounds::defaults();

    {  // A1: Segal strictness, n = 2 and 3, inner truncation 2, < 10 s per fixture
        Criterion c{"A1 segal-strictness"};
        for (const char* name : kCategoryFixtures) {
            auto t0 = std::chrono::steady_clock::now();
            RelativeCategory rc = parse_relcat(fixture(name));
            ClassificationDiagram cd = classification_diagram(rc, name, 3, 2, base);
            for (int n = 2; n <= 3; ++n) {
                SegalReport rep = segal_check(cd.w, n);
                c.require(rep.strict_iso, std::string(name) + " n=" + std::to_string(n) + ": " +
                                              rep.counterexample);
            }
            double dt = seconds_since(t0);
            c.require(dt < 10.0, std::string(name) + " took " + std::to_string(dt) + "s");
        }
        results.push_back(std::move(c));
    }

    {  // A2: decomposition certificate at levels 0 and 1, hdeg 3, torsion on both sides
        Criterion c{"A2 automorphism-decomposition"};
        for (const char* name : kCategoryFixtures) {
            auto t0 = std::chrono::steady_clock::now();
            RelativeCategory rc = parse_relcat(fixture(name));
            BautReport rep = baut_certify(rc, name, 3, base);
            c.require(rep.pass, std::string(name) + " certificate failed");
            if (std::string(name) == "zmod2.relcat") {
                for (const auto& lr : rep.levels) {
                    auto has2 = [](const HomologyGroup& g) {
                        return g.torsion.size() == 1 && g.torsion[0] == BigInt(2);
                    };
                    c.require(has2(lr.h_lc[1]) && has2(lr.h_model[1]),
                              "zmod2 torsion missing in H1");
                    c.require(has2(lr.h_lc[3]) && has2(lr.h_model[3]),
                              "zmod2 torsion missing in H3");
                }
            }
            double dt = seconds_since(t0);
            c.require(dt < 30.0, std::string(name) + " took " + std::to_string(dt) + "s");
        }
        results.push_back(std::move(c));
    }

    {  // A3: main comparison on five diagrams, outer levels <= 2, hdeg 3
        Criterion c{"A3 gluing-vs-hocolim"};
        for (const char* name : kDiagramFixtures) {
            auto t0 = std::chrono::steady_clock::now();
            DiagramOfRelCats d = parse_diagram(fixture(name));
            VerificationReport rep = verify_theorem(d, name, base);
            c.require(rep.certificates_pass, std::string(name) + " failed");
            for (const auto& lc : rep.levels) {
                c.require(lc.cert.pi0_bijection,
                          std::string(name) + " level " + std::to_string(lc.level) + " pi0");
                for (const auto& h : lc.cert.cone_homology)
                    c.require(h.is_trivial(), std::string(name) + " level " +
                                                  std::to_string(lc.level) + " cone homology");
            }
            // the certified equivalences carry visible content: the swap
            // coequalizer is a circle, the discrete union keeps its torsion
            if (std::string(name) == "orbit_coequalizer.diagram")
                c.require(rep.baut_colimit.levels[0].h_lc[1].rank == 1,
                          "orbit colimit lost its loop");
            if (std::string(name) == "discrete2_index.diagram")
                c.require(rep.baut_colimit.levels[0].h_lc[1].torsion ==
                              std::vector<BigInt>{BigInt(2)},
                          "discrete union lost its torsion");
            double dt = seconds_since(t0);
            c.require(dt < 60.0, std::string(name) + " took " + std::to_string(dt) + "s");
        }
        results.push_back(std::move(c));
    }

    {  // A4: construction laws
        Criterion c{"A4 construction-laws"};
        // (a) no duplicates: gluing over the terminal index adds nothing; the
        // site connections are the existing marked morphisms
        {
            DiagramOfRelCats d;
            RelativeCategory m = parse_relcat(fixture("arrow_marked.relcat"));
            d.index = parse_relcat(fixture("terminal.relcat")).cat;
            d.object_labels = {"pt"};
            d.at_object = {m};
            d.at_arrow = {RelFunctor::identity(m.cat)};
            HocolimCategory h = hocolim_category(d, base);
            c.require(h.relcat.cat.num_morphisms() == m.cat.num_morphisms(),
                      "terminal gluing added morphisms");
            for (const auto& s : h.sites[0]) {
                c.require(s.existing_within_fiber, "terminal site not recognized as existing");
                c.require(h.site_connection(d, s) == h.injections[0].mor_map[s.witness],
                          "site connection differs from the existing marked morphism");
            }
        }
        // (b) composite identification on the two-step diagram
        {
            DiagramOfRelCats d = parse_diagram(fixture("twostep.diagram"));
            HocolimCategory h = hocolim_category(d, base);
            int s = d.index.morphism_index("s");
            int t = d.index.morphism_index("t");
            int ts = d.index.morphism_index("ts");
            const auto& fiber_a = d.at_object[d.index.morphism(s).src];
            for (int x = 0; x < fiber_a.cat.num_objects(); ++x) {
                int fx = d.at_arrow[s].obj_map[x];
                int hop = h.relcat.cat.compose(h.connector[t][fx], h.connector[s][x]);
                c.require(hop == h.connector[ts][x], "two-step connector mismatch");
            }
        }
        // (c) marking fixpoint on every bundled diagram
        for (const char* name : kDiagramFixtures) {
            DiagramOfRelCats d = parse_diagram(fixture(name));
            HocolimCategory h = hocolim_category(d, base);
            c.require(two_out_of_three_closure(h.relcat).marked == h.relcat.marked,
                      std::string(name) + " marking is not a fixpoint");
        }
        // (d) variance mirroring
        {
            DiagramOfRelCats d = parse_diagram(fixture("variance_demo.diagram"));
            int l = d.index.morphism_index("l");
            auto left = insertion_sites(d, l);
            DiagramOfRelCats dr = d;
            dr.variance = Variance::Right;
            auto right = insertion_sites(dr, l);
            const auto& tgt = d.at_object[d.index.morphism(l).tgt];
            std::set<std::string> lt, rt;
            for (const auto& s : left) lt.insert(tgt.cat.object_name(s.tgt_object));
            for (const auto& s : right) rt.insert(tgt.cat.object_name(s.tgt_object));
            c.require(lt == std::set<std::string>{"n0", "n1"}, "left sites wrong");
            c.require(rt == std::set<std::string>{"n0"}, "right sites wrong");
            for (const auto& s : left)
                c.require(tgt.cat.morphism(s.witness).src == dr.at_arrow[l].obj_map[s.src_object],
                          "left witness direction");
            for (const auto& s : right)
                c.require(tgt.cat.morphism(s.witness).tgt == dr.at_arrow[l].obj_map[s.src_object],
                          "right witness direction");
        }
        results.push_back(std::move(c));
    }

    {  // A5: linear-algebra oracles
        Criterion c{"A5 homology-oracles"};
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int trial = 0; trial < 100; ++trial) {
            int r = 1 + static_cast<int>(rng() % 5);
            int cols = 1 + static_cast<int>(rng() % 7);
            IntMatrix a(r, cols);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < cols; ++j) a.at(i, j) = BigInt(entry(rng));
            SmithResult s = smith_normal_form(a);  // throws if U*D*V != A
            c.require(s.rank == oracles::rational_rank(a), "rank oracle disagrees");
            for (int t = 1; t < s.rank; ++t)
                c.require((s.diagonal[t] % s.diagonal[t - 1]).is_zero(), "divisibility chain");
        }
        // recomputed homology of the point, the circle, the group
        RelativeCategory pt = parse_relcat(fixture("terminal.relcat"));
        ChainComplex cpt = normalized_chains(nerve(pt.cat, 4, base), 4);
        c.require(homology(cpt, 0).rank == 1 && homology(cpt, 0).torsion.empty(), "H0(point)");
        for (int k = 1; k <= 3; ++k) c.require(homology(cpt, k).is_trivial(), "Hk(point)");

        TruncatedSimplicialSet circle(2);
        int v = circle.add_simplex(0, "v", {});
        int sv = circle.add_simplex(1, "sv", {v, v});
        int e = circle.add_simplex(1, "E", {v, v});
        int ssv = circle.add_simplex(2, "ssv", {sv, sv, sv});
        int s0e = circle.add_simplex(2, "s0E", {e, e, sv});
        int s1e = circle.add_simplex(2, "s1E", {sv, e, e});
        circle.set_degeneracies(0, v, {sv});
        circle.set_degeneracies(1, sv, {ssv, ssv});
        circle.set_degeneracies(1, e, {s0e, s1e});
        circle.finalize();
        c.require(circle.audit().empty(), "circle audit");
        ChainComplex cc = normalized_chains(circle, 2);
        c.require(homology(cc, 0).rank == 1, "H0(circle)");
        c.require(homology(cc, 1).rank == 1 && homology(cc, 1).torsion.empty(), "H1(circle)");

        RelativeCategory z2 = parse_relcat(fixture("zmod2.relcat"));
        ChainComplex cz = normalized_chains(nerve(z2.cat, 4, base), 4);
        c.require(homology(cz, 0).rank == 1, "H0(group)");
        c.require(homology(cz, 1).torsion == std::vector<BigInt>{BigInt(2)}, "H1(group)");
        c.require(homology(cz, 2).is_trivial(), "H2(group)");
        c.require(homology(cz, 3).torsion == std::vector<BigInt>{BigInt(2)}, "H3(group)");
        results.push_back(std::move(c));
    }

    {  // A6: robustness and direction invariance
        Criterion c{"A6 robustness"};
        // empty diagram over a discrete index: disjoint union certified
        {
            DiagramOfRelCats d = parse_diagram(fixture("empty_discrete.diagram"));
            HocolimCategory h = hocolim_category(d, base);
            int sum_obj = 0, sum_mor = 0;
            for (const auto& f : d.at_object) {
                sum_obj += f.cat.num_objects();
                sum_mor += f.cat.num_morphisms();
            }
            c.require(h.relcat.cat.num_objects() == sum_obj, "union objects");
            c.require(h.relcat.cat.num_morphisms() == sum_mor, "union morphisms");
            VerificationReport rep = verify_theorem(d, "empty_discrete.diagram", base);
            c.require(rep.certificates_pass, "empty diagram certificate failed");
        }
        // corrupted fixtures: structured errors in-process, nonzero CLI exits
        {
            bool threw = false;
            try {
                parse_relcat(fixture("corrupt/bad_parse.relcat"));
            } catch (const ParseError& e) {
                threw = e.line > 0;
            }
            c.require(threw, "parse error not structured");
            c.require(run_cli("validate " + fixture("corrupt/bad_parse.relcat") + " --json") == 2,
                      "CLI exit for parse error");
            c.require(run_cli("validate " + fixture("corrupt/bad_marking.relcat")) == 2,
                      "CLI exit for marking error");
            c.require(run_cli("verify " + fixture("corrupt/bad_functor.diagram") + " --json") == 2,
                      "CLI exit for functor error");
            c.require(run_cli("validate " + fixture("terminal.relcat")) == 0,
                      "CLI exit for valid file");
            c.require(run_cli("verify " + fixture("pushout_points.diagram") + " --json") == 0,
                      "CLI exit for passing verification");
            // failing certificate (not a parse error) must exit 1: a parallel
            // marked pair defeats the decomposition comparison
            {
                std::string tmp = "/tmp/relcat_parallel_pair.relcat";
                std::FILE* out = std::fopen(tmp.c_str(), "w");
                c.require(out != nullptr, "cannot write temp fixture");
                if (out) {
                    std::fputs("[objects]\nx\ny\n[morphisms]\nf : x -> y\ng : x -> y\n[weq]\nf\ng\n",
                               out);
                    std::fclose(out);
                    c.require(run_cli("baut " + tmp + " --hdeg 3") == 1,
                              "CLI exit for failing certificate");
                }
            }
        }
        // direction flip: identical verdicts on the full diagram suite
        for (const char* name : kDiagramFixtures) {
            DiagramOfRelCats d = parse_diagram(fixture(name));
            VerificationReport fwd = verify_theorem(d, name, base, InsertDirection::Forward);
            VerificationReport lit = verify_theorem(d, name, base, InsertDirection::PaperLiteral);
            c.require(fwd.certificates_pass == lit.certificates_pass,
                      std::string(name) + " direction changes the top-level verdict");
            c.require(fwd.levels.size() == lit.levels.size(), "level counts differ");
            for (size_t i = 0; i < fwd.levels.size(); ++i) {
                c.require(fwd.levels[i].cert.pass == lit.levels[i].cert.pass,
                          std::string(name) + " level verdict differs");
                c.require(fwd.levels[i].cert.pi0_bijection == lit.levels[i].cert.pi0_bijection,
                          std::string(name) + " pi0 verdict differs");
            }
            c.require(fwd.segal_colimit.size() == lit.segal_colimit.size(), "segal counts differ");
            for (size_t i = 0; i < fwd.segal_colimit.size(); ++i)
                c.require(fwd.segal_colimit[i].strict_iso == lit.segal_colimit[i].strict_iso,
                          std::string(name) + " segal verdict differs");
            c.require(fwd.baut_colimit.pass == lit.baut_colimit.pass,
                      std::string(name) + " baut verdict differs");
        }
        results.push_back(std::move(c));
    }

    bool all = true;
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.pass) std::cout << "  [" << c.detail.str() << "]";
        std::cout << "\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
