#include "relcat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace relcat {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '/' || c == '.' || c == '*' || c == '+' || c == '-' || c == '@' ||
                  c == ':';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string dir_of(const std::string& path) {
    size_t pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

RelativeCategory parse_relcat_text(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    enum Section { None, Objects, Morphisms, Compose, Weq } section = None;

    std::vector<std::string> objects;
    struct MorDecl {
        std::string name, src, tgt;
        int line;
    };
    std::vector<MorDecl> mors;
    struct CompDecl {
        std::string g, f, h;
        int line;
    };
    std::vector<CompDecl> comps;
    std::vector<std::pair<std::string, int>> weq;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "[objects]") {
            section = Objects;
            continue;
        }
        if (toks[0] == "[morphisms]") {
            section = Morphisms;
            continue;
        }
        if (toks[0] == "[compose]") {
            section = Compose;
            continue;
        }
        if (toks[0] == "[weq]") {
            section = Weq;
            continue;
        }
        switch (section) {
            case Objects:
                if (toks.size() != 1 || !valid_name(toks[0]))
                    throw ParseError(label, lineno, "expected one object identifier");
                objects.push_back(toks[0]);
                break;
            case Morphisms:
                if (toks.size() != 5 || toks[1] != ":" || toks[3] != "->" || !valid_name(toks[0]))
                    throw ParseError(label, lineno, "expected `name : src -> tgt`");
                mors.push_back({toks[0], toks[2], toks[4], lineno});
                break;
            case Compose:
                if (toks.size() != 5 || toks[1] != "." || toks[3] != "=")
                    throw ParseError(label, lineno, "expected `g . f = h`");
                comps.push_back({toks[0], toks[2], toks[4], lineno});
                break;
            case Weq:
                if (toks.size() != 1) throw ParseError(label, lineno, "expected one morphism name");
                weq.push_back({toks[0], lineno});
                break;
            case None:
                throw ParseError(label, lineno, "content before any section header");
        }
    }
    if (objects.empty()) throw ParseError(label, 0, "no [objects] section or empty category");

    std::set<std::string> objset(objects.begin(), objects.end());
    if (objset.size() != objects.size()) throw ParseError(label, 0, "duplicate object identifier");

    // morphism list: declared ones plus identities "id:<obj>"
    std::vector<MorRec> recs;
    std::map<std::string, int> mor_id;
    std::map<std::string, int> obj_id;
    for (size_t i = 0; i < objects.size(); ++i) obj_id[objects[i]] = static_cast<int>(i);
    auto add_mor = [&](const std::string& name, const std::string& src, const std::string& tgt,
                       int lineno2) {
        if (!obj_id.count(src)) throw ParseError(label, lineno2, "unknown object " + src);
        if (!obj_id.count(tgt)) throw ParseError(label, lineno2, "unknown object " + tgt);
        if (mor_id.count(name)) throw ParseError(label, lineno2, "duplicate morphism " + name);
        mor_id[name] = static_cast<int>(recs.size());
        recs.push_back({name, obj_id[src], obj_id[tgt]});
    };
    std::vector<std::string> identity_names;
    for (const auto& o : objects) {
        add_mor("id:" + o, o, o, 0);
        identity_names.push_back("id:" + o);
    }
    for (const auto& m : mors) add_mor(m.name, m.src, m.tgt, m.line);

    std::vector<std::array<int, 3>> entries;
    for (const auto& cdecl : comps) {
        auto need = [&](const std::string& n) {
            auto it = mor_id.find(n);
            if (it == mor_id.end())
                throw ParseError(label, cdecl.line, "unknown morphism " + n + " in [compose]");
            return it->second;
        };
        entries.push_back({need(cdecl.g), need(cdecl.f), need(cdecl.h)});
    }

    RelativeCategory rc;
    rc.cat = FinCategory::build(objects, recs, identity_names, entries);
    ValidationReport catrep = validate_category(rc.cat);
    if (!catrep.ok) throw Error(label + ": invalid category: " + catrep.summary());

    rc.marked.assign(rc.cat.num_morphisms(), false);
    for (int o = 0; o < rc.cat.num_objects(); ++o) rc.marked[rc.cat.identity(o)] = true;
    for (const auto& [name, lineno2] : weq) {
        int m = rc.cat.morphism_index(name);
        if (m < 0) throw ParseError(label, lineno2, "unknown morphism " + name + " in [weq]");
        rc.marked[m] = true;
    }
    ValidationReport relrep = validate_relative(rc);
    if (!relrep.ok) throw Error(label + ": invalid marking: " + relrep.summary());
    return rc;
}

RelativeCategory parse_relcat(const std::string& path) {
    return parse_relcat_text(read_file(path), path);
}

std::string serialize_relcat(const RelativeCategory& rc) {
    std::ostringstream out;
    out << "[objects]\n";
    for (int o = 0; o < rc.cat.num_objects(); ++o) out << rc.cat.object_name(o) << "\n";
    out << "[morphisms]\n";
    for (int m = 0; m < rc.cat.num_morphisms(); ++m) {
        if (rc.cat.is_identity(m)) continue;
        const auto& r = rc.cat.morphism(m);
        out << r.name << " : " << rc.cat.object_name(r.src) << " -> " << rc.cat.object_name(r.tgt)
            << "\n";
    }
    out << "[compose]\n";
    for (int g = 0; g < rc.cat.num_morphisms(); ++g) {
        if (rc.cat.is_identity(g)) continue;
        for (int f = 0; f < rc.cat.num_morphisms(); ++f) {
            if (rc.cat.is_identity(f)) continue;
            int h = rc.cat.compose(g, f);
            if (h < 0) continue;
            out << rc.cat.morphism(g).name << " . " << rc.cat.morphism(f).name << " = "
                << rc.cat.morphism(h).name << "\n";
        }
    }
    out << "[weq]\n";
    for (int m = 0; m < rc.cat.num_morphisms(); ++m)
        if (rc.marked[m] && !rc.cat.is_identity(m)) out << rc.cat.morphism(m).name << "\n";
    return out.str();
}

DiagramOfRelCats parse_diagram(const std::string& path) {
    std::string text = read_file(path);
    std::string base = dir_of(path);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::string index_path;
    std::vector<std::pair<std::string, std::string>> object_files;  // label -> path
    struct ArrowDecl {
        std::string name, src, tgt;
        std::vector<std::pair<std::string, std::string>> obj_map;
        std::vector<std::pair<std::string, std::string>> mor_map;
        int line = 0;
    };
    std::vector<ArrowDecl> arrows;
    std::string variance = "left";
    ArrowDecl* current = nullptr;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "[index]") {
            if (toks.size() != 2) throw ParseError(path, lineno, "expected `[index] <path>`");
            index_path = base + "/" + toks[1];
            current = nullptr;
        } else if (toks[0] == "[object") {
            if (toks.size() != 3 || toks[1].back() != ']')
                throw ParseError(path, lineno, "expected `[object a] <path>`");
            object_files.push_back({toks[1].substr(0, toks[1].size() - 1), base + "/" + toks[2]});
            current = nullptr;
        } else if (toks[0] == "[arrow") {
            if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->" || toks[5].back() != ']')
                throw ParseError(path, lineno, "expected `[arrow t : a -> b]`");
            ArrowDecl a;
            a.name = toks[1];
            a.src = toks[3];
            a.tgt = toks[5].substr(0, toks[5].size() - 1);
            a.line = lineno;
            arrows.push_back(a);
            current = &arrows.back();
        } else if (toks[0] == "variance") {
            if (toks.size() != 3 || toks[1] != "=" || (toks[2] != "left" && toks[2] != "right"))
                throw ParseError(path, lineno, "expected `variance = left|right`");
            variance = toks[2];
        } else if (toks[0] == "obj") {
            if (!current || toks.size() != 4 || toks[2] != "|->")
                throw ParseError(path, lineno, "expected `obj x |-> y` inside an [arrow] section");
            current->obj_map.push_back({toks[1], toks[3]});
        } else if (toks[0] == "mor") {
            if (!current || toks.size() != 4 || toks[2] != "|->")
                throw ParseError(path, lineno, "expected `mor f |-> g` inside an [arrow] section");
            current->mor_map.push_back({toks[1], toks[3]});
        } else {
            throw ParseError(path, lineno, "unrecognized line");
        }
    }
    if (index_path.empty()) throw ParseError(path, 0, "missing [index] section");

    DiagramOfRelCats d;
    d.index = parse_relcat(index_path).cat;
    d.variance = variance == "left" ? Variance::Left : Variance::Right;
    d.object_labels.resize(d.index.num_objects());
    d.at_object.resize(d.index.num_objects());
    std::vector<bool> have_object(d.index.num_objects(), false);
    for (auto& [label, file] : object_files) {
        int o = d.index.object_index(label);
        if (o < 0) throw Error(path + ": [object " + label + "] is not an index object");
        d.object_labels[o] = label;
        d.at_object[o] = parse_relcat(file);
        have_object[o] = true;
    }
    for (int o = 0; o < d.index.num_objects(); ++o)
        if (!have_object[o])
            throw Error(path + ": no category assigned to index object " + d.index.object_name(o));

    d.at_arrow.resize(d.index.num_morphisms());
    std::vector<bool> have_arrow(d.index.num_morphisms(), false);
    for (int m = 0; m < d.index.num_morphisms(); ++m)
        if (d.index.is_identity(m)) {
            d.at_arrow[m] = RelFunctor::identity(d.at_object[d.index.morphism(m).src].cat);
            have_arrow[m] = true;
        }
    for (const auto& a : arrows) {
        int u = d.index.morphism_index(a.name);
        if (u < 0) throw Error(path + ": [arrow " + a.name + "] is not an index morphism");
        int alpha = d.index.morphism(u).src;
        int beta = d.index.morphism(u).tgt;
        if (d.index.object_name(alpha) != a.src || d.index.object_name(beta) != a.tgt)
            throw Error(path + ": [arrow " + a.name + "] endpoints disagree with the index");
        const FinCategory& sc = d.at_object[alpha].cat;
        const FinCategory& tc = d.at_object[beta].cat;
        RelFunctor f;
        f.obj_map.assign(sc.num_objects(), -1);
        f.mor_map.assign(sc.num_morphisms(), -1);
        for (auto& [x, y] : a.obj_map) {
            int xi = sc.object_index(x);
            int yi = tc.object_index(y);
            if (xi < 0 || yi < 0)
                throw Error(path + ": arrow " + a.name + ": unknown object in `obj " + x + " |-> " +
                            y + "`");
            f.obj_map[xi] = yi;
        }
        for (int o = 0; o < sc.num_objects(); ++o)
            if (f.obj_map[o] < 0)
                throw Error(path + ": arrow " + a.name + ": no image for object " +
                            sc.object_name(o));
        for (int mi = 0; mi < sc.num_morphisms(); ++mi)
            if (sc.is_identity(mi)) f.mor_map[mi] = tc.identity(f.obj_map[sc.morphism(mi).src]);
        for (auto& [x, y] : a.mor_map) {
            int xi = sc.morphism_index(x);
            int yi = tc.morphism_index(y);
            if (xi < 0 || yi < 0)
                throw Error(path + ": arrow " + a.name + ": unknown morphism in `mor " + x +
                            " |-> " + y + "`");
            f.mor_map[xi] = yi;
        }
        for (int mi = 0; mi < sc.num_morphisms(); ++mi)
            if (f.mor_map[mi] < 0)
                throw Error(path + ": arrow " + a.name + ": no image for morphism " +
                            sc.morphism(mi).name);
        d.at_arrow[u] = std::move(f);
        have_arrow[u] = true;
    }
    for (int m = 0; m < d.index.num_morphisms(); ++m)
        if (!have_arrow[m])
            throw Error(path + ": no functor assigned to index arrow " + d.index.morphism(m).name);

    ValidationReport rep = validate_diagram(d);
    if (!rep.ok) throw Error(path + ": invalid diagram: " + rep.summary());
    return d;
}

namespace {

/* Everything the comparison needs, kept alive together. */
struct ForwardRun {
    HocolimCategory h;
    std::vector<ClassificationDiagram> fibers;
    ClassificationDiagram colimit;
    TruncatedBisimplicialSet bk;
    std::vector<SimplicialMap> comparison;  // per outer level, bk -> colimit
    std::vector<LevelCertificate> levels;
    std::vector<SegalReport> segal_colimit;
    std::vector<std::pair<std::string, bool>> segal_fibers;
    CoconeReport cocone;
    bool marking_is_fixpoint = false;
};

/* Comparison simplex: transport the inner chain down the index chain, linking
 * consecutive stages with connector ladders. Simplicial because the
 * connecting squares and composite identifications hold on the nose in the
 * colimit. */
SimplicialMap staircase_map(const DiagramOfRelCats& d, const HocolimCategory& h,
                            const std::vector<ClassificationDiagram>& fibers,
                            const ClassificationDiagram& lh, const SSetDiagram& level_diagram,
                            const TruncatedSimplicialSet& bk, int m) {
    const FinCategory& ix = d.index;
    SimplicialMap out;
    out.src = &bk;
    out.tgt = &lh.w.level[m];
    out.map.resize(bk.bound() + 1);

    const RelativeCategory& hpow = lh.powers[m];
    const RelativeCategory& hwe = lh.we_powers[m];

    // object of H^[m] for a fiber-power object transported by a fiber functor
    auto transported_object = [&](int alpha, const RelFunctor& transport, int beta,
                                  const std::string& obj_name) {
        std::vector<int> chain = power_object_chain(d.at_object[alpha], m, obj_name);
        std::vector<int> image;
        for (int v : chain)
            image.push_back(m == 0 ? h.injections[beta].obj_map[transport.obj_map[v]]
                                   : h.injections[beta].mor_map[transport.mor_map[v]]);
        return power_object_name_of(h.relcat, m, image);
    };
    for (int q = 0; q <= bk.bound(); ++q) {
        out.map[q].resize(bk.count(q));
        for (int s = 0; s < bk.count(q); ++s) {
            std::vector<int> chain;
            int start, inner;
            hocolim_decode(level_diagram, bk, q, s, chain, start, inner);
            int alpha0 = start;
            const ClassificationDiagram& lf = fibers[alpha0];

            if (q == 0) {
                std::string obj = lf.we_powers[m].cat.object_name(inner);
                RelFunctor ident = RelFunctor::identity(d.at_object[alpha0].cat);
                std::string image = transported_object(alpha0, ident, alpha0, obj);
                int idx = lh.w.level[m].index_of(0, image);
                if (idx < 0) throw Error("staircase_map: missing image vertex " + image);
                out.map[q][s] = idx;
                continue;
            }

            // decode the inner q-chain of we(M_alpha0^[m]) morphisms
            std::vector<int> inner_chain;  // we-cat morphism ids
            {
                std::string key = lf.w.level[m].key(q, inner);
                std::string cur;
                std::vector<std::string> names;
                for (char ch : key) {
                    if (ch == '&') {
                        names.push_back(cur);
                        cur.clear();
                    } else
                        cur += ch;
                }
                names.push_back(cur);
                if (static_cast<int>(names.size()) != q)
                    throw Error("staircase_map: could not decode inner chain " + key);
                for (auto& nm : names) {
                    int mi = lf.we_powers[m].cat.morphism_index(nm);
                    if (mi < 0) throw Error("staircase_map: unknown inner morphism " + nm);
                    inner_chain.push_back(mi);
                }
            }

            // cumulative transports P_0 = id, P_i = F(u_i) o P_{i-1}
            std::vector<RelFunctor> transports;
            transports.push_back(RelFunctor::identity(d.at_object[alpha0].cat));
            std::vector<int> stops{alpha0};
            for (int u : chain) {
                transports.push_back(compose_functors(d.at_arrow[u], transports.back()));
                stops.push_back(ix.morphism(u).tgt);
            }

            std::vector<std::string> image_names;  // we(H^[m]) morphism names
            for (int i = 1; i <= q; ++i) {
                int w_i = inner_chain[i - 1];
                int pw = lf.powers[m].cat.morphism_index(lf.we_powers[m].cat.morphism(w_i).name);
                const MorRec& wrec = lf.powers[m].cat.morphism(pw);
                std::string k_prev = lf.powers[m].cat.object_name(wrec.src);
                std::string k_next = lf.powers[m].cat.object_name(wrec.tgt);

                // eta ladder: conn(u_i) at P_{i-1}(K_{i-1})
                std::vector<int> verts = power_object_vertices(d.at_object[alpha0], m, k_prev);
                std::vector<int> eta_comps;
                for (int z : verts)
                    eta_comps.push_back(h.connector[chain[i - 1]][transports[i - 1].obj_map[z]]);
                std::string eta_src = transported_object(alpha0, transports[i - 1], stops[i - 1], k_prev);
                std::string eta_tgt = transported_object(alpha0, transports[i], stops[i], k_prev);
                int eta = power_morphism_index(h.relcat, hpow, eta_src, eta_tgt, eta_comps);
                if (eta < 0) throw Error("staircase_map: connector ladder missing");

                // transported inner ladder: iota(P_i(w_i))
                std::vector<int> w_comps = power_morphism_components(d.at_object[alpha0],
                                                                     lf.powers[m], pw);
                std::vector<int> tw_comps;
                for (int c : w_comps)
                    tw_comps.push_back(h.injections[stops[i]].mor_map[transports[i].mor_map[c]]);
                std::string tw_src = eta_tgt;
                std::string tw_tgt = transported_object(alpha0, transports[i], stops[i], k_next);
                int tw = power_morphism_index(h.relcat, hpow, tw_src, tw_tgt, tw_comps);
                if (tw < 0) throw Error("staircase_map: transported ladder missing");

                int g = hpow.cat.compose(tw, eta);
                if (g < 0) throw Error("staircase_map: stair does not compose");
                if (!hpow.marked[g]) throw Error("staircase_map: stair not marked");
                int g_we = hwe.cat.morphism_index(hpow.cat.morphism(g).name);
                if (g_we < 0) throw Error("staircase_map: stair missing from marked subcategory");
                image_names.push_back(hwe.cat.morphism(g_we).name);
            }
            int idx = lh.simplex_of_chain(m, q, image_names);
            if (idx < 0) throw Error("staircase_map: image chain missing from the nerve");
            out.map[q][s] = idx;
        }
    }
    std::string bad = out.audit();
    if (!bad.empty()) throw Error("staircase_map: comparison not simplicial: " + bad);
    return out;
}

ForwardRun run_forward(const DiagramOfRelCats& d, const Bounds& bounds) {
    ForwardRun run;
    run.h = hocolim_category(d, bounds, InsertDirection::Forward);

    for (int a = 0; a < d.index.num_objects(); ++a)
        run.fibers.push_back(classification_diagram(d.at_object[a], d.object_labels[a],
                                                    bounds.n_outer, bounds.n_inner, bounds));
    run.colimit = classification_diagram(run.h.relcat, "colimit", bounds.n_outer, bounds.n_inner,
                                         bounds);

    // bisimplicial diagram of the fibers
    BisimplicialDiagram bd;
    bd.index = &d.index;
    for (auto& f : run.fibers) bd.at_object.push_back(&f.w);
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        int a = d.index.morphism(u).src;
        int b = d.index.morphism(u).tgt;
        bd.at_arrow.push_back(classification_map(run.fibers[a], run.fibers[b], d.at_object[a],
                                                 d.at_object[b], d.at_arrow[u]));
    }
    run.bk = hocolim_bisimplicial(bd, bounds);
    run.bk.patch();

    for (int m = 0; m <= bounds.n_outer; ++m) {
        SSetDiagram level_diagram;
        level_diagram.index = &d.index;
        for (auto& f : run.fibers) level_diagram.at_object.push_back(&f.w.level[m]);
        for (int u = 0; u < d.index.num_morphisms(); ++u)
            level_diagram.at_arrow.push_back(bd.at_arrow[u][m]);
        run.comparison.push_back(staircase_map(d, run.h, run.fibers, run.colimit, level_diagram,
                                               run.bk.level[m], m));
        LevelCertificate lc;
        lc.level = m;
        lc.cert = we_certificate(run.comparison.back(), bounds.hdeg);
        for (int k = 0; k <= bounds.n_inner; ++k) {
            lc.hocolim_counts.push_back(run.bk.level[m].count(k));
            lc.colimit_counts.push_back(run.colimit.w.level[m].count(k));
        }
        run.levels.push_back(std::move(lc));
    }

    for (int n = 2; n <= bounds.n_outer; ++n)
        run.segal_colimit.push_back(segal_check(run.colimit.w, n));
    for (int a = 0; a < d.index.num_objects(); ++a)
        for (int n = 2; n <= bounds.n_outer; ++n) {
            SegalReport r = segal_check(run.fibers[a].w, n);
            run.segal_fibers.push_back(
                {d.object_labels[a] + ":n=" + std::to_string(n), r.strict_iso});
        }

    run.cocone = canonical_cocone(d, run.h);
    run.marking_is_fixpoint =
        two_out_of_three_closure(run.h.relcat).marked == run.h.relcat.marked;
    return run;
}

int count_marked(const RelativeCategory& rc) {
    int n = 0;
    for (bool b : rc.marked) n += b;
    return n;
}

int count_connectors(const DiagramOfRelCats& d, const HocolimCategory& h) {
    int n = 0;
    for (int u = 0; u < d.index.num_morphisms(); ++u)
        if (!d.index.is_identity(u)) n += static_cast<int>(h.connector[u].size());
    return n;
}

}  // namespace

nlohmann::ordered_json homology_to_json(const HomologyGroup& h) {
    nlohmann::ordered_json j;
    j["rank"] = h.rank;
    nlohmann::ordered_json tor = nlohmann::ordered_json::array();
    for (const auto& t : h.torsion) tor.push_back(t.to_string());
    j["torsion"] = tor;
    return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "relcat verify";
    j["diagram"] = diagram_path;
    j["direction"] = direction == InsertDirection::Forward ? "forward" : "paper-literal";
    j["note"] =
        "certified map runs from the levelwise homotopy colimit into the classification "
        "diagram of the glued category; certificates are pi0 bijections plus mapping-cone "
        "homology through the stated degree (a necessary condition at this truncation)";
    nlohmann::ordered_json jb;
    jb["n_outer"] = bounds.n_outer;
    jb["n_inner"] = bounds.n_inner;
    jb["hdeg"] = bounds.hdeg;
    jb["max_word_length"] = bounds.max_word_length;
    jb["max_completion_passes"] = bounds.max_completion_passes;
    jb["simplex_budget"] = bounds.simplex_budget;
    j["bounds"] = jb;
    nlohmann::ordered_json jc;
    jc["objects"] = colimit_objects;
    jc["morphisms"] = colimit_morphisms;
    jc["marked"] = colimit_marked;
    jc["connectors"] = connectors;
    jc["confluent"] = confluent;
    jc["marking_two_out_of_three_fixpoint"] = marking_is_fixpoint;
    jc["injections_valid"] = cocone.injections_valid;
    jc["squares_commute_up_to_connectors"] = cocone.squares_commute_up_to_connectors;
    jc["cocone_on_the_nose"] = cocone.on_the_nose;
    j["colimit"] = jc;
    nlohmann::ordered_json jl = nlohmann::ordered_json::array();
    for (const auto& lc : levels) {
        nlohmann::ordered_json e;
        e["level"] = lc.level;
        e["hocolim_simplices"] = lc.hocolim_counts;
        e["colimit_simplices"] = lc.colimit_counts;
        e["pi0_hocolim"] = lc.cert.pi0_src;
        e["pi0_colimit"] = lc.cert.pi0_tgt;
        e["pi0_bijection"] = lc.cert.pi0_bijection;
        nlohmann::ordered_json cones = nlohmann::ordered_json::array();
        for (size_t k = 0; k < lc.cert.cone_homology.size(); ++k) {
            nlohmann::ordered_json ce = homology_to_json(lc.cert.cone_homology[k]);
            ce["k"] = static_cast<int>(k);
            cones.push_back(ce);
        }
        e["cone_homology"] = cones;
        e["pass"] = lc.cert.pass;
        jl.push_back(e);
    }
    j["levels"] = jl;
    nlohmann::ordered_json js = nlohmann::ordered_json::array();
    for (const auto& s : segal_colimit) {
        nlohmann::ordered_json e;
        e["n"] = s.n;
        e["strict_iso"] = s.strict_iso;
        if (!s.strict_iso) e["counterexample"] = s.counterexample;
        js.push_back(e);
    }
    j["segal_colimit"] = js;
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const auto& [name, ok] : segal_fibers) {
        nlohmann::ordered_json e;
        e["fiber"] = name;
        e["strict_iso"] = ok;
        jf.push_back(e);
    }
    j["segal_fibers"] = jf;
    nlohmann::ordered_json jbaut;
    jbaut["informational"] = true;
    jbaut["pass"] = baut_colimit.pass;
    nlohmann::ordered_json jls = nlohmann::ordered_json::array();
    for (const auto& lr : baut_colimit.levels) {
        nlohmann::ordered_json e;
        e["level"] = lr.level;
        e["pi0_classification"] = lr.pi0_lc;
        e["pi0_model"] = lr.pi0_model;
        nlohmann::ordered_json hl = nlohmann::ordered_json::array();
        nlohmann::ordered_json hm = nlohmann::ordered_json::array();
        for (const auto& g : lr.h_lc) hl.push_back(homology_to_json(g));
        for (const auto& g : lr.h_model) hm.push_back(homology_to_json(g));
        e["h_classification"] = hl;
        e["h_model"] = hm;
        e["pass"] = lr.pass;
        jls.push_back(e);
    }
    jbaut["levels"] = jls;
    j["baut_colimit"] = jbaut;
    j["certificates_pass"] = certificates_pass;
    j["wall_clock_ms"] = wall_clock_ms;
    return j;
}

VerificationReport verify_theorem(const DiagramOfRelCats& d, const std::string& diagram_path,
                                  const Bounds& bounds, InsertDirection direction) {
    auto t0 = std::chrono::steady_clock::now();
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok) throw Error("verify_theorem: invalid diagram: " + rep.summary());

    VerificationReport out;
    out.diagram_path = diagram_path;
    out.bounds = bounds;
    out.direction = direction;

    if (direction == InsertDirection::Forward) {
        ForwardRun run = run_forward(d, bounds);
        out.colimit_objects = run.h.relcat.cat.num_objects();
        out.colimit_morphisms = run.h.relcat.cat.num_morphisms();
        out.colimit_marked = count_marked(run.h.relcat);
        out.connectors = count_connectors(d, run.h);
        out.confluent = run.h.confluence.confluent;
        out.marking_is_fixpoint = run.marking_is_fixpoint;
        out.cocone = run.cocone;
        out.levels = run.levels;
        out.segal_colimit = run.segal_colimit;
        out.segal_fibers = run.segal_fibers;
        out.baut_colimit = baut_certify(run.h.relcat, "colimit", bounds.hdeg, bounds);
    } else {
        // paper-literal orientation: certificates computed on the dual run;
        // the literal colimit is built directly and its levelwise invariants
        // must agree with the dual's
        DiagramOfRelCats op = opposite_diagram(d);
        ForwardRun run = run_forward(op, bounds);
        HocolimCategory lit = hocolim_category(d, bounds, InsertDirection::PaperLiteral);
        out.colimit_objects = lit.relcat.cat.num_objects();
        out.colimit_morphisms = lit.relcat.cat.num_morphisms();
        out.colimit_marked = count_marked(lit.relcat);
        out.connectors = count_connectors(d, lit);
        out.confluent = lit.confluence.confluent;
        out.marking_is_fixpoint =
            two_out_of_three_closure(lit.relcat).marked == lit.relcat.marked;
        out.cocone = canonical_cocone(d, lit);
        out.levels = run.levels;
        out.segal_fibers = run.segal_fibers;
        ClassificationDiagram lcl = classification_diagram(lit.relcat, "colimit", bounds.n_outer,
                                                           bounds.n_inner, bounds);
        for (int n = 2; n <= bounds.n_outer; ++n) out.segal_colimit.push_back(segal_check(lcl.w, n));
        out.baut_colimit = baut_certify(lit.relcat, "colimit", bounds.hdeg, bounds);
        // cross-audit: the literal colimit's levels carry the same invariants
        // as the dual's
        for (int m = 0; m <= bounds.n_outer; ++m) {
            Pi0 pa = pi0(lcl.w.level[m]);
            Pi0 pb = pi0(run.colimit.w.level[m]);
            ChainComplex ca = normalized_chains(lcl.w.level[m], bounds.hdeg + 1);
            ChainComplex cb = normalized_chains(run.colimit.w.level[m], bounds.hdeg + 1);
            bool same = pa.components == pb.components;
            for (int k = 0; same && k <= bounds.hdeg; ++k)
                same = homology(ca, k) == homology(cb, k);
            if (!same) out.levels[m].cert.pass = false;
        }
    }

    out.certificates_pass = out.confluent && out.marking_is_fixpoint &&
                            out.cocone.injections_valid &&
                            out.cocone.squares_commute_up_to_connectors;
    for (const auto& lc : out.levels) out.certificates_pass = out.certificates_pass && lc.cert.pass;
    for (const auto& s : out.segal_colimit) out.certificates_pass = out.certificates_pass && s.strict_iso;
    for (const auto& [name, ok] : out.segal_fibers) out.certificates_pass = out.certificates_pass && ok;

    auto t1 = std::chrono::steady_clock::now();
    out.wall_clock_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return out;
}

}  // namespace relcat
