#include "relcat/hocolim_cat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relcat {

ValidationReport validate_diagram(const DiagramOfRelCats& d) {
    ValidationReport rep;
    auto issue = [&](const std::string& kind, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({kind, detail});
    };
    ValidationReport ix = validate_category(d.index);
    if (!ix.ok) {
        issue("index", ix.summary());
        return rep;
    }
    if (d.at_object.size() != static_cast<size_t>(d.index.num_objects()) ||
        d.at_arrow.size() != static_cast<size_t>(d.index.num_morphisms())) {
        issue("diagram", "arity mismatch between index and assignments");
        return rep;
    }
    for (int o = 0; o < d.index.num_objects(); ++o) {
        ValidationReport r = validate_relative(d.at_object[o]);
        if (!r.ok) issue("fiber", d.index.object_name(o) + ": " + r.summary());
    }
    if (!rep.ok) return rep;
    for (int m = 0; m < d.index.num_morphisms(); ++m) {
        const auto& src = d.at_object[d.index.morphism(m).src];
        const auto& tgt = d.at_object[d.index.morphism(m).tgt];
        ValidationReport r = validate_functor(src.cat, tgt.cat, d.at_arrow[m]);
        if (!r.ok) {
            issue("arrow", d.index.morphism(m).name + ": " + r.summary());
            continue;
        }
        if (!functor_preserves_marking(src, tgt, d.at_arrow[m]))
            issue("arrow-marking", d.index.morphism(m).name + " does not preserve marked morphisms");
    }
    if (!rep.ok) return rep;
    for (int o = 0; o < d.index.num_objects(); ++o)
        if (!functors_equal(d.at_arrow[d.index.identity(o)],
                            RelFunctor::identity(d.at_object[o].cat)))
            issue("functoriality", "identity arrow of " + d.index.object_name(o) +
                                       " is not the identity functor");
    for (int g = 0; g < d.index.num_morphisms(); ++g)
        for (int f = 0; f < d.index.num_morphisms(); ++f) {
            int h = d.index.compose(g, f);
            if (h < 0) continue;
            if (!functors_equal(compose_functors(d.at_arrow[g], d.at_arrow[f]), d.at_arrow[h]))
                issue("functoriality", "composite at " + d.index.morphism(g).name + " . " +
                                           d.index.morphism(f).name);
        }
    return rep;
}

std::vector<InsertionSite> insertion_sites(const DiagramOfRelCats& d, int arrow) {
    std::vector<InsertionSite> out;
    int alpha = d.index.morphism(arrow).src;
    int beta = d.index.morphism(arrow).tgt;
    const RelativeCategory& src = d.at_object[alpha];
    const RelativeCategory& tgt = d.at_object[beta];
    const RelFunctor& fun = d.at_arrow[arrow];
    for (int x = 0; x < src.cat.num_objects(); ++x) {
        int fx = fun.obj_map[x];
        for (int y = 0; y < tgt.cat.num_objects(); ++y) {
            // least witness, preferring the identity when available
            int witness = -1;
            for (int m = 0; m < tgt.cat.num_morphisms(); ++m) {
                if (!tgt.marked[m]) continue;
                bool hits = d.variance == Variance::Left
                                ? (tgt.cat.morphism(m).src == fx && tgt.cat.morphism(m).tgt == y)
                                : (tgt.cat.morphism(m).src == y && tgt.cat.morphism(m).tgt == fx);
                if (!hits) continue;
                if (tgt.cat.is_identity(m)) {
                    witness = m;
                    break;
                }
                if (witness < 0 ||
                    tgt.cat.morphism(m).name < tgt.cat.morphism(witness).name)
                    witness = m;
            }
            if (witness < 0) continue;
            InsertionSite s;
            s.arrow = arrow;
            s.src_object = x;
            s.tgt_object = y;
            s.witness = witness;
            s.canonical = (y == fx);
            if (alpha == beta) {
                for (int m = 0; m < src.cat.num_morphisms(); ++m)
                    if (src.marked[m] && src.cat.morphism(m).src == x && src.cat.morphism(m).tgt == y)
                        s.existing_within_fiber = true;
            }
            out.push_back(s);
        }
    }
    return out;
}

namespace {

std::string fiber_object_name(const DiagramOfRelCats& d, int alpha, int obj) {
    return d.object_labels[alpha] + "/" + d.at_object[alpha].cat.object_name(obj);
}

std::string fiber_morphism_name(const DiagramOfRelCats& d, int alpha, int mor) {
    return d.object_labels[alpha] + "/" + d.at_object[alpha].cat.morphism(mor).name;
}

std::string connector_name(const DiagramOfRelCats& d, int arrow, int obj) {
    int alpha = d.index.morphism(arrow).src;
    return "ins/" + d.index.morphism(arrow).name + "/" +
           d.at_object[alpha].cat.object_name(obj);
}

HocolimCategory build_forward(const DiagramOfRelCats& d, const Bounds& bounds) {
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok) throw Error("hocolim_category: invalid diagram: " + rep.summary());

    // objects: tagged disjoint union
    std::vector<std::string> objects;
    std::vector<std::vector<int>> obj_of(d.index.num_objects());
    for (int a = 0; a < d.index.num_objects(); ++a) {
        obj_of[a].resize(d.at_object[a].cat.num_objects());
        for (int o = 0; o < d.at_object[a].cat.num_objects(); ++o) {
            obj_of[a][o] = static_cast<int>(objects.size());
            objects.push_back(fiber_object_name(d, a, o));
        }
    }

    // generators: fiber morphisms (identities excluded) then connectors for
    // every non-identity index arrow and source object
    std::vector<GenRec> gens;
    std::vector<std::vector<int>> gen_of(d.index.num_objects());
    for (int a = 0; a < d.index.num_objects(); ++a) {
        gen_of[a].assign(d.at_object[a].cat.num_morphisms(), -1);
        for (int m = 0; m < d.at_object[a].cat.num_morphisms(); ++m) {
            if (d.at_object[a].cat.is_identity(m)) continue;
            gen_of[a][m] = static_cast<int>(gens.size());
            gens.push_back({fiber_morphism_name(d, a, m),
                            obj_of[a][d.at_object[a].cat.morphism(m).src],
                            obj_of[a][d.at_object[a].cat.morphism(m).tgt], 1});
        }
    }
    std::vector<std::vector<int>> conn_gen(d.index.num_morphisms());
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        int a = d.index.morphism(u).src;
        int b = d.index.morphism(u).tgt;
        conn_gen[u].assign(d.at_object[a].cat.num_objects(), -1);
        if (d.index.is_identity(u)) continue;  // connections already exist in the fiber
        for (int x = 0; x < d.at_object[a].cat.num_objects(); ++x) {
            conn_gen[u][x] = static_cast<int>(gens.size());
            // connectors sort before fiber generators so words normalize with
            // connectors leading
            gens.push_back({connector_name(d, u, x), obj_of[a][x],
                            obj_of[b][d.at_arrow[u].obj_map[x]], 0});
        }
    }

    // helper: fiber morphism as a word (empty for identities)
    auto fiber_word = [&](int a, int m) {
        Word w;
        if (!d.at_object[a].cat.is_identity(m)) w.push_back(gen_of[a][m]);
        return w;
    };

    std::vector<std::pair<Word, Word>> relations;
    // (a) fiberwise composition tables
    for (int a = 0; a < d.index.num_objects(); ++a) {
        const FinCategory& c = d.at_object[a].cat;
        for (int g = 0; g < c.num_morphisms(); ++g) {
            if (c.is_identity(g)) continue;
            for (int f = 0; f < c.num_morphisms(); ++f) {
                if (c.is_identity(f)) continue;
                int h = c.compose(g, f);
                if (h < 0) continue;
                Word lhs = fiber_word(a, f);
                lhs.push_back(gen_of[a][g]);
                relations.push_back({lhs, fiber_word(a, h)});
            }
        }
    }
    // (b) connecting squares: conn(u, x') . f  =  F_u(f) . conn(u, x)
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        if (d.index.is_identity(u)) continue;
        int a = d.index.morphism(u).src;
        int b = d.index.morphism(u).tgt;
        const FinCategory& c = d.at_object[a].cat;
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (c.is_identity(f)) continue;
            Word lhs = {gen_of[a][f], conn_gen[u][c.morphism(f).tgt]};
            Word rhs = {conn_gen[u][c.morphism(f).src]};
            Word img = fiber_word(b, d.at_arrow[u].mor_map[f]);
            rhs.insert(rhs.end(), img.begin(), img.end());
            relations.push_back({lhs, rhs});
        }
    }
    // (c) composite identification: conn(v, F_u x) . conn(u, x) = conn(v.u, x)
    for (int v = 0; v < d.index.num_morphisms(); ++v) {
        if (d.index.is_identity(v)) continue;
        for (int u = 0; u < d.index.num_morphisms(); ++u) {
            if (d.index.is_identity(u)) continue;
            int w = d.index.compose(v, u);
            if (w < 0) continue;
            int a = d.index.morphism(u).src;
            for (int x = 0; x < d.at_object[a].cat.num_objects(); ++x) {
                Word lhs = {conn_gen[u][x], conn_gen[v][d.at_arrow[u].obj_map[x]]};
                Word rhs;
                if (!d.index.is_identity(w)) rhs.push_back(conn_gen[w][x]);
                relations.push_back({lhs, rhs});
            }
        }
    }

    HocolimCategory out;
    out.presentation = PresentedCategory(objects, gens, relations, bounds);
    out.confluence = out.presentation.certify_confluence();
    out.enumerated = out.presentation.enumerate();

    // marking: identities, marked fiber morphisms, connectors; then close
    RelativeCategory rc;
    rc.cat = out.enumerated.cat;
    rc.marked.assign(rc.cat.num_morphisms(), false);
    for (int o = 0; o < rc.cat.num_objects(); ++o) rc.marked[rc.cat.identity(o)] = true;
    for (int a = 0; a < d.index.num_objects(); ++a)
        for (int m = 0; m < d.at_object[a].cat.num_morphisms(); ++m) {
            if (!d.at_object[a].marked[m] || d.at_object[a].cat.is_identity(m)) continue;
            Word w = out.presentation.normalize({gen_of[a][m]});
            auto it = out.enumerated.morphism_of_word.find(w);
            if (it == out.enumerated.morphism_of_word.end())
                throw Error("hocolim_category: fiber morphism escaped enumeration");
            rc.marked[it->second] = true;
        }
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        if (d.index.is_identity(u)) continue;
        int a = d.index.morphism(u).src;
        for (int x = 0; x < d.at_object[a].cat.num_objects(); ++x) {
            Word w = out.presentation.normalize({conn_gen[u][x]});
            auto it = out.enumerated.morphism_of_word.find(w);
            if (it == out.enumerated.morphism_of_word.end())
                throw Error("hocolim_category: connector escaped enumeration");
            rc.marked[it->second] = true;
        }
    }
    // close under composition, then two-out-of-three (saturation handles both)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            int n = rc.cat.num_morphisms();
            for (int g = 0; g < n; ++g)
                for (int f = 0; f < n; ++f) {
                    int h = rc.cat.compose(g, f);
                    if (h < 0) continue;
                    if (rc.marked[g] && rc.marked[f] && !rc.marked[h]) {
                        rc.marked[h] = true;
                        changed = true;
                    }
                }
        }
    }
    rc = two_out_of_three_closure(rc);
    out.relcat = std::move(rc);

    // injections
    for (int a = 0; a < d.index.num_objects(); ++a) {
        RelFunctor inj;
        inj.obj_map.resize(d.at_object[a].cat.num_objects());
        inj.mor_map.resize(d.at_object[a].cat.num_morphisms());
        for (int o = 0; o < d.at_object[a].cat.num_objects(); ++o)
            inj.obj_map[o] = out.relcat.cat.object_index(fiber_object_name(d, a, o));
        for (int m = 0; m < d.at_object[a].cat.num_morphisms(); ++m) {
            if (d.at_object[a].cat.is_identity(m)) {
                inj.mor_map[m] = out.relcat.cat.identity(inj.obj_map[d.at_object[a].cat.morphism(m).src]);
            } else {
                Word w = out.presentation.normalize({gen_of[a][m]});
                inj.mor_map[m] = out.enumerated.morphism_of_word.at(w);
            }
        }
        out.injections.push_back(std::move(inj));
    }

    // connectors per arrow (identity arrows connect through fiber identities)
    out.connector.resize(d.index.num_morphisms());
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        int a = d.index.morphism(u).src;
        out.connector[u].resize(d.at_object[a].cat.num_objects());
        for (int x = 0; x < d.at_object[a].cat.num_objects(); ++x) {
            if (d.index.is_identity(u)) {
                out.connector[u][x] = out.injections[a].mor_map[d.at_object[a].cat.identity(x)];
            } else {
                Word w = out.presentation.normalize({conn_gen[u][x]});
                out.connector[u][x] = out.enumerated.morphism_of_word.at(w);
            }
        }
    }

    for (int u = 0; u < d.index.num_morphisms(); ++u) out.sites.push_back(insertion_sites(d, u));
    return out;
}

}  // namespace

int HocolimCategory::site_connection(const DiagramOfRelCats& d, const InsertionSite& s) const {
    int beta = d.index.morphism(s.arrow).tgt;
    int conn = connector[s.arrow][s.src_object];
    int wit = injections[beta].mor_map[s.witness];
    // the witness composes with the connector only when their directions line
    // up; the remaining cases are realized by a marked zigzag instead
    int result = -1;
    if (direction == InsertDirection::Forward) {
        result = d.variance == Variance::Left ? relcat.cat.compose(wit, conn)
                                              : (s.canonical ? conn : -1);
    } else {
        result = d.variance == Variance::Left ? (s.canonical ? conn : -1)
                                              : relcat.cat.compose(conn, wit);
    }
    return result;
}

HocolimCategory hocolim_category(const DiagramOfRelCats& d, const Bounds& bounds,
                                 InsertDirection direction) {
    if (direction == InsertDirection::Forward) {
        HocolimCategory out = build_forward(d, bounds);
        out.direction = direction;
        return out;
    }
    // paper-literal orientation: connectors point from target-category objects
    // back to source-category objects; build on the dual and flip the result
    DiagramOfRelCats op = opposite_diagram(d);
    HocolimCategory dual = build_forward(op, bounds);
    HocolimCategory out;
    out.presentation = dual.presentation;
    out.confluence = dual.confluence;
    out.enumerated = dual.enumerated;
    out.relcat = opposite(dual.relcat);
    out.direction = direction;
    // transport injections and connectors through the morphism-name identity
    for (size_t a = 0; a < dual.injections.size(); ++a) {
        RelFunctor inj;
        const RelativeCategory& fiber = d.at_object[a];
        inj.obj_map.resize(fiber.cat.num_objects());
        inj.mor_map.resize(fiber.cat.num_morphisms());
        for (int o = 0; o < fiber.cat.num_objects(); ++o) {
            int op_obj = op.at_object[a].cat.object_index(fiber.cat.object_name(o));
            inj.obj_map[o] = out.relcat.cat.object_index(
                dual.relcat.cat.object_name(dual.injections[a].obj_map[op_obj]));
        }
        for (int m = 0; m < fiber.cat.num_morphisms(); ++m) {
            int op_mor = op.at_object[a].cat.morphism_index(fiber.cat.morphism(m).name);
            inj.mor_map[m] = out.relcat.cat.morphism_index(
                dual.relcat.cat.morphism(dual.injections[a].mor_map[op_mor]).name);
        }
        out.injections.push_back(std::move(inj));
    }
    out.connector.resize(d.index.num_morphisms());
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        out.connector[u].resize(dual.connector[u].size());
        for (size_t x = 0; x < dual.connector[u].size(); ++x)
            out.connector[u][x] = out.relcat.cat.morphism_index(
                dual.relcat.cat.morphism(dual.connector[u][x]).name);
    }
    for (int u = 0; u < d.index.num_morphisms(); ++u) out.sites.push_back(insertion_sites(d, u));
    return out;
}

CoconeReport canonical_cocone(const DiagramOfRelCats& d, const HocolimCategory& h) {
    CoconeReport rep;
    rep.injections_valid = true;
    for (int a = 0; a < d.index.num_objects(); ++a) {
        ValidationReport r = validate_functor(d.at_object[a].cat, h.relcat.cat, h.injections[a]);
        if (!r.ok) {
            rep.injections_valid = false;
            rep.detail = "injection of " + d.index.object_name(a) + ": " + r.summary();
            return rep;
        }
        if (!functor_preserves_marking(d.at_object[a], h.relcat, h.injections[a])) {
            rep.injections_valid = false;
            rep.detail = "injection of " + d.index.object_name(a) + " loses marking";
            return rep;
        }
    }
    rep.squares_commute_up_to_connectors = true;
    rep.on_the_nose = true;
    const FinCategory& hc = h.relcat.cat;
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        int a = d.index.morphism(u).src;
        int b = d.index.morphism(u).tgt;
        const RelativeCategory& fiber = d.at_object[a];
        for (int m = 0; m < fiber.cat.num_morphisms(); ++m) {
            int x = fiber.cat.morphism(m).src;
            int y = fiber.cat.morphism(m).tgt;
            int conn_x = h.connector[u][x];
            int conn_y = h.connector[u][y];
            if (!h.relcat.marked[conn_x] || !h.relcat.marked[conn_y]) {
                rep.squares_commute_up_to_connectors = false;
                rep.detail = "connector unmarked at " + d.index.morphism(u).name;
                return rep;
            }
            int via_fiber, via_image;
            if (h.direction == InsertDirection::Forward) {
                via_fiber = hc.compose(conn_y, h.injections[a].mor_map[m]);
                via_image = hc.compose(h.injections[b].mor_map[d.at_arrow[u].mor_map[m]], conn_x);
            } else {
                via_fiber = hc.compose(h.injections[a].mor_map[m], conn_x);
                via_image = hc.compose(conn_y, h.injections[b].mor_map[d.at_arrow[u].mor_map[m]]);
            }
            if (via_fiber < 0 || via_image < 0 || via_fiber != via_image) {
                rep.squares_commute_up_to_connectors = false;
                rep.detail = "square fails at arrow " + d.index.morphism(u).name + ", morphism " +
                             fiber.cat.morphism(m).name;
                return rep;
            }
            if (!d.index.is_identity(u) && !hc.is_identity(conn_x)) rep.on_the_nose = false;
        }
    }
    return rep;
}

DiagramOfRelCats opposite_diagram(const DiagramOfRelCats& d) {
    DiagramOfRelCats out;
    out.index = d.index;
    out.object_labels = d.object_labels;
    out.variance = d.variance;
    for (const auto& fiber : d.at_object) out.at_object.push_back(opposite(fiber));
    for (int u = 0; u < d.index.num_morphisms(); ++u) {
        int a = d.index.morphism(u).src;
        int b = d.index.morphism(u).tgt;
        const RelativeCategory& src = d.at_object[a];
        const RelativeCategory& osrc = out.at_object[a];
        const RelativeCategory& otgt = out.at_object[b];
        RelFunctor f;
        f.obj_map.resize(osrc.cat.num_objects());
        f.mor_map.resize(osrc.cat.num_morphisms());
        for (int o = 0; o < osrc.cat.num_objects(); ++o) {
            int orig = src.cat.object_index(osrc.cat.object_name(o));
            f.obj_map[o] = otgt.cat.object_index(
                d.at_object[b].cat.object_name(d.at_arrow[u].obj_map[orig]));
        }
        for (int m = 0; m < osrc.cat.num_morphisms(); ++m) {
            int orig = src.cat.morphism_index(osrc.cat.morphism(m).name);
            f.mor_map[m] = otgt.cat.morphism_index(
                d.at_object[b].cat.morphism(d.at_arrow[u].mor_map[orig]).name);
        }
        out.at_arrow.push_back(std::move(f));
    }
    return out;
}

}  // namespace relcat
