#include "relcat/classify.hpp"

#include <algorithm>
#include <sstream>

namespace relcat {

int ClassificationDiagram::simplex_of_chain(int level, int degree,
                                            const std::vector<std::string>& chain_names) const {
    std::string key;
    for (size_t i = 0; i < chain_names.size(); ++i) {
        if (i) key += "&";
        key += chain_names[i];
    }
    return w.level[level].index_of(degree, key);
}

ClassificationDiagram classification_diagram(const RelativeCategory& m, const std::string& name,
                                             int n_outer, int n_inner, const Bounds& budget) {
    ValidationReport rep = validate_relative(m);
    if (!rep.ok) throw Error("classification_diagram: " + rep.summary());
    ClassificationDiagram out;
    out.source_name = name;
    out.n_outer = n_outer;
    out.n_inner = n_inner;
    out.w.outer_bound = n_outer;
    out.w.level.resize(n_outer + 1);
    out.w.outer_face.resize(n_outer + 1);
    out.w.outer_degeneracy.resize(n_outer + 1);
    for (int n = 0; n <= n_outer; ++n) {
        out.powers.push_back(arrow_category_power(m, n, budget));
        RelativeCategory we;
        we.cat = we_subcategory(out.powers[n]);
        we.marked.assign(we.cat.num_morphisms(), true);
        out.we_powers.push_back(std::move(we));
        out.w.level[n] = nerve(out.we_powers[n].cat, n_inner, budget);
    }
    // outer structure maps via the chain-category functors restricted to
    // marked morphisms
    auto restricted_nerve_map = [&](const RelFunctor& fun, int from, int to) {
        // translate the functor to the we-subcategories (same names)
        RelFunctor sub;
        const FinCategory& fc = out.we_powers[from].cat;
        const FinCategory& tc = out.we_powers[to].cat;
        sub.obj_map.resize(fc.num_objects());
        sub.mor_map.resize(fc.num_morphisms());
        for (int o = 0; o < fc.num_objects(); ++o) {
            int po = out.powers[from].cat.object_index(fc.object_name(o));
            sub.obj_map[o] = tc.object_index(
                out.powers[to].cat.object_name(fun.obj_map[po]));
            if (sub.obj_map[o] < 0) throw Error("classification_diagram: outer object image missing");
        }
        for (int mi = 0; mi < fc.num_morphisms(); ++mi) {
            int pm = out.powers[from].cat.morphism_index(fc.morphism(mi).name);
            sub.mor_map[mi] = tc.morphism_index(
                out.powers[to].cat.morphism(fun.mor_map[pm]).name);
            if (sub.mor_map[mi] < 0) throw Error("classification_diagram: outer image not marked");
        }
        return nerve_map(fc, out.w.level[from], tc, out.w.level[to], sub);
    };
    for (int n = 1; n <= n_outer; ++n)
        for (int i = 0; i <= n; ++i) {
            RelFunctor fun = power_outer_face(m, out.powers[n], out.powers[n - 1], n, i);
            out.w.outer_face[n].push_back(restricted_nerve_map(fun, n, n - 1));
        }
    for (int n = 0; n < n_outer; ++n)
        for (int i = 0; i <= n; ++i) {
            RelFunctor fun = power_outer_degeneracy(m, out.powers[n], out.powers[n + 1], n, i);
            out.w.outer_degeneracy[n].push_back(restricted_nerve_map(fun, n, n + 1));
        }
    out.w.patch();
    return out;
}

std::vector<SimplicialMap> classification_map(const ClassificationDiagram& src,
                                              const ClassificationDiagram& tgt,
                                              const RelativeCategory& src_cat,
                                              const RelativeCategory& tgt_cat,
                                              const RelFunctor& fun) {
    if (src.n_outer != tgt.n_outer || src.n_inner != tgt.n_inner)
        throw Error("classification_map: bounds differ");
    std::vector<SimplicialMap> out;
    for (int n = 0; n <= src.n_outer; ++n) {
        RelFunctor lifted = power_functor(src_cat, src.powers[n], tgt_cat, tgt.powers[n], fun, n);
        // restrict to marked subcategories
        const FinCategory& fc = src.we_powers[n].cat;
        const FinCategory& tc = tgt.we_powers[n].cat;
        RelFunctor sub;
        sub.obj_map.resize(fc.num_objects());
        sub.mor_map.resize(fc.num_morphisms());
        for (int o = 0; o < fc.num_objects(); ++o) {
            int po = src.powers[n].cat.object_index(fc.object_name(o));
            sub.obj_map[o] = tc.object_index(tgt.powers[n].cat.object_name(lifted.obj_map[po]));
        }
        for (int mi = 0; mi < fc.num_morphisms(); ++mi) {
            int pm = src.powers[n].cat.morphism_index(fc.morphism(mi).name);
            sub.mor_map[mi] = tc.morphism_index(tgt.powers[n].cat.morphism(lifted.mor_map[pm]).name);
            if (sub.mor_map[mi] < 0)
                throw Error("classification_map: functor does not preserve marked morphisms");
        }
        out.push_back(nerve_map(fc, src.w.level[n], tc, tgt.w.level[n], sub));
    }
    return out;
}

SegalReport segal_check(const TruncatedBisimplicialSet& w, int n) {
    if (n < 2 || n > w.outer_bound) throw Error("segal_check: need 2 <= n <= outer bound");
    SegalReport rep;
    rep.n = n;

    // outer operator [1] -> [n] hitting {i-1, i}: repeatedly drop top and
    // bottom vertices
    auto factor_map = [&](int i) {
        // start from level n and apply outer faces: drop vertices n, n-1, ..., i+1
        // (each is the current top) then vertices i-2, i-3, ..., 0 (each d_0)
        SimplicialMap f = SimplicialMap::identity(w.level[n]);
        int cur = n;
        while (cur > i) {
            f = SimplicialMap::compose(w.outer_face[cur][cur], f);
            --cur;
        }
        while (cur > 1) {
            f = SimplicialMap::compose(w.outer_face[cur][0], f);
            --cur;
        }
        return f;  // level n -> level 1
    };
    // vertex maps level 1 -> level 0
    const SimplicialMap& d_top = w.outer_face[1][1];  // leading vertex
    const SimplicialMap& d_bot = w.outer_face[1][0];  // trailing vertex

    // iterated strict fiber product; later stages own their spaces, the first
    // stage references W_1 directly so map pointers stay consistent
    std::vector<std::shared_ptr<TruncatedSimplicialSet>> storage;
    const TruncatedSimplicialSet* space = &w.level[1];
    std::vector<SimplicialMap> to_factor{SimplicialMap::identity(w.level[1])};
    for (int i = 2; i <= n; ++i) {
        // glue the trailing vertex of factor i-1 to the leading vertex of factor i
        SimplicialMap left_edge = SimplicialMap::compose(d_bot, to_factor.back());
        SimplicialMap px, py;
        auto next = std::make_shared<TruncatedSimplicialSet>(
            fiber_product(left_edge, d_top, &px, &py));
        storage.push_back(next);
        px.src = next.get();
        px.tgt = space;
        py.src = next.get();
        py.tgt = &w.level[1];
        std::vector<SimplicialMap> nf;
        for (auto& f : to_factor) nf.push_back(SimplicialMap::compose(f, px));
        nf.push_back(py);
        to_factor = std::move(nf);
        space = next.get();
    }

    for (int k = 0; k <= w.level[n].bound(); ++k) {
        rep.level_counts.push_back(w.level[n].count(k));
        rep.product_counts.push_back(space->count(k));
    }

    // phi_n: factor maps out of W_n, compared against product projections
    std::vector<SimplicialMap> factors;
    for (int i = 1; i <= n; ++i) factors.push_back(factor_map(i));

    SimplicialMap phi;
    phi.src = &w.level[n];
    phi.tgt = space;
    phi.map.resize(w.level[n].bound() + 1);
    for (int k = 0; k <= w.level[n].bound(); ++k) {
        std::map<std::vector<int>, int> product_by_tuple;
        for (int s = 0; s < space->count(k); ++s) {
            std::vector<int> tuple;
            for (auto& p : to_factor) tuple.push_back(p.map[k][s]);
            product_by_tuple[tuple] = s;
        }
        std::vector<char> hit(space->count(k), 0);
        phi.map[k].resize(w.level[n].count(k));
        for (int s = 0; s < w.level[n].count(k); ++s) {
            std::vector<int> tuple;
            for (auto& f : factors) tuple.push_back(f.map[k][s]);
            auto it = product_by_tuple.find(tuple);
            if (it == product_by_tuple.end()) {
                rep.counterexample = "degree " + std::to_string(k) + " simplex " +
                                     w.level[n].key(k, s) + " misses the fiber product";
                return rep;
            }
            if (hit[it->second]) {
                rep.counterexample = "degree " + std::to_string(k) + " simplex " +
                                     w.level[n].key(k, s) + " collides in the fiber product";
                return rep;
            }
            hit[it->second] = 1;
            phi.map[k][s] = it->second;
        }
        for (int s = 0; s < space->count(k); ++s)
            if (!hit[s]) {
                rep.counterexample = "degree " + std::to_string(k) + " product simplex " +
                                     space->key(k, s) + " not in the image";
                return rep;
            }
    }
    std::string bad = phi.audit();
    if (!bad.empty()) {
        rep.counterexample = "comparison not simplicial: " + bad;
        return rep;
    }
    rep.strict_iso = true;
    return rep;
}

TruncatedSimplicialSet baut_model(const RelativeCategory& m, int level, int bound,
                                  const Bounds& budget) {
    if (level != 0 && level != 1) throw Error("baut_model: level must be 0 or 1");
    RelativeCategory base = level == 0 ? m : arrow_category_power(m, 1, budget);
    auto classes = we_classes(base);
    std::vector<TruncatedSimplicialSet> pieces;
    for (const auto& cls : classes) {
        FinMonoid mon = aut_h(base, cls[0]);  // representative: least object name
        pieces.push_back(classifying_complex(mon, bound, budget));
    }
    std::vector<const TruncatedSimplicialSet*> ptrs;
    for (auto& p : pieces) ptrs.push_back(&p);
    return disjoint_union(ptrs);
}

BautReport baut_certify(const RelativeCategory& m, const std::string& name, int hdeg,
                        const Bounds& budget) {
    Bounds b = budget;
    if (b.n_inner < hdeg + 1) throw Error("baut_certify: n_inner must be at least hdeg+1");
    BautReport out;
    ClassificationDiagram lc = classification_diagram(m, name, 1, b.n_inner, b);
    for (int level = 0; level <= 1; ++level) {
        BautLevelReport lr;
        lr.level = level;
        const TruncatedSimplicialSet& lhs = lc.w.level[level];
        TruncatedSimplicialSet rhs = baut_model(m, level, b.n_inner, b);
        lr.pi0_lc = pi0(lhs).components;
        lr.pi0_model = pi0(rhs).components;
        ChainComplex cl = normalized_chains(lhs, hdeg + 1);
        ChainComplex cr = normalized_chains(rhs, hdeg + 1);
        bool smooth = lr.pi0_lc == lr.pi0_model;
        for (int k = 0; k <= hdeg; ++k) {
            lr.h_lc.push_back(homology(cl, k));
            lr.h_model.push_back(homology(cr, k));
            smooth = smooth && lr.h_lc.back() == lr.h_model.back();
        }
        lr.pass = smooth;
        out.levels.push_back(std::move(lr));
    }
    out.pass = out.levels[0].pass && out.levels[1].pass;
    return out;
}

}  // namespace relcat
