#include "relcat/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace relcat {

long TruncatedSimplicialSet::total() const {
    long t = 0;
    for (int k = 0; k <= bound_; ++k) t += count(k);
    return t;
}

int TruncatedSimplicialSet::index_of(int k, const std::string& key) const {
    if (k < 0 || k > bound_) return -1;
    auto it = index_[k].find(key);
    return it == index_[k].end() ? -1 : it->second;
}

int TruncatedSimplicialSet::add_simplex(int k, std::string key, std::vector<int> faces) {
    if (faces_.empty()) {
        faces_.resize(bound_ + 1);
        degens_.resize(bound_ + 1);
        degenerate_.resize(bound_ + 1);
        index_.resize(bound_ + 1);
    }
    if (k > 0 && static_cast<int>(faces.size()) != k + 1)
        throw Error("add_simplex: wrong face count");
    for (int f : faces)
        if (f < 0 || f >= count(k - 1)) throw Error("add_simplex: face out of range");
    int idx = static_cast<int>(simplices_[k].size());
    if (!index_[k].emplace(key, idx).second) throw Error("add_simplex: duplicate key " + key);
    simplices_[k].push_back(std::move(key));
    faces_[k].push_back(std::move(faces));
    degens_[k].emplace_back();
    degenerate_[k].push_back(false);
    return idx;
}

void TruncatedSimplicialSet::set_degeneracies(int k, int s, std::vector<int> images) {
    if (k + 1 > bound_) {
        if (!images.empty()) throw Error("set_degeneracies: beyond truncation");
        return;
    }
    if (static_cast<int>(images.size()) != k + 1) throw Error("set_degeneracies: need k+1 images");
    degens_[k][s] = std::move(images);
}

void TruncatedSimplicialSet::finalize() {
    for (int k = 0; k < bound_; ++k)
        for (int s = 0; s < count(k); ++s)
            for (int img : degens_[k][s]) degenerate_[k + 1][img] = true;
}

int TruncatedSimplicialSet::nondegenerate_count(int k) const {
    int n = 0;
    for (int s = 0; s < count(k); ++s)
        if (!degenerate_[k][s]) ++n;
    return n;
}

std::string TruncatedSimplicialSet::audit() const {
    std::ostringstream bad;
    auto fail = [&](const std::string& what) { bad << what << "; "; };
    // d_i d_j = d_{j-1} d_i for i < j
    for (int k = 2; k <= bound_; ++k)
        for (int s = 0; s < count(k); ++s)
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(k - 1, face(k, s, j), i) != face(k - 1, face(k, s, i), j - 1))
                        fail("d" + std::to_string(i) + "d" + std::to_string(j) + " at degree " +
                             std::to_string(k) + " simplex " + key(k, s));
    for (int k = 0; k < bound_; ++k)
        for (int s = 0; s < count(k); ++s) {
            if (degens_[k][s].empty()) {
                fail("missing degeneracies at degree " + std::to_string(k) + " simplex " + key(k, s));
                continue;
            }
            for (int i = 0; i <= k; ++i) {
                int t = degeneracy(k, s, i);
                // d_i s_i = id = d_{i+1} s_i
                if (face(k + 1, t, i) != s || face(k + 1, t, i + 1) != s)
                    fail("d s identity at " + key(k, s));
                for (int j = 0; j <= k + 1; ++j) {
                    if (j == i || j == i + 1) continue;
                    if (k == 0) break;  // target faces land in degree 0; nothing further to check
                    int lhs = face(k + 1, t, j);
                    int rhs = j < i ? degeneracy(k - 1, face(k, s, j), i - 1)
                                    : degeneracy(k - 1, face(k, s, j - 1), i);
                    if (lhs != rhs) fail("d_j s_i at " + key(k, s));
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j
            if (k + 2 <= bound_)
                for (int j = 0; j <= k; ++j)
                    for (int i = 0; i <= j; ++i)
                        if (degeneracy(k + 1, degeneracy(k, s, j), i) !=
                            degeneracy(k + 1, degeneracy(k, s, i), j + 1))
                            fail("s_i s_j at " + key(k, s));
        }
    return bad.str();
}

std::string SimplicialMap::audit() const {
    if (!src || !tgt) return "unset map";
    if (src->bound() > tgt->bound()) return "target truncation too small";
    std::ostringstream bad;
    for (int k = 0; k <= src->bound(); ++k) {
        if (static_cast<int>(map[k].size()) != src->count(k)) return "wrong map size";
        for (int s = 0; s < src->count(k); ++s) {
            if (k > 0)
                for (int i = 0; i <= k; ++i)
                    if (tgt->face(k, map[k][s], i) != map[k - 1][src->face(k, s, i)])
                        bad << "face " << i << " at degree " << k << " simplex " << src->key(k, s)
                            << "; ";
            if (k + 1 <= src->bound())
                for (int i = 0; i <= k; ++i)
                    if (tgt->degeneracy(k, map[k][s], i) != map[k + 1][src->degeneracy(k, s, i)])
                        bad << "degeneracy " << i << " at degree " << k << "; ";
        }
    }
    return bad.str();
}

SimplicialMap SimplicialMap::identity(const TruncatedSimplicialSet& x) {
    SimplicialMap f;
    f.src = f.tgt = &x;
    f.map.resize(x.bound() + 1);
    for (int k = 0; k <= x.bound(); ++k) {
        f.map[k].resize(x.count(k));
        std::iota(f.map[k].begin(), f.map[k].end(), 0);
    }
    return f;
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& second, const SimplicialMap& first) {
    if (first.tgt != second.src) throw Error("SimplicialMap::compose: mismatched middle object");
    SimplicialMap out;
    out.src = first.src;
    out.tgt = second.tgt;
    out.map.resize(first.map.size());
    for (size_t k = 0; k < first.map.size(); ++k) {
        out.map[k].resize(first.map[k].size());
        for (size_t s = 0; s < first.map[k].size(); ++s)
            out.map[k][s] = second.map[k][first.map[k][s]];
    }
    return out;
}

namespace {

/* Nerve chains join on '&': morphism names may contain '|' and '>' (chain
 * categories) but never '&'. */
std::string chain_key(const FinCategory& c, const std::vector<int>& chain) {
    std::string out;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "&";
        out += c.morphism(chain[i]).name;
    }
    return out;
}

}  // namespace

TruncatedSimplicialSet nerve(const FinCategory& c, int bound, const Bounds& budget) {
    TruncatedSimplicialSet x(bound);
    // degree 0: objects in index order (already sorted by name)
    for (int o = 0; o < c.num_objects(); ++o) x.add_simplex(0, c.object_name(o), {});

    // chains per degree, in generation order (lexicographic by construction)
    std::vector<std::vector<int>> prev;  // degree k-1 chains, index-aligned
    long used = c.num_objects();
    for (int k = 1; k <= bound; ++k) {
        std::vector<std::vector<int>> cur;
        if (k == 1) {
            for (int m = 0; m < c.num_morphisms(); ++m) cur.push_back({m});
        } else {
            for (const auto& ch : prev)
                for (int m = 0; m < c.num_morphisms(); ++m)
                    if (c.morphism(m).src == c.morphism(ch.back()).tgt) {
                        auto e = ch;
                        e.push_back(m);
                        cur.push_back(std::move(e));
                    }
        }
        std::sort(cur.begin(), cur.end(), [&](const auto& a, const auto& b) {
            return chain_key(c, a) < chain_key(c, b);
        });
        used += static_cast<long>(cur.size());
        if (used > budget.simplex_budget) throw BudgetError("nerve: simplex budget exceeded");
        for (const auto& ch : cur) {
            std::vector<int> faces(k + 1);
            if (k == 1) {
                // d_i omits vertex i, so for an edge f: x -> y, d_0 = y and d_1 = x
                faces[0] = c.morphism(ch[0]).tgt;
                faces[1] = c.morphism(ch[0]).src;
            } else {
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> sub;
                    if (i == 0)
                        sub.assign(ch.begin() + 1, ch.end());
                    else if (i == k)
                        sub.assign(ch.begin(), ch.end() - 1);
                    else {
                        sub = ch;
                        sub[i - 1] = c.compose(ch[i], ch[i - 1]);
                        sub.erase(sub.begin() + i);
                    }
                    faces[i] = x.index_of(k - 1, chain_key(c, sub));
                    if (faces[i] < 0) throw Error("nerve: missing face");
                }
            }
            x.add_simplex(k, chain_key(c, ch), std::move(faces));
        }
        // degeneracies from degree k-1 into k
        auto set_degens = [&](int deg, const std::vector<std::vector<int>>& chains_at) {
            for (size_t s = 0; s < chains_at.size(); ++s) {
                std::vector<int> images(deg + 1);
                for (int i = 0; i <= deg; ++i) {
                    std::vector<int> sup = chains_at[s];
                    int obj;
                    if (deg == 0)
                        obj = static_cast<int>(s);  // degree-0 chains are objects themselves
                    else
                        obj = i == 0 ? c.morphism(sup[0]).src : c.morphism(sup[i - 1]).tgt;
                    if (deg == 0) sup.clear();
                    sup.insert(sup.begin() + i, c.identity(obj));
                    images[i] = x.index_of(deg + 1, chain_key(c, sup));
                    if (images[i] < 0) throw Error("nerve: missing degeneracy image");
                }
                x.set_degeneracies(deg, static_cast<int>(s), std::move(images));
            }
        };
        if (k == 1) {
            std::vector<std::vector<int>> objs;
            for (int o = 0; o < c.num_objects(); ++o) objs.push_back({o});
            set_degens(0, objs);
        } else {
            set_degens(k - 1, prev);
        }
        prev = std::move(cur);
    }
    x.finalize();
    return x;
}

TruncatedSimplicialSet nerve(const PresentedCategory& c, int bound, const Bounds& budget) {
    PresentedCategory copy = c;
    copy.certify_confluence();
    EnumeratedCategory e = copy.enumerate();
    return nerve(e.cat, bound, budget);
}

SimplicialMap nerve_map(const FinCategory& src_cat, const TruncatedSimplicialSet& src,
                        const FinCategory& tgt_cat, const TruncatedSimplicialSet& tgt,
                        const RelFunctor& fun) {
    SimplicialMap out;
    out.src = &src;
    out.tgt = &tgt;
    out.map.resize(src.bound() + 1);
    for (int o = 0; o < src_cat.num_objects(); ++o) {
        int img = tgt.index_of(0, tgt_cat.object_name(fun.obj_map[o]));
        if (img < 0) throw Error("nerve_map: missing vertex image");
        out.map[0].push_back(img);
    }
    for (int k = 1; k <= src.bound(); ++k) {
        out.map[k].resize(src.count(k));
        for (int s = 0; s < src.count(k); ++s) {
            // decode the chain from the key
            std::string keystr = src.key(k, s);
            std::vector<int> chain;
            std::string cur;
            for (char ch : keystr) {
                if (ch == '&') {
                    chain.push_back(src_cat.morphism_index(cur));
                    cur.clear();
                } else
                    cur += ch;
            }
            chain.push_back(src_cat.morphism_index(cur));
            std::vector<int> image;
            for (int m : chain) image.push_back(fun.mor_map[m]);
            int img = tgt.index_of(k, chain_key(tgt_cat, image));
            if (img < 0) throw Error("nerve_map: missing simplex image");
            out.map[k][s] = img;
        }
    }
    return out;
}

TruncatedSimplicialSet classifying_complex(const FinMonoid& m, int bound, const Bounds& budget) {
    ValidationReport rep = validate_monoid(m);
    if (!rep.ok) throw Error("classifying_complex: " + rep.summary());
    std::vector<std::string> objects{"*"};
    std::vector<MorRec> mors;
    for (const auto& e : m.elements) mors.push_back({e, 0, 0});
    std::vector<std::array<int, 3>> entries;
    int n = static_cast<int>(m.elements.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) entries.push_back({a, b, m.mul(a, b)});
    FinCategory c = FinCategory::build(objects, mors, {m.elements[m.unit]}, entries);
    return nerve(c, bound, budget);
}

TruncatedSimplicialSet disjoint_union(const std::vector<const TruncatedSimplicialSet*>& parts) {
    if (parts.empty()) throw Error("disjoint_union: need at least one part");
    int bound = parts[0]->bound();
    for (const auto* p : parts)
        if (p->bound() != bound) throw Error("disjoint_union: truncation bounds differ");
    TruncatedSimplicialSet x(bound);
    std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(bound + 1, 0));
    for (int k = 0; k <= bound; ++k) {
        int off = 0;
        for (size_t p = 0; p < parts.size(); ++p) {
            offset[p][k] = off;
            for (int s = 0; s < parts[p]->count(k); ++s) {
                std::vector<int> faces;
                if (k > 0) {
                    faces.resize(k + 1);
                    for (int i = 0; i <= k; ++i)
                        faces[i] = offset[p][k - 1] + parts[p]->face(k, s, i);
                }
                x.add_simplex(k, std::to_string(p) + ":" + parts[p]->key(k, s), std::move(faces));
            }
            off += parts[p]->count(k);
        }
    }
    for (int k = 0; k < bound; ++k)
        for (size_t p = 0; p < parts.size(); ++p)
            for (int s = 0; s < parts[p]->count(k); ++s) {
                std::vector<int> images(k + 1);
                for (int i = 0; i <= k; ++i)
                    images[i] = offset[p][k + 1] + parts[p]->degeneracy(k, s, i);
                x.set_degeneracies(k, offset[p][k] + s, std::move(images));
            }
    x.finalize();
    return x;
}

SimplicialMap disjoint_union_inclusion(const std::vector<const TruncatedSimplicialSet*>& parts,
                                       const TruncatedSimplicialSet& total, int which) {
    SimplicialMap out;
    out.src = parts[which];
    out.tgt = &total;
    out.map.resize(parts[which]->bound() + 1);
    for (int k = 0; k <= parts[which]->bound(); ++k) {
        out.map[k].resize(parts[which]->count(k));
        for (int s = 0; s < parts[which]->count(k); ++s) {
            int idx = total.index_of(k, std::to_string(which) + ":" + parts[which]->key(k, s));
            if (idx < 0) throw Error("disjoint_union_inclusion: missing image");
            out.map[k][s] = idx;
        }
    }
    return out;
}

TruncatedSimplicialSet fiber_product(const SimplicialMap& f, const SimplicialMap& g,
                                     SimplicialMap* proj_x, SimplicialMap* proj_y) {
    if (f.tgt != g.tgt) throw Error("fiber_product: maps need a common codomain");
    const TruncatedSimplicialSet& X = *f.src;
    const TruncatedSimplicialSet& Y = *g.src;
    if (X.bound() != Y.bound()) throw Error("fiber_product: truncation bounds differ");
    int bound = X.bound();
    TruncatedSimplicialSet p(bound);
    std::vector<std::vector<std::pair<int, int>>> members(bound + 1);
    std::vector<std::map<std::pair<int, int>, int>> member_index(bound + 1);
    for (int k = 0; k <= bound; ++k) {
        // group Y-simplices by image so matching pairs enumerate in X-then-Y order
        std::map<int, std::vector<int>> y_by_image;
        for (int sy = 0; sy < Y.count(k); ++sy) y_by_image[g.map[k][sy]].push_back(sy);
        for (int sx = 0; sx < X.count(k); ++sx) {
            auto it = y_by_image.find(f.map[k][sx]);
            if (it == y_by_image.end()) continue;
            for (int sy : it->second) {
                std::vector<int> faces;
                if (k > 0) {
                    faces.resize(k + 1);
                    for (int i = 0; i <= k; ++i) {
                        auto fit = member_index[k - 1].find({X.face(k, sx, i), Y.face(k, sy, i)});
                        if (fit == member_index[k - 1].end())
                            throw Error("fiber_product: missing face");
                        faces[i] = fit->second;
                    }
                }
                member_index[k][{sx, sy}] = static_cast<int>(members[k].size());
                members[k].push_back({sx, sy});
                p.add_simplex(k, "(" + X.key(k, sx) + "," + Y.key(k, sy) + ")", std::move(faces));
            }
        }
    }
    for (int k = 0; k < bound; ++k)
        for (size_t s = 0; s < members[k].size(); ++s) {
            std::vector<int> images(k + 1);
            for (int i = 0; i <= k; ++i) {
                int ix = X.degeneracy(k, members[k][s].first, i);
                int iy = Y.degeneracy(k, members[k][s].second, i);
                int idx = p.index_of(k + 1, "(" + X.key(k + 1, ix) + "," + Y.key(k + 1, iy) + ")");
                if (idx < 0) throw Error("fiber_product: missing degeneracy");
                images[i] = idx;
            }
            p.set_degeneracies(k, static_cast<int>(s), std::move(images));
        }
    p.finalize();
    // projection source/target pointers are patched by the caller once the
    // product has a stable address
    if (proj_x) {
        proj_x->src = nullptr;
        proj_x->tgt = &X;
        proj_x->map.assign(bound + 1, {});
        for (int k = 0; k <= bound; ++k)
            for (auto& [sx, sy] : members[k]) proj_x->map[k].push_back(sx);
    }
    if (proj_y) {
        proj_y->src = nullptr;
        proj_y->tgt = &Y;
        proj_y->map.assign(bound + 1, {});
        for (int k = 0; k <= bound; ++k)
            for (auto& [sx, sy] : members[k]) proj_y->map[k].push_back(sy);
    }
    return p;
}

Pi0 pi0(const TruncatedSimplicialSet& x) {
    if (x.bound() < 1) throw Error("pi0: need 1-simplices");
    std::vector<int> parent(x.count(0));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < x.count(1); ++e) parent[find(x.face(1, e, 0))] = find(x.face(1, e, 1));
    Pi0 out;
    std::map<int, int> remap;
    out.component_of_vertex.resize(x.count(0));
    for (int v = 0; v < x.count(0); ++v) {
        int r = find(v);
        auto [it, fresh] = remap.emplace(r, static_cast<int>(remap.size()));
        out.component_of_vertex[v] = it->second;
    }
    out.components = static_cast<int>(remap.size());
    return out;
}

void validate_sset_diagram(const SSetDiagram& d) {
    const FinCategory& ix = *d.index;
    if (d.at_object.size() != static_cast<size_t>(ix.num_objects()) ||
        d.at_arrow.size() != static_cast<size_t>(ix.num_morphisms()))
        throw Error("sset diagram: wrong arity");
    for (int m = 0; m < ix.num_morphisms(); ++m) {
        const SimplicialMap& f = d.at_arrow[m];
        if (f.src != d.at_object[ix.morphism(m).src] || f.tgt != d.at_object[ix.morphism(m).tgt])
            throw Error("sset diagram: arrow " + ix.morphism(m).name + " has wrong endpoints");
        std::string bad = f.audit();
        if (!bad.empty())
            throw Error("sset diagram: arrow " + ix.morphism(m).name + " not simplicial: " + bad);
    }
    for (int o = 0; o < ix.num_objects(); ++o) {
        const SimplicialMap& f = d.at_arrow[ix.identity(o)];
        for (size_t k = 0; k < f.map.size(); ++k)
            for (size_t s = 0; s < f.map[k].size(); ++s)
                if (f.map[k][s] != static_cast<int>(s))
                    throw Error("sset diagram: identity arrow acts nontrivially");
    }
    for (int g = 0; g < ix.num_morphisms(); ++g)
        for (int f = 0; f < ix.num_morphisms(); ++f) {
            int h = ix.compose(g, f);
            if (h < 0) continue;
            SimplicialMap comp = SimplicialMap::compose(d.at_arrow[g], d.at_arrow[f]);
            if (comp.map != d.at_arrow[h].map)
                throw Error("sset diagram: functoriality fails at " + ix.morphism(g).name + " . " +
                            ix.morphism(f).name);
        }
}

namespace {

std::string hocolim_key(const FinCategory& ix, const std::vector<int>& chain, int start_obj,
                        const std::string& inner_key) {
    std::string out;
    if (chain.empty()) {
        out = ix.object_name(start_obj);
    } else {
        for (size_t i = 0; i < chain.size(); ++i) {
            if (i) out += "|";
            out += ix.morphism(chain[i]).name;
        }
    }
    out += ";";
    out += inner_key;
    return out;
}

}  // namespace

TruncatedSimplicialSet bousfield_kan_hocolim(const SSetDiagram& d, const Bounds& budget) {
    validate_sset_diagram(d);
    const FinCategory& ix = *d.index;
    int bound = d.at_object.empty() ? -1 : d.at_object[0]->bound();
    for (const auto* x : d.at_object)
        if (x->bound() != bound) throw Error("bousfield_kan_hocolim: truncation bounds differ");

    TruncatedSimplicialSet h(bound);
    // enumerate (chain, inner simplex) pairs per degree; chains of degree k are
    // k-tuples of composable index morphisms (identities allowed)
    std::vector<std::vector<std::pair<std::vector<int>, int>>> data(bound + 1);
    long used = 0;
    for (int k = 0; k <= bound; ++k) {
        std::vector<std::pair<std::vector<int>, int>> items;
        if (k == 0) {
            for (int o = 0; o < ix.num_objects(); ++o)
                for (int s = 0; s < d.at_object[o]->count(0); ++s) items.push_back({{o}, s});
            // keep (object) chains encoded as a single object id at degree 0
        } else {
            std::vector<std::vector<int>> chains;
            {
                std::vector<std::vector<int>> cur;
                for (int m = 0; m < ix.num_morphisms(); ++m) cur.push_back({m});
                for (int step = 1; step < k; ++step) {
                    std::vector<std::vector<int>> next;
                    for (const auto& ch : cur)
                        for (int m = 0; m < ix.num_morphisms(); ++m)
                            if (ix.morphism(m).src == ix.morphism(ch.back()).tgt) {
                                auto e = ch;
                                e.push_back(m);
                                next.push_back(std::move(e));
                            }
                    cur = std::move(next);
                }
                chains = std::move(cur);
            }
            for (const auto& ch : chains) {
                int start = ix.morphism(ch[0]).src;
                for (int s = 0; s < d.at_object[start]->count(k); ++s) items.push_back({ch, s});
            }
        }
        std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
            int sa = k == 0 ? a.first[0] : ix.morphism(a.first[0]).src;
            int sb = k == 0 ? b.first[0] : ix.morphism(b.first[0]).src;
            std::string ka = hocolim_key(ix, k == 0 ? std::vector<int>{} : a.first,
                                         k == 0 ? a.first[0] : sa,
                                         d.at_object[sa]->key(k, a.second));
            std::string kb = hocolim_key(ix, k == 0 ? std::vector<int>{} : b.first,
                                         k == 0 ? b.first[0] : sb,
                                         d.at_object[sb]->key(k, b.second));
            return ka < kb;
        });
        used += static_cast<long>(items.size());
        if (used > budget.simplex_budget) throw BudgetError("bousfield_kan_hocolim: budget exceeded");

        for (const auto& [chain, inner] : items) {
            int start = k == 0 ? chain[0] : ix.morphism(chain[0]).src;
            std::vector<int> faces;
            if (k > 0) {
                faces.resize(k + 1);
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> fchain;
                    int fstart;
                    int finner;
                    if (i == 0) {
                        fchain.assign(chain.begin() + 1, chain.end());
                        fstart = ix.morphism(chain[0]).tgt;
                        finner = d.at_arrow[chain[0]].map[k - 1][d.at_object[start]->face(k, inner, 0)];
                    } else {
                        if (i == k)
                            fchain.assign(chain.begin(), chain.end() - 1);
                        else {
                            fchain = chain;
                            fchain[i - 1] = ix.compose(chain[i], chain[i - 1]);
                            fchain.erase(fchain.begin() + i);
                        }
                        fstart = start;
                        finner = d.at_object[start]->face(k, inner, i);
                    }
                    std::string fkey =
                        k - 1 == 0 ? hocolim_key(ix, {}, fstart, d.at_object[fstart]->key(0, finner))
                                   : hocolim_key(ix, fchain, fstart, d.at_object[fstart]->key(k - 1, finner));
                    faces[i] = h.index_of(k - 1, fkey);
                    if (faces[i] < 0) throw Error("bousfield_kan_hocolim: missing face " + fkey);
                }
            }
            std::string key = k == 0 ? hocolim_key(ix, {}, start, d.at_object[start]->key(0, inner))
                                     : hocolim_key(ix, chain, start, d.at_object[start]->key(k, inner));
            h.add_simplex(k, key, std::move(faces));
            data[k].push_back({chain, inner});
        }
    }
    // degeneracies
    for (int k = 0; k < bound; ++k) {
        for (size_t s = 0; s < data[k].size(); ++s) {
            const auto& [chain, inner] = data[k][s];
            int start = k == 0 ? chain[0] : ix.morphism(chain[0]).src;
            std::vector<int> images(k + 1);
            for (int i = 0; i <= k; ++i) {
                std::vector<int> dchain;
                if (k == 0) {
                    dchain = {ix.identity(start)};
                } else {
                    dchain = chain;
                    int obj = i == 0 ? start : ix.morphism(chain[i - 1]).tgt;
                    dchain.insert(dchain.begin() + i, ix.identity(obj));
                }
                int dinner = d.at_object[start]->degeneracy(k, inner, i);
                std::string dkey = hocolim_key(ix, dchain, start, d.at_object[start]->key(k + 1, dinner));
                int idx = h.index_of(k + 1, dkey);
                if (idx < 0) throw Error("bousfield_kan_hocolim: missing degeneracy " + dkey);
                images[i] = idx;
            }
            h.set_degeneracies(k, static_cast<int>(s), std::move(images));
        }
    }
    h.finalize();
    return h;
}

void hocolim_decode(const SSetDiagram& d, const TruncatedSimplicialSet& h, int k, int s,
                    std::vector<int>& chain_arrows, int& start_obj, int& inner_simplex) {
    const FinCategory& ix = *d.index;
    const std::string& key = h.key(k, s);
    size_t semi = key.find(';');
    std::string head = key.substr(0, semi);
    std::string tail = key.substr(semi + 1);
    chain_arrows.clear();
    if (k == 0) {
        start_obj = ix.object_index(head);
    } else {
        std::string cur;
        for (char ch : head) {
            if (ch == '|') {
                chain_arrows.push_back(ix.morphism_index(cur));
                cur.clear();
            } else
                cur += ch;
        }
        chain_arrows.push_back(ix.morphism_index(cur));
        start_obj = ix.morphism(chain_arrows[0]).src;
    }
    inner_simplex = d.at_object[start_obj]->index_of(k, tail);
    if (inner_simplex < 0) throw Error("hocolim_decode: unknown inner simplex");
}

SimplicialMap hocolim_cocone_map(const SSetDiagram& d, const TruncatedSimplicialSet& h,
                                 const TruncatedSimplicialSet& target,
                                 const std::vector<SimplicialMap>& cocone) {
    const FinCategory& ix = *d.index;
    // strictness audit: c_tgt ∘ X(u) = c_src
    for (int m = 0; m < ix.num_morphisms(); ++m) {
        SimplicialMap lhs = SimplicialMap::compose(cocone[ix.morphism(m).tgt], d.at_arrow[m]);
        if (lhs.map != cocone[ix.morphism(m).src].map)
            throw Error("hocolim_cocone_map: cocone not strict at " + ix.morphism(m).name);
    }
    SimplicialMap out;
    out.src = &h;
    out.tgt = &target;
    out.map.resize(h.bound() + 1);
    for (int k = 0; k <= h.bound(); ++k) {
        out.map[k].resize(h.count(k));
        for (int s = 0; s < h.count(k); ++s) {
            std::vector<int> chain;
            int start, inner;
            hocolim_decode(d, h, k, s, chain, start, inner);
            out.map[k][s] = cocone[start].map[k][inner];
        }
    }
    return out;
}

TruncatedSimplicialSet strict_colimit(const SSetDiagram& d, std::vector<SimplicialMap>* cocone) {
    const FinCategory& ix = *d.index;
    int bound = d.at_object[0]->bound();
    // union-find over the disjoint union, gluing x ~ X(u)(x)
    std::vector<std::vector<int>> offset(ix.num_objects(), std::vector<int>(bound + 1, 0));
    std::vector<int> totals(bound + 1, 0);
    for (int k = 0; k <= bound; ++k) {
        int off = 0;
        for (int o = 0; o < ix.num_objects(); ++o) {
            offset[o][k] = off;
            off += d.at_object[o]->count(k);
        }
        totals[k] = off;
    }
    std::vector<std::vector<int>> parent(bound + 1);
    for (int k = 0; k <= bound; ++k) {
        parent[k].resize(totals[k]);
        std::iota(parent[k].begin(), parent[k].end(), 0);
    }
    std::function<int(int, int)> find = [&](int k, int v) {
        while (parent[k][v] != v) v = parent[k][v] = parent[k][parent[k][v]];
        return v;
    };
    for (int m = 0; m < ix.num_morphisms(); ++m) {
        int so = ix.morphism(m).src, to = ix.morphism(m).tgt;
        for (int k = 0; k <= bound; ++k)
            for (int s = 0; s < d.at_object[so]->count(k); ++s) {
                int a = offset[so][k] + s;
                int b = offset[to][k] + d.at_arrow[m].map[k][s];
                parent[k][find(k, a)] = find(k, b);
            }
    }
    // representative key: lexicographically least member key
    TruncatedSimplicialSet x(bound);
    std::vector<std::map<int, std::string>> rep_key(bound + 1);
    std::vector<std::map<int, int>> rep_index(bound + 1);
    for (int k = 0; k <= bound; ++k) {
        for (int o = 0; o < ix.num_objects(); ++o)
            for (int s = 0; s < d.at_object[o]->count(k); ++s) {
                int r = find(k, offset[o][k] + s);
                std::string key = ix.object_name(o) + ":" + d.at_object[o]->key(k, s);
                auto it = rep_key[k].find(r);
                if (it == rep_key[k].end() || key < it->second) rep_key[k][r] = key;
            }
    }
    // create simplices in key order; compute faces through representatives
    for (int k = 0; k <= bound; ++k) {
        std::vector<std::pair<std::string, int>> order;
        for (auto& [r, key] : rep_key[k]) order.push_back({key, r});
        std::sort(order.begin(), order.end());
        for (auto& [key, r] : order) {
            std::vector<int> faces;
            if (k > 0) {
                // take any member to compute faces (well-defined: gluing is simplicial)
                int member = -1, member_obj = -1;
                for (int o = 0; o < ix.num_objects() && member < 0; ++o)
                    for (int s = 0; s < d.at_object[o]->count(k); ++s)
                        if (find(k, offset[o][k] + s) == r) {
                            member = s;
                            member_obj = o;
                            break;
                        }
                faces.resize(k + 1);
                for (int i = 0; i <= k; ++i) {
                    int fr = find(k - 1, offset[member_obj][k - 1] +
                                             d.at_object[member_obj]->face(k, member, i));
                    faces[i] = rep_index[k - 1].at(fr);
                }
            }
            rep_index[k][r] = x.add_simplex(k, key, std::move(faces));
        }
    }
    for (int k = 0; k < bound; ++k)
        for (int o = 0; o < ix.num_objects(); ++o)
            for (int s = 0; s < d.at_object[o]->count(k); ++s) {
                int r = find(k, offset[o][k] + s);
                int idx = rep_index[k].at(r);
                std::vector<int> images(k + 1);
                for (int i = 0; i <= k; ++i) {
                    int dr = find(k + 1, offset[o][k + 1] + d.at_object[o]->degeneracy(k, s, i));
                    images[i] = rep_index[k + 1].at(dr);
                }
                x.set_degeneracies(k, idx, std::move(images));
            }
    x.finalize();
    if (cocone) {
        cocone->clear();
        for (int o = 0; o < ix.num_objects(); ++o) {
            SimplicialMap c;
            c.src = d.at_object[o];
            c.tgt = nullptr;  // caller patches pointers once x is stored
            c.map.resize(bound + 1);
            for (int k = 0; k <= bound; ++k) {
                c.map[k].resize(d.at_object[o]->count(k));
                for (int s = 0; s < d.at_object[o]->count(k); ++s)
                    c.map[k][s] = rep_index[k].at(find(k, offset[o][k] + s));
            }
            cocone->push_back(std::move(c));
        }
    }
    return x;
}

void TruncatedBisimplicialSet::patch() {
    for (int n = 1; n <= outer_bound; ++n)
        for (auto& f : outer_face[n]) {
            f.src = &level[n];
            f.tgt = &level[n - 1];
        }
    for (int n = 0; n < outer_bound; ++n)
        for (auto& f : outer_degeneracy[n]) {
            f.src = &level[n];
            f.tgt = &level[n + 1];
        }
}

std::string TruncatedBisimplicialSet::audit() const {
    std::ostringstream bad;
    for (int n = 2; n <= outer_bound; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                SimplicialMap a = SimplicialMap::compose(outer_face[n - 1][i], outer_face[n][j]);
                SimplicialMap b = SimplicialMap::compose(outer_face[n - 1][j - 1], outer_face[n][i]);
                if (a.map != b.map) bad << "outer d" << i << "d" << j << " at level " << n << "; ";
            }
    for (int n = 0; n < outer_bound; ++n)
        for (int i = 0; i <= n; ++i) {
            SimplicialMap a = SimplicialMap::compose(outer_face[n + 1][i], outer_degeneracy[n][i]);
            SimplicialMap b = SimplicialMap::compose(outer_face[n + 1][i + 1], outer_degeneracy[n][i]);
            for (size_t k = 0; k < a.map.size(); ++k)
                for (size_t s = 0; s < a.map[k].size(); ++s)
                    if (a.map[k][s] != static_cast<int>(s) || b.map[k][s] != static_cast<int>(s)) {
                        bad << "outer d s at level " << n << "; ";
                        k = a.map.size();
                        break;
                    }
        }
    return bad.str();
}

TruncatedBisimplicialSet hocolim_bisimplicial(const BisimplicialDiagram& d, const Bounds& budget) {
    const FinCategory& ix = *d.index;
    int outer = d.at_object[0]->outer_bound;
    for (const auto* w : d.at_object)
        if (w->outer_bound != outer) throw Error("hocolim_bisimplicial: outer bounds differ");

    TruncatedBisimplicialSet out;
    out.outer_bound = outer;
    out.level.resize(outer + 1);
    std::vector<SSetDiagram> per_level(outer + 1);
    for (int n = 0; n <= outer; ++n) {
        SSetDiagram dn;
        dn.index = d.index;
        for (const auto* w : d.at_object) dn.at_object.push_back(&w->level[n]);
        for (int m = 0; m < ix.num_morphisms(); ++m) dn.at_arrow.push_back(d.at_arrow[m][n]);
        per_level[n] = dn;
        out.level[n] = bousfield_kan_hocolim(dn, budget);
    }
    // outer structure maps: act on the inner part, keep the chain
    auto induced = [&](int n_from, int n_to, bool is_face, int i) {
        SimplicialMap f;
        f.src = &out.level[n_from];
        f.tgt = &out.level[n_to];
        f.map.resize(out.level[n_from].bound() + 1);
        for (int k = 0; k <= out.level[n_from].bound(); ++k) {
            f.map[k].resize(out.level[n_from].count(k));
            for (int s = 0; s < out.level[n_from].count(k); ++s) {
                std::vector<int> chain;
                int start, inner;
                hocolim_decode(per_level[n_from], out.level[n_from], k, s, chain, start, inner);
                const SimplicialMap& comp = is_face
                                                ? d.at_object[start]->outer_face[n_from][i]
                                                : d.at_object[start]->outer_degeneracy[n_from][i];
                int image_inner = comp.map[k][inner];
                std::string key = k == 0
                                      ? hocolim_key(ix, {}, start,
                                                    d.at_object[start]->level[n_to].key(0, image_inner))
                                      : hocolim_key(ix, chain, start,
                                                    d.at_object[start]->level[n_to].key(k, image_inner));
                int idx = out.level[n_to].index_of(k, key);
                if (idx < 0) throw Error("hocolim_bisimplicial: missing outer image");
                f.map[k][s] = idx;
            }
        }
        return f;
    };
    out.outer_face.resize(outer + 1);
    out.outer_degeneracy.resize(outer + 1);
    for (int n = 1; n <= outer; ++n)
        for (int i = 0; i <= n; ++i) out.outer_face[n].push_back(induced(n, n - 1, true, i));
    for (int n = 0; n < outer; ++n)
        for (int i = 0; i <= n; ++i) out.outer_degeneracy[n].push_back(induced(n, n + 1, false, i));
    return out;
}

}  // namespace relcat
