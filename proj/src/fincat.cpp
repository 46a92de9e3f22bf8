#include "relcat/fincat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace relcat {

Bounds Bounds::defaults() {
    Bounds b;
    if (const char* env = std::getenv("RELCAT_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) b.simplex_budget = v;
    }
    return b;
}

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << issues.size() << " issue(s):";
    for (const auto& i : issues) out << " [" << i.kind << "] " << i.detail << ";";
    return out.str();
}

FinCategory FinCategory::build(std::vector<std::string> objects,
                               std::vector<MorRec> morphisms,
                               const std::vector<std::string>& identity_names,
                               const std::vector<std::array<int, 3>>& compose_entries) {
    if (objects.size() != identity_names.size())
        throw Error("FinCategory::build: one identity per object required");

    // keep caller's index space while sorting: remember permutations
    std::vector<int> obj_perm(objects.size());
    std::iota(obj_perm.begin(), obj_perm.end(), 0);
    std::sort(obj_perm.begin(), obj_perm.end(),
              [&](int a, int b) { return objects[a] < objects[b]; });
    std::vector<int> obj_new(objects.size());
    for (size_t i = 0; i < obj_perm.size(); ++i) obj_new[obj_perm[i]] = static_cast<int>(i);

    std::vector<int> mor_perm(morphisms.size());
    std::iota(mor_perm.begin(), mor_perm.end(), 0);
    std::sort(mor_perm.begin(), mor_perm.end(),
              [&](int a, int b) { return morphisms[a].name < morphisms[b].name; });
    std::vector<int> mor_new(morphisms.size());
    for (size_t i = 0; i < mor_perm.size(); ++i) mor_new[mor_perm[i]] = static_cast<int>(i);

    FinCategory c;
    c.objects_.resize(objects.size());
    for (size_t i = 0; i < objects.size(); ++i) c.objects_[obj_new[i]] = objects[i];
    c.morphisms_.resize(morphisms.size());
    for (size_t i = 0; i < morphisms.size(); ++i) {
        MorRec r = morphisms[i];
        r.src = obj_new[r.src];
        r.tgt = obj_new[r.tgt];
        c.morphisms_[mor_new[i]] = r;
    }
    for (size_t i = 0; i < c.objects_.size(); ++i) {
        if (!c.obj_index_.emplace(c.objects_[i], static_cast<int>(i)).second)
            throw Error("duplicate object id: " + c.objects_[i]);
    }
    for (size_t i = 0; i < c.morphisms_.size(); ++i) {
        if (!c.mor_index_.emplace(c.morphisms_[i].name, static_cast<int>(i)).second)
            throw Error("duplicate morphism id: " + c.morphisms_[i].name);
    }

    c.identity_.assign(c.objects_.size(), -1);
    for (size_t i = 0; i < identity_names.size(); ++i) {
        int obj = obj_new[i];
        int m = c.morphism_index(identity_names[i]);
        if (m < 0) throw Error("identity morphism not declared: " + identity_names[i]);
        c.identity_[obj] = m;
    }

    int n = c.num_morphisms();
    c.compose_.assign(n, std::vector<int>(n, -1));
    for (const auto& e : compose_entries) {
        int g = mor_new[e[0]], f = mor_new[e[1]], h = mor_new[e[2]];
        if (c.compose_[g][f] != -1 && c.compose_[g][f] != h)
            throw Error("conflicting composition entries for " + c.morphisms_[g].name + " . " +
                        c.morphisms_[f].name);
        c.compose_[g][f] = h;
    }
    // identity laws fill the table rows/columns the input may omit
    for (int m = 0; m < n; ++m) {
        int s = c.morphisms_[m].src, t = c.morphisms_[m].tgt;
        c.compose_[m][c.identity_[s]] = m;
        c.compose_[c.identity_[t]][m] = m;
    }
    return c;
}

int FinCategory::object_index(const std::string& name) const {
    auto it = obj_index_.find(name);
    return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& name) const {
    auto it = mor_index_.find(name);
    return it == mor_index_.end() ? -1 : it->second;
}

std::vector<int> FinCategory::morphisms_from(int obj) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (morphisms_[m].src == obj) out.push_back(m);
    return out;
}

std::vector<int> FinCategory::morphisms_between(int src, int tgt) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (morphisms_[m].src == src && morphisms_[m].tgt == tgt) out.push_back(m);
    return out;
}

ValidationReport validate_category(const FinCategory& cat) {
    ValidationReport rep;
    auto issue = [&](const std::string& kind, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({kind, detail});
    };

    for (int o = 0; o < cat.num_objects(); ++o) {
        int id = cat.identity(o);
        if (id < 0) {
            issue("identity", "object " + cat.object_name(o) + " has no identity");
            continue;
        }
        if (cat.morphism(id).src != o || cat.morphism(id).tgt != o)
            issue("identity", "identity of " + cat.object_name(o) + " is not an endomorphism");
    }

    int n = cat.num_morphisms();
    for (int g = 0; g < n; ++g) {
        for (int f = 0; f < n; ++f) {
            int h = cat.compose(g, f);
            bool composable = cat.morphism(f).tgt == cat.morphism(g).src;
            if (composable && h < 0)
                issue("missing-composite",
                      cat.morphism(g).name + " . " + cat.morphism(f).name + " undefined");
            if (!composable && h >= 0)
                issue("spurious-composite",
                      cat.morphism(g).name + " . " + cat.morphism(f).name + " defined but not composable");
            if (composable && h >= 0) {
                if (cat.morphism(h).src != cat.morphism(f).src ||
                    cat.morphism(h).tgt != cat.morphism(g).tgt)
                    issue("composite-endpoints",
                          cat.morphism(g).name + " . " + cat.morphism(f).name + " = " +
                              cat.morphism(h).name + " has wrong endpoints");
            }
        }
    }
    if (!rep.ok) return rep;

    for (int m = 0; m < n; ++m) {
        int s = cat.morphism(m).src, t = cat.morphism(m).tgt;
        if (cat.compose(m, cat.identity(s)) != m)
            issue("identity-law", cat.morphism(m).name + " . id != " + cat.morphism(m).name);
        if (cat.compose(cat.identity(t), m) != m)
            issue("identity-law", "id . " + cat.morphism(m).name + " != " + cat.morphism(m).name);
    }

    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            if (cat.morphism(g).tgt != cat.morphism(h).src) continue;
            int hg = cat.compose(h, g);
            for (int f = 0; f < n; ++f) {
                if (cat.morphism(f).tgt != cat.morphism(g).src) continue;
                int gf = cat.compose(g, f);
                if (cat.compose(h, gf) != cat.compose(hg, f))
                    issue("associativity",
                          "(" + cat.morphism(h).name + " . " + cat.morphism(g).name + ") . " +
                              cat.morphism(f).name + " differs from right association");
            }
        }
    return rep;
}

ValidationReport validate_relative(const RelativeCategory& rc) {
    ValidationReport rep = validate_category(rc.cat);
    auto issue = [&](const std::string& kind, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({kind, detail});
    };
    if (rc.marked.size() != static_cast<size_t>(rc.cat.num_morphisms())) {
        issue("marking", "marking vector has wrong length");
        return rep;
    }
    for (int o = 0; o < rc.cat.num_objects(); ++o)
        if (!rc.marked[rc.cat.identity(o)])
            issue("marking-identity", "identity of " + rc.cat.object_name(o) + " not marked");
    int n = rc.cat.num_morphisms();
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            int h = rc.cat.compose(g, f);
            if (h >= 0 && rc.marked[g] && rc.marked[f] && !rc.marked[h])
                issue("marking-closure", rc.cat.morphism(g).name + " . " + rc.cat.morphism(f).name +
                                             " = " + rc.cat.morphism(h).name + " unmarked");
        }
    return rep;
}

RelFunctor RelFunctor::identity(const FinCategory& c) {
    RelFunctor f;
    f.obj_map.resize(c.num_objects());
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    f.mor_map.resize(c.num_morphisms());
    std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
    return f;
}

ValidationReport validate_functor(const FinCategory& src, const FinCategory& tgt,
                                  const RelFunctor& fun) {
    ValidationReport rep;
    auto issue = [&](const std::string& kind, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({kind, detail});
    };
    if (fun.obj_map.size() != static_cast<size_t>(src.num_objects()) ||
        fun.mor_map.size() != static_cast<size_t>(src.num_morphisms())) {
        issue("functor", "map sizes do not match source category");
        return rep;
    }
    for (int m = 0; m < src.num_morphisms(); ++m) {
        int fm = fun.mor_map[m];
        if (fm < 0 || fm >= tgt.num_morphisms()) {
            issue("functor", "morphism image out of range: " + src.morphism(m).name);
            continue;
        }
        if (tgt.morphism(fm).src != fun.obj_map[src.morphism(m).src] ||
            tgt.morphism(fm).tgt != fun.obj_map[src.morphism(m).tgt])
            issue("functor-endpoints", "image of " + src.morphism(m).name + " has wrong endpoints");
    }
    if (!rep.ok) return rep;
    for (int o = 0; o < src.num_objects(); ++o)
        if (fun.mor_map[src.identity(o)] != tgt.identity(fun.obj_map[o]))
            issue("functor-identity", "identity of " + src.object_name(o) + " not preserved");
    for (int g = 0; g < src.num_morphisms(); ++g)
        for (int f = 0; f < src.num_morphisms(); ++f) {
            int h = src.compose(g, f);
            if (h < 0) continue;
            if (tgt.compose(fun.mor_map[g], fun.mor_map[f]) != fun.mor_map[h])
                issue("functor-composition", "composition not preserved at " + src.morphism(g).name +
                                                 " . " + src.morphism(f).name);
        }
    return rep;
}

bool functor_preserves_marking(const RelativeCategory& src, const RelativeCategory& tgt,
                               const RelFunctor& fun) {
    for (int m = 0; m < src.cat.num_morphisms(); ++m)
        if (src.marked[m] && !tgt.marked[fun.mor_map[m]]) return false;
    return true;
}

RelFunctor compose_functors(const RelFunctor& second, const RelFunctor& first) {
    RelFunctor out;
    out.obj_map.resize(first.obj_map.size());
    out.mor_map.resize(first.mor_map.size());
    for (size_t i = 0; i < first.obj_map.size(); ++i) out.obj_map[i] = second.obj_map[first.obj_map[i]];
    for (size_t i = 0; i < first.mor_map.size(); ++i) out.mor_map[i] = second.mor_map[first.mor_map[i]];
    return out;
}

bool functors_equal(const RelFunctor& a, const RelFunctor& b) {
    return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

ValidationReport validate_monoid(const FinMonoid& m) {
    ValidationReport rep;
    auto issue = [&](const std::string& kind, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({kind, detail});
    };
    int n = static_cast<int>(m.elements.size());
    if (m.unit < 0 || m.unit >= n) {
        issue("monoid", "missing unit");
        return rep;
    }
    for (int a = 0; a < n; ++a) {
        if (m.mul(m.unit, a) != a || m.mul(a, m.unit) != a)
            issue("monoid-unit", "unit law fails at " + m.elements[a]);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
                    issue("monoid-associativity",
                          m.elements[a] + "," + m.elements[b] + "," + m.elements[c]);
                }
    }
    return rep;
}

namespace {

std::string join_ids(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += parts[i];
    }
    return out;
}

}  // namespace

RelativeCategory arrow_category_power(const RelativeCategory& m, int n, const Bounds& bounds) {
    if (n < 0) throw Error("arrow_category_power: negative exponent");
    const FinCategory& c = m.cat;

    // objects: composable n-chains (objects themselves for n = 0)
    std::vector<std::vector<int>> chains;  // entries are morphism ids (or object id for n = 0)
    if (n == 0) {
        for (int o = 0; o < c.num_objects(); ++o) chains.push_back({o});
    } else {
        std::vector<std::vector<int>> frontier;
        for (int f = 0; f < c.num_morphisms(); ++f) frontier.push_back({f});
        for (int step = 1; step < n; ++step) {
            std::vector<std::vector<int>> next;
            for (const auto& ch : frontier)
                for (int g = 0; g < c.num_morphisms(); ++g)
                    if (c.morphism(g).src == c.morphism(ch.back()).tgt) {
                        auto e = ch;
                        e.push_back(g);
                        next.push_back(std::move(e));
                    }
            frontier = std::move(next);
            if (static_cast<long>(frontier.size()) > bounds.simplex_budget)
                throw BudgetError("arrow_category_power: chain budget exceeded");
        }
        chains = std::move(frontier);
    }

    auto chain_obj_at = [&](const std::vector<int>& ch, int level) {
        if (n == 0) return ch[0];
        return level == 0 ? c.morphism(ch[0]).src : c.morphism(ch[level - 1]).tgt;
    };

    std::vector<std::string> obj_names;
    obj_names.reserve(chains.size());
    for (const auto& ch : chains) {
        std::vector<std::string> parts;
        if (n == 0) {
            parts.push_back(c.object_name(ch[0]));
        } else {
            for (int f : ch) parts.push_back(c.morphism(f).name);
        }
        obj_names.push_back(join_ids(parts));
    }

    std::vector<int> order(chains.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return obj_names[a] < obj_names[b]; });
    std::vector<std::vector<int>> sorted_chains;
    std::vector<std::string> sorted_names;
    for (int i : order) {
        sorted_chains.push_back(chains[i]);
        sorted_names.push_back(obj_names[i]);
    }
    chains = std::move(sorted_chains);
    obj_names = std::move(sorted_names);

    // morphisms: ladders (u_0,...,u_n) with every square commuting
    std::vector<MorRec> mors;
    std::vector<std::vector<int>> ladders;
    std::vector<std::pair<int, int>> endpoints;
    long budget_used = 0;
    for (size_t a = 0; a < chains.size(); ++a) {
        for (size_t b = 0; b < chains.size(); ++b) {
            // enumerate tuples level by level, pruning with the square condition
            std::vector<std::vector<int>> partial{{}};
            for (int level = 0; level <= n; ++level) {
                std::vector<std::vector<int>> next;
                int so = chain_obj_at(chains[a], level);
                int to = chain_obj_at(chains[b], level);
                for (const auto& p : partial) {
                    for (int u : c.morphisms_between(so, to)) {
                        if (level > 0) {
                            // square: chain_b[level-1] ∘ u_{level-1} = u_level ∘ chain_a[level-1]
                            int lhs = c.compose(chains[b][level - 1], p[level - 1]);
                            int rhs = c.compose(u, chains[a][level - 1]);
                            if (lhs != rhs) continue;
                        }
                        auto e = p;
                        e.push_back(u);
                        next.push_back(std::move(e));
                    }
                }
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (auto& tup : partial) {
                std::vector<std::string> parts;
                for (int u : tup) parts.push_back(c.morphism(u).name);
                mors.push_back({obj_names[a] + ">" + obj_names[b] + ">" + join_ids(parts),
                                static_cast<int>(a), static_cast<int>(b)});
                ladders.push_back(tup);
                endpoints.push_back({static_cast<int>(a), static_cast<int>(b)});
                if (++budget_used > bounds.simplex_budget)
                    throw BudgetError("arrow_category_power: ladder budget exceeded");
            }
        }
    }

    // identities and composition are componentwise
    std::map<std::vector<int>, std::map<std::pair<int, int>, int>> ladder_index;
    for (size_t i = 0; i < ladders.size(); ++i) ladder_index[ladders[i]][endpoints[i]] = static_cast<int>(i);

    std::vector<std::string> identity_names(chains.size());
    for (size_t a = 0; a < chains.size(); ++a) {
        std::vector<int> idt;
        for (int level = 0; level <= n; ++level) idt.push_back(c.identity(chain_obj_at(chains[a], level)));
        identity_names[a] = mors[ladder_index[idt][{static_cast<int>(a), static_cast<int>(a)}]].name;
    }

    std::vector<std::array<int, 3>> entries;
    for (size_t g = 0; g < ladders.size(); ++g)
        for (size_t f = 0; f < ladders.size(); ++f) {
            if (endpoints[f].second != endpoints[g].first) continue;
            std::vector<int> comp(n + 1);
            for (int level = 0; level <= n; ++level) comp[level] = c.compose(ladders[g][level], ladders[f][level]);
            int h = ladder_index[comp][{endpoints[f].first, endpoints[g].second}];
            entries.push_back({static_cast<int>(g), static_cast<int>(f), h});
        }

    RelativeCategory out;
    out.cat = FinCategory::build(obj_names, mors, identity_names, entries);
    out.marked.assign(out.cat.num_morphisms(), false);
    for (size_t i = 0; i < ladders.size(); ++i) {
        bool all = true;
        for (int u : ladders[i]) all = all && m.marked[u];
        out.marked[out.cat.morphism_index(mors[i].name)] = all;
    }
    return out;
}

std::vector<int> power_object_chain(const RelativeCategory& m, int n, const std::string& obj_name) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&]() {
        if (n == 0)
            out.push_back(m.cat.object_index(cur));
        else
            out.push_back(m.cat.morphism_index(cur));
        cur.clear();
    };
    for (char ch : obj_name) {
        if (ch == '|')
            flush();
        else
            cur += ch;
    }
    flush();
    for (int v : out)
        if (v < 0) throw Error("power_object_chain: unknown id in " + obj_name);
    return out;
}

std::string power_object_name_of(const RelativeCategory& m, int n, const std::vector<int>& chain) {
    std::vector<std::string> parts;
    for (int v : chain) parts.push_back(n == 0 ? m.cat.object_name(v) : m.cat.morphism(v).name);
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += parts[i];
    }
    return out;
}

std::vector<int> power_object_vertices(const RelativeCategory& m, int n, const std::string& obj_name) {
    std::vector<int> chain = power_object_chain(m, n, obj_name);
    std::vector<int> out;
    if (n == 0) {
        out.push_back(chain[0]);
    } else {
        out.push_back(m.cat.morphism(chain[0]).src);
        for (int f : chain) out.push_back(m.cat.morphism(f).tgt);
    }
    return out;
}

namespace {

/* Ladder component names of a power-category morphism: the part after the
 * second '>' separator, split on '|'. */
std::vector<std::string> ladder_parts(const std::string& mor_name) {
    size_t p1 = mor_name.find('>');
    size_t p2 = mor_name.find('>', p1 + 1);
    std::string tail = mor_name.substr(p2 + 1);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : tail) {
        if (ch == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::vector<int> power_morphism_components(const RelativeCategory& m, const RelativeCategory& pow,
                                           int mor) {
    auto parts = ladder_parts(pow.cat.morphism(mor).name);
    std::vector<int> out;
    for (const auto& p : parts) out.push_back(m.cat.morphism_index(p));
    return out;
}

int power_morphism_index(const RelativeCategory& m, const RelativeCategory& pow,
                         const std::string& src_obj, const std::string& tgt_obj,
                         const std::vector<int>& components) {
    std::string name = src_obj + ">" + tgt_obj + ">";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) name += "|";
        name += m.cat.morphism(components[i]).name;
    }
    return pow.cat.morphism_index(name);
}

RelFunctor power_functor(const RelativeCategory& src, const RelativeCategory& src_pow,
                         const RelativeCategory& tgt, const RelativeCategory& tgt_pow,
                         const RelFunctor& fun, int n) {
    RelFunctor out;
    out.obj_map.resize(src_pow.cat.num_objects());
    out.mor_map.resize(src_pow.cat.num_morphisms());
    for (int o = 0; o < src_pow.cat.num_objects(); ++o) {
        auto chain = power_object_chain(src, n, src_pow.cat.object_name(o));
        std::vector<int> image;
        for (int v : chain) image.push_back(n == 0 ? fun.obj_map[v] : fun.mor_map[v]);
        int io = tgt_pow.cat.object_index(power_object_name_of(tgt, n, image));
        if (io < 0) throw Error("power_functor: image object missing");
        out.obj_map[o] = io;
    }
    for (int m = 0; m < src_pow.cat.num_morphisms(); ++m) {
        auto parts = ladder_parts(src_pow.cat.morphism(m).name);
        std::vector<std::string> image_parts;
        for (const auto& p : parts)
            image_parts.push_back(tgt.cat.morphism(fun.mor_map[src.cat.morphism_index(p)]).name);
        const auto& srec = src_pow.cat.morphism(m);
        std::string name = tgt_pow.cat.object_name(out.obj_map[srec.src]) + ">" +
                           tgt_pow.cat.object_name(out.obj_map[srec.tgt]) + ">";
        for (size_t i = 0; i < image_parts.size(); ++i) {
            if (i) name += "|";
            name += image_parts[i];
        }
        int im = tgt_pow.cat.morphism_index(name);
        if (im < 0) throw Error("power_functor: image morphism missing");
        out.mor_map[m] = im;
    }
    return out;
}

namespace {

RelFunctor power_outer_map(const RelativeCategory& m, const RelativeCategory& from,
                           const RelativeCategory& to, int n_from, int n_to,
                           bool face, int i) {
    const FinCategory& c = m.cat;
    RelFunctor out;
    out.obj_map.resize(from.cat.num_objects());
    out.mor_map.resize(from.cat.num_morphisms());
    auto map_chain = [&](const std::vector<int>& chain) {
        std::vector<int> img;
        if (face) {
            if (n_from == 1) {
                // to objects of M^[0]: endpoints
                int f = chain[0];
                img.push_back(i == 0 ? c.morphism(f).tgt : c.morphism(f).src);
            } else if (i == 0) {
                img.assign(chain.begin() + 1, chain.end());
            } else if (i == n_from) {
                img.assign(chain.begin(), chain.end() - 1);
            } else {
                img = chain;
                img[i - 1] = c.compose(chain[i], chain[i - 1]);
                img.erase(img.begin() + i);
            }
        } else {
            // degeneracy: insert an identity at vertex i
            if (n_from == 0) {
                img.push_back(c.identity(chain[0]));
            } else {
                img = chain;
                int obj = i == 0 ? c.morphism(chain[0]).src : c.morphism(chain[i - 1]).tgt;
                img.insert(img.begin() + i, c.identity(obj));
            }
        }
        return img;
    };
    for (int o = 0; o < from.cat.num_objects(); ++o) {
        auto chain = power_object_chain(m, n_from, from.cat.object_name(o));
        int io = to.cat.object_index(power_object_name_of(m, n_to, map_chain(chain)));
        if (io < 0) throw Error("power_outer_map: missing image object");
        out.obj_map[o] = io;
    }
    for (int mi = 0; mi < from.cat.num_morphisms(); ++mi) {
        auto parts = ladder_parts(from.cat.morphism(mi).name);
        std::vector<std::string> img;
        if (face) {
            for (int level = 0; level <= n_from; ++level)
                if (level != i) img.push_back(parts[level]);
        } else {
            for (int level = 0; level <= n_from; ++level) {
                img.push_back(parts[level]);
                if (level == i) img.push_back(parts[level]);
            }
        }
        const auto& rec = from.cat.morphism(mi);
        std::string name = to.cat.object_name(out.obj_map[rec.src]) + ">" +
                           to.cat.object_name(out.obj_map[rec.tgt]) + ">";
        for (size_t k = 0; k < img.size(); ++k) {
            if (k) name += "|";
            name += img[k];
        }
        int im = to.cat.morphism_index(name);
        if (im < 0) throw Error("power_outer_map: missing image morphism");
        out.mor_map[mi] = im;
    }
    return out;
}

}  // namespace

RelFunctor power_outer_face(const RelativeCategory& m, const RelativeCategory& pow_n,
                            const RelativeCategory& pow_n_minus_1, int n, int i) {
    return power_outer_map(m, pow_n, pow_n_minus_1, n, n - 1, true, i);
}

RelFunctor power_outer_degeneracy(const RelativeCategory& m, const RelativeCategory& pow_n,
                                  const RelativeCategory& pow_n_plus_1, int n, int i) {
    return power_outer_map(m, pow_n, pow_n_plus_1, n, n + 1, false, i);
}

FinCategory we_subcategory(const RelativeCategory& m) {
    ValidationReport rep = validate_relative(m);
    if (!rep.ok) throw Error("we_subcategory: " + rep.summary());
    std::vector<std::string> objects;
    for (int o = 0; o < m.cat.num_objects(); ++o) objects.push_back(m.cat.object_name(o));
    std::vector<MorRec> mors;
    std::vector<int> keep;
    std::vector<int> new_id(m.cat.num_morphisms(), -1);
    for (int mi = 0; mi < m.cat.num_morphisms(); ++mi)
        if (m.marked[mi]) {
            new_id[mi] = static_cast<int>(keep.size());
            keep.push_back(mi);
            mors.push_back(m.cat.morphism(mi));
        }
    std::vector<std::string> identities;
    for (int o = 0; o < m.cat.num_objects(); ++o)
        identities.push_back(m.cat.morphism(m.cat.identity(o)).name);
    std::vector<std::array<int, 3>> entries;
    for (int g : keep)
        for (int f : keep) {
            int h = m.cat.compose(g, f);
            if (h >= 0) entries.push_back({new_id[g], new_id[f], new_id[h]});
        }
    return FinCategory::build(objects, mors, identities, entries);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> we_classes(const RelativeCategory& m) {
    UnionFind uf(m.cat.num_objects());
    for (int mi = 0; mi < m.cat.num_morphisms(); ++mi)
        if (m.marked[mi]) uf.unite(m.cat.morphism(mi).src, m.cat.morphism(mi).tgt);
    std::map<int, std::vector<int>> groups;
    for (int o = 0; o < m.cat.num_objects(); ++o) groups[uf.find(o)].push_back(o);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            return m.cat.object_name(a) < m.cat.object_name(b);
        });
        out.push_back(members);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return m.cat.object_name(a[0]) < m.cat.object_name(b[0]);
    });
    return out;
}

FinMonoid aut_h(const RelativeCategory& m, int object) {
    std::vector<int> elems;
    for (int mi = 0; mi < m.cat.num_morphisms(); ++mi)
        if (m.marked[mi] && m.cat.morphism(mi).src == object && m.cat.morphism(mi).tgt == object)
            elems.push_back(mi);
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return m.cat.morphism(a).name < m.cat.morphism(b).name; });
    FinMonoid out;
    std::map<int, int> index;
    for (size_t i = 0; i < elems.size(); ++i) {
        out.elements.push_back(m.cat.morphism(elems[i]).name);
        index[elems[i]] = static_cast<int>(i);
    }
    out.unit = index.at(m.cat.identity(object));
    out.table.assign(elems.size(), std::vector<int>(elems.size(), -1));
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            int prod = m.cat.compose(elems[a], elems[b]);
            auto it = index.find(prod);
            if (it == index.end()) throw Error("aut_h: marked endomorphisms not closed");
            out.table[a][b] = it->second;
        }
    return out;
}

RelativeCategory two_out_of_three_closure(const RelativeCategory& m) {
    RelativeCategory out = m;
    int n = out.cat.num_morphisms();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < n; ++g)
            for (int f = 0; f < n; ++f) {
                int h = out.cat.compose(g, f);
                if (h < 0) continue;
                int have = out.marked[g] + out.marked[f] + out.marked[h];
                if (have == 2) {
                    out.marked[g] = out.marked[f] = out.marked[h] = true;
                    changed = true;
                }
            }
    }
    return out;
}

long count_composable_chains(const FinCategory& cat, int n) {
    if (n == 0) return cat.num_objects();
    // dp[m] = number of chains of current length ending with morphism m
    std::vector<long> dp(cat.num_morphisms(), 1);
    for (int step = 1; step < n; ++step) {
        std::vector<long> next(cat.num_morphisms(), 0);
        for (int g = 0; g < cat.num_morphisms(); ++g)
            for (int f = 0; f < cat.num_morphisms(); ++f)
                if (cat.morphism(f).tgt == cat.morphism(g).src) next[g] += dp[f];
        dp = std::move(next);
    }
    long total = 0;
    for (long v : dp) total += v;
    return total;
}

RelativeCategory opposite(const RelativeCategory& m) {
    std::vector<std::string> objects;
    for (int o = 0; o < m.cat.num_objects(); ++o) objects.push_back(m.cat.object_name(o));
    std::vector<MorRec> mors;
    for (int mi = 0; mi < m.cat.num_morphisms(); ++mi) {
        MorRec r = m.cat.morphism(mi);
        std::swap(r.src, r.tgt);
        mors.push_back(r);
    }
    std::vector<std::string> identities;
    for (int o = 0; o < m.cat.num_objects(); ++o)
        identities.push_back(m.cat.morphism(m.cat.identity(o)).name);
    std::vector<std::array<int, 3>> entries;
    for (int g = 0; g < m.cat.num_morphisms(); ++g)
        for (int f = 0; f < m.cat.num_morphisms(); ++f) {
            int h = m.cat.compose(g, f);
            if (h >= 0) entries.push_back({f, g, h});
        }
    RelativeCategory out;
    out.cat = FinCategory::build(objects, mors, identities, entries);
    out.marked.assign(out.cat.num_morphisms(), false);
    for (int mi = 0; mi < m.cat.num_morphisms(); ++mi)
        out.marked[out.cat.morphism_index(m.cat.morphism(mi).name)] = m.marked[mi];
    return out;
}

}  // namespace relcat
