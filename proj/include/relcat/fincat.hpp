#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace relcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/* Global caps used by every constructor that enumerates simplices or words.
 * RELCAT_BUDGET overrides simplex_budget. */
struct Bounds {
    int n_outer = 2;
    int n_inner = 4;
    int hdeg = 3;
    int max_word_length = 8;
    int max_completion_passes = 16;
    long simplex_budget = 2000000;

    static Bounds defaults();
};

struct MorRec {
    std::string name;
    int src = -1;
    int tgt = -1;
};

/* A finite category given by a total composition table.
 * Objects and morphisms are ordered lexicographically by identifier, so every
 * enumeration downstream is deterministic. */
class FinCategory {
public:
    FinCategory() = default;

    /* morphism entries for `compose_entries`: (g, f, h) meaning g∘f = h,
     * indices into the (sorted) morphism list. Identity-law compositions are
     * filled in automatically. */
    static FinCategory build(std::vector<std::string> objects,
                             std::vector<MorRec> morphisms,
                             const std::vector<std::string>& identity_names,
                             const std::vector<std::array<int, 3>>& compose_entries);

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object_name(int o) const { return objects_[o]; }
    const MorRec& morphism(int m) const { return morphisms_[m]; }
    int identity(int obj) const { return identity_[obj]; }
    bool is_identity(int m) const { return identity_[morphisms_[m].src] == m; }

    int object_index(const std::string& name) const;      // -1 if absent
    int morphism_index(const std::string& name) const;    // -1 if absent

    /* g∘f, or -1 when tgt(f) != src(g) or the pair is missing from the table. */
    int compose(int g, int f) const { return compose_[g][f]; }

    std::vector<int> morphisms_from(int obj) const;
    std::vector<int> morphisms_between(int src, int tgt) const;

private:
    std::vector<std::string> objects_;
    std::vector<MorRec> morphisms_;
    std::unordered_map<std::string, int> obj_index_;
    std::unordered_map<std::string, int> mor_index_;
    std::vector<int> identity_;
    std::vector<std::vector<int>> compose_;
};

struct ValidationIssue {
    std::string kind;    // "missing-composite", "associativity", "identity-law", ...
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    std::string summary() const;
};

/* Exhaustive axiom audit: identity laws, totality of the table on composable
 * pairs, endpoints of composites, associativity over all composable triples. */
ValidationReport validate_category(const FinCategory& cat);

/* Category plus a marked subset of morphisms ("weak equivalences"). */
struct RelativeCategory {
    FinCategory cat;
    std::vector<bool> marked;

    bool is_marked(int m) const { return marked[m]; }
};

/* Marking must contain identities and close under composition. */
ValidationReport validate_relative(const RelativeCategory& rc);

/* Functor between finite categories; `preserves marking` is part of validity
 * when used between relative categories. */
struct RelFunctor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    static RelFunctor identity(const FinCategory& c);
};

ValidationReport validate_functor(const FinCategory& src, const FinCategory& tgt,
                                  const RelFunctor& fun);
bool functor_preserves_marking(const RelativeCategory& src, const RelativeCategory& tgt,
                               const RelFunctor& fun);
RelFunctor compose_functors(const RelFunctor& second, const RelFunctor& first);
bool functors_equal(const RelFunctor& a, const RelFunctor& b);

struct FinMonoid {
    std::vector<std::string> elements;
    int unit = -1;
    std::vector<std::vector<int>> table;  // table[a][b] = a·b

    int mul(int a, int b) const { return table[a][b]; }
};

ValidationReport validate_monoid(const FinMonoid& m);

/* The category of n-composable-chains: objects are length-n chains of
 * morphisms, morphisms are (n+1)-tuples making every square commute, and a
 * tuple is marked iff it is levelwise marked. Chain and tuple identifiers are
 * canonical ("f1|f2", "u0|u1|u2") so enumeration order is reproducible. */
RelativeCategory arrow_category_power(const RelativeCategory& m, int n, const Bounds& bounds);

/* Chain of an object of M^[n] back to morphism ids of M (n >= 1), or the
 * underlying object id for n = 0. */
std::vector<int> power_object_chain(const RelativeCategory& m, int n, const std::string& obj_name);

/* Canonical object name of M^[n] for a chain of base morphism ids (object id
 * for n = 0). */
std::string power_object_name_of(const RelativeCategory& m, int n, const std::vector<int>& chain);

/* Base-category vertex objects z_0..z_n of a chain object of M^[n]. */
std::vector<int> power_object_vertices(const RelativeCategory& m, int n, const std::string& obj_name);

/* Ladder components (base morphism ids) of a morphism of M^[n]. */
std::vector<int> power_morphism_components(const RelativeCategory& m, const RelativeCategory& pow,
                                           int mor);

/* Index of the M^[n]-morphism with the given endpoint objects and components;
 * -1 when the tuple is not a ladder there. */
int power_morphism_index(const RelativeCategory& m, const RelativeCategory& pow,
                         const std::string& src_obj, const std::string& tgt_obj,
                         const std::vector<int>& components);

/* Lift of a functor to chain categories: apply componentwise. Requires the
 * power categories of both sides at the same n. */
RelFunctor power_functor(const RelativeCategory& src, const RelativeCategory& src_pow,
                         const RelativeCategory& tgt, const RelativeCategory& tgt_pow,
                         const RelFunctor& fun, int n);

/* Outer face/degeneracy functors M^[n] -> M^[n-1] / M^[n+1]. */
RelFunctor power_outer_face(const RelativeCategory& m, const RelativeCategory& pow_n,
                            const RelativeCategory& pow_n_minus_1, int n, int i);
RelFunctor power_outer_degeneracy(const RelativeCategory& m, const RelativeCategory& pow_n,
                                  const RelativeCategory& pow_n_plus_1, int n, int i);

/* Wide subcategory on the marked morphisms. Throws if the marking is not
 * closed under composition. */
FinCategory we_subcategory(const RelativeCategory& m);

/* Zigzag-connectivity classes of objects inside we(M). Classes are sorted,
 * each class sorted by object name; the representative is the first entry. */
std::vector<std::vector<int>> we_classes(const RelativeCategory& m);

/* Monoid of marked endomorphisms of x under composition. */
FinMonoid aut_h(const RelativeCategory& m, int object);

/* Smallest marking containing the input that is closed under composition and
 * the two-out-of-three rule; computed by saturation. */
RelativeCategory two_out_of_three_closure(const RelativeCategory& m);

/* Number of composable n-chains, by dynamic programming (test oracle for
 * arrow_category_power object counts). */
long count_composable_chains(const FinCategory& cat, int n);

RelativeCategory opposite(const RelativeCategory& m);

}  // namespace relcat
