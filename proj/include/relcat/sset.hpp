#pragma once

#include "relcat/fincat.hpp"
#include "relcat/presented.hpp"

#include <functional>
#include <string>
#include <vector>

namespace relcat {

/* Simplicial set truncated at dimension `bound`. Simplices carry canonical
 * string keys (chains, tagged unions, pairs) so construction order never
 * leaks into results; faces and degeneracies are index tables. */
class TruncatedSimplicialSet {
public:
    TruncatedSimplicialSet() = default;
    explicit TruncatedSimplicialSet(int bound) : bound_(bound), simplices_(bound + 1) {}

    int bound() const { return bound_; }
    int count(int k) const { return k <= bound_ ? static_cast<int>(simplices_[k].size()) : 0; }
    long total() const;

    const std::string& key(int k, int s) const { return simplices_[k][s]; }
    int index_of(int k, const std::string& key) const;  // -1 if absent

    int face(int k, int s, int i) const { return faces_[k][s][i]; }
    int degeneracy(int k, int s, int i) const { return degens_[k][s][i]; }
    bool is_degenerate(int k, int s) const { return degenerate_[k][s]; }
    int nondegenerate_count(int k) const;

    /* Construction: add degree-k simplices in increasing k; faces must already
     * exist. Returns the new index. */
    int add_simplex(int k, std::string key, std::vector<int> faces);
    /* Must be called once degrees k and k+1 are complete. */
    void set_degeneracies(int k, int s, std::vector<int> images);
    /* Recomputes the degenerate flags from the degeneracy tables. */
    void finalize();

    /* Exhaustive check of every simplicial identity expressible within the
     * truncation; returns a human-readable violation or empty string. */
    std::string audit() const;

private:
    int bound_ = -1;
    std::vector<std::vector<std::string>> simplices_;
    std::vector<std::vector<std::vector<int>>> faces_;   // faces_[k][s][i], k >= 1
    std::vector<std::vector<std::vector<int>>> degens_;  // degens_[k][s][i], k+1 <= bound
    std::vector<std::vector<bool>> degenerate_;
    std::vector<std::unordered_map<std::string, int>> index_;
};

struct SimplicialMap {
    const TruncatedSimplicialSet* src = nullptr;
    const TruncatedSimplicialSet* tgt = nullptr;
    std::vector<std::vector<int>> map;  // per degree

    int apply(int k, int s) const { return map[k][s]; }
    std::string audit() const;  // commutation with faces and degeneracies

    static SimplicialMap identity(const TruncatedSimplicialSet& x);
    static SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);
};

/* Nerve of a finite category: k-simplices are all k-tuples of composable
 * morphisms (identity entries give the degenerate ones), with faces by
 * composition and degeneracies by identity insertion. Keys are "x" at degree
 * zero and "f1|f2|..." above. */
TruncatedSimplicialSet nerve(const FinCategory& c, int bound, const Bounds& budget);
TruncatedSimplicialSet nerve(const PresentedCategory& c, int bound, const Bounds& budget);

/* Map of nerves induced by a functor. */
SimplicialMap nerve_map(const FinCategory& src_cat, const TruncatedSimplicialSet& src,
                        const FinCategory& tgt_cat, const TruncatedSimplicialSet& tgt,
                        const RelFunctor& fun);

/* Classifying complex of a finite monoid: the nerve of its one-object
 * category. */
TruncatedSimplicialSet classifying_complex(const FinMonoid& m, int bound, const Bounds& budget);

TruncatedSimplicialSet disjoint_union(const std::vector<const TruncatedSimplicialSet*>& parts);

/* Inclusion of part `which` into the disjoint union. */
SimplicialMap disjoint_union_inclusion(const std::vector<const TruncatedSimplicialSet*>& parts,
                                       const TruncatedSimplicialSet& total, int which);

/* Degreewise pullback {(x, y) : f(x) = g(y)} with the induced structure maps;
 * projections returned through the out parameters when non-null. */
TruncatedSimplicialSet fiber_product(const SimplicialMap& f, const SimplicialMap& g,
                                     SimplicialMap* proj_x = nullptr,
                                     SimplicialMap* proj_y = nullptr);

/* Components: coequalizer of d_0, d_1 on vertices. Returns component index
 * per vertex plus the number of components. */
struct Pi0 {
    int components = 0;
    std::vector<int> component_of_vertex;
};
Pi0 pi0(const TruncatedSimplicialSet& x);

/* Diagram of simplicial sets over a finite index category. */
struct SSetDiagram {
    const FinCategory* index = nullptr;
    std::vector<const TruncatedSimplicialSet*> at_object;
    std::vector<SimplicialMap> at_arrow;  // one per index morphism
};

/* Throws unless at_arrow respects identities and composition. */
void validate_sset_diagram(const SSetDiagram& d);

/* Diagonal of the simplicial replacement: an n-simplex is (n-chain in the
 * index starting at a, n-simplex of X(a)); d_0 pushes the simplex forward
 * along the first arrow, inner faces compose the chain, d_n drops the tail.
 * Keys are "u1|u2|...;<key>" ("a;<key>" at degree zero). */
TruncatedSimplicialSet bousfield_kan_hocolim(const SSetDiagram& d, const Bounds& budget);

/* Decode a hocolim simplex into (index chain, simplex of X(start)). Degree
 * zero chains are a single object id. */
void hocolim_decode(const SSetDiagram& d, const TruncatedSimplicialSet& h, int k, int s,
                    std::vector<int>& chain_arrows, int& start_obj, int& inner_simplex);

/* Map induced on the hocolim by a strict cocone (maps c_a with
 * c_tgt ∘ X(u) = c_src for every u); audited before use. */
SimplicialMap hocolim_cocone_map(const SSetDiagram& d, const TruncatedSimplicialSet& h,
                                 const TruncatedSimplicialSet& target,
                                 const std::vector<SimplicialMap>& cocone);

/* Degreewise colimit (coequalizer) of the diagram with its canonical cocone. */
TruncatedSimplicialSet strict_colimit(const SSetDiagram& d, std::vector<SimplicialMap>* cocone);

/* Truncated bisimplicial set: one simplicial level per outer degree plus
 * outer structure maps. */
struct TruncatedBisimplicialSet {
    int outer_bound = -1;
    std::vector<TruncatedSimplicialSet> level;
    // outer_face[n][i]: level n -> level n-1 (0 <= i <= n); similarly degeneracies
    std::vector<std::vector<SimplicialMap>> outer_face;
    std::vector<std::vector<SimplicialMap>> outer_degeneracy;

    /* Re-points the outer maps at this instance's levels; call after the
     * struct has been moved into its final location. */
    void patch();
    std::string audit() const;  // outer simplicial identities as map equalities
};

struct BisimplicialDiagram {
    const FinCategory* index = nullptr;
    std::vector<const TruncatedBisimplicialSet*> at_object;
    // maps_at_arrow[u][n]: level-n component of the map at index arrow u
    std::vector<std::vector<SimplicialMap>> at_arrow;
};

/* Outer-levelwise Bousfield-Kan homotopy colimit. */
TruncatedBisimplicialSet hocolim_bisimplicial(const BisimplicialDiagram& d, const Bounds& budget);

}  // namespace relcat
