#pragma once

#include "relcat/fincat.hpp"
#include "relcat/homology.hpp"
#include "relcat/sset.hpp"

#include <memory>
#include <string>
#include <vector>

namespace relcat {

/* Bisimplicial set with level n the nerve of the marked subcategory of the
 * n-chain category; keeps the chain categories around so later constructions
 * can compose inside them. */
struct ClassificationDiagram {
    std::string source_name;
    int n_outer = -1;
    int n_inner = -1;
    TruncatedBisimplicialSet w;
    std::vector<RelativeCategory> powers;     // powers[n] = M^[n]
    std::vector<RelativeCategory> we_powers;  // marked subcategory with original indexing kept

    /* nerve simplex index for a degree-k chain of we(M^[n]) morphism names
     * (k >= 1) or a single object name (k = 0). */
    int simplex_of_chain(int level, int degree, const std::vector<std::string>& chain_names) const;
};

ClassificationDiagram classification_diagram(const RelativeCategory& m, const std::string& name,
                                             int n_outer, int n_inner, const Bounds& budget);

/* Bisimplicial map induced by a marked-morphism-preserving functor. */
std::vector<SimplicialMap> classification_map(const ClassificationDiagram& src,
                                              const ClassificationDiagram& tgt,
                                              const RelativeCategory& src_cat,
                                              const RelativeCategory& tgt_cat,
                                              const RelFunctor& fun);

struct SegalReport {
    int n = 0;
    bool strict_iso = false;
    std::string counterexample;      // simplex key or mismatch description
    std::vector<int> product_counts;  // per inner degree
    std::vector<int> level_counts;
};

/* Builds the comparison W_n -> W_1 x_{W_0} ... x_{W_0} W_1 from outer
 * structure maps and checks it is a degreewise bijection commuting with the
 * inner structure maps. */
SegalReport segal_check(const TruncatedBisimplicialSet& w, int n);

/* Decomposition model: level 0 glues classifying complexes of the marked
 * automorphism monoids over class representatives; level 1 does the same for
 * the arrow category. */
TruncatedSimplicialSet baut_model(const RelativeCategory& m, int level, int bound,
                                  const Bounds& budget);

struct BautLevelReport {
    int level = 0;
    int pi0_lc = 0;
    int pi0_model = 0;
    std::vector<HomologyGroup> h_lc;
    std::vector<HomologyGroup> h_model;
    bool pass = false;
};

struct BautReport {
    std::vector<BautLevelReport> levels;
    bool pass = false;
};

/* Compares pi0 and homology through degree hdeg of the classification levels
 * against the decomposition model, levels 0 and 1, as abstract groups. */
BautReport baut_certify(const RelativeCategory& m, const std::string& name, int hdeg,
                        const Bounds& budget);

}  // namespace relcat
