#pragma once

#include "relcat/fincat.hpp"
#include "relcat/presented.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relcat {

enum class Variance { Left, Right };
enum class InsertDirection { Forward, PaperLiteral };

/* Finite diagram of relative categories: index category, a relative category
 * per object, a marked-morphism-preserving functor per arrow. */
struct DiagramOfRelCats {
    FinCategory index;
    std::vector<std::string> object_labels;   // per index object
    std::vector<RelativeCategory> at_object;
    std::vector<RelFunctor> at_arrow;         // per index morphism
    Variance variance = Variance::Left;
};

/* Functor validity, marked preservation, identity and composite coherence. */
ValidationReport validate_diagram(const DiagramOfRelCats& d);

/* A qualifying object pair for an arrow: left variance pairs (x, y) with a
 * marked F(x) -> y, right variance with a marked y -> G(x). The canonical
 * pair is y = F(x) witnessed by the identity. */
struct InsertionSite {
    int arrow = -1;
    int src_object = -1;   // object of the arrow's source category
    int tgt_object = -1;   // object of the arrow's target category
    int witness = -1;      // marked morphism id in the target category
    bool canonical = false;
    bool existing_within_fiber = false;  // endo-arrow case: pair already marked-connected
};

std::vector<InsertionSite> insertion_sites(const DiagramOfRelCats& d, int arrow);

/* The glued relative category: disjoint union of the fibers plus one marked
 * connecting generator per arrow and source object, subject to the fiberwise
 * composition relations, the connecting-square relations, and identification
 * of composite connectors. Identity arrows of the index contribute nothing
 * (their connections already exist), and composite insertions collapse to the
 * insertion at the composite arrow. The output marking is the closure of the
 * fiber markings plus all connectors under composition and two-out-of-three. */
struct HocolimCategory {
    PresentedCategory presentation;
    CriticalPairDiagnostic confluence;
    EnumeratedCategory enumerated;
    RelativeCategory relcat;                  // materialized result with marking
    std::vector<RelFunctor> injections;       // fiber -> colimit
    std::vector<std::vector<InsertionSite>> sites;  // per index arrow
    // connector morphism in the colimit for (arrow, source object); identity
    // arrows map to the fiber identities
    std::vector<std::vector<int>> connector;
    InsertDirection direction = InsertDirection::Forward;

    /* colimit morphism id of the direct marked connection realizing a site,
     * or -1 when the site is realized by a marked zigzag only (witness and
     * connector directions opposed). */
    int site_connection(const DiagramOfRelCats& d, const InsertionSite& s) const;
};

HocolimCategory hocolim_category(const DiagramOfRelCats& d, const Bounds& bounds,
                                 InsertDirection direction = InsertDirection::Forward);

struct CoconeReport {
    bool injections_valid = false;
    bool squares_commute_up_to_connectors = false;  // exact connecting squares
    bool on_the_nose = false;                       // no connectors needed anywhere
    std::string detail;
};

/* The family fiber -> colimit together with the audit that every naturality
 * square against the diagram's arrows is realized by marked connectors. */
CoconeReport canonical_cocone(const DiagramOfRelCats& d, const HocolimCategory& h);

/* Paper-direction variant built by dualizing: flip every fiber, build the
 * forward colimit, flip back. Connectors then run from target-category
 * objects to source-category objects. */
DiagramOfRelCats opposite_diagram(const DiagramOfRelCats& d);

}  // namespace relcat
