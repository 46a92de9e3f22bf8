#pragma once

#include "relcat/classify.hpp"
#include "relcat/fincat.hpp"
#include "relcat/hocolim_cat.hpp"
#include "relcat/homology.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace relcat {

struct ParseError : Error {
    std::string file;
    int line = 0;
    ParseError(std::string f, int l, const std::string& what)
        : Error(f + ":" + std::to_string(l) + ": " + what), file(std::move(f)), line(l) {}
};

/* Line-oriented category format: [objects], [morphisms] (`name : src -> tgt`),
 * [compose] (`g . f = h`), [weq] (one morphism per line, identities implicit).
 * '#' begins a comment. */
RelativeCategory parse_relcat(const std::string& path);
RelativeCategory parse_relcat_text(const std::string& text, const std::string& label);
std::string serialize_relcat(const RelativeCategory& rc);

/* Diagram format: `[index] <path>`, `[object a] <path>`,
 * `variance = left|right`, and `[arrow t : a -> b]` sections with
 * `obj x |-> y` / `mor f |-> g` lines. Paths resolve relative to the file. */
DiagramOfRelCats parse_diagram(const std::string& path);

struct LevelCertificate {
    int level = 0;
    WeCertificate cert;
    std::vector<int> hocolim_counts;  // simplices per inner degree
    std::vector<int> colimit_counts;
};

struct VerificationReport {
    std::string diagram_path;
    Bounds bounds;
    InsertDirection direction = InsertDirection::Forward;
    // colimit shape
    int colimit_objects = 0;
    int colimit_morphisms = 0;
    int colimit_marked = 0;
    int connectors = 0;
    bool confluent = false;
    bool marking_is_fixpoint = false;
    CoconeReport cocone;
    // the certified comparison: hocolim of the levelwise nerves into the
    // classification diagram of the colimit
    std::vector<LevelCertificate> levels;
    std::vector<SegalReport> segal_colimit;              // n = 2..n_outer
    std::vector<std::pair<std::string, bool>> segal_fibers;
    BautReport baut_colimit;  // informational: can fail for plain relative categories
    bool certificates_pass = false;
    long wall_clock_ms = 0;

    nlohmann::ordered_json to_json() const;
};

/* Builds the colimit, the classification diagrams of every fiber and of the
 * colimit, the levelwise homotopy colimit of the fibers' diagrams, and the
 * comparison map; certifies pi0 + cone homology per outer level and runs the
 * Segal audit on every classification diagram involved. In the paper-literal
 * direction the certificates are computed on the dualized run and the
 * colimit's own invariants are checked against it. */
VerificationReport verify_theorem(const DiagramOfRelCats& d, const std::string& diagram_path,
                                  const Bounds& bounds,
                                  InsertDirection direction = InsertDirection::Forward);

nlohmann::ordered_json homology_to_json(const HomologyGroup& h);

}  // namespace relcat
