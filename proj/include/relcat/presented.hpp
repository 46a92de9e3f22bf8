#pragma once

#include "relcat/fincat.hpp"

#include <map>
#include <string>
#include <vector>

namespace relcat {

/* Word = composable sequence of generator ids in diagrammatic order
 * (first arrow first). The empty word at an object is its identity. */
using Word = std::vector<int>;

struct GenRec {
    std::string name;
    int src = -1;
    int tgt = -1;
    int sort_rank = 0;  // lower ranks rewrite leftward; ties broken by name
};

struct RewriteRule {
    Word lhs;
    Word rhs;
};

struct CriticalPairDiagnostic {
    bool confluent = false;
    int passes_used = 0;
    int rules_added = 0;
    std::string failing_overlap;  // empty when confluent
    std::string reduct_a;
    std::string reduct_b;
};

struct NonConfluentError : Error {
    CriticalPairDiagnostic diag;
    explicit NonConfluentError(const CriticalPairDiagnostic& d)
        : Error("presentation not confluent within bounds; overlap " + d.failing_overlap +
                " reduces to both " + d.reduct_a + " and " + d.reduct_b),
          diag(d) {}
};

/* Morphisms enumerated from a presentation, with the word <-> morphism
 * correspondence retained. */
struct EnumeratedCategory {
    FinCategory cat;
    std::vector<Word> normal_forms;        // by morphism index
    std::map<Word, int> morphism_of_word;  // normal form -> morphism index
};

/* Category presented by generators and parallel-word relations. Relations are
 * oriented into shortlex-decreasing rules (generator order: sort_rank, then
 * name); bounded Knuth-Bendix completion certifies confluence or reports the
 * offending critical pair. */
class PresentedCategory {
public:
    PresentedCategory() = default;
    PresentedCategory(std::vector<std::string> objects, std::vector<GenRec> generators,
                      std::vector<std::pair<Word, Word>> relations, Bounds bounds);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<GenRec>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const Bounds& bounds() const { return bounds_; }

    int generator_index(const std::string& name) const;
    std::string word_to_string(const Word& w) const;

    /* endpoints of a word; the empty word is ambiguous and needs a hint */
    int word_src(const Word& w, int empty_hint = -1) const;
    int word_tgt(const Word& w, int empty_hint = -1) const;

    Word normalize(Word w) const;

    /* Runs bounded completion once (idempotent); throws NonConfluentError when
     * the bound is hit or an overlap stays unjoinable. */
    const CriticalPairDiagnostic& certify_confluence();
    const CriticalPairDiagnostic& confluence() const { return confluence_; }

    /* All normal forms of length <= max_word_length, as a finite category.
     * Throws BudgetError if some composite of enumerated morphisms fails to
     * normalize within the length bound (the fragment is not a category). */
    EnumeratedCategory enumerate() const;

private:
    std::vector<std::string> objects_;
    std::vector<GenRec> generators_;
    std::vector<RewriteRule> rules_;
    Bounds bounds_;
    CriticalPairDiagnostic confluence_;
    bool certified_ = false;
    std::unordered_map<std::string, int> gen_index_;

    bool shortlex_less(const Word& a, const Word& b) const;
    void check_parallel(const Word& a, const Word& b) const;
};

}  // namespace relcat
