#include "relcat/presented.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace relcat {

PresentedCategory::PresentedCategory(std::vector<std::string> objects,
                                     std::vector<GenRec> generators,
                                     std::vector<std::pair<Word, Word>> relations, Bounds bounds)
    : objects_(std::move(objects)), generators_(std::move(generators)), bounds_(bounds) {
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (!gen_index_.emplace(generators_[i].name, static_cast<int>(i)).second)
            throw Error("duplicate generator: " + generators_[i].name);
    }
    for (auto& [a, b] : relations) {
        check_parallel(a, b);
        Word lhs = a, rhs = b;
        if (shortlex_less(lhs, rhs)) std::swap(lhs, rhs);
        if (lhs == rhs) continue;
        rules_.push_back({std::move(lhs), std::move(rhs)});
    }
    std::sort(rules_.begin(), rules_.end(), [this](const RewriteRule& x, const RewriteRule& y) {
        if (x.lhs != y.lhs) return shortlex_less(x.lhs, y.lhs);
        return shortlex_less(x.rhs, y.rhs);
    });
    rules_.erase(std::unique(rules_.begin(), rules_.end(),
                             [](const RewriteRule& x, const RewriteRule& y) {
                                 return x.lhs == y.lhs && x.rhs == y.rhs;
                             }),
                 rules_.end());
    for (size_t i = 1; i < rules_.size(); ++i)
        if (rules_[i].lhs == rules_[i - 1].lhs)
            throw Error("conflicting rules for identical left-hand side " +
                        word_to_string(rules_[i].lhs));
}

int PresentedCategory::generator_index(const std::string& name) const {
    auto it = gen_index_.find(name);
    return it == gen_index_.end() ? -1 : it->second;
}

std::string PresentedCategory::word_to_string(const Word& w) const {
    if (w.empty()) return "(id)";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += generators_[w[i]].name;
    }
    return out;
}

int PresentedCategory::word_src(const Word& w, int empty_hint) const {
    if (w.empty()) return empty_hint;
    return generators_[w.front()].src;
}

int PresentedCategory::word_tgt(const Word& w, int empty_hint) const {
    if (w.empty()) return empty_hint;
    return generators_[w.back()].tgt;
}

void PresentedCategory::check_parallel(const Word& a, const Word& b) const {
    for (const Word* w : {&a, &b})
        for (size_t i = 1; i < w->size(); ++i)
            if (generators_[(*w)[i - 1]].tgt != generators_[(*w)[i]].src)
                throw Error("relation word not composable: " + word_to_string(*w));
    if (a.empty() && b.empty()) return;
    if (a.empty() || b.empty()) {
        const Word& nonempty = a.empty() ? b : a;
        if (word_src(nonempty) != word_tgt(nonempty))
            throw Error("relation equates a non-endomorphism with an identity: " +
                        word_to_string(nonempty));
        return;
    }
    if (word_src(a) != word_src(b) || word_tgt(a) != word_tgt(b))
        throw Error("relation is not parallel: " + word_to_string(a) + " = " + word_to_string(b));
}

bool PresentedCategory::shortlex_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        const GenRec& ga = generators_[a[i]];
        const GenRec& gb = generators_[b[i]];
        if (ga.sort_rank != gb.sort_rank) return ga.sort_rank < gb.sort_rank;
        if (ga.name != gb.name) return ga.name < gb.name;
    }
    return false;
}

Word PresentedCategory::normalize(Word w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
            for (const auto& rule : rules_) {
                if (pos + rule.lhs.size() > w.size()) continue;
                if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + pos)) continue;
                Word next(w.begin(), w.begin() + pos);
                next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
                next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
                w = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return w;
}

const CriticalPairDiagnostic& PresentedCategory::certify_confluence() {
    if (certified_) return confluence_;
    CriticalPairDiagnostic diag;
    for (int pass = 1; pass <= bounds_.max_completion_passes; ++pass) {
        diag.passes_used = pass;
        std::vector<RewriteRule> added;
        auto consider = [&](const Word& overlap) -> bool {
            // reduce via every rule applicable at every position; all normal
            // forms must agree
            std::set<Word> reducts;
            for (size_t pos = 0; pos < overlap.size(); ++pos)
                for (const auto& rule : rules_) {
                    if (pos + rule.lhs.size() > overlap.size()) continue;
                    if (!std::equal(rule.lhs.begin(), rule.lhs.end(), overlap.begin() + pos)) continue;
                    Word next(overlap.begin(), overlap.begin() + pos);
                    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
                    next.insert(next.end(), overlap.begin() + pos + rule.lhs.size(), overlap.end());
                    reducts.insert(normalize(std::move(next)));
                }
            if (reducts.size() <= 1) return true;
            auto it = reducts.begin();
            Word a = *it++;
            Word b = *it;
            Word lhs = a, rhs = b;
            if (shortlex_less(lhs, rhs)) std::swap(lhs, rhs);
            if (lhs == rhs) return true;
            if (!shortlex_less(rhs, lhs)) {
                diag.confluent = false;
                diag.failing_overlap = word_to_string(overlap);
                diag.reduct_a = word_to_string(a);
                diag.reduct_b = word_to_string(b);
                confluence_ = diag;
                certified_ = true;
                throw NonConfluentError(diag);
            }
            added.push_back({lhs, rhs});
            if (diag.failing_overlap.empty()) {
                diag.failing_overlap = word_to_string(overlap);
                diag.reduct_a = word_to_string(a);
                diag.reduct_b = word_to_string(b);
            }
            return false;
        };

        for (const auto& r1 : rules_) {
            for (const auto& r2 : rules_) {
                // proper overlap: suffix of r1.lhs = prefix of r2.lhs
                for (size_t k = 1; k < r1.lhs.size() && k <= r2.lhs.size(); ++k) {
                    if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + k, r1.lhs.end() - k)) continue;
                    Word overlap = r1.lhs;
                    overlap.insert(overlap.end(), r2.lhs.begin() + k, r2.lhs.end());
                    consider(overlap);
                }
                // containment: r2.lhs inside r1.lhs
                if (r2.lhs.size() < r1.lhs.size()) {
                    for (size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos)
                        if (std::equal(r2.lhs.begin(), r2.lhs.end(), r1.lhs.begin() + pos))
                            consider(r1.lhs);
                }
            }
        }
        if (added.empty()) {
            diag.confluent = true;
            diag.failing_overlap.clear();
            diag.reduct_a.clear();
            diag.reduct_b.clear();
            confluence_ = diag;
            certified_ = true;
            return confluence_;
        }
        for (auto& r : added) {
            rules_.push_back(std::move(r));
            ++diag.rules_added;
        }
        std::sort(rules_.begin(), rules_.end(), [this](const RewriteRule& x, const RewriteRule& y) {
            if (x.lhs != y.lhs) return shortlex_less(x.lhs, y.lhs);
            return shortlex_less(x.rhs, y.rhs);
        });
        rules_.erase(std::unique(rules_.begin(), rules_.end(),
                                 [](const RewriteRule& x, const RewriteRule& y) {
                                     return x.lhs == y.lhs && x.rhs == y.rhs;
                                 }),
                     rules_.end());
    }
    diag.confluent = false;
    confluence_ = diag;
    certified_ = true;
    throw NonConfluentError(diag);
}

EnumeratedCategory PresentedCategory::enumerate() const {
    if (!certified_ || !confluence_.confluent)
        throw Error("enumerate: confluence not certified");

    // breadth-first over normal forms, extending on the right by generators;
    // identities share the empty word, so states are (word, endpoints) pairs
    std::deque<std::pair<Word, std::pair<int, int>>> frontier;
    for (size_t o = 0; o < objects_.size(); ++o)
        frontier.push_back({Word{}, {static_cast<int>(o), static_cast<int>(o)}});
    std::set<std::pair<Word, std::pair<int, int>>> visited;
    std::vector<std::pair<Word, std::pair<int, int>>> found;
    while (!frontier.empty()) {
        auto [w, ends] = frontier.front();
        frontier.pop_front();
        if (!visited.insert({w, ends}).second) continue;
        found.push_back({w, ends});
        if (static_cast<long>(found.size()) > bounds_.simplex_budget)
            throw BudgetError("enumerate: morphism budget exceeded");
        for (size_t g = 0; g < generators_.size(); ++g) {
            if (generators_[g].src != ends.second) continue;
            Word ext = w;
            ext.push_back(static_cast<int>(g));
            Word nf = normalize(std::move(ext));
            if (static_cast<int>(nf.size()) > bounds_.max_word_length) continue;
            frontier.push_back({nf, {ends.first, generators_[g].tgt}});
        }
    }

    std::sort(found.begin(), found.end(), [this](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return shortlex_less(a.first, b.first);
        return a.second < b.second;
    });

    std::vector<MorRec> mors;
    std::vector<Word> words;
    std::vector<std::string> obj_names = objects_;
    std::vector<std::string> identity_names(objects_.size());
    for (const auto& [w, ends] : found) {
        std::string name;
        if (w.empty()) {
            name = "id:" + objects_[ends.first];
            identity_names[ends.first] = name;
        } else {
            name = word_to_string(w);
        }
        mors.push_back({name, ends.first, ends.second});
        words.push_back(w);
    }

    // deterministic pre-sort indices; FinCategory::build re-sorts by name
    std::map<std::pair<Word, std::pair<int, int>>, int> index;
    for (size_t i = 0; i < found.size(); ++i) index[found[i]] = static_cast<int>(i);

    std::vector<std::array<int, 3>> entries;
    for (size_t g = 0; g < found.size(); ++g)
        for (size_t f = 0; f < found.size(); ++f) {
            if (found[f].second.second != found[g].second.first) continue;
            Word concat = found[f].first;
            concat.insert(concat.end(), found[g].first.begin(), found[g].first.end());
            Word nf = normalize(std::move(concat));
            if (static_cast<int>(nf.size()) > bounds_.max_word_length)
                throw BudgetError("enumerate: composite " + word_to_string(found[g].first) + " . " +
                                  word_to_string(found[f].first) +
                                  " does not normalize within max-word-length");
            auto it = index.find({nf, {found[f].second.first, found[g].second.second}});
            if (it == index.end())
                throw BudgetError("enumerate: composite escapes the enumerated fragment");
            entries.push_back({static_cast<int>(g), static_cast<int>(f), it->second});
        }

    EnumeratedCategory out;
    out.cat = FinCategory::build(obj_names, mors, identity_names, entries);
    out.normal_forms.resize(found.size());
    for (size_t i = 0; i < found.size(); ++i) {
        int idx = out.cat.morphism_index(mors[i].name);
        out.normal_forms[idx] = words[i];
        if (!words[i].empty()) out.morphism_of_word[words[i]] = idx;
    }
    return out;
}

}  // namespace relcat
