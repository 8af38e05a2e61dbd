#ifndef CONFALG_LOCALITY_HPP
#define CONFALG_LOCALITY_HPP

#include "confalg/checks.hpp"
#include "confalg/presentation.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace confalg {

// Full binary tree over l leaves; leaves numbered left to right, internal
// nodes carry the position of their product index.
struct WordTree {
    bool is_leaf = false;
    int leaf = -1;     // leaf position
    int node = -1;     // index position (internal nodes, left to right)
    std::shared_ptr<WordTree> left, right;

    int leaves() const;
};

using WordTreePtr = std::shared_ptr<WordTree>;

// All parenthesizations with l leaves (Catalan many), in a fixed order.
std::vector<WordTreePtr> enumerate_trees(int l);

std::string word_str(const WordTreePtr& t, const std::vector<std::string>& gens,
                     const std::vector<int>& assign,
                     const std::vector<std::int64_t>& idx);

// Where generator words are evaluated: a presentation, or an enveloping
// algebra built downstream.
class WordEvaluator {
public:
    virtual ~WordEvaluator() = default;
    virtual std::vector<std::string> generator_names() const = 0;
    virtual bool word_is_zero(const WordTreePtr& t,
                              const std::vector<int>& assign,
                              const std::vector<std::int64_t>& idx) const = 0;
    // index sums >= this are structurally zero for words of length l
    virtual std::int64_t structural_budget(int l) const = 0;
};

class PresentationEvaluator : public WordEvaluator {
public:
    explicit PresentationEvaluator(const Presentation& p) : p_(p) {}
    std::vector<std::string> generator_names() const override;
    bool word_is_zero(const WordTreePtr& t, const std::vector<int>& assign,
                      const std::vector<std::int64_t>& idx) const override;
    std::int64_t structural_budget(int l) const override;

    Element eval(const WordTreePtr& t, const std::vector<int>& assign,
                 const std::vector<std::int64_t>& idx) const;

private:
    const Presentation& p_;
};

struct LocalityFunctionResult {
    int length = 0;
    std::int64_t value = -1;      // S(l); valid when certified or conclusive
    bool certified = false;       // budget >= structural bound
    std::int64_t budget = 0;
    std::int64_t max_nonzero_sum = -1; // -1: every scanned word was zero
    std::string witness;          // a nonzero word attaining the max
};

// S(l): least S with every length-l word of index sum >= S equal to zero.
// Scans index sums up to n_budget; certified when the budget reaches the
// evaluator's structural bound.
LocalityFunctionResult locality_function(const WordEvaluator& eval,
                                         const std::vector<int>& gens, int l,
                                         std::int64_t n_budget,
                                         int threads = 1);

// S(l) <= N l (l-1) / 2 - l + 1 for Lie presentations with pairwise
// locality at most N.
CheckReport dong_bound_check(const Presentation& p,
                             const std::vector<int>& gens, int pair_locality,
                             int l_max, int threads = 1);

} // namespace confalg

#endif
