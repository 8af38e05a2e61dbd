#ifndef CONFALG_EMBED_HPP
#define CONFALG_EMBED_HPP

#include "confalg/envelope.hpp"
#include "confalg/locality.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace confalg {

struct hypothesis_error : std::runtime_error {
    std::string witness;
    hypothesis_error(const std::string& msg, std::string w)
        : std::runtime_error(msg), witness(std::move(w))
    {
    }
};

struct EmbedBounds {
    int nd_bound = 12;       // D-power scan depth for degree stabilization
    int stab_window = 3;     // consecutive unit decrements to accept a degree
    int fixpoint_cap = 4096; // cap on basis elements per weight space
    std::uint64_t step_budget = 1000000;
};

// Spans of the values of pure generator words, graded by word weight.
struct WeightSpans {
    int jmax = 0;
    int coord_cap = 0; // D-power truncation of the coordinate space
    std::vector<std::vector<Element>> basis;      // per weight
    std::vector<std::vector<std::string>> witness; // generating word per row
};

WeightSpans weight_fixpoint(const Presentation& p, int r,
                            const EmbedBounds& bounds);

// Fails with hypothesis_error (carrying a witness word) unless every pure
// word of weight >= r has value zero; certification covers all lengths by
// induction once the scanned weight range is exhausted.
void hypothesis_scan(const Presentation& p, int r, const EmbedBounds& bounds,
                     const WeightSpans& spans);

// Everything the quotient construction needs: the weight spans, degree
// tables on demand, the basis of L mod T, the T-basis, and the letter
// alphabet with the generator expansion solved.
class EmbedContext {
public:
    Presentation pres; // weights applied
    int r = 0;
    EmbedBounds bounds;
    WeightSpans spans;
    LetterContext letters;

    std::vector<std::vector<int>> b_by_degree; // alphabet indices of B_i
    std::vector<int> c_letters;                // alphabet indices of the T-basis

    std::int64_t deg_prime(const Element& e) const;
    std::int64_t deg(const Element& e) const; // kInfDegree on D-torsion

    WordExpansion embed_element(const Element& e) const;
};

// Runs the hypothesis scan, computes degrees, B, and the T-basis. `weights`
// empty keeps the presentation's weights; otherwise one value per generator.
EmbedContext build_embed_context(const Presentation& p,
                                 const std::vector<int>& weights, int r,
                                 const EmbedBounds& bounds = {});

// A = U/I with I spanned by words of length >= 2 and degree >= r.
class EnvelopingAlgebra {
public:
    EmbedContext ctx;

    bool term_in_ideal(std::int64_t dpow, const ConfWord& w) const;
    bool in_ideal(const WordExpansion& x) const;
    WordExpansion truncate(const WordExpansion& x) const;
    WordExpansion product(const WordExpansion& x, const WordExpansion& y,
                          std::int64_t n) const;
    WordExpansion derivation(const WordExpansion& x, int k) const;
    WordExpansion embed(const Element& e) const
    {
        return ctx.embed_element(e);
    }

    // bracket via the commutator-style products of the quotient:
    // x[n]y = x(n)y - sum_s (-1)^{n+s} D^(s)( y(n+s)x )
    WordExpansion lie_bracket(const WordExpansion& x, const WordExpansion& y,
                              std::int64_t n) const;
};

EnvelopingAlgebra build_enveloping(EmbedContext ctx);

// Generator-word evaluation inside A.
class EnvelopeEvaluator : public WordEvaluator {
public:
    explicit EnvelopeEvaluator(const EnvelopingAlgebra& env) : env_(env) {}
    std::vector<std::string> generator_names() const override;
    bool word_is_zero(const WordTreePtr& t, const std::vector<int>& assign,
                      const std::vector<std::int64_t>& idx) const override;
    std::int64_t structural_budget(int l) const override;

    WordExpansion eval(const WordTreePtr& t, const std::vector<int>& assign,
                       const std::vector<std::int64_t>& idx) const;

private:
    const EnvelopingAlgebra& env_;
};

struct VerifyOptions {
    int dpow_window = 4;     // injectivity: D^(n)b for n <= this
    int max_word_length = 4; // scans over generator words
    int weight_margin = 2;   // scan weights r .. r+margin
    int locality_len = 4;    // S_A(l) checked for 2 <= l <= this
    int threads = 1;
};

struct EmbedReport {
    bool injectivity_pass = false;
    std::size_t injectivity_rank = 0, injectivity_count = 0;

    std::size_t vanishing_checked = 0;
    std::vector<std::string> vanishing_failures;

    int nilpotency_index = -1; // detected in the source; -1 when none found
    std::size_t nilpotency_checked = 0;
    std::vector<std::string> nilpotency_failures;

    std::size_t bracket_checked = 0;
    std::vector<std::string> bracket_failures;

    std::vector<LocalityFunctionResult> locality_rows;
    std::int64_t locality_bound = -1; // max certified S_A over the rows

    double seconds = 0.0;

    bool pass() const
    {
        return injectivity_pass && vanishing_failures.empty() &&
               nilpotency_failures.empty() && bracket_failures.empty();
    }
};

EmbedReport verify_embedding(const EnvelopingAlgebra& env,
                             const VerifyOptions& opt);

} // namespace confalg

#endif
