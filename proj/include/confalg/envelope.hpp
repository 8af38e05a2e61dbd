#ifndef CONFALG_ENVELOPE_HPP
#define CONFALG_ENVELOPE_HPP

#include "confalg/coeff.hpp"
#include "confalg/presentation.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace confalg {

constexpr std::int64_t kInfDegree = std::numeric_limits<std::int64_t>::max();

// One letter of the PBW alphabet: a k[D]-basis element of the source Lie
// conformal algebra (basis of L mod T, followed by the basis of the central
// ideal T).
struct AlphabetEntry {
    std::string name;
    Element rep;            // representative in the presentation
    bool torsion = false;   // letters exist only at index -1
    bool in_tbasis = false; // belongs to the T-basis: words through it are
                            // the N-part
    std::int64_t deg = 0;   // filtration degree (kInfDegree when infinite)
};

// Alphabet + expansion data every envelope operation threads through.
class LetterContext {
public:
    Presentation pres;
    std::vector<AlphabetEntry> alphabet;

    // presentation generator g = sum coeff * D^dpow alphabet[alpha]
    // (plain D-powers)
    struct ExpTerm {
        int alpha;
        int dpow;
        Rat coeff;
    };
    std::vector<std::vector<ExpTerm>> gen_expansion;

    std::uint64_t step_budget = 1000000;

    // Identity alphabet: one letter per generator, torsion generators as
    // T-basis letters.
    static LetterContext from_presentation(const Presentation& p);

    int nletters() const { return static_cast<int>(alphabet.size()); }

    // element -> plain-D-power combination over the alphabet
    std::vector<ExpTerm> expand_element(const Element& e) const;
};

// Indexed alphabet letter; ordered by (index, alphabet position).
struct ULetter {
    int alpha = 0;
    std::int64_t index = 0;

    bool operator==(const ULetter&) const = default;
    std::strong_ordering operator<=>(const ULetter& o) const
    {
        if (auto c = index <=> o.index; c != 0)
            return c;
        return alpha <=> o.alpha;
    }
};

using PBWMonomial = std::vector<ULetter>; // nonincreasing letter sequence

// Element of the universal envelope: canonical combination of PBW monomials.
class UElement {
public:
    UElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
    void add(const PBWMonomial& m, const Rat& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement scaled(const Rat& c) const;
    bool operator==(const UElement& o) const { return terms_ == o.terms_; }

    // split by "contains a T-basis letter"
    UElement n_part(const LetterContext& ctx) const;
    UElement main_part(const LetterContext& ctx) const;

    std::string str(const LetterContext& ctx) const;

private:
    std::map<PBWMonomial, Rat> terms_;
};

// Straightening into nonincreasing monomials; out-of-order neighbours swap
// with a bracket correction.
UElement pbw_normal_form(const LetterContext& ctx,
                         const std::vector<ULetter>& word);

// Multiplication in the envelope (concatenate, then straighten).
UElement u_mul(const LetterContext& ctx, const UElement& x, const UElement& y);

// Right-normed conformal word b1(n1)(b2(n2)(...b_l)): l letters, l-1 indices.
struct ConfWord {
    std::vector<int> alphas;
    std::vector<std::int64_t> indices;

    int length() const { return static_cast<int>(alphas.size()); }
    auto operator<=>(const ConfWord&) const = default;

    std::string str(const LetterContext& ctx) const;
};

bool word_is_npart(const LetterContext& ctx, const ConfWord& w);
std::int64_t word_degree(const LetterContext& ctx, const ConfWord& w);

// k-th series coefficient of a conformal word, straightened.
UElement word_coefficient(const LetterContext& ctx, const ConfWord& w,
                          std::int64_t k);

// Order on PBW monomials: by length, then letterwise right to left.
bool s_less(const PBWMonomial& a, const PBWMonomial& b);

// Minimal monomial among those of maximal length.
PBWMonomial leading_monomial(const UElement& u);

// Expansion sum_{(n,w)} c * D^(n) w  (+ N-part terms, kept in the same map
// and classified by their words).
class WordExpansion {
public:
    using Key = std::pair<std::int64_t, ConfWord>;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }
    void add(std::int64_t dpow, const ConfWord& w, const Rat& c);
    WordExpansion& operator+=(const WordExpansion& o);
    WordExpansion& operator-=(const WordExpansion& o);
    WordExpansion scaled(const Rat& c) const;
    bool operator==(const WordExpansion& o) const
    {
        return terms_ == o.terms_;
    }

    WordExpansion n_part(const LetterContext& ctx) const;
    WordExpansion w_part(const LetterContext& ctx) const;

    // min over terms of (deg w - n); kInfDegree for 0
    std::int64_t degree_guarantee(const LetterContext& ctx) const;

    std::string str(const LetterContext& ctx) const;

private:
    std::map<Key, Rat> terms_;
};

// Conformal expression over elements of the presentation: leaves, n-th
// products, divided D-powers.
class Expr {
public:
    enum class Kind { Leaf, Prod, Dpow };

    static std::shared_ptr<Expr> leaf(Element e);
    static std::shared_ptr<Expr> prod(std::shared_ptr<Expr> a, std::int64_t n,
                                      std::shared_ptr<Expr> b);
    static std::shared_ptr<Expr> dpow(int t, std::shared_ptr<Expr> a);

    Kind kind;
    Element value;               // Leaf
    std::int64_t n = 0;          // Prod
    int t = 0;                   // Dpow
    std::shared_ptr<Expr> a, b;
};

using ExprPtr = std::shared_ptr<Expr>;

// Deterministic rewriting to the word basis: right-norm, expand letters in
// the alphabet, then sort adjacent operator letters; correction terms are
// strictly shorter.
WordExpansion rewrite_to_word_basis(const LetterContext& ctx, const ExprPtr& e);

// n-th product of two expansions, re-expanded in the word basis.
WordExpansion preconf_product(const LetterContext& ctx, const WordExpansion& x,
                              const WordExpansion& y, std::int64_t n);

// Independent series-coefficient oracle: evaluates the expression
// coefficientwise through the coefficient algebra and PBW straightening,
// bypassing the word-basis rewriting.
UElement expr_coefficient(const LetterContext& ctx, const ExprPtr& e,
                          std::int64_t k);

// k-th coefficient of an expansion.
UElement expansion_coefficient(const LetterContext& ctx,
                               const WordExpansion& x, std::int64_t k);

// The bracket [x(m), y(n)] of two alphabet letters, expressed in letters.
std::map<ULetter, Rat> letter_bracket(const LetterContext& ctx,
                                      const ULetter& x, const ULetter& y);

// a(m)(b(n)c) - b(n)(a(m)c) = sum_s binom(m,s) (a[s]b)(m+n-s) c, verified
// coefficientwise for alphabet letters a, b and sample words c.
CheckReport check_adconf(const LetterContext& ctx, int m_max, int n_max,
                         const std::vector<ConfWord>& samples,
                         IndexWindow coeff_window);

} // namespace confalg

#endif
