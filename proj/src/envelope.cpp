#include "confalg/envelope.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace confalg {

// ---------------------------------------------------------------- context

LetterContext LetterContext::from_presentation(const Presentation& p)
{
    if (p.kind != AlgKind::Lie)
        throw input_error("letter context requires a Lie presentation");
    LetterContext ctx;
    ctx.pres = p;
    for (int g = 0; g < p.ngens(); ++g) {
        const auto& gi = p.generators[static_cast<std::size_t>(g)];
        AlphabetEntry e;
        e.name = gi.name;
        e.rep = Element::generator(g);
        e.torsion = gi.torsion_order != 0;
        e.in_tbasis = e.torsion;
        e.deg = e.torsion ? kInfDegree : gi.weight;
        ctx.alphabet.push_back(std::move(e));
    }
    // order: free letters first, in presentation order, then torsion letters
    std::stable_sort(ctx.alphabet.begin(), ctx.alphabet.end(),
                     [](const AlphabetEntry& a, const AlphabetEntry& b) {
                         return a.in_tbasis < b.in_tbasis;
                     });
    ctx.gen_expansion.assign(static_cast<std::size_t>(p.ngens()), {});
    for (int a = 0; a < ctx.nletters(); ++a) {
        int g = ctx.alphabet[static_cast<std::size_t>(a)].rep.terms().begin()->first.gen;
        ctx.gen_expansion[static_cast<std::size_t>(g)] = {{a, 0, Rat(1)}};
    }
    return ctx;
}

std::vector<LetterContext::ExpTerm>
LetterContext::expand_element(const Element& e) const
{
    // combine generator expansions with the element's divided D-powers:
    // c D^(k) g  ->  (c/k!) D^k g  ->  sum (c*coeff/k!) D^{k+m} alpha
    std::map<std::pair<int, int>, Rat> acc;
    for (const auto& [key, c] : e.terms()) {
        const auto& exp = gen_expansion.at(static_cast<std::size_t>(key.gen));
        Rat base = c / Rat(factorial(static_cast<unsigned long>(key.dpow)));
        for (const auto& t : exp) {
            int m = t.dpow + key.dpow;
            if (alphabet[static_cast<std::size_t>(t.alpha)].torsion && m > 0)
                continue;
            Rat v = base * t.coeff;
            auto k2 = std::make_pair(t.alpha, m);
            acc[k2] += v;
        }
    }
    std::vector<ExpTerm> out;
    for (const auto& [k, v] : acc)
        if (v != 0)
            out.push_back({k.first, k.second, v});
    return out;
}

// ---------------------------------------------------------------- UElement

void UElement::add(const PBWMonomial& m, const Rat& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

UElement UElement::scaled(const Rat& c) const
{
    UElement r;
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.add(m, v * c);
    return r;
}

namespace {

bool monomial_has_tletter(const LetterContext& ctx, const PBWMonomial& m)
{
    for (const auto& l : m)
        if (ctx.alphabet[static_cast<std::size_t>(l.alpha)].in_tbasis)
            return true;
    return false;
}

} // namespace

UElement UElement::n_part(const LetterContext& ctx) const
{
    UElement r;
    for (const auto& [m, c] : terms_)
        if (monomial_has_tletter(ctx, m))
            r.add(m, c);
    return r;
}

UElement UElement::main_part(const LetterContext& ctx) const
{
    UElement r;
    for (const auto& [m, c] : terms_)
        if (!monomial_has_tletter(ctx, m))
            r.add(m, c);
    return r;
}

std::string UElement::str(const LetterContext& ctx) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << rat_to_string(c) << "*";
        for (const auto& l : m)
            os << ctx.alphabet[static_cast<std::size_t>(l.alpha)].name << "("
               << l.index << ")";
    }
    return os.str();
}

// ----------------------------------------------------------- letters, PBW

namespace {

// zero for invalid torsion indices
bool letter_valid(const LetterContext& ctx, const ULetter& l)
{
    const auto& e = ctx.alphabet[static_cast<std::size_t>(l.alpha)];
    return !e.torsion || l.index == -1;
}

// pure coefficient letters -> alphabet letters
std::map<ULetter, Rat> to_alphabet(const LetterContext& ctx,
                                   const CoeffElement& ce)
{
    std::map<ULetter, Rat> out;
    for (const auto& [pl, c] : ce.terms()) {
        const auto& exp =
            ctx.gen_expansion.at(static_cast<std::size_t>(pl.gen));
        for (const auto& t : exp) {
            // (D^m alpha)(u) = (-1)^m m! binom(u, m) alpha(u - m)
            Int b = binom(Int(pl.index), static_cast<unsigned long>(t.dpow));
            if (b == 0)
                continue;
            ULetter l{t.alpha, pl.index - t.dpow};
            if (!letter_valid(ctx, l))
                continue;
            Rat v = c * t.coeff * Rat(sign_pow(t.dpow) * b) *
                    Rat(factorial(static_cast<unsigned long>(t.dpow)));
            auto it = out.find(l);
            if (it == out.end())
                out.emplace(l, v);
            else {
                it->second += v;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

} // namespace

std::map<ULetter, Rat> letter_bracket(const LetterContext& ctx,
                                      const ULetter& x, const ULetter& y)
{
    CoeffElement cx = element_coefficient(
        ctx.pres, ctx.alphabet[static_cast<std::size_t>(x.alpha)].rep, x.index);
    CoeffElement cy = element_coefficient(
        ctx.pres, ctx.alphabet[static_cast<std::size_t>(y.alpha)].rep, y.index);
    CoeffElement cb = coeff_bracket(ctx.pres, cx, cy);
    return to_alphabet(ctx, cb);
}

UElement pbw_normal_form(const LetterContext& ctx,
                         const std::vector<ULetter>& word)
{
    for (const auto& l : word)
        if (!letter_valid(ctx, l))
            return {};
    UElement out;
    std::vector<std::pair<PBWMonomial, Rat>> work{{word, Rat(1)}};
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t bad = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] < w[i + 1]) {
                bad = i;
                break;
            }
        if (bad == w.size()) {
            out.add(w, c);
            continue;
        }
        PBWMonomial swapped = w;
        std::swap(swapped[bad], swapped[bad + 1]);
        work.emplace_back(std::move(swapped), c);
        auto br = letter_bracket(ctx, w[bad], w[bad + 1]);
        for (const auto& [l, cb] : br) {
            PBWMonomial sub;
            sub.reserve(w.size() - 1);
            sub.insert(sub.end(), w.begin(), w.begin() + bad);
            sub.push_back(l);
            sub.insert(sub.end(), w.begin() + bad + 2, w.end());
            work.emplace_back(std::move(sub), c * cb);
        }
    }
    return out;
}

UElement u_mul(const LetterContext& ctx, const UElement& x, const UElement& y)
{
    UElement out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            PBWMonomial w = mx;
            w.insert(w.end(), my.begin(), my.end());
            out += pbw_normal_form(ctx, w).scaled(cx * cy);
        }
    return out;
}

// --------------------------------------------------------------- ConfWord

std::string ConfWord::str(const LetterContext& ctx) const
{
    std::ostringstream os;
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        os << ctx.alphabet[static_cast<std::size_t>(alphas[i])].name << "("
           << indices[i] << ")";
    if (!alphas.empty())
        os << ctx.alphabet[static_cast<std::size_t>(alphas.back())].name;
    return os.str();
}

bool word_is_npart(const LetterContext& ctx, const ConfWord& w)
{
    for (int a : w.alphas)
        if (ctx.alphabet[static_cast<std::size_t>(a)].in_tbasis)
            return true;
    return false;
}

std::int64_t word_degree(const LetterContext& ctx, const ConfWord& w)
{
    std::int64_t d = 0;
    for (int a : w.alphas) {
        std::int64_t ad = ctx.alphabet[static_cast<std::size_t>(a)].deg;
        if (ad == kInfDegree)
            return kInfDegree;
        d += ad;
    }
    for (std::int64_t n : w.indices)
        d += n;
    return d;
}

UElement word_coefficient(const LetterContext& ctx, const ConfWord& w,
                          std::int64_t k)
{
    assert(w.alphas.size() == w.indices.size() + 1);
    if (w.length() == 1) {
        ULetter l{w.alphas[0], k};
        UElement out;
        if (letter_valid(ctx, l))
            out.add({l}, Rat(1));
        return out;
    }
    ConfWord rest;
    rest.alphas.assign(w.alphas.begin() + 1, w.alphas.end());
    rest.indices.assign(w.indices.begin() + 1, w.indices.end());
    std::int64_t n0 = w.indices[0];
    UElement out;
    for (std::int64_t s = 0; s <= n0; ++s) {
        Int b = binom(n0, s);
        if (b == 0)
            continue;
        UElement sub = word_coefficient(ctx, rest, k + s);
        if (sub.is_zero())
            continue;
        ULetter l0{w.alphas[0], n0 - s};
        if (!letter_valid(ctx, l0))
            continue;
        UElement head;
        head.add({l0}, Rat(1));
        out += u_mul(ctx, head, sub).scaled(Rat(sign_pow(s) * b));
    }
    return out;
}

bool s_less(const PBWMonomial& a, const PBWMonomial& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

PBWMonomial leading_monomial(const UElement& u)
{
    PBWMonomial best;
    bool have = false;
    std::size_t maxlen = 0;
    for (const auto& [m, c] : u.terms())
        maxlen = std::max(maxlen, m.size());
    for (const auto& [m, c] : u.terms()) {
        if (m.size() != maxlen)
            continue;
        if (!have || s_less(m, best)) {
            best = m;
            have = true;
        }
    }
    return best;
}

// ---------------------------------------------------------- WordExpansion

void WordExpansion::add(std::int64_t dpow, const ConfWord& w, const Rat& c)
{
    if (c == 0)
        return;
    Key k{dpow, w};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WordExpansion& WordExpansion::operator+=(const WordExpansion& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

WordExpansion& WordExpansion::operator-=(const WordExpansion& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, -c);
    return *this;
}

WordExpansion WordExpansion::scaled(const Rat& c) const
{
    WordExpansion r;
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.add(k.first, k.second, v * c);
    return r;
}

WordExpansion WordExpansion::n_part(const LetterContext& ctx) const
{
    WordExpansion r;
    for (const auto& [k, c] : terms_)
        if (word_is_npart(ctx, k.second))
            r.add(k.first, k.second, c);
    return r;
}

WordExpansion WordExpansion::w_part(const LetterContext& ctx) const
{
    WordExpansion r;
    for (const auto& [k, c] : terms_)
        if (!word_is_npart(ctx, k.second))
            r.add(k.first, k.second, c);
    return r;
}

std::int64_t WordExpansion::degree_guarantee(const LetterContext& ctx) const
{
    std::int64_t g = kInfDegree;
    for (const auto& [k, c] : terms_) {
        std::int64_t d = word_degree(ctx, k.second);
        if (d == kInfDegree)
            continue;
        g = std::min(g, d - k.first);
    }
    return g;
}

std::string WordExpansion::str(const LetterContext& ctx) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << rat_to_string(c) << "*";
        if (k.first > 0)
            os << "D(" << k.first << ")[";
        os << k.second.str(ctx);
        if (k.first > 0)
            os << "]";
    }
    return os.str();
}

// ------------------------------------------------------------------ Expr

ExprPtr Expr::leaf(Element e)
{
    auto p = std::make_shared<Expr>();
    p->kind = Kind::Leaf;
    p->value = std::move(e);
    return p;
}

ExprPtr Expr::prod(ExprPtr a, std::int64_t n, ExprPtr b)
{
    if (n < 0)
        throw input_error("conformal products need a nonnegative index");
    auto p = std::make_shared<Expr>();
    p->kind = Kind::Prod;
    p->n = n;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

ExprPtr Expr::dpow(int t, ExprPtr a)
{
    if (t < 0)
        throw input_error("negative derivation power");
    auto p = std::make_shared<Expr>();
    p->kind = Kind::Dpow;
    p->t = t;
    p->a = std::move(a);
    return p;
}

// ------------------------------------------------------------- rewriting

namespace {

// right-normed word over raw presentation elements
struct RawWord {
    std::vector<Element> elems;
    std::vector<std::int64_t> idx; // size elems.size() - 1

    auto operator<=>(const RawWord&) const = default;
};

struct DTerm {
    std::int64_t dpow; // divided outer power
    RawWord word;
    Rat coeff;
};

class Rewriter {
public:
    Rewriter(const LetterContext& ctx) : ctx_(ctx) {}

    const LetterContext& ctx_;
    std::uint64_t steps = 0;

    void tick()
    {
        if (++steps > ctx_.step_budget)
            throw budget_error("rewriting step budget exceeded");
    }

    std::vector<DTerm> flatten(const ExprPtr& e);
    std::vector<DTerm> join_product(const std::vector<DTerm>& xs,
                                    std::int64_t n,
                                    const std::vector<DTerm>& ys);
    // prepend element letter at a fixed index onto a raw word
    void join_word(const Element& head, std::int64_t m, const RawWord& tail,
                   const Rat& c, std::vector<DTerm>& out);
    // word-level join: (w1)(m)(w2) by repeated conformal associativity
    void assoc_join(const RawWord& w1, std::int64_t m, const RawWord& w2,
                    const Rat& c, std::vector<DTerm>& out);

    WordExpansion finish(const std::vector<DTerm>& terms);
    void expand_and_sort(std::int64_t outer_d, const RawWord& w, const Rat& c,
                         WordExpansion& out);
    void sort_word(std::int64_t d, ConfWord w, Rat c, WordExpansion& out);
    // replace positions i, i+1 by an element letter at index u
    void substitute_element(std::int64_t d, const ConfWord& w, std::size_t i,
                            const Element& e, std::int64_t u, const Rat& c,
                            WordExpansion& out);
};

std::vector<DTerm> Rewriter::flatten(const ExprPtr& e)
{
    tick();
    switch (e->kind) {
    case Expr::Kind::Leaf: {
        if (e->value.is_zero())
            return {};
        RawWord w;
        w.elems.push_back(e->value);
        return {DTerm{0, std::move(w), Rat(1)}};
    }
    case Expr::Kind::Dpow: {
        auto sub = flatten(e->a);
        std::vector<DTerm> out;
        for (auto& t : sub) {
            Int b = binom(t.dpow + e->t, static_cast<long>(e->t));
            out.push_back(
                DTerm{t.dpow + e->t, std::move(t.word), t.coeff * Rat(b)});
        }
        return out;
    }
    case Expr::Kind::Prod: {
        auto xs = flatten(e->a);
        auto ys = flatten(e->b);
        return join_product(xs, e->n, ys);
    }
    }
    return {};
}

std::vector<DTerm> Rewriter::join_product(const std::vector<DTerm>& xs,
                                          std::int64_t n,
                                          const std::vector<DTerm>& ys)
{
    std::vector<DTerm> out;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            tick();
            // strip the left divided power: (D^(d1) u)(n) v
            std::int64_t m0 = n - x.dpow;
            if (m0 < 0)
                continue;
            Int lb = binom(n, x.dpow);
            if (lb == 0)
                continue;
            Rat base = x.coeff * y.coeff * Rat(sign_pow(x.dpow) * lb);
            // strip the right divided power:
            // u(m0)(D^(d2) v) = sum_s binom(m0, s) D^(d2-s)( u(m0-s) v )
            std::int64_t smax = std::min<std::int64_t>(m0, y.dpow);
            for (std::int64_t s = 0; s <= smax; ++s) {
                Int rb = binom(m0, s);
                if (rb == 0)
                    continue;
                std::vector<DTerm> joined;
                assoc_join(x.word, m0 - s, y.word, base * Rat(rb), joined);
                for (auto& t : joined) {
                    // pending divided power composes with the generated one
                    std::int64_t dd = y.dpow - s;
                    Int cb = binom(t.dpow + dd, static_cast<long>(dd));
                    out.push_back(DTerm{t.dpow + dd, std::move(t.word),
                                        t.coeff * Rat(cb)});
                }
            }
        }
    return out;
}

void Rewriter::assoc_join(const RawWord& w1, std::int64_t m, const RawWord& w2,
                          const Rat& c, std::vector<DTerm>& out)
{
    tick();
    if (w1.elems.size() == 1) {
        join_word(w1.elems[0], m, w2, c, out);
        return;
    }
    // ( a(m1) w1' )(m) w2 = sum_s (-1)^s binom(m1, s) a(m1-s)( w1'(m+s) w2 )
    std::int64_t m1 = w1.idx[0];
    RawWord rest;
    rest.elems.assign(w1.elems.begin() + 1, w1.elems.end());
    rest.idx.assign(w1.idx.begin() + 1, w1.idx.end());
    for (std::int64_t s = 0; s <= m1; ++s) {
        Int b = binom(m1, s);
        if (b == 0)
            continue;
        std::vector<DTerm> inner;
        assoc_join(rest, m + s, w2, c * Rat(sign_pow(s) * b), inner);
        for (auto& t : inner) {
            // the pending divided power on the inner word is pushed through
            // the new head letter by the right-hand derivation rule
            std::int64_t mm = m1 - s;
            std::int64_t smax = std::min<std::int64_t>(mm, t.dpow);
            for (std::int64_t s2 = 0; s2 <= smax; ++s2) {
                Int rb = binom(mm, s2);
                if (rb == 0)
                    continue;
                RawWord joined;
                joined.elems.reserve(t.word.elems.size() + 1);
                joined.elems.push_back(w1.elems[0]);
                joined.elems.insert(joined.elems.end(), t.word.elems.begin(),
                                    t.word.elems.end());
                joined.idx.reserve(t.word.idx.size() + 1);
                joined.idx.push_back(mm - s2);
                joined.idx.insert(joined.idx.end(), t.word.idx.begin(),
                                  t.word.idx.end());
                out.push_back(DTerm{t.dpow - s2, std::move(joined),
                                    t.coeff * Rat(rb)});
            }
        }
    }
}

void Rewriter::join_word(const Element& head, std::int64_t m,
                         const RawWord& tail, const Rat& c,
                         std::vector<DTerm>& out)
{
    RawWord w;
    w.elems.reserve(tail.elems.size() + 1);
    w.elems.push_back(head);
    w.elems.insert(w.elems.end(), tail.elems.begin(), tail.elems.end());
    w.idx.reserve(tail.idx.size() + 1);
    w.idx.push_back(m);
    w.idx.insert(w.idx.end(), tail.idx.begin(), tail.idx.end());
    out.push_back(DTerm{0, std::move(w), c});
}

WordExpansion Rewriter::finish(const std::vector<DTerm>& terms)
{
    WordExpansion out;
    for (const auto& t : terms)
        expand_and_sort(t.dpow, t.word, t.coeff, out);
    return out;
}

void Rewriter::expand_and_sort(std::int64_t outer_d, const RawWord& w,
                               const Rat& c, WordExpansion& out)
{
    // fold from the last letter leftwards, expanding every element into the
    // alphabet and eliminating D-powers as they appear
    struct State {
        std::int64_t pending; // divided power applied to the suffix
        ConfWord word;
        Rat coeff;
    };
    std::vector<State> states;
    {
        auto exp = ctx_.expand_element(w.elems.back());
        for (const auto& t : exp) {
            ConfWord cw;
            cw.alphas.push_back(t.alpha);
            // plain D^m = m! D^(m)
            states.push_back(
                {t.dpow, std::move(cw),
                 c * t.coeff *
                     Rat(factorial(static_cast<unsigned long>(t.dpow)))});
        }
    }
    for (std::size_t pos = w.elems.size() - 1; pos-- > 0;) {
        tick();
        std::int64_t n = w.idx[pos];
        auto exp = ctx_.expand_element(w.elems[pos]);
        std::vector<State> next;
        for (const auto& st : states) {
            for (const auto& t : exp) {
                // (D^j alpha)(n) (D^(p) S) with plain j, divided p
                std::int64_t smax = std::min<std::int64_t>(n, st.pending);
                for (std::int64_t s = 0; s <= smax; ++s) {
                    Int rb = binom(n, s);
                    if (rb == 0)
                        continue;
                    std::int64_t m = n - s;
                    Int lb = binom(m, t.dpow);
                    if (lb == 0)
                        continue;
                    ULetter l{t.alpha, m - t.dpow};
                    if (!letter_valid(ctx_, l))
                        continue; // torsion letters vanish at indices >= 0
                    State ns;
                    ns.pending = st.pending - s;
                    ns.word.alphas.reserve(st.word.alphas.size() + 1);
                    ns.word.alphas.push_back(t.alpha);
                    ns.word.alphas.insert(ns.word.alphas.end(),
                                          st.word.alphas.begin(),
                                          st.word.alphas.end());
                    ns.word.indices.reserve(st.word.indices.size() + 1);
                    ns.word.indices.push_back(l.index);
                    ns.word.indices.insert(ns.word.indices.end(),
                                           st.word.indices.begin(),
                                           st.word.indices.end());
                    ns.coeff =
                        st.coeff * t.coeff * Rat(rb) *
                        Rat(sign_pow(t.dpow) * lb) *
                        Rat(factorial(static_cast<unsigned long>(t.dpow)));
                    next.push_back(std::move(ns));
                }
            }
        }
        states = std::move(next);
    }
    for (auto& st : states) {
        Int cb = binom(outer_d + st.pending, static_cast<long>(outer_d));
        sort_word(outer_d + st.pending, std::move(st.word),
                  st.coeff * Rat(cb), out);
    }
}

void Rewriter::sort_word(std::int64_t d, ConfWord w, Rat c, WordExpansion& out)
{
    tick();
    int l = w.length();
    // ordering constraint applies to adjacent operator letters only
    std::size_t bad = static_cast<std::size_t>(-1);
    for (int i = 0; i + 2 < l; ++i) {
        ULetter a{w.alphas[static_cast<std::size_t>(i)],
                  w.indices[static_cast<std::size_t>(i)]};
        ULetter b{w.alphas[static_cast<std::size_t>(i + 1)],
                  w.indices[static_cast<std::size_t>(i + 1)]};
        if (a < b) {
            bad = static_cast<std::size_t>(i);
            break;
        }
    }
    if (bad == static_cast<std::size_t>(-1)) {
        out.add(d, w, c);
        return;
    }
    std::int64_t m = w.indices[bad];
    std::int64_t n = w.indices[bad + 1];
    const Element& ra =
        ctx_.alphabet[static_cast<std::size_t>(w.alphas[bad])].rep;
    const Element& rb =
        ctx_.alphabet[static_cast<std::size_t>(w.alphas[bad + 1])].rep;

    // corrections sum_s binom(m,s) (a[s]b)(m+n-s) (tail)
    int sbound = effective_locality(ctx_.pres, ra, rb);
    for (std::int64_t s = 0; s <= m && s < sbound; ++s) {
        Int b = binom(m, s);
        if (b == 0)
            continue;
        Element br = nth_product(ctx_.pres, ra, rb, static_cast<int>(s));
        if (br.is_zero())
            continue;
        substitute_element(d, w, bad, br, m + n - s, c * Rat(b), out);
    }
    // swapped word
    std::swap(w.alphas[bad], w.alphas[bad + 1]);
    std::swap(w.indices[bad], w.indices[bad + 1]);
    sort_word(d, std::move(w), std::move(c), out);
}

void Rewriter::substitute_element(std::int64_t d, const ConfWord& w,
                                  std::size_t i, const Element& e,
                                  std::int64_t u, const Rat& c,
                                  WordExpansion& out)
{
    auto exp = ctx_.expand_element(e);
    for (const auto& t : exp) {
        // (D^j alpha)(u) = j! (-1)^j binom(u, j) alpha(u - j)
        Int lb = binom(u, t.dpow);
        if (lb == 0)
            continue;
        ULetter l{t.alpha, u - t.dpow};
        if (!letter_valid(ctx_, l))
            continue;
        ConfWord nw;
        nw.alphas.reserve(w.alphas.size() - 1);
        nw.indices.reserve(w.indices.size() - 1);
        nw.alphas.insert(nw.alphas.end(), w.alphas.begin(),
                         w.alphas.begin() + i);
        nw.indices.insert(nw.indices.end(), w.indices.begin(),
                          w.indices.begin() + i);
        nw.alphas.push_back(t.alpha);
        nw.indices.push_back(l.index);
        nw.alphas.insert(nw.alphas.end(), w.alphas.begin() + i + 2,
                         w.alphas.end());
        nw.indices.insert(nw.indices.end(), w.indices.begin() + i + 2,
                          w.indices.end());
        Rat coeff = c * t.coeff * Rat(sign_pow(t.dpow) * lb) *
                    Rat(factorial(static_cast<unsigned long>(t.dpow)));
        sort_word(d, std::move(nw), std::move(coeff), out);
    }
}

} // namespace

WordExpansion rewrite_to_word_basis(const LetterContext& ctx, const ExprPtr& e)
{
    Rewriter rw(ctx);
    auto terms = rw.flatten(e);
    return rw.finish(terms);
}

WordExpansion preconf_product(const LetterContext& ctx, const WordExpansion& x,
                              const WordExpansion& y, std::int64_t n)
{
    if (n < 0)
        throw input_error("preconf_product: negative index");
    Rewriter rw(ctx);
    auto to_dterms = [&](const WordExpansion& w) {
        std::vector<DTerm> out;
        for (const auto& [k, c] : w.terms()) {
            RawWord raw;
            for (int a : k.second.alphas)
                raw.elems.push_back(
                    ctx.alphabet[static_cast<std::size_t>(a)].rep);
            raw.idx = k.second.indices;
            out.push_back(DTerm{k.first, std::move(raw), c});
        }
        return out;
    };
    auto xs = to_dterms(x);
    auto ys = to_dterms(y);
    auto joined = rw.join_product(xs, n, ys);
    return rw.finish(joined);
}

UElement expr_coefficient(const LetterContext& ctx, const ExprPtr& e,
                          std::int64_t k)
{
    switch (e->kind) {
    case Expr::Kind::Leaf: {
        CoeffElement ce = element_coefficient(ctx.pres, e->value, k);
        UElement out;
        for (const auto& [l, c] : to_alphabet(ctx, ce))
            out.add({l}, c);
        return out;
    }
    case Expr::Kind::Dpow: {
        // (D^(t) x)(k) = (-1)^t binom(k, t) x(k - t)
        Int b = binom(Int(k), static_cast<unsigned long>(e->t));
        if (b == 0)
            return {};
        return expr_coefficient(ctx, e->a, k - e->t)
            .scaled(Rat(sign_pow(e->t) * b));
    }
    case Expr::Kind::Prod: {
        UElement out;
        for (std::int64_t s = 0; s <= e->n; ++s) {
            Int b = binom(e->n, s);
            if (b == 0)
                continue;
            UElement xa = expr_coefficient(ctx, e->a, e->n - s);
            if (xa.is_zero())
                continue;
            UElement xb = expr_coefficient(ctx, e->b, k + s);
            if (xb.is_zero())
                continue;
            out += u_mul(ctx, xa, xb).scaled(Rat(sign_pow(s) * b));
        }
        return out;
    }
    }
    return {};
}

UElement expansion_coefficient(const LetterContext& ctx,
                               const WordExpansion& x, std::int64_t k)
{
    UElement out;
    for (const auto& [key, c] : x.terms()) {
        Int b = binom(Int(k), static_cast<unsigned long>(key.first));
        if (b == 0)
            continue;
        out += word_coefficient(ctx, key.second, k - key.first)
                   .scaled(c * Rat(sign_pow(key.first) * b));
    }
    return out;
}

CheckReport check_adconf(const LetterContext& ctx, int m_max, int n_max,
                         const std::vector<ConfWord>& samples,
                         IndexWindow coeff_window)
{
    CheckReport rep;
    rep.name = "adconf";
    rep.params = "m_max=" + std::to_string(m_max) +
                 " n_max=" + std::to_string(n_max);
    int nl = ctx.nletters();
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b)
            for (const auto& cw : samples) {
                ExprPtr ec = Expr::leaf(
                    ctx.alphabet[static_cast<std::size_t>(cw.alphas.back())].rep);
                for (std::size_t i = cw.indices.size(); i-- > 0;) {
                    ec = Expr::prod(
                        Expr::leaf(ctx.alphabet[static_cast<std::size_t>(
                                                    cw.alphas[i])].rep),
                        cw.indices[i], ec);
                }
                const Element& ra =
                    ctx.alphabet[static_cast<std::size_t>(a)].rep;
                const Element& rb =
                    ctx.alphabet[static_cast<std::size_t>(b)].rep;
                for (int m = 0; m <= m_max; ++m)
                    for (int n = 0; n <= n_max; ++n) {
                        ExprPtr lhs1 = Expr::prod(
                            Expr::leaf(ra), m,
                            Expr::prod(Expr::leaf(rb), n, ec));
                        ExprPtr lhs2 = Expr::prod(
                            Expr::leaf(rb), n,
                            Expr::prod(Expr::leaf(ra), m, ec));
                        int sbound = effective_locality(ctx.pres, ra, rb);
                        for (std::int64_t k = coeff_window.lo;
                             k <= coeff_window.hi; ++k) {
                            UElement l = expr_coefficient(ctx, lhs1, k);
                            l -= expr_coefficient(ctx, lhs2, k);
                            UElement r;
                            for (int s = 0; s <= m && s < sbound; ++s) {
                                Int bm = binom(static_cast<long>(m),
                                               static_cast<long>(s));
                                if (bm == 0)
                                    continue;
                                Element br =
                                    nth_product(ctx.pres, ra, rb, s);
                                if (br.is_zero())
                                    continue;
                                ExprPtr re = Expr::prod(Expr::leaf(br),
                                                        m + n - s, ec);
                                r += expr_coefficient(ctx, re, k)
                                         .scaled(Rat(bm));
                            }
                            ++rep.checked;
                            if (!(l == r)) {
                                std::ostringstream os;
                                os << ctx.alphabet[static_cast<std::size_t>(a)].name
                                   << "," << ctx.alphabet[static_cast<std::size_t>(b)].name
                                   << " m=" << m << " n=" << n
                                   << " word=" << cw.str(ctx) << " k=" << k;
                                rep.record(os.str(), {}, {});
                            }
                        }
                    }
            }
    return rep;
}

} // namespace confalg
