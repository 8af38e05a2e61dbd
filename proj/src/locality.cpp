#include "confalg/locality.hpp"
#include "confalg/parallel.hpp"

#include <sstream>

namespace confalg {

int WordTree::leaves() const
{
    if (is_leaf)
        return 1;
    return left->leaves() + right->leaves();
}

namespace {

// numbers leaves and internal nodes left to right
void number_tree(const WordTreePtr& t, int& leaf, int& node)
{
    if (t->is_leaf) {
        t->leaf = leaf++;
        return;
    }
    number_tree(t->left, leaf, node);
    t->node = node++;
    number_tree(t->right, leaf, node);
}

void build_trees(int l, std::vector<WordTreePtr>& out)
{
    if (l == 1) {
        auto t = std::make_shared<WordTree>();
        t->is_leaf = true;
        out.push_back(t);
        return;
    }
    for (int k = 1; k < l; ++k) {
        std::vector<WordTreePtr> ls, rs;
        build_trees(k, ls);
        build_trees(l - k, rs);
        for (const auto& a : ls)
            for (const auto& b : rs) {
                auto t = std::make_shared<WordTree>();
                t->left = a;
                t->right = b;
                out.push_back(t);
            }
    }
}

WordTreePtr clone_tree(const WordTreePtr& t)
{
    auto c = std::make_shared<WordTree>(*t);
    if (!t->is_leaf) {
        c->left = clone_tree(t->left);
        c->right = clone_tree(t->right);
    }
    return c;
}

} // namespace

std::vector<WordTreePtr> enumerate_trees(int l)
{
    std::vector<WordTreePtr> raw;
    build_trees(l, raw);
    std::vector<WordTreePtr> out;
    out.reserve(raw.size());
    for (const auto& t : raw) {
        auto c = clone_tree(t);
        int leaf = 0, node = 0;
        number_tree(c, leaf, node);
        out.push_back(c);
    }
    return out;
}

std::string word_str(const WordTreePtr& t, const std::vector<std::string>& gens,
                     const std::vector<int>& assign,
                     const std::vector<std::int64_t>& idx)
{
    if (t->is_leaf)
        return gens.at(static_cast<std::size_t>(
            assign.at(static_cast<std::size_t>(t->leaf))));
    std::ostringstream os;
    os << "(" << word_str(t->left, gens, assign, idx) << "("
       << idx.at(static_cast<std::size_t>(t->node)) << ")"
       << word_str(t->right, gens, assign, idx) << ")";
    return os.str();
}

std::vector<std::string> PresentationEvaluator::generator_names() const
{
    return p_.gen_names();
}

Element PresentationEvaluator::eval(const WordTreePtr& t,
                                    const std::vector<int>& assign,
                                    const std::vector<std::int64_t>& idx) const
{
    if (t->is_leaf)
        return Element::generator(assign.at(static_cast<std::size_t>(t->leaf)));
    Element a = eval(t->left, assign, idx);
    if (a.is_zero())
        return a;
    Element b = eval(t->right, assign, idx);
    if (b.is_zero())
        return b;
    return nth_product(p_, a, b,
                       static_cast<int>(idx.at(static_cast<std::size_t>(t->node))));
}

bool PresentationEvaluator::word_is_zero(const WordTreePtr& t,
                                         const std::vector<int>& assign,
                                         const std::vector<std::int64_t>& idx) const
{
    return eval(t, assign, idx).is_zero();
}

std::int64_t PresentationEvaluator::structural_budget(int l) const
{
    // every product node needs index below locality plus accumulated
    // D-powers; D-powers only enter through table entries
    std::int64_t m = p_.max_locality();
    std::int64_t d = p_.max_sc_dpow();
    return (l - 1) * (m + 2 * std::max<std::int64_t>(0, l - 2) * d);
}

namespace {

// next tuple with the same sum, colex order; starts from (total, 0, ..., 0)
bool next_composition(std::vector<std::int64_t>& c)
{
    std::size_t k = c.size();
    if (k == 0)
        return false;
    std::size_t i = 0;
    while (i < k && c[i] == 0)
        ++i;
    if (i + 1 >= k)
        return false;
    std::int64_t t = c[i];
    c[i] = 0;
    c[0] = t - 1;
    c[i + 1] += 1;
    return true;
}

} // namespace

LocalityFunctionResult locality_function(const WordEvaluator& eval,
                                         const std::vector<int>& gens, int l,
                                         std::int64_t n_budget, int threads)
{
    LocalityFunctionResult res;
    res.length = l;
    res.budget = n_budget;
    auto names = eval.generator_names();
    auto trees = enumerate_trees(l);

    std::size_t ntuples = 1;
    for (int i = 0; i < l; ++i)
        ntuples *= gens.size();

    struct SumAcc {
        bool nonzero = false;
        std::string witness;
    };

    for (std::int64_t total = 0; total <= n_budget; ++total) {
        bool found_nonzero = false;
        std::string witness;
        for (const auto& tree : trees) {
            std::vector<std::int64_t> idx(static_cast<std::size_t>(l - 1), 0);
            if (!idx.empty())
                idx[0] = total;
            else if (total > 0)
                continue;
            bool more = true;
            while (more && !found_nonzero) {
                // scan all generator assignments in parallel
                SumAcc acc = parallel_map_reduce<SumAcc>(
                    ntuples, threads,
                    [&](std::size_t t) {
                        SumAcc a;
                        std::vector<int> assign(static_cast<std::size_t>(l));
                        std::size_t tt = t;
                        for (int i = 0; i < l; ++i) {
                            assign[static_cast<std::size_t>(i)] =
                                gens[tt % gens.size()];
                            tt /= gens.size();
                        }
                        if (!eval.word_is_zero(tree, assign, idx)) {
                            a.nonzero = true;
                            a.witness = word_str(tree, names, assign, idx);
                        }
                        return a;
                    },
                    [](SumAcc& into, SumAcc part) {
                        if (!into.nonzero && part.nonzero)
                            into = std::move(part);
                    },
                    {});
                if (acc.nonzero) {
                    found_nonzero = true;
                    witness = acc.witness;
                    break;
                }
                more = next_composition(idx);
            }
            if (found_nonzero)
                break;
        }
        if (found_nonzero) {
            res.max_nonzero_sum = total;
            res.witness = witness;
        }
    }
    res.value = res.max_nonzero_sum + 1;
    res.certified = n_budget >= eval.structural_budget(l);
    return res;
}

CheckReport dong_bound_check(const Presentation& p,
                             const std::vector<int>& gens, int pair_locality,
                             int l_max, int threads)
{
    CheckReport rep;
    rep.name = "dong-bound";
    rep.params = "N=" + std::to_string(pair_locality) +
                 " l_max=" + std::to_string(l_max);
    for (const auto& [k, n] : p.locality)
        if (n > pair_locality) {
            rep.record("pairwise locality exceeds the assumed bound N", {}, {});
            return rep;
        }
    PresentationEvaluator eval(p);
    for (int l = 2; l <= l_max; ++l) {
        std::int64_t budget = eval.structural_budget(l);
        auto r = locality_function(eval, gens, l, budget, threads);
        std::int64_t bound =
            static_cast<std::int64_t>(pair_locality) * l * (l - 1) / 2 - l + 1;
        ++rep.checked;
        if (!r.certified || r.value > bound) {
            std::ostringstream os;
            os << "l=" << l << " S=" << r.value << " bound=" << bound
               << (r.certified ? "" : " (uncertified)");
            rep.record(os.str(), {}, {});
        }
    }
    return rep;
}

} // namespace confalg
