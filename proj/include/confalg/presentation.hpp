#ifndef CONFALG_PRESENTATION_HPP
#define CONFALG_PRESENTATION_HPP

#include "confalg/element.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace confalg {

enum class AlgKind { Lie, Associative };

struct GeneratorInfo {
    std::string name;
    int weight = 0;        // wt g >= 0; wt D = -1
    int torsion_order = 0; // 0: free over k[D], 1: D g = 0

    bool operator==(const GeneratorInfo&) const = default;
};

// Finite presentation: generators, pairwise locality bounds N(a,b), and the
// structure-constant table for g(n)h with 0 <= n < N(g,h).  Absent entries
// are zero.
class Presentation {
public:
    AlgKind kind = AlgKind::Lie;
    std::vector<GeneratorInfo> generators;
    std::map<std::pair<int, int>, int> locality;
    std::map<std::tuple<int, int, int>, Element> sc_table;

    int gen_index(const std::string& name) const;
    std::optional<int> find_gen(const std::string& name) const;
    int ngens() const { return static_cast<int>(generators.size()); }
    std::vector<std::string> gen_names() const;

    int locality_of(int a, int b) const; // 0 when absent
    int max_locality() const;
    int max_sc_dpow() const;

    const Element* sc_entry(int a, int b, int n) const;
    void set_product(int a, int b, int n, Element value);
    void set_locality(int a, int b, int n);

    bool operator==(const Presentation& o) const;
};

// D^(k) applied to e, with divided-powers bookkeeping; terms landing on a
// torsion generator with positive D-power vanish.
Element apply_derivation(const Presentation& p, const Element& e, int k);

// The n-th product a(n)b, extended from the table by bilinearity and the
// derivation rules
//   (D^(k)a)(n)b = (-1)^k binom(n,k) a(n-k)b
//   a(n)(D^(k)b) = sum_s binom(n,s) D^(k-s)( a(n-s)b ).
Element nth_product(const Presentation& p, const Element& a, const Element& b,
                    int n);

// Smallest bound N with a(n)b = 0 for all n >= N, from locality and the
// D-powers appearing in a, b and the table.
int effective_locality(const Presentation& p, const Element& a,
                       const Element& b);

bool is_central(const Presentation& p, const Element& e, int n_max);

} // namespace confalg

#endif
