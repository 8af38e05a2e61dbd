#ifndef CONFALG_RATIONAL_HPP
#define CONFALG_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace confalg {

// Exact rational scalars. mpq_class keeps values canonical (lowest terms,
// positive denominator) under arithmetic; raw constructions go through
// rat_from_string which canonicalizes and validates.
using Rat = mpq_class;
using Int = mpz_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        throw input_error("empty rational literal");
    for (char ch : s)
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw input_error("bad rational literal: '" + s + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw input_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q)
{
    return q.get_str();
}

// binom(n, k) for integer n of any sign: n(n-1)...(n-k+1) / k!.
inline Int binom(const Int& n, unsigned long k)
{
    if (k == 0)
        return 1;
    if (n >= 0 && n < Int(static_cast<long>(k)))
        return 0;
    if (n >= 0) {
        Int r;
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
        return r;
    }
    // binom(-n, k) = (-1)^k binom(n+k-1, k)
    Int m = -n + static_cast<long>(k) - 1;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
    return (k % 2 == 0) ? r : -r;
}

inline Int binom(long n, long k)
{
    if (k < 0)
        return 0;
    return binom(Int(n), static_cast<unsigned long>(k));
}

inline Int factorial(unsigned long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace confalg

#endif
