#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symkr {

using Rat = mpq_class;
using Int = mpz_class;

/**
 * Laurent polynomial in q with exact rational coefficients.
 *
 * Exponents are stored doubled, so q^(1/2) is representable (exponent 1)
 * and q^3 has exponent 6.  Needed for the q^{-ab/2} shifts of singular
 * Soergel bimodules; everything in the uncolored pipeline stays integral.
 * No zero coefficient is ever stored.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c);         // constant
    static LaurentPoly monomial(int exp2, const Rat& c = 1);
    static LaurentPoly q_power(int exp2);       // q^(exp2/2)

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rat>& terms() const { return terms_; }
    Rat coeff(int exp2) const;

    void add_term(int exp2, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    LaurentPoly shifted(int exp2) const;        // * q^(exp2/2)

    /// Exact division; throws std::domain_error if the division does not
    /// come out exact (it always does for quantum binomials).
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// true iff invariant under q <-> q^{-1}
    bool bar_invariant() const;

    bool has_nonnegative_coeffs() const;

    int min_exp2() const;                       // throws on zero
    int max_exp2() const;

    /// "3*q^2 + 1 - q^-4"; half-integer exponents render as "q^(3/2)".
    std::string to_string() const;
    /// JSON: list of [doubled-exponent, numerator, denominator], descending.
    std::string to_json() const;

private:
    std::map<int, Rat> terms_;
};

LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

/// quantum integer [n] = (q^n - q^-n)/(q - q^-1); [0] = 0, negatives give -[|n|]
LaurentPoly qint(int n);

/// [n]!
LaurentPoly qfactorial(int n);

/// quantum binomial, 0 <= k <= n required (throws std::invalid_argument otherwise)
LaurentPoly qbinom(int n, int k);

/// quantum binomial with arbitrary integer upper index: prod_{i<k}[t-i] / [k]!
/// (used by the square-switch relation where the top can be negative)
LaurentPoly qbinom_signed(int t, int k);

/**
 * Young diagram: weakly decreasing rows, trailing zeros stripped.
 */
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int n_rows() const { return static_cast<int>(rows_.size()); }
    int row(int i) const { return i < n_rows() ? rows_[i] : 0; }
    int size() const;                           // |lambda|
    bool fits_in(int k, int M) const;           // member of T(k, M)
    bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
    bool operator<(const YoungDiagram& o) const { return rows_ < o.rows_; }

    static YoungDiagram rectangle(int a, int b);    // rho(a,b)

    std::string to_string() const;

private:
    std::vector<int> rows_;
};

/// complement inside the k x M rectangle: rows (M - lambda_{k+1-i}); involution
YoungDiagram young_complement(const YoungDiagram& lambda, int k, int M);

/// multiset union of the parts, re-sorted
YoungDiagram young_concat(const YoungDiagram& a, const YoungDiagram& b);

/// all diagrams in T(k, M)
std::vector<YoungDiagram> young_in_box(int k, int M);

/**
 * Multi-subset of {1,..,N}: multiplicity vector, index 0 <-> element 1.
 */
class MultiSubset {
public:
    MultiSubset() = default;
    explicit MultiSubset(std::vector<uint8_t> mult) : mult_(std::move(mult)) {}

    int ground_size() const { return static_cast<int>(mult_.size()); }
    int mult(int element) const;                // element in 1..N
    int cardinal() const;
    bool is_set() const;                        // all multiplicities <= 1

    MultiSubset disjoint_union(const MultiSubset& o) const;
    bool intersects(const MultiSubset& o) const;
    bool contains(const MultiSubset& o) const;  // o(x) <= this(x) everywhere
    MultiSubset minus(const MultiSubset& o) const;

    bool operator==(const MultiSubset& o) const { return mult_ == o.mult_; }
    bool operator<(const MultiSubset& o) const;

    /// sorted element tuple, e.g. {1,1,3}
    std::vector<int> elements() const;
    std::string to_string() const;

    static MultiSubset from_elements(const std::vector<int>& elems, int N);

private:
    std::vector<uint8_t> mult_;
};

/// |A<B| = sum_{x<y} A(x)B(y)
long less_count(const MultiSubset& a, const MultiSubset& b);

/// [I,J] = prod_x qbin(I(x)+J(x), I(x))
LaurentPoly merge_binom(const MultiSubset& I, const MultiSubset& J);

/// all multi-subsets of {1..N} of given cardinality, lexicographic in the
/// sorted element tuple (deterministic basis order)
std::vector<MultiSubset> multisubsets(int N, int cardinal);
/// plain subsets only
std::vector<MultiSubset> subsets(int N, int cardinal);

}  // namespace symkr
