#pragma once

#include <vector>

#include "certitrack/linalg.hpp"

namespace certitrack {

// One monomial coeff * x0^a0 * ... * xn^an.  exponents.size() == number of
// variables of the owning polynomial; sum of exponents == its degree.
struct MonomialTerm {
    std::vector<unsigned> exponents;
    GaussianRational coeff;
};

// Homogeneous polynomial in `nvars` variables, stored as a sparse term list
// sorted by exponent tuple.  The constructor canonicalizes: merges duplicate
// tuples, drops zero coefficients, and rejects terms of the wrong total degree.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(unsigned degree, unsigned nvars, std::vector<MonomialTerm> terms);

    unsigned degree() const { return degree_; }
    unsigned nvars() const { return nvars_; }
    const std::vector<MonomialTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

private:
    unsigned degree_;
    unsigned nvars_;
    std::vector<MonomialTerm> terms_;
};

// System of n homogeneous polynomials in n+1 variables.
class PolySystem {
public:
    explicit PolySystem(std::vector<HomogeneousPolynomial> polys);

    std::size_t n() const { return polys_.size(); }
    std::size_t nvars() const { return polys_.size() + 1; }
    const std::vector<HomogeneousPolynomial>& polys() const { return polys_; }
    const std::vector<unsigned>& degrees() const { return degrees_; }
    unsigned max_degree() const;
    // total stored term count (the "dense expansion" size of cost statements)
    std::size_t term_count() const;

    friend bool operator==(const PolySystem& a, const PolySystem& b);

private:
    std::vector<HomogeneousPolynomial> polys_;
    std::vector<unsigned> degrees_;
};

// Bombieri-Weyl self-product of the monomial with exponents alpha and total
// degree l: (prod_k alpha_k!) / l!.  Cached per (alpha, l).
mpq_class bw_weight(const std::vector<unsigned>& alpha, unsigned l);

// Hermitian Bombieri-Weyl product, summed over the component polynomials.
// Linear in f, conjugate-linear in g; monomials of different exponent are
// orthogonal.
GaussianRational bw_inner(const PolySystem& f, const PolySystem& g);
mpq_class bw_norm_sq(const PolySystem& f);

// a*f + b*g, term-merged and zero-pruned (the homotopy combination).
PolySystem linear_combination(const GaussianRational& a, const PolySystem& f,
                              const GaussianRational& b, const PolySystem& g);

QVector evaluate(const PolySystem& f, const QVector& z);   // length n
QMatrix jacobian(const PolySystem& f, const QVector& z);   // n x (n+1)

} // namespace certitrack
