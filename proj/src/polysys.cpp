#include "certitrack/polysys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "certitrack/errors.hpp"

namespace certitrack {

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree, unsigned nvars,
                                             std::vector<MonomialTerm> terms)
    : degree_(degree), nvars_(nvars) {
    if (degree == 0) throw DimensionMismatchError("polynomial degree must be positive");
    std::map<std::vector<unsigned>, GaussianRational> merged;
    for (auto& t : terms) {
        if (t.exponents.size() != nvars)
            throw DimensionMismatchError("term has wrong variable count");
        unsigned total = std::accumulate(t.exponents.begin(), t.exponents.end(), 0u);
        if (total != degree)
            throw DimensionMismatchError("non-homogeneous term: exponent sum != degree");
        merged[t.exponents] += t.coeff;
    }
    for (auto& [exp, coeff] : merged)
        if (!coeff.is_zero()) terms_.push_back({exp, std::move(coeff)});
}

bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.degree_ != b.degree_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

PolySystem::PolySystem(std::vector<HomogeneousPolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw DimensionMismatchError("system must contain at least one polynomial");
    for (const auto& p : polys_) {
        if (p.nvars() != polys_.size() + 1)
            throw DimensionMismatchError("system of n polynomials needs n+1 variables");
        degrees_.push_back(p.degree());
    }
}

unsigned PolySystem::max_degree() const {
    return *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t PolySystem::term_count() const {
    std::size_t s = 0;
    for (const auto& p : polys_) s += p.terms().size();
    return s;
}

bool operator==(const PolySystem& a, const PolySystem& b) {
    return a.polys_ == b.polys_;
}

namespace {

const mpz_class& cached_factorial(unsigned k) {
    thread_local std::vector<mpz_class> table{1};
    while (table.size() <= k) {
        mpz_class next;
        mpz_fac_ui(next.get_mpz_t(), static_cast<unsigned long>(table.size()));
        table.push_back(std::move(next));
    }
    return table[k];
}

} // namespace

mpq_class bw_weight(const std::vector<unsigned>& alpha, unsigned l) {
    unsigned total = std::accumulate(alpha.begin(), alpha.end(), 0u);
    if (total != l) throw DimensionMismatchError("bw_weight: exponent sum != degree");
    thread_local std::map<std::pair<std::vector<unsigned>, unsigned>, mpq_class> cache;
    auto key = std::make_pair(alpha, l);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    mpz_class num = 1;
    for (unsigned a : alpha) num *= cached_factorial(a);
    mpq_class w(num, cached_factorial(l));
    w.canonicalize();
    cache.emplace(std::move(key), w);
    return w;
}

namespace {

GaussianRational bw_inner_poly(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    // both term lists sorted by exponent tuple; walk them in lockstep
    GaussianRational s;
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    std::size_t i = 0, j = 0;
    while (i < ft.size() && j < gt.size()) {
        if (ft[i].exponents < gt[j].exponents) {
            ++i;
        } else if (gt[j].exponents < ft[i].exponents) {
            ++j;
        } else {
            s += bw_weight(ft[i].exponents, f.degree()) * (ft[i].coeff * gt[j].coeff.conj());
            ++i;
            ++j;
        }
    }
    return s;
}

void check_shapes(const PolySystem& f, const PolySystem& g, const char* op) {
    if (f.n() != g.n() || f.degrees() != g.degrees())
        throw DimensionMismatchError(std::string(op) + ": systems differ in shape or degrees");
}

} // namespace

GaussianRational bw_inner(const PolySystem& f, const PolySystem& g) {
    check_shapes(f, g, "bw_inner");
    GaussianRational s;
    for (std::size_t i = 0; i < f.n(); ++i) s += bw_inner_poly(f.polys()[i], g.polys()[i]);
    return s;
}

mpq_class bw_norm_sq(const PolySystem& f) {
    GaussianRational s = bw_inner(f, f);
    // <f,f> is a sum of weight * |coeff|^2: real by construction
    return s.re;
}

PolySystem linear_combination(const GaussianRational& a, const PolySystem& f,
                              const GaussianRational& b, const PolySystem& g) {
    check_shapes(f, g, "linear_combination");
    std::vector<HomogeneousPolynomial> polys;
    polys.reserve(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) {
        std::vector<MonomialTerm> terms;
        for (const auto& t : f.polys()[i].terms()) terms.push_back({t.exponents, a * t.coeff});
        for (const auto& t : g.polys()[i].terms()) terms.push_back({t.exponents, b * t.coeff});
        polys.emplace_back(f.degrees()[i], f.nvars(), std::move(terms));
    }
    return PolySystem(std::move(polys));
}

namespace {

GaussianRational pow_gq(const GaussianRational& base, unsigned e) {
    GaussianRational r(1, 0);
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

GaussianRational eval_term(const MonomialTerm& t, const QVector& z) {
    GaussianRational v = t.coeff;
    for (std::size_t k = 0; k < t.exponents.size(); ++k)
        if (t.exponents[k] > 0) v *= pow_gq(z[k], t.exponents[k]);
    return v;
}

} // namespace

QVector evaluate(const PolySystem& f, const QVector& z) {
    if (z.size() != f.nvars()) throw DimensionMismatchError("evaluate: point has wrong length");
    QVector out(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) {
        GaussianRational s;
        for (const auto& t : f.polys()[i].terms()) s += eval_term(t, z);
        out[i] = s;
    }
    return out;
}

QMatrix jacobian(const PolySystem& f, const QVector& z) {
    if (z.size() != f.nvars()) throw DimensionMismatchError("jacobian: point has wrong length");
    QMatrix J(f.n(), f.nvars());
    for (std::size_t i = 0; i < f.n(); ++i) {
        for (const auto& t : f.polys()[i].terms()) {
            for (std::size_t j = 0; j < t.exponents.size(); ++j) {
                unsigned e = t.exponents[j];
                if (e == 0) continue;
                // d/dx_j of the term: e * coeff * x_j^(e-1) * rest
                GaussianRational v = mpq_class(e) * t.coeff;
                for (std::size_t k = 0; k < t.exponents.size(); ++k) {
                    unsigned ek = (k == j) ? t.exponents[k] - 1 : t.exponents[k];
                    if (ek > 0) v *= pow_gq(z[k], ek);
                }
                J(i, j) += v;
            }
        }
    }
    return J;
}

} // namespace certitrack
