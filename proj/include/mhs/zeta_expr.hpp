#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhs/exact.hpp"

namespace mhslab {

// Formal rational-linear combination of monomials in the atoms zeta(k),
// k >= 2, and ln 2. Atoms are algebraically independent symbols: no
// zeta(2)^2 -> zeta(4) style rewriting ever happens, so two expressions are
// equal exactly when their normalized term maps coincide.
//
// Atom encoding: 1 = ln2, k >= 2 = zeta(k). A monomial is the sorted multiset
// of its atoms.
class ZetaExpr {
public:
    using Monomial = std::vector<int>;

    ZetaExpr() = default;

    static ZetaExpr constant(const Rational& q);
    static ZetaExpr zeta(int k);  // k >= 2
    static ZetaExpr ln2();

    ZetaExpr operator+(const ZetaExpr& o) const;
    ZetaExpr operator-(const ZetaExpr& o) const;
    ZetaExpr operator*(const ZetaExpr& o) const;
    ZetaExpr scaled(const Rational& q) const;
    ZetaExpr operator-() const { return scaled(Rational(-1)); }

    bool operator==(const ZetaExpr& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // canonical display: terms by (monomial degree, atoms with odd zetas
    // first), e.g. "31/8*zeta(5) - 7/4*zeta(3)*zeta(2)"
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& q);
    std::map<Monomial, Rational> terms_;
};

// zeta-bar normalization: 1/2 at 0, ln 2 at 1, (1 - 2^{1-n}) zeta(n) for n >= 2.
ZetaExpr zeta_bar(long n);

}  // namespace mhslab
