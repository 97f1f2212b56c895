#include "mhs/zeta_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhslab {

ZetaExpr ZetaExpr::constant(const Rational& q) {
    ZetaExpr e;
    if (q != 0) e.terms_[{}] = q;
    return e;
}

ZetaExpr ZetaExpr::zeta(int k) {
    if (k < 2) throw std::invalid_argument("zeta atom requires k >= 2");
    ZetaExpr e;
    e.terms_[{k}] = 1;
    return e;
}

ZetaExpr ZetaExpr::ln2() {
    ZetaExpr e;
    e.terms_[{1}] = 1;
    return e;
}

void ZetaExpr::add_term(const Monomial& m, const Rational& q) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (q != 0) terms_.emplace(m, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

ZetaExpr ZetaExpr::operator+(const ZetaExpr& o) const {
    ZetaExpr e = *this;
    for (const auto& [m, q] : o.terms_) e.add_term(m, q);
    return e;
}

ZetaExpr ZetaExpr::operator-(const ZetaExpr& o) const {
    ZetaExpr e = *this;
    for (const auto& [m, q] : o.terms_) e.add_term(m, -q);
    return e;
}

ZetaExpr ZetaExpr::operator*(const ZetaExpr& o) const {
    ZetaExpr e;
    for (const auto& [ma, qa] : terms_)
        for (const auto& [mb, qb] : o.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            e.add_term(m, qa * qb);
        }
    return e;
}

ZetaExpr ZetaExpr::scaled(const Rational& q) const {
    ZetaExpr e;
    if (q == 0) return e;
    for (const auto& [m, c] : terms_) e.terms_[m] = c * q;
    return e;
}

namespace {

// display order inside a monomial: odd zetas ascending, even zetas ascending,
// ln2 last (matches the zeta(odd)*zeta-bar(even) provenance of the terms)
std::vector<int> display_atoms(const ZetaExpr::Monomial& m) {
    std::vector<int> odd, even, ln;
    for (int a : m) {
        if (a == 1) ln.push_back(a);
        else if (a % 2 != 0) odd.push_back(a);
        else even.push_back(a);
    }
    std::vector<int> out;
    out.insert(out.end(), odd.begin(), odd.end());
    out.insert(out.end(), even.begin(), even.end());
    out.insert(out.end(), ln.begin(), ln.end());
    return out;
}

// sort key: degree, then display atoms with ln2 pushed past every zeta
std::vector<long> display_key(const ZetaExpr::Monomial& m) {
    std::vector<long> key{static_cast<long>(m.size())};
    for (int a : display_atoms(m)) key.push_back(a == 1 ? 1'000'000L : a);
    return key;
}

std::string monomial_str(const ZetaExpr::Monomial& m) {
    std::vector<int> atoms = display_atoms(m);
    std::string out;
    std::size_t i = 0;
    while (i < atoms.size()) {
        if (!out.empty()) out += '*';
        if (atoms[i] == 1) {
            std::size_t count = atoms.size() - i;  // ln2 atoms are all trailing
            out += (count == 1) ? "ln2" : "ln2^" + std::to_string(count);
            break;
        }
        out += "zeta(" + std::to_string(atoms[i]) + ")";
        ++i;
    }
    return out;
}

}  // namespace

std::string ZetaExpr::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return display_key(a->first) < display_key(b->first);
    });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& [m, q] = *order[i];
        Rational coef = q;
        if (i == 0) {
            if (coef < 0) { out += '-'; coef = -coef; }
        } else {
            out += (coef < 0) ? " - " : " + ";
            if (coef < 0) coef = -coef;
        }
        out += coef.get_str();
        std::string ms = monomial_str(m);
        if (!ms.empty()) out += "*" + ms;
    }
    return out;
}

ZetaExpr zeta_bar(long n) {
    if (n < 0) throw std::invalid_argument("zeta_bar requires n >= 0");
    if (n == 0) return ZetaExpr::constant(rational(1, 2));
    if (n == 1) return ZetaExpr::ln2();
    return ZetaExpr::zeta(static_cast<int>(n)).scaled(Rational(1) - pow2(1 - n));
}

}  // namespace mhslab
