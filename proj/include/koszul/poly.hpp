#pragma once

#include "errors.hpp"
#include "gauss_rat.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

// Formal jet of the cutoff function: the multiset of antiholomorphic
// directions already applied.  Empty means the bare cutoff symbol.
struct JetKey {
    std::vector<uint32_t> dirs;

    friend auto operator<=>(const JetKey&, const JetKey&) = default;

    JetKey with(uint32_t d) const {
        JetKey out = *this;
        out.dirs.insert(std::upper_bound(out.dirs.begin(), out.dirs.end(), d), d);
        return out;
    }
};

// Commutative monomial in z_0..z_{n-1}, zbar_0..zbar_{n-1} and jet symbols.
// exps has length 2n, z block first.  jets is sorted by key with positive
// exponents only.
struct Monomial {
    std::vector<uint32_t> exps;
    std::vector<std::pair<JetKey, uint32_t>> jets;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    uint32_t degree() const {
        uint32_t d = 0;
        for (uint32_t e : exps) d += e;
        return d;
    }

    bool has_jets() const { return !jets.empty(); }

    void bump_jet(const JetKey& key, uint32_t by) {
        auto it = std::lower_bound(jets.begin(), jets.end(), key,
            [](const auto& p, const JetKey& k) { return p.first < k; });
        if (it != jets.end() && it->first == key)
            it->second += by;
        else
            jets.insert(it, {key, by});
    }
};

class Poly {
public:
    explicit Poly(uint32_t n) : n_(n) {}

    static Poly zero(uint32_t n) { return Poly(n); }

    static Poly constant(uint32_t n, GaussRat c) {
        Poly p(n);
        p.add_term(Monomial{std::vector<uint32_t>(2 * n, 0), {}}, std::move(c));
        return p;
    }

    static Poly one(uint32_t n) { return constant(n, GaussRat(1)); }

    // z_idx
    static Poly variable(uint32_t n, uint32_t idx) {
        internal_check(idx < n, "variable index out of range");
        Monomial m{std::vector<uint32_t>(2 * n, 0), {}};
        m.exps[idx] = 1;
        Poly p(n);
        p.add_term(std::move(m), GaussRat(1));
        return p;
    }

    // zbar_idx
    static Poly conj_variable(uint32_t n, uint32_t idx) {
        internal_check(idx < n, "variable index out of range");
        Monomial m{std::vector<uint32_t>(2 * n, 0), {}};
        m.exps[n + idx] = 1;
        Poly p(n);
        p.add_term(std::move(m), GaussRat(1));
        return p;
    }

    static Poly jet(uint32_t n, JetKey key = {}) {
        Monomial m{std::vector<uint32_t>(2 * n, 0), {}};
        m.jets.push_back({std::move(key), 1});
        Poly p(n);
        p.add_term(std::move(m), GaussRat(1));
        return p;
    }

    static Poly from_exponents(uint32_t n, const std::vector<uint32_t>& holo_exps,
                               GaussRat c = GaussRat(1)) {
        internal_check(holo_exps.size() == n, "exponent vector length mismatch");
        Monomial m{std::vector<uint32_t>(2 * n, 0), {}};
        std::copy(holo_exps.begin(), holo_exps.end(), m.exps.begin());
        Poly p(n);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    uint32_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GaussRat>& terms() const { return terms_; }

    void add_term(Monomial m, GaussRat c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly out(n_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        internal_check(n_ == o.n_, "mixed variable counts");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        internal_check(n_ == o.n_, "mixed variable counts");
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        internal_check(a.n_ == b.n_, "mixed variable counts");
        Poly out(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] += mb.exps[k];
                for (const auto& [key, e] : mb.jets) m.bump_jet(key, e);
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }

    friend Poly operator*(const GaussRat& c, const Poly& p) {
        Poly out(p.n_);
        if (c.is_zero()) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
        return out;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(uint32_t k) const {
        Poly acc = one(n_);
        Poly base = *this;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    // d/dzbar_dir with the jet Leibniz rule.
    Poly wirtinger_dbar(uint32_t dir) const {
        internal_check(dir < n_, "direction out of range");
        Poly out(n_);
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exps[n_ + dir];
            if (e > 0) {
                Monomial m2 = m;
                m2.exps[n_ + dir] -= 1;
                out.add_term(std::move(m2), GaussRat(long(e)) * c);
            }
            for (std::size_t k = 0; k < m.jets.size(); ++k) {
                Monomial m2 = m;
                uint32_t je = m2.jets[k].second;
                JetKey key = m2.jets[k].first;
                if (je == 1)
                    m2.jets.erase(m2.jets.begin() + long(k));
                else
                    m2.jets[k].second -= 1;
                m2.bump_jet(key.with(dir), 1);
                out.add_term(std::move(m2), GaussRat(long(je)) * c);
            }
        }
        return out;
    }

    // d/dz_dir; holomorphic derivatives of the cutoff are not modeled.
    Poly wirtinger_d(uint32_t dir) const {
        internal_check(dir < n_, "direction out of range");
        Poly out(n_);
        for (const auto& [m, c] : terms_) {
            if (m.has_jets())
                throw std::domain_error("holomorphic derivative of a cutoff jet");
            uint32_t e = m.exps[dir];
            if (e > 0) {
                Monomial m2 = m;
                m2.exps[dir] -= 1;
                out.add_term(std::move(m2), GaussRat(long(e)) * c);
            }
        }
        return out;
    }

    // Swaps z and zbar exponent blocks and conjugates coefficients.
    Poly conjugate() const {
        Poly out(n_);
        for (const auto& [m, c] : terms_) {
            if (m.has_jets())
                throw std::domain_error("conjugate of a cutoff jet");
            Monomial m2 = m;
            for (uint32_t k = 0; k < n_; ++k)
                std::swap(m2.exps[k], m2.exps[n_ + k]);
            out.add_term(std::move(m2), c.conj());
        }
        return out;
    }

    bool is_holomorphic() const {
        for (const auto& [m, c] : terms_) {
            if (m.has_jets()) return false;
            for (uint32_t k = 0; k < n_; ++k)
                if (m.exps[n_ + k] != 0) return false;
        }
        return true;
    }

    bool has_jets() const {
        for (const auto& [m, c] : terms_)
            if (m.has_jets()) return true;
        return false;
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    GaussRat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussRat() : it->second;
    }

    GaussRat coefficient_at(const std::vector<uint32_t>& holo_exps) const {
        internal_check(holo_exps.size() == n_, "exponent vector length mismatch");
        Monomial m{std::vector<uint32_t>(2 * n_, 0), {}};
        std::copy(holo_exps.begin(), holo_exps.end(), m.exps.begin());
        return coefficient(m);
    }

    // Evaluation of a holomorphic polynomial at a point.
    GaussRat evaluate(const std::vector<GaussRat>& z) const {
        internal_check(z.size() == n_, "point dimension mismatch");
        GaussRat acc;
        for (const auto& [m, c] : terms_) {
            if (m.has_jets())
                throw std::domain_error("evaluate with cutoff jets");
            GaussRat t = c;
            for (uint32_t k = 0; k < n_; ++k) {
                if (m.exps[n_ + k] != 0)
                    throw std::domain_error("evaluate with antiholomorphic factors");
                if (m.exps[k] != 0) t *= z[k].pow(m.exps[k]);
            }
            acc += t;
        }
        return acc;
    }

    // Substitutes the given constant for the bare cutoff symbol and zero for
    // every derivative jet.
    Poly specialize_cutoff(const GaussRat& value) const {
        Poly out(n_);
        for (const auto& [m, c] : terms_) {
            GaussRat factor(1);
            bool dead = false;
            for (const auto& [key, e] : m.jets) {
                if (key.dirs.empty()) {
                    factor *= value.pow(e);
                } else {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            Monomial m2 = m;
            m2.jets.clear();
            out.add_term(std::move(m2), factor * c);
        }
        return out;
    }

    // Pure holomorphic monomial accessor for the ideal-theory layer.
    std::vector<uint32_t> sole_holo_exponents() const {
        internal_check(terms_.size() == 1, "not a monomial");
        const Monomial& m = terms_.begin()->first;
        internal_check(!m.has_jets(), "not a polynomial monomial");
        for (uint32_t k = 0; k < n_; ++k)
            internal_check(m.exps[n_ + k] == 0, "not holomorphic");
        return std::vector<uint32_t>(m.exps.begin(), m.exps.begin() + n_);
    }

    std::string str(const std::vector<std::string>& names) const {
        internal_check(names.size() == n_, "name list length mismatch");
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string factors;
            for (uint32_t k = 0; k < 2 * n_; ++k) {
                if (m.exps[k] == 0) continue;
                if (!factors.empty()) factors += '*';
                factors += names[k % n_];
                if (k >= n_) factors += '~';
                if (m.exps[k] > 1) factors += '^' + std::to_string(m.exps[k]);
            }
            for (const auto& [key, e] : m.jets) {
                if (!factors.empty()) factors += '*';
                factors += "rho";
                if (!key.dirs.empty()) {
                    factors += '[';
                    for (std::size_t k = 0; k < key.dirs.size(); ++k) {
                        if (k) factors += ',';
                        factors += std::to_string(key.dirs[k] + 1);
                    }
                    factors += ']';
                }
                if (e > 1) factors += '^' + std::to_string(e);
            }
            std::string cs = c.str();
            bool needs_parens = cs.find('+') != std::string::npos ||
                                cs.find('-', 1) != std::string::npos;
            std::string term;
            if (factors.empty()) {
                term = needs_parens ? cs : cs;
            } else if (needs_parens) {
                term = '(' + cs + ")*" + factors;
            } else if (cs == "1") {
                term = factors;
            } else if (cs == "-1") {
                term = '-' + factors;
            } else {
                term = cs + '*' + factors;
            }
            if (first) {
                out = term;
                first = false;
            } else if (!term.empty() && term[0] == '-') {
                out += term;
            } else {
                out += '+' + term;
            }
        }
        return out;
    }

private:
    uint32_t n_;
    std::map<Monomial, GaussRat> terms_;
};

}
