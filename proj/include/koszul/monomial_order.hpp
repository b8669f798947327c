#pragma once

#include "errors.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace koszul {

using ExpVec = std::vector<uint32_t>;

inline uint32_t exp_degree(const ExpVec& a) {
    uint32_t d = 0;
    for (uint32_t e : a) d += e;
    return d;
}

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        internal_check(a[k] >= b[k], "exponent underflow");
        out[k] = a[k] - b[k];
    }
    return out;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
    return out;
}

inline bool exp_coprime(const ExpVec& a, const ExpVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

enum class OrderKind { degrevlex, deglex, lex };

inline const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::lex: return "lex";
    }
    return "?";
}

// Term order with an optional precedence permutation: precedence[r] is the
// variable holding rank r, rank 0 highest.  An empty permutation means the
// declared variable order.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<uint32_t> precedence;

    uint32_t ranked(const ExpVec& a, std::size_t r) const {
        return precedence.empty() ? a[r] : a[precedence[r]];
    }

    // Strict comparison: a before b means a is the smaller monomial.
    bool less(const ExpVec& a, const ExpVec& b) const {
        internal_check(a.size() == b.size(), "exponent length mismatch");
        if (kind != OrderKind::lex) {
            uint32_t da = exp_degree(a), db = exp_degree(b);
            if (da != db) return da < db;
        }
        if (kind == OrderKind::degrevlex) {
            for (std::size_t r = a.size(); r-- > 0;) {
                uint32_t ea = ranked(a, r), eb = ranked(b, r);
                if (ea != eb) return ea > eb;
            }
            return false;
        }
        for (std::size_t r = 0; r < a.size(); ++r) {
            uint32_t ea = ranked(a, r), eb = ranked(b, r);
            if (ea != eb) return ea < eb;
        }
        return false;
    }

    bool greater(const ExpVec& a, const ExpVec& b) const { return less(b, a); }
};

inline OrderKind parse_order_kind(const std::string& s) {
    if (s == "degrevlex") return OrderKind::degrevlex;
    if (s == "deglex") return OrderKind::deglex;
    if (s == "lex") return OrderKind::lex;
    throw SpecError("unknown order \"" + s + "\" (use degrevlex, deglex or lex)");
}

}
