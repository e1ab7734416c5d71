#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "classify.hpp"
#include "hypercube.hpp"
#include "qrm_code.hpp"

namespace qrm {

// Control set of one multi-controlled-Z gate: logical indices in logical order.
using Gate = std::vector<Mask>;

struct GateLess {
    bool operator()(const Gate& a, const Gate& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), index_less);
    }
};

inline Gate make_gate(std::vector<Mask> indices) {
    std::sort(indices.begin(), indices.end(), index_less);
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw UsageError("gate lists a logical index twice");
    return indices;
}

// Product of C^G Z over its gates. Each gate squares to the identity, so
// composition is symmetric difference; the empty gate is never stored.
class CzCircuit {
public:
    CzCircuit() = default;

    const std::set<Gate, GateLess>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    bool contains(const Gate& g) const { return gates_.count(g) != 0; }

    void toggle(const Gate& g) {
        if (g.empty()) return;
        auto [it, inserted] = gates_.insert(g);
        if (!inserted) gates_.erase(it);
    }
    CzCircuit& operator^=(const CzCircuit& other) {
        for (const auto& g : other.gates_) toggle(g);
        return *this;
    }
    friend CzCircuit operator^(CzCircuit a, const CzCircuit& b) { return a ^= b; }

    friend bool operator==(const CzCircuit&, const CzCircuit&) = default;

private:
    std::set<Gate, GateLess> gates_;
};

inline std::string gate_name(std::size_t arity) {
    if (arity == 1) return "Z";
    if (arity == 2) return "CZ";
    if (arity == 3) return "CCZ";
    return "C" + std::to_string(arity - 1) + "Z";
}

inline std::string gate_to_string(const Gate& g) {
    std::string s = gate_name(g.size()) + "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ',';
        s += mask_to_set_string(g[i]);
    }
    return s + "]";
}

// Hierarchy level k with q+kr+1 <= |K| <= (k+1)r, if any.
inline std::optional<int> level_of(const QrmCode& code, Mask K) {
    if (code.r() == 0) return std::nullopt;
    int s = popcount(K);
    if (s == 0) return std::nullopt;
    int k = (s + code.r() - 1) / code.r() - 1;
    if (s >= code.q() + k * code.r() + 1) return k;
    return std::nullopt;
}

inline void require_logicals(const QrmCode& code) {
    if (code.kappa() == 0) throw DomainError("code encodes no logical qubits (q = r)");
}

inline std::vector<Mask> index_set_qk(const QrmCode& code, int k) {
    require_logicals(code);
    if (k < 0) throw UsageError("hierarchy level must be non-negative");
    std::vector<Mask> out;
    Mask all = full_mask(code.m());
    for (Mask K = 0; K <= all; ++K) {
        int s = popcount(K);
        if (s >= code.q() + k * code.r() + 1 && s <= (k + 1) * code.r()) out.push_back(K);
    }
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

inline int require_level(const QrmCode& code, Mask K) {
    require_logicals(code);
    if (K & ~full_mask(code.m())) throw UsageError("generator subset exceeds the code dimension");
    auto k = level_of(code, K);
    if (!k) throw DomainError("no level: " + mask_to_set_string(K) + " lies in no band q+kr+1 <= |K| <= (k+1)r");
    return *k;
}

// Sets of k+1 logical indices whose union is K. Candidates are restricted to
// logical indices contained in K.
inline std::vector<Gate> minimal_covers(const QrmCode& code, Mask K) {
    int k = require_level(code, K);
    std::vector<Mask> candidates;
    for (Mask J : code.logical_indices())
        if ((J & ~K) == 0) candidates.push_back(J);
    std::vector<Gate> out;
    Gate chosen;
    std::size_t want = static_cast<std::size_t>(k) + 1;
    auto recurse = [&](auto&& self, std::size_t start, Mask covered) -> void {
        if (chosen.size() == want) {
            if (covered == K) out.push_back(chosen);
            return;
        }
        std::size_t left = want - chosen.size();
        for (std::size_t i = start; i + left <= candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            self(self, i + 1, covered | candidates[i]);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

inline CzCircuit circuit_from_gates(const std::vector<Gate>& gates) {
    CzCircuit c;
    for (const auto& g : gates) c.toggle(g);
    return c;
}

inline CzCircuit signed_standard_circuit(const QrmCode& code, int k, Mask K) {
    int level = require_level(code, K);
    if (level != k)
        throw DomainError(mask_to_set_string(K) + " belongs to level " + std::to_string(level) + ", not " +
                          std::to_string(k));
    return circuit_from_gates(minimal_covers(code, K));
}

// Expands 1bar_<K> into signed standard indicators: the term on <J> with
// j = |K| - |J| acts as Ztilde(k-j)^(+-1)_<J>, which is trivial for j > k, a
// stabilizer above its logical band, and C^{F(J)}Z inside it.
inline CzCircuit unsigned_standard_circuit(const QrmCode& code, int k, Mask K) {
    int level = require_level(code, K);
    if (level != k)
        throw DomainError(mask_to_set_string(K) + " belongs to level " + std::to_string(level) + ", not " +
                          std::to_string(k));
    CzCircuit c;
    Mask s = 0;
    do {
        int j = popcount(K) - popcount(s);
        if (j <= k) {
            auto lj = level_of(code, s);
            if (lj && *lj == k - j) c ^= circuit_from_gates(minimal_covers(code, s));
        }
        s = (s - K) & K;
    } while (s != 0);
    return c;
}

struct StandardTerm {
    int level;
    Mask K;

    friend bool operator==(const StandardTerm&, const StandardTerm&) = default;
};

// Standard operators whose product is logically equivalent to the operator on
// A = x + <K>: the terms <I u K> for I within supp(x) with |I|+|K| <= (k+1)r.
// Larger terms and the shifted correction terms are stabilizers.
inline std::vector<StandardTerm> decompose_to_standard(const QrmCode& code, int k, const Subcube& a, bool is_signed) {
    (void)is_signed;  // both variants decompose over the same standard subcubes
    if (a.m() != code.m()) throw UsageError("subcube dimension does not match the code");
    if (classify_dim(code, Basis::Z, k, a.dim()) == Tag::NotPreserving)
        throw DomainError("operator does not preserve the code space; no decomposition");
    std::vector<StandardTerm> out;
    Mask ia = a.offset();
    Mask s = 0;
    do {
        if (popcount(s) + a.dim() <= (k + 1) * code.r()) out.push_back(StandardTerm{k, s | a.type()});
        s = (s - ia) & ia;
    } while (s != 0);
    std::sort(out.begin(), out.end(), [](const StandardTerm& x, const StandardTerm& y) { return index_less(x.K, y.K); });
    return out;
}

inline CzCircuit arbitrary_subcube_circuit(const QrmCode& code, const OperatorSpec& spec) {
    if (spec.basis != Basis::Z) throw DomainError("circuit synthesis is implemented for Z-basis operators");
    require_logicals(code);
    Tag tag = classify(code, spec);
    if (tag == Tag::NotPreserving) throw DomainError("operator does not preserve the code space; no logical circuit");
    CzCircuit c;
    if (tag == Tag::Stabilizer) return c;
    for (const auto& term : decompose_to_standard(code, spec.k, spec.cube, spec.is_signed))
        c ^= spec.is_signed ? signed_standard_circuit(code, term.level, term.K)
                            : unsigned_standard_circuit(code, term.level, term.K);
    return c;
}

// X_j C^F Z X_j = C^F Z * C^{F~j} Z; returns the circuit on F~j.
inline CzCircuit circuit_conjugate_x(const CzCircuit& c, Mask j) {
    CzCircuit out;
    for (const auto& g : c.gates()) {
        auto it = std::find(g.begin(), g.end(), j);
        if (it == g.end()) continue;
        Gate rest;
        for (Mask J : g)
            if (J != j) rest.push_back(J);
        out.toggle(rest);
    }
    return out;
}

// Dense sets D_J(K): K' within K at level k-1 with K' u J = K.
inline std::vector<Mask> dense_set(const QrmCode& code, int k, Mask J, Mask K) {
    std::vector<Mask> out;
    if (k < 1) return out;
    Mask s = 0;
    do {
        auto l = level_of(code, s);
        if (l && *l == k - 1 && (s | J) == K) out.push_back(s);
        s = (s - K) & K;
    } while (s != 0);
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

}  // namespace qrm
