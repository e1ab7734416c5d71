#pragma once

#include <cstddef>
#include <string>

#include "bits.hpp"
#include "hypercube.hpp"

namespace qrm {

enum class Basis { Z, X };

inline std::string basis_name(Basis b) { return b == Basis::Z ? "z" : "x"; }

// i^phase_exp * X^x_support * Z^z_support on 2^m qubits.
struct PauliOp {
    BitVec x_support;
    BitVec z_support;
    int phase_exp = 0;

    std::size_t size() const { return x_support.size(); }

    friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

inline PauliOp identity_pauli(std::size_t n) { return PauliOp{BitVec(n), BitVec(n), 0}; }

inline BitVec indicator_bits(const Subcube& a) {
    BitVec v(std::size_t{1} << a.m());
    for (Vertex x : a.vertices()) v.set(x);
    return v;
}

inline PauliOp subcube_pauli(Basis basis, const Subcube& a) {
    PauliOp p = identity_pauli(std::size_t{1} << a.m());
    (basis == Basis::X ? p.x_support : p.z_support) = indicator_bits(a);
    return p;
}

inline bool commutes(const PauliOp& p, const PauliOp& q) {
    if (p.size() != q.size()) throw UsageError("Pauli operators act on different qubit counts");
    return ((p.x_support.and_count(q.z_support) + p.z_support.and_count(q.x_support)) & 1U) == 0;
}

// Product p*q, reordering X^a Z^b X^c Z^d with a sign per overlap of b and c.
inline PauliOp multiply(const PauliOp& p, const PauliOp& q) {
    if (p.size() != q.size()) throw UsageError("Pauli operators act on different qubit counts");
    int swaps = static_cast<int>(p.z_support.and_count(q.x_support) & 1U);
    return PauliOp{p.x_support ^ q.x_support, p.z_support ^ q.z_support, (p.phase_exp + q.phase_exp + 2 * swaps) % 4};
}

inline std::size_t weight(const PauliOp& p) {
    BitVec both = p.x_support;
    std::size_t overlap = both.and_count(p.z_support);
    return p.x_support.count() + p.z_support.count() - overlap;
}

}  // namespace qrm
