#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercube.hpp"
#include "pauli.hpp"
#include "qrm_code.hpp"

namespace qrm {

enum class Tag { NotPreserving, Stabilizer, NontrivialLogical };

inline std::string tag_name(Tag t) {
    switch (t) {
        case Tag::NotPreserving: return "NotPreserving";
        case Tag::Stabilizer: return "Stabilizer";
        case Tag::NontrivialLogical: return "NontrivialLogical";
    }
    return "";
}

// Z(k)_A, Ztilde(k)_A or their X-basis twins.
struct OperatorSpec {
    Basis basis = Basis::Z;
    bool is_signed = false;
    int k = 0;
    Subcube cube;
};

// Dimension bands: logical for logical_min <= dim <= logical_max, stabilizer
// for dim >= stabilizer_min.
struct Thresholds {
    int logical_min;
    int logical_max;
    int stabilizer_min;
};

inline Thresholds thresholds(const QrmCode& code, Basis basis, int k) {
    if (k < 0) throw UsageError("hierarchy level must be non-negative");
    int q = code.q(), r = code.r();
    if (basis == Basis::X) {
        q = code.m() - code.r() - 1;
        r = code.m() - code.q() - 1;
    }
    return Thresholds{q + k * r + 1, (k + 1) * r, (k + 1) * r + 1};
}

inline Tag classify_dim(const QrmCode& code, Basis basis, int k, int dim) {
    auto t = thresholds(code, basis, k);
    if (dim >= t.stabilizer_min) return Tag::Stabilizer;
    if (dim >= t.logical_min && dim <= t.logical_max) return Tag::NontrivialLogical;
    return Tag::NotPreserving;
}

// The signed and unsigned operators share thresholds.
inline Tag classify(const QrmCode& code, const OperatorSpec& spec) {
    if (spec.cube.m() != code.m()) throw UsageError("subcube dimension does not match the code");
    return classify_dim(code, spec.basis, spec.k, spec.cube.dim());
}

// Z(k)_A X_B Z(k)_A^dagger = omega_k^phase_exp * Z(k-1)_{A cap B} X_B with
// omega_k = exp(-i pi / 2^k). The residual is absent for an empty
// intersection and for k = 0, where Z(-1) is the identity.
struct ConjugationResult {
    bool intersects = false;
    int phase_exp = 0;
    int modulus = 1;
    std::optional<OperatorSpec> residual;

    bool phase_free() const { return phase_exp == 0; }
};

inline ConjugationResult conjugate_x(const OperatorSpec& spec, const Subcube& b) {
    if (spec.basis != Basis::Z) throw UsageError("conjugation calculus applies to Z-basis operators");
    if (spec.k < 0) throw UsageError("hierarchy level must be non-negative");
    ConjugationResult out;
    out.modulus = 1 << (spec.k + 1);
    auto meet = intersect(spec.cube, b);
    if (!meet) return out;
    out.intersects = true;
    long long exponent = 0;
    if (spec.is_signed) {
        // Even-weight members contribute omega_k, odd-weight ones its inverse.
        if (meet->dim() == 0) exponent = (popcount(meet->offset()) & 1) ? -1 : 1;
    } else {
        exponent = static_cast<long long>(meet->size() % static_cast<std::uint64_t>(out.modulus));
    }
    exponent %= out.modulus;
    if (exponent < 0) exponent += out.modulus;
    out.phase_exp = static_cast<int>(exponent);
    if (spec.k > 0) out.residual = OperatorSpec{Basis::Z, spec.is_signed, spec.k - 1, *meet};
    return out;
}

// Rows: X, Z, then level-1..k_max signed Z operators; columns: dimension 0..m.
struct AdmissibleRow {
    std::string label;
    Basis basis;
    int k;
    std::vector<Tag> tags;
};

inline std::vector<AdmissibleRow> admissible_table(const QrmCode& code, int k_max) {
    std::vector<AdmissibleRow> rows;
    auto make = [&](std::string label, Basis b, int k) {
        AdmissibleRow row{std::move(label), b, k, {}};
        for (int d = 0; d <= code.m(); ++d) row.tags.push_back(classify_dim(code, b, k, d));
        rows.push_back(std::move(row));
    };
    make("X", Basis::X, 0);
    make("Z", Basis::Z, 0);
    for (int k = 1; k <= k_max; ++k) make("Z~(" + std::to_string(k) + ")", Basis::Z, k);
    return rows;
}

inline char tag_glyph(Tag t) {
    switch (t) {
        case Tag::NontrivialLogical: return 'L';
        case Tag::Stabilizer: return 'I';
        case Tag::NotPreserving: return '.';
    }
    return '?';
}

}  // namespace qrm
