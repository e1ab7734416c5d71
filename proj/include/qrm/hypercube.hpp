#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace qrm {

inline void check_dimension(int m) {
    if (m < 0 || m > kMaxDimension)
        throw UsageError("hypercube dimension must lie in [0, " + std::to_string(kMaxDimension) + "], got " +
                         std::to_string(m));
}

// A coset x + <J> of the m-dimensional hypercube, stored with the unique
// minimum-weight member as offset (so supp(offset) and J are disjoint).
class Subcube {
public:
    Subcube() = default;
    Subcube(int m, Vertex offset, Mask type) : m_(m), offset_(offset & ~type), type_(type) {
        check_dimension(m);
        if ((offset | type) & ~full_mask(m)) throw UsageError("subcube coordinates exceed the hypercube dimension");
    }
    static Subcube standard(int m, Mask type) { return Subcube(m, 0, type); }
    static Subcube whole(int m) { return Subcube(m, 0, full_mask(m)); }
    static Subcube vertex(int m, Vertex x) { return Subcube(m, x, 0); }

    int m() const { return m_; }
    Vertex offset() const { return offset_; }
    Mask type() const { return type_; }
    int dim() const { return popcount(type_); }
    std::uint64_t size() const { return std::uint64_t{1} << dim(); }
    bool is_standard() const { return offset_ == 0; }
    bool contains(Vertex x) const { return ((x ^ offset_) & ~type_) == 0; }

    // Members in increasing order of the free coordinates.
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(size());
        Mask s = 0;
        do {
            out.push_back(offset_ | s);
            s = (s - type_) & type_;
        } while (s != 0);
        return out;
    }

    friend bool operator==(const Subcube&, const Subcube&) = default;
    friend auto operator<=>(const Subcube&, const Subcube&) = default;

private:
    int m_ = 0;
    Vertex offset_ = 0;
    Mask type_ = 0;
};

inline std::optional<Subcube> intersect(const Subcube& a, const Subcube& b) {
    if (a.m() != b.m()) throw UsageError("subcubes live in different hypercubes");
    Mask joint = a.type() | b.type();
    if ((a.offset() ^ b.offset()) & ~joint) return std::nullopt;
    Mask common = a.type() & b.type();
    return Subcube(a.m(), (a.offset() | b.offset()) & ~common, common);
}

inline bool is_subset(const Subcube& inner, const Subcube& outer) {
    return (inner.type() & ~outer.type()) == 0 && outer.contains(inner.offset());
}

// All subcubes of the given dimension: types in increasing numeric order,
// offsets in increasing numeric order within each type.
inline std::vector<Subcube> enumerate_subcubes(int m, int dim) {
    check_dimension(m);
    if (dim < 0 || dim > m) throw UsageError("subcube dimension out of range");
    std::vector<Subcube> out;
    out.reserve((std::uint64_t{1} << (m - dim)) * binomial(m, dim));
    Mask all = full_mask(m);
    for (Mask J = 0; J <= all; ++J) {
        if (popcount(J) != dim) continue;
        Mask free = all & ~J;
        Mask s = 0;
        do {
            out.emplace_back(m, s, J);
            s = (s - free) & free;
        } while (s != 0);
    }
    return out;
}

inline std::vector<Subcube> enumerate_all_subcubes(int m) {
    std::vector<Subcube> out;
    for (int d = 0; d <= m; ++d) {
        auto part = enumerate_subcubes(m, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Standard subcubes <I u J> for I ranging over subsets of supp(offset); their
// indicators sum to 1_A over F_2.
inline std::vector<Subcube> decompose_indicator_f2(const Subcube& a) {
    std::vector<Subcube> out;
    Mask ia = a.offset();
    Mask s = 0;
    do {
        out.push_back(Subcube::standard(a.m(), s | a.type()));
        s = (s - ia) & ia;
    } while (s != 0);
    return out;
}

inline int bar_indicator(const Subcube& a, Vertex x) { return a.contains(x) ? 1 : 0; }
inline int tilde_indicator(const Subcube& a, Vertex x) {
    if (!a.contains(x)) return 0;
    return (popcount(x) & 1) ? -1 : 1;
}

// Exact integer combination of unsigned or signed subcube indicators.
class IntIndicatorCombo {
public:
    IntIndicatorCombo(int m, bool is_signed) : m_(m), signed_(is_signed) { check_dimension(m); }

    int m() const { return m_; }
    bool is_signed() const { return signed_; }
    const std::map<Subcube, std::int64_t>& terms() const { return terms_; }

    void add(std::int64_t coefficient, const Subcube& cube) {
        if (cube.m() != m_) throw UsageError("subcube dimension mismatch in indicator combination");
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.emplace(cube, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t evaluate(Vertex x) const {
        std::int64_t total = 0;
        for (const auto& [cube, c] : terms_)
            total += c * (signed_ ? tilde_indicator(cube, x) : bar_indicator(cube, x));
        return total;
    }

    // Residues of the pointwise values modulo 2^(k+1).
    std::vector<std::uint32_t> evaluate_mod(int k) const {
        std::int64_t mod = std::int64_t{1} << (k + 1);
        std::vector<std::uint32_t> out(std::size_t{1} << m_);
        for (std::size_t x = 0; x < out.size(); ++x) {
            std::int64_t v = evaluate(static_cast<Vertex>(x)) % mod;
            out[x] = static_cast<std::uint32_t>(v < 0 ? v + mod : v);
        }
        return out;
    }

private:
    int m_;
    bool signed_;
    std::map<Subcube, std::int64_t> terms_;
};

// Writes 1_A (or its signed twin) as the standard-subcube sum over I within
// supp(offset) minus 2^i-weighted indicators of the shifted cubes
// e_{I_A \ I} + <J> with |I| = i >= 1.
inline IntIndicatorCombo decompose_indicator_z(const Subcube& a, bool is_signed) {
    IntIndicatorCombo combo(a.m(), is_signed);
    Mask ia = a.offset();
    Mask s = 0;
    do {
        combo.add(1, Subcube::standard(a.m(), s | a.type()));
        if (s != 0) combo.add(-(std::int64_t{1} << popcount(s)), Subcube(a.m(), ia & ~s, a.type()));
        s = (s - ia) & ia;
    } while (s != 0);
    return combo;
}

// 1bar_<K> = sum over J within K of 2^(|K|-|J|) (-1)^|J| 1tilde_<J>.
inline IntIndicatorCombo unsigned_to_signed_standard(int m, Mask K) {
    IntIndicatorCombo combo(m, true);
    if (K & ~full_mask(m)) throw UsageError("generator subset exceeds the hypercube dimension");
    Mask s = 0;
    do {
        int j = popcount(s);
        std::int64_t c = (std::int64_t{1} << (popcount(K) - j)) * ((j & 1) ? -1 : 1);
        combo.add(c, Subcube::standard(m, s));
        s = (s - K) & K;
    } while (s != 0);
    return combo;
}

// Simplex of the m-dimensional hyperoctahedral complex as a {0,1,*} string,
// position i holding coordinate e_(i+1).
struct OctaSimplex {
    std::string cells;

    int m() const { return static_cast<int>(cells.size()); }
    int dim() const {
        int fixed = 0;
        for (char c : cells)
            if (c != '*') ++fixed;
        return fixed - 1;
    }
    friend bool operator==(const OctaSimplex&, const OctaSimplex&) = default;
};

inline OctaSimplex parse_simplex(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1' && c != '*') throw UsageError("simplex strings use only 0, 1 and *: '" + s + "'");
    check_dimension(static_cast<int>(s.size()));
    return OctaSimplex{s};
}

inline OctaSimplex to_simplex(const Subcube& a) {
    std::string cells(static_cast<std::size_t>(a.m()), '0');
    for (int i = 0; i < a.m(); ++i) {
        Mask bit = Mask{1} << i;
        if (a.type() & bit)
            cells[static_cast<std::size_t>(i)] = '*';
        else if (a.offset() & bit)
            cells[static_cast<std::size_t>(i)] = '1';
    }
    return OctaSimplex{cells};
}

inline Subcube to_subcube(const OctaSimplex& sigma) {
    Vertex x = 0;
    Mask J = 0;
    for (int i = 0; i < sigma.m(); ++i) {
        char c = sigma.cells[static_cast<std::size_t>(i)];
        if (c == '*')
            J |= Mask{1} << i;
        else if (c == '1')
            x |= Vertex{1} << i;
    }
    return Subcube(sigma.m(), x, J);
}

// sigma is a face of rho: every fixed coordinate of sigma is fixed to the
// same value in rho.
inline bool incident(const OctaSimplex& sigma, const OctaSimplex& rho) {
    if (sigma.m() != rho.m()) throw UsageError("simplices live in different complexes");
    for (std::size_t i = 0; i < sigma.cells.size(); ++i)
        if (sigma.cells[i] != '*' && sigma.cells[i] != rho.cells[i]) return false;
    return true;
}

namespace detail {

inline int parse_small_int(const std::string& s, const std::string& context) {
    if (s.empty() || s.size() > 3) throw UsageError("bad integer '" + s + "' in " + context);
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw UsageError("bad integer '" + s + "' in " + context);
        v = v * 10 + (c - '0');
    }
    return v;
}

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

// Comma-separated 1-based generator indices, e.g. "1,2,4"; empty means {}.
inline Mask parse_generator_list(const std::string& text, int m) {
    Mask J = 0;
    std::string s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    if (detail::trim(s).empty()) return 0;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = detail::trim(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        int e = detail::parse_small_int(item, "generator list '" + text + "'");
        if (e < 1 || e > m) throw UsageError("generator index " + item + " outside 1.." + std::to_string(m));
        Mask bit = Mask{1} << (e - 1);
        if (J & bit) throw UsageError("generator index " + item + " repeated");
        J |= bit;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return J;
}

// Parses "0110+<1,4>" (offset bits with e_1 leftmost) or "<2,3,4>".
inline Subcube parse_subcube(const std::string& text, int m) {
    check_dimension(m);
    std::string s = detail::trim(text);
    Vertex x = 0;
    auto lt = s.find('<');
    if (lt == std::string::npos || s.back() != '>') throw UsageError("subcube syntax is offset+<J> or <J>: '" + text + "'");
    if (lt > 0) {
        if (s[lt - 1] != '+') throw UsageError("subcube syntax is offset+<J> or <J>: '" + text + "'");
        std::string bits = s.substr(0, lt - 1);
        if (static_cast<int>(bits.size()) != m)
            throw UsageError("subcube offset '" + bits + "' must have exactly " + std::to_string(m) + " bits");
        for (int i = 0; i < m; ++i) {
            char c = bits[static_cast<std::size_t>(i)];
            if (c == '1')
                x |= Vertex{1} << i;
            else if (c != '0')
                throw UsageError("subcube offset '" + bits + "' must be binary");
        }
    }
    Mask J = parse_generator_list(s.substr(lt + 1, s.size() - lt - 2), m);
    return Subcube(m, x, J);
}

inline std::string format_subcube(const Subcube& a) {
    std::string inner;
    for (int e : mask_elements(a.type())) {
        if (!inner.empty()) inner += ',';
        inner += std::to_string(e);
    }
    std::string out = "<" + inner + ">";
    if (a.offset() == 0) return out;
    std::string bits(static_cast<std::size_t>(a.m()), '0');
    for (int i = 0; i < a.m(); ++i)
        if (a.offset() & (Vertex{1} << i)) bits[static_cast<std::size_t>(i)] = '1';
    return bits + "+" + out;
}

}  // namespace qrm
