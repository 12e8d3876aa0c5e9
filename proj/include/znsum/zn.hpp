#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace znsum {

// Hard cap on the ambient modulus; a set at the cap holds 2 MiB of bits.
inline constexpr uint32_t kMaxModulus = 1u << 24;

/// The ambient cyclic group Z_n. Valid moduli are 2 <= n <= 2^24.
class Modulus {
public:
    explicit Modulus(uint32_t n);
    uint32_t value() const { return n_; }
    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    uint32_t n_;
};

/// Euler's totient, by trial-division factorization.
uint32_t euler_phi(uint32_t n);

/// Dense subset of Z_n. Bit i set <=> residue i is a member; residue 0 is the
/// least significant bit of word 0. The layout is fixed so serialized sets
/// stay portable across platforms.
class ZnSet {
public:
    explicit ZnSet(Modulus m);
    static ZnSet full(Modulus m);
    static ZnSet singleton(Modulus m, uint32_t r);
    static ZnSet from_elements(Modulus m, std::span<const uint32_t> elems);

    Modulus modulus() const { return mod_; }
    uint32_t n() const { return mod_.value(); }

    bool test(uint32_t r) const { return (words_[r >> 6] >> (r & 63)) & 1; }
    void set(uint32_t r) { words_[r >> 6] |= uint64_t(1) << (r & 63); }
    void reset(uint32_t r) { words_[r >> 6] &= ~(uint64_t(1) << (r & 63)); }
    void clear();

    uint32_t count() const;
    bool empty() const;
    bool is_full() const { return count() == n(); }
    std::vector<uint32_t> elements() const;

    ZnSet& operator|=(const ZnSet& o);
    ZnSet& operator&=(const ZnSet& o);
    /// Removes the members of o (set difference).
    ZnSet& subtract(const ZnSet& o);
    bool intersects(const ZnSet& o) const;
    bool is_subset_of(const ZnSet& o) const;

    /// { s + x mod n : s in this }, as an n-bit rotate of the word array.
    ZnSet rotated(uint32_t x) const;
    /// this |= rotated(src, x). src must not alias this; single pass, no scratch.
    void or_with_rotated(const ZnSet& src, uint32_t x);
    /// { -s mod n : s in this }.
    ZnSet negated() const;

    std::span<const uint64_t> words() const { return words_; }

    friend bool operator==(const ZnSet& a, const ZnSet& b) {
        return a.mod_ == b.mod_ && a.words_ == b.words_;
    }

private:
    Modulus mod_;
    std::vector<uint64_t> words_;

    uint64_t tail_mask() const;
};

/// A candidate set A: explicit strictly increasing residues in [0, n).
/// Duplicate inputs are rejected, not collapsed; a multiset would change the
/// meaning of exact-k subset sums.
class ResidueSet {
public:
    ResidueSet(Modulus m, std::vector<uint32_t> elems);
    static ResidueSet parse(Modulus m, std::string_view literal);

    Modulus modulus() const { return mod_; }
    uint32_t n() const { return mod_.value(); }
    uint32_t size() const { return uint32_t(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    const std::vector<uint32_t>& elements() const { return elems_; }
    uint32_t operator[](size_t i) const { return elems_[i]; }
    bool contains(uint32_t r) const;

    /// True iff every element is coprime with n.
    bool all_units() const;
    /// True iff A and -A are disjoint.
    bool antisymmetric() const;

    ZnSet to_set() const;
    /// "x1,x2,..." ascending, comma separated, no spaces. Empty set -> "".
    std::string literal() const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    Modulus mod_;
    std::vector<uint32_t> elems_;
};

/// Parses "x1,x2,..." into residues (unvalidated against any modulus).
std::vector<uint32_t> parse_set_literal(std::string_view literal);
std::string format_set_literal(std::span<const uint32_t> elems);

/// { x in [1, n) : gcd(x, n) = 1 }, ascending.
ResidueSet units(Modulus m);
/// { s + x mod n : s in S }. Throws if x is not a residue mod n.
ZnSet shift(const ZnSet& s, uint32_t x);
ZnSet negate(const ZnSet& s);
/// <A> = all multiples of gcd(n, gcd of A). A must be nonempty.
ZnSet subgroup_generated(const ResidueSet& a);

}  // namespace znsum
