#include "znsum/zn.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace znsum {

Modulus::Modulus(uint32_t n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (n > kMaxModulus)
        throw std::invalid_argument("modulus exceeds the 2^24 cap");
}

uint32_t euler_phi(uint32_t n) {
    uint32_t result = n;
    uint32_t m = n;
    for (uint32_t p = 2; uint64_t(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {
inline size_t word_count(uint32_t n) { return (size_t(n) + 63) / 64; }
}  // namespace

ZnSet::ZnSet(Modulus m) : mod_(m), words_(word_count(m.value()), 0) {}

uint64_t ZnSet::tail_mask() const {
    uint32_t r = n() & 63;
    return r ? (uint64_t(1) << r) - 1 : ~uint64_t(0);
}

ZnSet ZnSet::full(Modulus m) {
    ZnSet s(m);
    std::fill(s.words_.begin(), s.words_.end(), ~uint64_t(0));
    s.words_.back() &= s.tail_mask();
    return s;
}

ZnSet ZnSet::singleton(Modulus m, uint32_t r) {
    if (r >= m.value())
        throw std::invalid_argument("residue out of range for modulus");
    ZnSet s(m);
    s.set(r);
    return s;
}

ZnSet ZnSet::from_elements(Modulus m, std::span<const uint32_t> elems) {
    ZnSet s(m);
    for (uint32_t e : elems) {
        if (e >= m.value())
            throw std::invalid_argument("residue out of range for modulus");
        s.set(e);
    }
    return s;
}

void ZnSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

uint32_t ZnSet::count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += uint32_t(std::popcount(w));
    return c;
}

bool ZnSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

std::vector<uint32_t> ZnSet::elements() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            out.push_back(uint32_t(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

namespace {
void require_same_modulus(const ZnSet& a, const ZnSet& b) {
    if (!(a.modulus() == b.modulus()))
        throw std::invalid_argument("modulus mismatch");
}
}  // namespace

ZnSet& ZnSet::operator|=(const ZnSet& o) {
    require_same_modulus(*this, o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

ZnSet& ZnSet::operator&=(const ZnSet& o) {
    require_same_modulus(*this, o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

ZnSet& ZnSet::subtract(const ZnSet& o) {
    require_same_modulus(*this, o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool ZnSet::intersects(const ZnSet& o) const {
    require_same_modulus(*this, o);
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool ZnSet::is_subset_of(const ZnSet& o) const {
    require_same_modulus(*this, o);
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

void ZnSet::or_with_rotated(const ZnSet& src, uint32_t x) {
    require_same_modulus(*this, src);
    if (&src == this)
        throw std::invalid_argument("or_with_rotated cannot alias its source");
    const uint32_t nn = n();
    if (x >= nn) throw std::invalid_argument("rotate amount out of range");
    const size_t W = words_.size();
    const uint64_t* s = src.words_.data();
    uint64_t* d = words_.data();
    if (x == 0) {
        for (size_t i = 0; i < W; ++i) d[i] |= s[i];
        return;
    }
    // rot(v, x) == ((v << x) | (v >> (n - x))) over an n-bit field.
    const uint32_t q = x >> 6, r = x & 63;
    const uint32_t y = nn - x;
    const uint32_t q2 = y >> 6, r2 = y & 63;
    for (size_t i = 0; i < W; ++i) {
        uint64_t w = 0;
        if (i >= q) {
            uint64_t lo = s[i - q];
            w = r ? (lo << r) : lo;
            if (r && i > q) w |= s[i - q - 1] >> (64 - r);
        }
        size_t a = i + q2;
        if (a < W) {
            uint64_t hi = s[a];
            w |= r2 ? (hi >> r2) : hi;
            if (r2 && a + 1 < W) w |= s[a + 1] << (64 - r2);
        }
        d[i] |= w;
    }
    d[W - 1] &= tail_mask();
}

ZnSet ZnSet::rotated(uint32_t x) const {
    ZnSet out(mod_);
    out.or_with_rotated(*this, x);
    return out;
}

ZnSet ZnSet::negated() const {
    ZnSet out(mod_);
    const uint32_t nn = n();
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            uint32_t e = uint32_t(i * 64 + std::countr_zero(w));
            w &= w - 1;
            out.set(e == 0 ? 0 : nn - e);
        }
    }
    return out;
}

ResidueSet::ResidueSet(Modulus m, std::vector<uint32_t> elems)
    : mod_(m), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] >= m.value())
            throw std::invalid_argument("residue out of range for modulus");
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw std::invalid_argument("duplicate residue in set");
    }
}

ResidueSet ResidueSet::parse(Modulus m, std::string_view literal) {
    return ResidueSet(m, parse_set_literal(literal));
}

bool ResidueSet::contains(uint32_t r) const {
    return std::binary_search(elems_.begin(), elems_.end(), r);
}

bool ResidueSet::all_units() const {
    for (uint32_t e : elems_)
        if (std::gcd(e, n()) != 1) return false;
    return true;
}

bool ResidueSet::antisymmetric() const {
    for (uint32_t e : elems_) {
        uint32_t neg = e == 0 ? 0 : n() - e;
        if (contains(neg)) return false;
    }
    return true;
}

ZnSet ResidueSet::to_set() const { return ZnSet::from_elements(mod_, elems_); }

std::string ResidueSet::literal() const { return format_set_literal(elems_); }

std::vector<uint32_t> parse_set_literal(std::string_view literal) {
    std::vector<uint32_t> out;
    if (literal.empty()) return out;
    size_t pos = 0;
    while (pos <= literal.size()) {
        size_t comma = literal.find(',', pos);
        std::string_view tok = literal.substr(
            pos, comma == std::string_view::npos ? literal.size() - pos : comma - pos);
        uint32_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
            throw std::invalid_argument("malformed set literal");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == literal.size())
            throw std::invalid_argument("malformed set literal");
    }
    return out;
}

std::string format_set_literal(std::span<const uint32_t> elems) {
    std::string out;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(elems[i]);
    }
    return out;
}

ResidueSet units(Modulus m) {
    std::vector<uint32_t> elems;
    for (uint32_t x = 1; x < m.value(); ++x)
        if (std::gcd(x, m.value()) == 1) elems.push_back(x);
    return ResidueSet(m, std::move(elems));
}

ZnSet shift(const ZnSet& s, uint32_t x) { return s.rotated(x); }

ZnSet negate(const ZnSet& s) { return s.negated(); }

ZnSet subgroup_generated(const ResidueSet& a) {
    if (a.empty())
        throw std::invalid_argument("subgroup of an empty set is undefined here");
    uint32_t d = a.n();
    for (uint32_t e : a.elements()) d = std::gcd(d, e);
    ZnSet out(a.modulus());
    for (uint32_t r = 0; r < a.n(); r += d) out.set(r);
    return out;
}

}  // namespace znsum
