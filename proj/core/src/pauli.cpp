#include "parityflow/pauli.hpp"

#include <cctype>

namespace parityflow {

namespace {

void require_same_n(const PauliVec& a, const PauliVec& b) {
    if (a.n() != b.n())
        throw DimensionError("Pauli dimension mismatch: " + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()));
}

}  // namespace

PauliVec::PauliVec(unsigned k, BitVec x, BitVec z) : kappa(k & 3u), xi(std::move(x)), zeta(std::move(z)) {
    if (xi.size() != zeta.size()) throw DimensionError("xi and zeta lengths differ");
}

PauliVec PauliVec::x(std::size_t n, std::size_t j) {
    PauliVec p(n);
    p.xi.set(j, true);
    return p;
}

PauliVec PauliVec::z(std::size_t n, std::size_t j) {
    PauliVec p(n);
    p.zeta.set(j, true);
    return p;
}

PauliVec PauliVec::y(std::size_t n, std::size_t j) {
    PauliVec p(n, 1);
    p.xi.set(j, true);
    p.zeta.set(j, true);
    return p;
}

PauliVec PauliVec::from_bits(unsigned k, std::string_view x, std::string_view z) {
    return PauliVec(k, BitVec::from_string(x), BitVec::from_string(z));
}

void star_mul_into(PauliVec& a, const PauliVec& b) {
    require_same_n(a, b);
    unsigned k = a.kappa + b.kappa + 2u * static_cast<unsigned>(BitVec::and_count(a.zeta, b.xi) & 1u);
    a.kappa = static_cast<std::uint8_t>(k & 3u);
    a.xi ^= b.xi;
    a.zeta ^= b.zeta;
}

PauliVec star_mul(const PauliVec& a, const PauliVec& b) {
    PauliVec r = a;
    star_mul_into(r, b);
    return r;
}

PauliVec star_inverse(const PauliVec& p) {
    PauliVec r = p;
    unsigned k = 4u - p.kappa + 2u * (BitVec::dot(p.zeta, p.xi) ? 1u : 0u);
    r.kappa = static_cast<std::uint8_t>(k & 3u);
    return r;
}

int order(const PauliVec& p) {
    if (p.is_identity()) return 1;
    unsigned parity = (p.kappa + (BitVec::dot(p.zeta, p.xi) ? 1u : 0u)) & 1u;
    return parity == 0 ? 2 : 4;
}

bool is_proper(const PauliVec& p) { return order(p) <= 2 && !p.phaseless_zero(); }

bool symplectic_product(const PauliVec& a, const PauliVec& b) {
    require_same_n(a, b);
    return BitVec::dot(a.zeta, b.xi) ^ BitVec::dot(a.xi, b.zeta);
}

PauliVec multi_product(std::span<const PauliVec> ps, std::size_t n) {
    PauliVec acc(n);
    for (const auto& p : ps) star_mul_into(acc, p);
    return acc;
}

PauliVec multi_product(std::span<const PauliVec> ps) {
    return multi_product(ps, ps.empty() ? 0 : ps.front().n());
}

XYZRep to_xyz(const PauliVec& p) {
    if (order(p) > 2) throw std::domain_error("not Hermitian: order-4 Pauli has no XYZ form");
    unsigned zx = BitVec::dot(p.zeta, p.xi) ? 1u : 0u;
    unsigned two_delta = (p.kappa + 4u - zx) & 3u;
    return XYZRep{p.xi, p.zeta, two_delta >> 1};
}

PauliVec from_xyz(const XYZRep& r) {
    if (r.x.size() != r.z.size()) throw DimensionError("x and z lengths differ");
    unsigned k = 2u * (r.delta & 1u) + (BitVec::dot(r.z, r.x) ? 1u : 0u);
    return PauliVec(k, r.x, r.z);
}

LabelParseError::LabelParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error("label parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

std::string phase_symbol(unsigned kappa) {
    switch (kappa & 3u) {
        case 0: return "+";
        case 1: return "i";
        case 2: return "-";
        default: return "-i";
    }
}

namespace {

std::string index_name(std::size_t j, const LabelStyle* style) {
    if (style && j < style->names.size() && !style->names[j].empty()) return style->names[j];
    return std::to_string(j + 1);
}

void render_part(std::string& out, char letter, const BitVec& bits, const LabelStyle* style, bool z_part) {
    if (!bits.any()) return;
    out += ' ';
    out += letter;
    out += '(';
    bool first = true;
    bits.for_each_set([&](std::size_t j) {
        if (!first) out += ',';
        first = false;
        out += index_name(j, style);
        if (style) {
            const auto& suf = z_part ? style->z_suffix : style->x_suffix;
            if (j < suf.size()) out += suf[j];
        }
    });
    out += ')';
}

class LabelParser {
public:
    LabelParser(std::string_view s, std::size_t n, const LabelStyle* style) : s_(s), n_(n), style_(style) {}

    PauliVec run() {
        PauliVec p(n_);
        skip_ws();
        p.kappa = static_cast<std::uint8_t>(parse_phase());
        skip_ws();
        if (peek() == 'I') {
            ++i_;
            skip_ws();
            expect_end();
            return p;
        }
        bool any = false;
        if (peek() == 'X') {
            parse_group(p.xi);
            any = true;
            skip_ws();
        }
        if (peek() == 'Z') {
            parse_group(p.zeta);
            any = true;
            skip_ws();
        }
        if (!any) fail("expected 'I', 'X(' or 'Z('");
        expect_end();
        return p;
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const { throw LabelParseError(i_, msg); }
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect_end() {
        if (i_ != s_.size()) fail("unexpected trailing input");
    }

    unsigned parse_phase() {
        unsigned k = 0;
        bool sign = false;
        if (peek() == '+' || peek() == '-') {
            k = peek() == '-' ? 2u : 0u;
            sign = true;
            ++i_;
        }
        if (peek() == 'i') {
            ++i_;
            unsigned e = 1;
            if (peek() == '^') {
                ++i_;
                char c = peek();
                if (c < '0' || c > '3') fail("phase exponent must be 0..3");
                e = static_cast<unsigned>(c - '0');
                ++i_;
            }
            return (k + e) & 3u;
        }
        if (!sign) fail("expected phase '+', '-', 'i', '-i' or 'i^k'");
        return k;
    }

    void parse_group(BitVec& bits) {
        ++i_;
        if (peek() != '(') fail("expected '('");
        ++i_;
        for (;;) {
            skip_ws();
            std::size_t start = i_;
            std::size_t j = parse_index();
            if (bits.get(j)) throw LabelParseError(start, "duplicate index");
            bits.set(j, true);
            skip_ws();
            if (peek() == ',') {
                ++i_;
                continue;
            }
            if (peek() == ')') {
                ++i_;
                return;
            }
            fail("expected ',' or ')'");
        }
    }

    std::size_t parse_index() {
        std::size_t start = i_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t v = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                v = v * 10 + static_cast<std::size_t>(peek() - '0');
                if (v > n_ + 1) {
                    i_ = start;
                    fail("qubit index out of range");
                }
                ++i_;
            }
            if (v == 0 || v > n_) {
                i_ = start;
                fail("qubit index out of range");
            }
            return v - 1;
        }
        while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') ++i_;
        std::string_view name = s_.substr(start, i_ - start);
        if (name.empty()) fail("expected qubit index");
        if (peek() == '.' || peek() == '!') ++i_;
        if (style_) {
            for (std::size_t j = 0; j < style_->names.size() && j < n_; ++j)
                if (style_->names[j] == name) return j;
        }
        i_ = start;
        fail("unknown qubit name '" + std::string(name) + "'");
    }

    std::string_view s_;
    std::size_t n_;
    const LabelStyle* style_;
    std::size_t i_ = 0;
};

}  // namespace

std::string render_label(const PauliVec& p, const LabelStyle* style) {
    std::string out = phase_symbol(p.kappa);
    if (p.phaseless_zero()) return out + " I";
    render_part(out, 'X', p.xi, style, false);
    render_part(out, 'Z', p.zeta, style, true);
    return out;
}

PauliVec parse_label(std::string_view text, std::size_t n, const LabelStyle* style) {
    return LabelParser(text, n, style).run();
}

}  // namespace parityflow
