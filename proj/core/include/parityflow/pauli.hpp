#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parityflow/bitvec.hpp"

namespace parityflow {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// i^kappa * X^xi * Z^zeta
struct PauliVec {
    std::uint8_t kappa = 0;
    BitVec xi;
    BitVec zeta;

    PauliVec() = default;
    explicit PauliVec(std::size_t n, unsigned k = 0) : kappa(k & 3u), xi(n), zeta(n) {}
    PauliVec(unsigned k, BitVec x, BitVec z);

    std::size_t n() const { return xi.size(); }
    bool is_identity() const { return kappa == 0 && !xi.any() && !zeta.any(); }
    bool phaseless_zero() const { return !xi.any() && !zeta.any(); }
    bool operator==(const PauliVec&) const = default;

    static PauliVec identity(std::size_t n) { return PauliVec(n); }
    static PauliVec x(std::size_t n, std::size_t j);
    static PauliVec z(std::size_t n, std::size_t j);
    static PauliVec y(std::size_t n, std::size_t j);
    // (k|xi|zeta) with bit strings, first character = qubit 1.
    static PauliVec from_bits(unsigned k, std::string_view xi, std::string_view zeta);
};

PauliVec star_mul(const PauliVec& a, const PauliVec& b);
// a <- a (*) b
void star_mul_into(PauliVec& a, const PauliVec& b);
PauliVec star_inverse(const PauliVec& p);
int order(const PauliVec& p);
bool is_proper(const PauliVec& p);
bool symplectic_product(const PauliVec& a, const PauliVec& b);
PauliVec multi_product(std::span<const PauliVec> ps, std::size_t n);
PauliVec multi_product(std::span<const PauliVec> ps);

struct XYZRep {
    BitVec x;
    BitVec z;
    unsigned delta = 0;
    bool operator==(const XYZRep&) const = default;
};

XYZRep to_xyz(const PauliVec& p);
PauliVec from_xyz(const XYZRep& r);

// Display names and per-index suffixes used when rendering labels.
// Empty names fall back to 1-based numbers.
struct LabelStyle {
    std::vector<std::string> names;
    std::vector<std::string> x_suffix;
    std::vector<std::string> z_suffix;
};

class LabelParseError : public std::runtime_error {
public:
    LabelParseError(std::size_t pos, const std::string& msg);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

std::string phase_symbol(unsigned kappa);
std::string render_label(const PauliVec& p, const LabelStyle* style = nullptr);
PauliVec parse_label(std::string_view text, std::size_t n, const LabelStyle* style = nullptr);

}  // namespace parityflow
