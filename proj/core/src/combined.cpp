#include "parityflow/combined.hpp"

#include <stdexcept>
#include <utility>

namespace parityflow {

namespace {

void add_bits(std::uint8_t* phases, const BitVec& bits, unsigned amount) {
    bits.for_each_set([&](std::size_t j) { phases[j] = static_cast<std::uint8_t>((phases[j] + amount) & 3u); });
}

std::string header_symbol(unsigned k) {
    switch (k & 3u) {
        case 0: return "+";
        case 1: return "i";
        case 2: return "-";
        default: return "i^3";
    }
}

std::string header_half(const std::vector<std::uint8_t>& phases, std::size_t begin, std::size_t n) {
    std::string out;
    for (std::size_t j = 0; j < n; ++j) {
        std::string sym = header_symbol(phases[begin + j]);
        if (j > 0 && (sym.size() > 1 || header_symbol(phases[begin + j - 1]).size() > 1)) out += ' ';
        out += sym;
    }
    return out;
}

}  // namespace

CombinedTableau::CombinedTableau(std::size_t n) : flow_(Tableau::identity(n, Kind::Flow)), push_(2 * n, 0) {}

CombinedTableau CombinedTableau::from_parts(Tableau flow, std::vector<std::uint8_t> push) {
    if (flow.kind() != Kind::Flow) throw std::invalid_argument("combined tableau needs a flow tableau");
    if (push.size() != 2 * flow.n()) throw DimensionError("push phase vector must have 2n entries");
    CombinedTableau ct;
    ct.flow_ = std::move(flow);
    ct.push_ = std::move(push);
    for (auto& k : ct.push_) k &= 3u;
    return ct;
}

void CombinedTableau::apply(const Gate& g) {
    check_gate(g, n());
    for (const Gate& p : primitive_gates(g)) apply_primitive(p);
}

void CombinedTableau::apply_primitive(const Gate& g) {
    const std::size_t n = this->n();
    const std::size_t t = g.q0;
    std::uint8_t* px = push_.data();
    std::uint8_t* pz = push_.data() + n;
    switch (g.op) {
        case Gate::Op::H:
            add_bits(px, flow_.x_row(t).zeta & flow_.z_row(t).zeta, 2);
            add_bits(pz, flow_.x_row(t).xi & flow_.z_row(t).xi, 2);
            break;
        case Gate::Op::S:
            add_bits(px, flow_.z_row(t).zeta, 1);
            add_bits(pz, flow_.z_row(t).xi, 1);
            break;
        default: break;
    }
    flow_.apply(g);
}

PauliVec CombinedTableau::pushforward_generator(bool z_gen, std::size_t j) const {
    const std::size_t n = this->n();
    if (j >= n) throw std::out_of_range("generator index out of range");
    PauliVec p(n, z_gen ? push_[n + j] : push_[j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (z_gen) {
            p.xi.set(k, flow_.z_row(k).xi.get(j));
            p.zeta.set(k, flow_.x_row(k).xi.get(j));
        } else {
            p.xi.set(k, flow_.z_row(k).zeta.get(j));
            p.zeta.set(k, flow_.x_row(k).zeta.get(j));
        }
    }
    return p;
}

PauliVec pushforward_general(const CombinedTableau& ct, const PauliVec& p) {
    if (p.n() != ct.n()) throw DimensionError("Pauli/tableau dimension mismatch");
    PauliVec acc(ct.n(), p.kappa);
    p.xi.for_each_set([&](std::size_t j) { star_mul_into(acc, ct.pushforward_generator(false, j)); });
    p.zeta.for_each_set([&](std::size_t j) { star_mul_into(acc, ct.pushforward_generator(true, j)); });
    return acc;
}

std::string render_header(const CombinedTableau& ct) {
    const std::size_t n = ct.n();
    return "(" + header_half(ct.push_phases(), n, n) + "|" + header_half(ct.push_phases(), 0, n) + ")";
}

}  // namespace parityflow
