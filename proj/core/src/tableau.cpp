#include "parityflow/tableau.hpp"

#include <stdexcept>
#include <utility>

namespace parityflow {

std::string kind_name(Kind k) { return k == Kind::Flow ? "flow" : "clifford"; }

std::string Gate::name() const {
    switch (op) {
        case Op::H: return "h";
        case Op::S: return "s";
        case Op::Sdg: return "sdg";
        case Op::X: return "x";
        case Op::Y: return "y";
        case Op::Z: return "z";
        case Op::CNOT: return "cnot";
    }
    return "?";
}

std::vector<Gate> primitive_gates(const Gate& g) {
    const std::size_t t = g.q0;
    switch (g.op) {
        case Gate::Op::H:
        case Gate::Op::S:
        case Gate::Op::CNOT: return {g};
        case Gate::Op::Sdg: return {Gate::s(t), Gate::s(t), Gate::s(t)};
        case Gate::Op::Z: return {Gate::s(t), Gate::s(t)};
        case Gate::Op::X: return {Gate::h(t), Gate::s(t), Gate::s(t), Gate::h(t)};
        case Gate::Op::Y:
            // Z then X; XZ is Y up to a global phase.
            return {Gate::s(t), Gate::s(t), Gate::h(t), Gate::s(t), Gate::s(t), Gate::h(t)};
    }
    return {};
}

void check_gate(const Gate& g, std::size_t n) {
    if (g.q0 >= n) throw std::out_of_range("gate " + g.name() + ": qubit index out of range");
    if (g.op == Gate::Op::CNOT) {
        if (g.q1 >= n) throw std::out_of_range("gate cnot: qubit index out of range");
        if (g.q0 == g.q1) throw std::invalid_argument("gate cnot: control equals target");
    }
}

Tableau Tableau::identity(std::size_t n, Kind kind) {
    Tableau t;
    t.n_ = n;
    t.kind_ = kind;
    t.rows_.reserve(2 * n + 1);
    t.rows_.emplace_back(n, 1);
    for (std::size_t j = 0; j < n; ++j) t.rows_.push_back(PauliVec::x(n, j));
    for (std::size_t j = 0; j < n; ++j) t.rows_.push_back(PauliVec::z(n, j));
    return t;
}

Tableau Tableau::from_rows(Kind kind, std::vector<PauliVec> generator_rows) {
    if (generator_rows.size() % 2 != 0) throw DimensionError("tableau needs 2n generator rows");
    Tableau t;
    t.n_ = generator_rows.size() / 2;
    t.kind_ = kind;
    t.rows_.reserve(2 * t.n_ + 1);
    t.rows_.emplace_back(t.n_, 1);
    for (auto& r : generator_rows) {
        if (r.n() != t.n_) throw DimensionError("tableau row has wrong qubit count");
        t.rows_.push_back(std::move(r));
    }
    return t;
}

void Tableau::apply(const Gate& g) {
    check_gate(g, n_);
    for (const Gate& p : primitive_gates(g)) {
        if (kind_ == Kind::Flow) {
            apply_flow(p);
        } else {
            apply_clifford(p);
        }
    }
}

void Tableau::apply_flow(const Gate& g) {
    const std::size_t t = g.q0;
    switch (g.op) {
        case Gate::Op::CNOT:
            star_mul_into(x_row(g.q0), x_row(g.q1));
            star_mul_into(z_row(g.q1), z_row(g.q0));
            break;
        case Gate::Op::H: std::swap(x_row(t), z_row(t)); break;
        case Gate::Op::S: {
            PauliVec& r = x_row(t);
            star_mul_into(r, z_row(t));
            r.kappa = static_cast<std::uint8_t>((r.kappa + 3u) & 3u);
            break;
        }
        default: throw std::logic_error("non-primitive gate");
    }
}

void Tableau::apply_clifford(const Gate& g) {
    const std::size_t t = g.q0;
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        PauliVec& r = rows_[i];
        switch (g.op) {
            case Gate::Op::H: {
                bool a = r.xi.get(t);
                bool b = r.zeta.get(t);
                if (a && b) r.kappa = static_cast<std::uint8_t>((r.kappa + 2u) & 3u);
                r.xi.set(t, b);
                r.zeta.set(t, a);
                break;
            }
            case Gate::Op::S:
                if (r.xi.get(t)) {
                    r.zeta.flip(t);
                    r.kappa = static_cast<std::uint8_t>((r.kappa + 1u) & 3u);
                }
                break;
            case Gate::Op::CNOT:
                if (r.xi.get(g.q0)) r.xi.flip(g.q1);
                if (r.zeta.get(g.q1)) r.zeta.flip(g.q0);
                break;
            default: throw std::logic_error("non-primitive gate");
        }
    }
}

BitMatrix Tableau::phaseless() const {
    BitMatrix m(2 * n_, 2 * n_);
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        const PauliVec& r = rows_[1 + i];
        r.xi.for_each_set([&](std::size_t j) { m.set(i, j, true); });
        r.zeta.for_each_set([&](std::size_t j) { m.set(i, n_ + j, true); });
    }
    return m;
}

PauliVec apply_rows(const Tableau& t, const PauliVec& p) {
    if (p.n() != t.n()) throw DimensionError("Pauli/tableau dimension mismatch");
    PauliVec acc(t.n(), p.kappa);
    p.xi.for_each_set([&](std::size_t j) { star_mul_into(acc, t.x_row(j)); });
    p.zeta.for_each_set([&](std::size_t j) { star_mul_into(acc, t.z_row(j)); });
    return acc;
}

PauliVec pullback(const Tableau& flow, const PauliVec& p) {
    if (flow.kind() != Kind::Flow) throw std::invalid_argument("pullback needs a flow tableau");
    return apply_rows(flow, p);
}

PauliVec pushforward(const Tableau& clifford, const PauliVec& p) {
    if (clifford.kind() != Kind::Clifford) throw std::invalid_argument("pushforward needs a Clifford tableau");
    return apply_rows(clifford, p);
}

Tableau compose(const Tableau& outer, const Tableau& inner) {
    if (outer.kind() != inner.kind()) throw std::invalid_argument("compose: tableau kinds differ");
    if (outer.n() != inner.n()) throw DimensionError("compose: qubit counts differ");
    std::vector<PauliVec> rows;
    rows.reserve(2 * outer.n());
    for (std::size_t i = 1; i < outer.rows().size(); ++i) {
        if (outer.kind() == Kind::Flow) {
            rows.push_back(apply_rows(inner, outer.rows()[i]));
        } else {
            rows.push_back(apply_rows(outer, inner.rows()[i]));
        }
    }
    return Tableau::from_rows(outer.kind(), std::move(rows));
}

Tableau invert(const Tableau& t) {
    if (!is_proper_tableau(t)) throw std::invalid_argument("invert: tableau is not proper");
    const std::size_t n = t.n();
    const std::size_t m = 2 * n;

    // Phaseless part of the inverse: (A B; C D) -> (D^T B^T; C^T A^T).
    std::vector<PauliVec> rows(m, PauliVec(n));
    for (std::size_t k = 0; k < n; ++k) {
        const PauliVec& xr = t.x_row(k);
        const PauliVec& zr = t.z_row(k);
        zr.zeta.for_each_set([&](std::size_t j) { rows[j].xi.set(k, true); });
        xr.zeta.for_each_set([&](std::size_t j) { rows[j].zeta.set(k, true); });
        zr.xi.for_each_set([&](std::size_t j) { rows[n + j].xi.set(k, true); });
        xr.xi.for_each_set([&](std::size_t j) { rows[n + j].zeta.set(k, true); });
    }

    // Strictly upper part of (zeta_k . xi_l), the pairwise sign terms of the fold.
    std::vector<BitVec> strup(m, BitVec(m));
    for (std::size_t k = 0; k < m; ++k) {
        const BitVec& zk = t.rows()[1 + k].zeta;
        for (std::size_t l = k + 1; l < m; ++l)
            if (BitVec::dot(zk, t.rows()[1 + l].xi)) strup[k].set(l, true);
    }

    for (std::size_t i = 0; i < m; ++i) {
        BitVec f(m);
        rows[i].xi.for_each_set([&](std::size_t k) { f.set(k, true); });
        rows[i].zeta.for_each_set([&](std::size_t k) { f.set(n + k, true); });
        unsigned linear = 0;
        std::size_t quad = 0;
        f.for_each_set([&](std::size_t k) {
            linear += t.rows()[1 + k].kappa;
            quad += BitVec::and_count(strup[k], f);
        });
        rows[i].kappa = static_cast<std::uint8_t>((4u - (linear & 3u) + 2u * (quad & 1u)) & 3u);
    }
    return Tableau::from_rows(t.kind() == Kind::Flow ? Kind::Clifford : Kind::Flow, std::move(rows));
}

bool is_proper_tableau(const Tableau& t) {
    const std::size_t n = t.n();
    if (t.rows().size() != 2 * n + 1) return false;
    if (!(t.rows()[0] == PauliVec(n, 1))) return false;
    for (std::size_t a = 1; a <= 2 * n; ++a) {
        if (!is_proper(t.rows()[a])) return false;
        for (std::size_t b = a; b <= 2 * n; ++b) {
            bool want = (b == a + n);
            if (symplectic_product(t.rows()[a], t.rows()[b]) != want) return false;
        }
    }
    return true;
}

bool cnot_block_check(const Tableau& t) {
    const std::size_t n = t.n();
    for (std::size_t j = 0; j < n; ++j) {
        if (t.x_row(j).kappa != 0 || t.z_row(j).kappa != 0) return false;
        if (t.x_row(j).zeta.any() || t.z_row(j).xi.any()) return false;
    }
    BitMatrix full = t.phaseless();
    auto d_inv = full.block(n, n, n, n).inverse();
    if (!d_inv) return false;
    return full.block(0, 0, n, n) == d_inv->transposed();
}

}  // namespace parityflow
