#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parityflow/bitmatrix.hpp"
#include "parityflow/pauli.hpp"

namespace parityflow {

enum class Kind { Flow, Clifford };

std::string kind_name(Kind k);

struct Gate {
    enum class Op { H, S, Sdg, X, Y, Z, CNOT };
    Op op = Op::H;
    std::size_t q0 = 0;  // target, or control for CNOT
    std::size_t q1 = 0;  // CNOT target

    static Gate h(std::size_t t) { return {Op::H, t, 0}; }
    static Gate s(std::size_t t) { return {Op::S, t, 0}; }
    static Gate sdg(std::size_t t) { return {Op::Sdg, t, 0}; }
    static Gate x(std::size_t t) { return {Op::X, t, 0}; }
    static Gate y(std::size_t t) { return {Op::Y, t, 0}; }
    static Gate z(std::size_t t) { return {Op::Z, t, 0}; }
    static Gate cnot(std::size_t c, std::size_t t) { return {Op::CNOT, c, t}; }

    bool operator==(const Gate&) const = default;
    std::string name() const;
};

// Rewrites a gate as H, S and CNOT steps, in application order.
std::vector<Gate> primitive_gates(const Gate& g);

class Tableau {
public:
    Tableau() = default;
    static Tableau identity(std::size_t n, Kind kind);

    std::size_t n() const { return n_; }
    Kind kind() const { return kind_; }

    // Row 0 is the phase row, then X_1..X_n, then Z_1..Z_n.
    const std::vector<PauliVec>& rows() const { return rows_; }
    std::vector<PauliVec>& rows() { return rows_; }
    const PauliVec& x_row(std::size_t j) const { return rows_[1 + j]; }
    const PauliVec& z_row(std::size_t j) const { return rows_[1 + n_ + j]; }
    PauliVec& x_row(std::size_t j) { return rows_[1 + j]; }
    PauliVec& z_row(std::size_t j) { return rows_[1 + n_ + j]; }

    // Append g after the circuit represented so far.
    void apply(const Gate& g);

    // Phaseless 2n x 2n block, row i = (xi | zeta) of row i+1.
    BitMatrix phaseless() const;

    bool operator==(const Tableau&) const = default;

    // Builds from rows 1..2n; row 0 is filled in.
    static Tableau from_rows(Kind kind, std::vector<PauliVec> generator_rows);

private:
    void apply_flow(const Gate& g);
    void apply_clifford(const Gate& g);

    std::size_t n_ = 0;
    Kind kind_ = Kind::Flow;
    std::vector<PauliVec> rows_;
};

void check_gate(const Gate& g, std::size_t n);

// Fold of the rows selected by p: (kappa_p|0|0), X rows ascending, Z rows ascending.
PauliVec apply_rows(const Tableau& t, const PauliVec& p);
PauliVec pullback(const Tableau& flow, const PauliVec& p);
PauliVec pushforward(const Tableau& clifford, const PauliVec& p);

// Flow: the circuit inner followed by outer. Clifford: same circuit order.
Tableau compose(const Tableau& outer, const Tableau& inner);
Tableau invert(const Tableau& t);

bool is_proper_tableau(const Tableau& t);
bool cnot_block_check(const Tableau& t);

}  // namespace parityflow
