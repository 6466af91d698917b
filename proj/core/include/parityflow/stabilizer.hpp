#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parityflow/combined.hpp"

namespace parityflow {

enum class AuxState { Zero, One, Plus, Minus, PlusI, MinusI };

std::string aux_state_token(AuxState s);

struct AuxSpec {
    std::size_t qubit = 0;
    AuxState state = AuxState::Zero;
    bool operator==(const AuxSpec&) const = default;
};

// Stabilizer generator of an initialized auxiliary qubit, fixed at time 0.
struct AuxMark {
    std::size_t qubit = 0;
    bool stabilizer_is_x = false;  // X_a for |+>, |->; Z_a for |0>, |1>
    bool negative = false;         // stabilizer is -X_a or -Z_a
    bool operator==(const AuxMark&) const = default;
};

class AuxMarks {
public:
    AuxMarks() = default;

    const std::vector<AuxMark>& marks() const { return marks_; }
    const AuxMark* find(std::size_t qubit) const;
    bool is_aux(std::size_t qubit) const { return find(qubit) != nullptr; }

    // Registers the mark and tracks the preparation gates (an S for the Y eigenstates).
    void init(CombinedTableau& ct, const AuxSpec& spec);

    // Time-0 stabilizer of one auxiliary, signed.
    PauliVec stabilizer(const AuxMark& m, std::size_t n) const;

    // Label suffixes: "." on the stabilizing half of an aux index, "!" on the other half.
    LabelStyle style(std::vector<std::string> names) const;

private:
    std::vector<AuxMark> marks_;
};

struct RotationReport {
    PauliVec raw;
    bool allowed = false;
    std::optional<PauliVec> logical;  // over the non-auxiliary qubits, present iff allowed
    std::vector<std::size_t> violating_aux;
};

RotationReport check_rotation(const CombinedTableau& ct, const AuxMarks& marks, const PauliVec& p);
bool fast_violation_check(const CombinedTableau& ct, const AuxMarks& marks, const PauliVec& p);
bool stabilizer_commutes(const CombinedTableau& ct, const PauliVec& stab, const PauliVec& q);

// "ALLOWED <label> => <stripped>" or "VIOLATES aux=<a,..> <label>".
std::string render_report(const RotationReport& r, const AuxMarks& marks, const std::vector<std::string>& names);

}  // namespace parityflow
