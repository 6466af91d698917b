#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "parityflow/tableau.hpp"

namespace parityflow {

// Flow tableau plus the phases of the pushforwards of the logical generators.
class CombinedTableau {
public:
    CombinedTableau() = default;
    explicit CombinedTableau(std::size_t n);

    std::size_t n() const { return flow_.n(); }
    const Tableau& flow() const { return flow_; }

    // Indexed X_1..X_n, then Z_1..Z_n.
    const std::vector<std::uint8_t>& push_phases() const { return push_; }
    unsigned push_phase_x(std::size_t j) const { return push_[j]; }
    unsigned push_phase_z(std::size_t j) const { return push_[n() + j]; }

    void apply(const Gate& g);

    // Pushforward of logical X_j (z_gen = false) or Z_j (z_gen = true).
    PauliVec pushforward_generator(bool z_gen, std::size_t j) const;

    bool operator==(const CombinedTableau&) const = default;

    static CombinedTableau from_parts(Tableau flow, std::vector<std::uint8_t> push);

private:
    void apply_primitive(const Gate& g);

    Tableau flow_;
    std::vector<std::uint8_t> push_;
};

PauliVec pushforward_general(const CombinedTableau& ct, const PauliVec& p);

// "(p_1..p_n|q_1..q_n)": Z pushforward phases, then X pushforward phases.
std::string render_header(const CombinedTableau& ct);

}  // namespace parityflow
