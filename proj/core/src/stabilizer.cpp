#include "parityflow/stabilizer.hpp"

#include <stdexcept>

namespace parityflow {

std::string aux_state_token(AuxState s) {
    switch (s) {
        case AuxState::Zero: return "0";
        case AuxState::One: return "1";
        case AuxState::Plus: return "+";
        case AuxState::Minus: return "-";
        case AuxState::PlusI: return "+i";
        case AuxState::MinusI: return "-i";
    }
    return "?";
}

const AuxMark* AuxMarks::find(std::size_t qubit) const {
    for (const auto& m : marks_)
        if (m.qubit == qubit) return &m;
    return nullptr;
}

void AuxMarks::init(CombinedTableau& ct, const AuxSpec& spec) {
    if (spec.qubit >= ct.n()) throw std::out_of_range("aux qubit index out of range");
    if (find(spec.qubit)) throw std::invalid_argument("auxiliary qubit initialized twice");
    AuxMark m{spec.qubit, false, false};
    switch (spec.state) {
        case AuxState::Zero: break;
        case AuxState::One: m.negative = true; break;
        case AuxState::Plus:
        case AuxState::PlusI: m.stabilizer_is_x = true; break;
        case AuxState::Minus:
        case AuxState::MinusI:
            m.stabilizer_is_x = true;
            m.negative = true;
            break;
    }
    marks_.push_back(m);
    if (spec.state == AuxState::PlusI || spec.state == AuxState::MinusI) ct.apply(Gate::s(spec.qubit));
}

PauliVec AuxMarks::stabilizer(const AuxMark& m, std::size_t n) const {
    PauliVec p = m.stabilizer_is_x ? PauliVec::x(n, m.qubit) : PauliVec::z(n, m.qubit);
    if (m.negative) p.kappa = 2;
    return p;
}

LabelStyle AuxMarks::style(std::vector<std::string> names) const {
    LabelStyle st;
    const std::size_t n = names.size();
    st.names = std::move(names);
    st.x_suffix.assign(n, "");
    st.z_suffix.assign(n, "");
    for (const auto& m : marks_) {
        if (m.qubit >= n) continue;
        st.x_suffix[m.qubit] = m.stabilizer_is_x ? "." : "!";
        st.z_suffix[m.qubit] = m.stabilizer_is_x ? "!" : ".";
    }
    return st;
}

namespace {

bool violates(const AuxMark& m, const PauliVec& raw) {
    return m.stabilizer_is_x ? raw.zeta.get(m.qubit) : raw.xi.get(m.qubit);
}

}  // namespace

RotationReport check_rotation(const CombinedTableau& ct, const AuxMarks& marks, const PauliVec& p) {
    RotationReport r;
    r.raw = pullback(ct.flow(), p);
    for (const auto& m : marks.marks())
        if (violates(m, r.raw)) r.violating_aux.push_back(m.qubit);
    r.allowed = r.violating_aux.empty();
    if (!r.allowed) return r;

    unsigned kappa = r.raw.kappa;
    for (const auto& m : marks.marks()) {
        if (!m.negative) continue;
        bool hit = m.stabilizer_is_x ? r.raw.xi.get(m.qubit) : r.raw.zeta.get(m.qubit);
        if (hit) kappa += 2;
    }
    const std::size_t n = ct.n();
    PauliVec logical(n - marks.marks().size(), kappa);
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (marks.is_aux(j)) continue;
        logical.xi.set(k, r.raw.xi.get(j));
        logical.zeta.set(k, r.raw.zeta.get(j));
        ++k;
    }
    r.logical = std::move(logical);
    return r;
}

bool fast_violation_check(const CombinedTableau& ct, const AuxMarks& marks, const PauliVec& p) {
    if (p.n() != ct.n()) throw DimensionError("Pauli/tableau dimension mismatch");
    const Tableau& f = ct.flow();
    for (const auto& m : marks.marks()) {
        bool parity = false;
        auto col = [&](const PauliVec& row) { return m.stabilizer_is_x ? row.zeta.get(m.qubit) : row.xi.get(m.qubit); };
        p.xi.for_each_set([&](std::size_t j) { parity ^= col(f.x_row(j)); });
        p.zeta.for_each_set([&](std::size_t j) { parity ^= col(f.z_row(j)); });
        if (parity) return false;
    }
    return true;
}

bool stabilizer_commutes(const CombinedTableau& ct, const PauliVec& stab, const PauliVec& q) {
    if (stab.n() != ct.n() || q.n() != ct.n()) throw DimensionError("Pauli/tableau dimension mismatch");
    const Tableau& f = ct.flow();
    BitVec sx(ct.n());
    BitVec sz(ct.n());
    q.xi.for_each_set([&](std::size_t j) {
        sx ^= f.x_row(j).xi;
        sz ^= f.x_row(j).zeta;
    });
    q.zeta.for_each_set([&](std::size_t j) {
        sx ^= f.z_row(j).xi;
        sz ^= f.z_row(j).zeta;
    });
    return !(BitVec::dot(sx, stab.zeta) ^ BitVec::dot(sz, stab.xi));
}

std::string render_report(const RotationReport& r, const AuxMarks& marks, const std::vector<std::string>& names) {
    LabelStyle full = marks.style(names);
    if (!r.allowed) {
        std::string aux;
        for (std::size_t a : r.violating_aux) {
            if (!aux.empty()) aux += ',';
            aux += a < names.size() && !names[a].empty() ? names[a] : std::to_string(a + 1);
        }
        return "VIOLATES aux=" + aux + " " + render_label(r.raw, &full);
    }
    LabelStyle logical;
    for (std::size_t j = 0; j < names.size(); ++j)
        if (!marks.is_aux(j)) logical.names.push_back(names[j]);
    return "ALLOWED " + render_label(r.raw, &full) + " => " + render_label(*r.logical, &logical);
}

}  // namespace parityflow
