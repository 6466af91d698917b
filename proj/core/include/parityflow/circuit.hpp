#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parityflow/combined.hpp"
#include "parityflow/stabilizer.hpp"

namespace parityflow {

struct Rotation {
    PauliVec axis;
    std::string angle;  // kept verbatim, never evaluated
    bool operator==(const Rotation&) const = default;
};

struct Step {
    enum class Kind { Clifford, Rotation, Slice };
    Kind kind = Kind::Slice;
    Gate gate;
    Rotation rotation;
    bool operator==(const Step&) const = default;
};

struct Circuit {
    std::size_t n_logical = 0;
    std::vector<std::string> names;  // "1".."n", then aux names
    std::vector<AuxSpec> aux;
    std::vector<Step> steps;

    std::size_t n_total() const { return names.size(); }
    bool operator==(const Circuit&) const = default;
};

class CircuitParseError : public std::runtime_error {
public:
    CircuitParseError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

Circuit parse_circuit(std::string_view text);
std::string render_circuit(const Circuit& c);

struct Snapshot {
    std::string reason;  // "start", "slice", "rotation" or "final"
    std::size_t step = 0;
    std::size_t gates = 0;  // Clifford steps applied so far
    CombinedTableau state;
};

struct ReportEntry {
    std::size_t step = 0;
    std::string angle;
    PauliVec axis;
    RotationReport report;
};

struct Timeline {
    std::vector<Snapshot> snapshots;
    std::vector<ReportEntry> reports;
    AuxMarks marks;
};

Timeline track(const Circuit& c);

// Header line, then one line per qubit with its X and Z labels.
std::string render_labels(const CombinedTableau& ct, const AuxMarks& marks, const std::vector<std::string>& names);

}  // namespace parityflow
