#include "app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "parityflow/circuit.hpp"
#include "parityflow/serialize.hpp"

namespace parityflow::cli {

namespace {

struct Loaded {
    Circuit circuit;
    Timeline timeline;
};

std::optional<Loaded> load(const std::string& path, std::ostream& err) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            err << path << ": error: cannot read file\n";
            return std::nullopt;
        }
        buf << in.rdbuf();
    }
    try {
        Loaded l;
        l.circuit = parse_circuit(buf.str());
        l.timeline = track(l.circuit);
        return l;
    } catch (const CircuitParseError& e) {
        err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.detail() << "\n";
    } catch (const std::exception& e) {
        err << path << ": error: " << e.what() << "\n";
    }
    return std::nullopt;
}

std::string paint(const std::string& s, const char* code, bool color) {
    if (!color) return s;
    return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

// --step k selects the k-th slice, 0 being the start of the circuit.
const Snapshot* pick(const Timeline& tl, long step, std::ostream& err) {
    if (step < 0) return &tl.snapshots.back();
    std::vector<const Snapshot*> slices;
    for (const auto& s : tl.snapshots)
        if (s.reason == "start" || s.reason == "slice") slices.push_back(&s);
    if (static_cast<std::size_t>(step) >= slices.size()) {
        err << "error: --step " << step << " out of range (0.." << slices.size() - 1 << ")\n";
        return nullptr;
    }
    return slices[static_cast<std::size_t>(step)];
}

int cmd_track(const Loaded& l, bool json, bool fail_on_violation, std::ostream& out, const Options& opt) {
    const Circuit& c = l.circuit;
    const Timeline& tl = l.timeline;
    bool violated = false;
    for (const auto& e : tl.reports) violated |= !e.report.allowed;
    if (json) {
        out << timeline_to_json(c, tl, 2) << "\n";
    } else {
        LabelStyle physical;
        physical.names = c.names;
        for (const auto& e : tl.reports) {
            std::string verdict = render_report(e.report, tl.marks, c.names);
            verdict = e.report.allowed ? paint(verdict, "32", opt.color) : paint(verdict, "31", opt.color);
            out << "step " << e.step << "  rot " << render_label(e.axis, &physical) << "  angle " << e.angle << "  "
                << verdict << "\n";
        }
    }
    return violated && fail_on_violation ? kViolation : kOk;
}

int cmd_labels(const Loaded& l, long step, std::ostream& out, std::ostream& err) {
    const Snapshot* s = pick(l.timeline, step, err);
    if (!s) return kUsage;
    out << s->reason << " after " << s->gates << " gate(s)\n";
    out << render_labels(s->state, l.timeline.marks, l.circuit.names);
    return kOk;
}

void print_rows(const Tableau& t, const std::vector<std::string>& names, std::ostream& out) {
    std::size_t width = 2;
    for (const auto& nm : names) width = std::max(width, nm.size() + 1);
    auto line = [&](const std::string& label, const PauliVec& r) {
        out << label << std::string(width - label.size(), ' ') << "  " << int(r.kappa) << "|" << r.xi.to_string()
            << "|" << r.zeta.to_string() << "\n";
    };
    line("I", t.rows()[0]);
    for (std::size_t j = 0; j < t.n(); ++j) line("X" + names[j], t.x_row(j));
    for (std::size_t j = 0; j < t.n(); ++j) line("Z" + names[j], t.z_row(j));
}

int cmd_tableau(const Loaded& l, const std::string& kind, bool json, long step, std::ostream& out,
                std::ostream& err) {
    const Snapshot* s = pick(l.timeline, step, err);
    if (!s) return kUsage;
    const CombinedTableau& ct = s->state;
    if (kind == "combined") {
        if (json) {
            out << combined_to_json(ct) << "\n";
            return kOk;
        }
        out << "kind combined n " << ct.n() << "\n";
        print_rows(ct.flow(), l.circuit.names, out);
        out << "push_phases";
        for (auto k : ct.push_phases()) out << " " << int(k);
        out << "\nheader " << render_header(ct) << "\n";
        return kOk;
    }
    Tableau t = kind == "flow" ? ct.flow() : invert(ct.flow());
    if (json) {
        out << tableau_to_json(t) << "\n";
        return kOk;
    }
    out << "kind " << kind_name(t.kind()) << " n " << t.n() << "\n";
    print_rows(t, l.circuit.names, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& opt) {
    CLI::App app{"Track Pauli operators through Clifford circuits", "parityflow"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    bool fail_on_violation = false;
    long step = -1;
    std::string kind = "flow";

    auto* track_cmd = app.add_subcommand("track", "Report the logical meaning of every rotation");
    track_cmd->add_option("file", file, "Circuit file ('-' for stdin)")->required();
    track_cmd->add_flag("--json", json, "Emit the timeline as JSON");
    track_cmd->add_flag("--fail-on-violation", fail_on_violation, "Exit 1 if a rotation violates a stabilizer");

    auto* labels_cmd = app.add_subcommand("labels", "Print flow labels at a snapshot");
    labels_cmd->add_option("file", file, "Circuit file ('-' for stdin)")->required();
    labels_cmd->add_option("--step", step, "Slice index, 0 = start (default: final)")->check(CLI::NonNegativeNumber);

    auto* tableau_cmd = app.add_subcommand("tableau", "Dump a tableau of the tracked Clifford part");
    tableau_cmd->add_option("file", file, "Circuit file ('-' for stdin)")->required();
    tableau_cmd->add_option("--kind", kind, "flow, clifford or combined")
        ->check(CLI::IsMember({"flow", "clifford", "combined"}));
    tableau_cmd->add_flag("--json", json, "Emit JSON");
    tableau_cmd->add_option("--step", step, "Slice index, 0 = start (default: final)")->check(CLI::NonNegativeNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto loaded = load(file, err);
    if (!loaded) return kUsage;
    try {
        if (track_cmd->parsed()) return cmd_track(*loaded, json, fail_on_violation, out, opt);
        if (labels_cmd->parsed()) return cmd_labels(*loaded, step, out, err);
        return cmd_tableau(*loaded, kind, json, step, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace parityflow::cli
