#include "parityflow/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace parityflow {

CircuitParseError::CircuitParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column),
      detail_(msg) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::optional<std::size_t> parse_uint(const std::string& s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::size_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

bool is_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct PendingRotation {
    unsigned kappa = 0;
    std::vector<std::pair<std::size_t, char>> factors;
    std::string angle;
};

class Parser {
public:
    Circuit run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            line_ = line_no;
            statement(tokenize(line));
            pos = end + 1;
        }
        return finish();
    }

private:
    [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
        throw CircuitParseError(line_, column, msg);
    }

    void statement(const std::vector<Token>& tk) {
        if (tk.empty()) return;
        const std::string& op = tk[0].text;
        if (op == "qubits") {
            if (have_qubits_) fail(tk[0].column, "qubit count declared twice");
            arity(tk, 2);
            auto n = parse_uint(tk[1].text);
            if (!n) fail(tk[1].column, "expected a qubit count");
            have_qubits_ = true;
            c_.n_logical = *n;
            for (std::size_t j = 0; j < *n; ++j) c_.names.push_back(std::to_string(j + 1));
            return;
        }
        if (!have_qubits_) fail(tk[0].column, "expected 'qubits <n>' before other statements");
        if (op == "aux") {
            arity(tk, 3);
            declare_aux(tk[1], tk[2]);
            return;
        }
        if (op == "slice") {
            arity(tk, 1);
            Step s;
            s.kind = Step::Kind::Slice;
            push(std::move(s));
            return;
        }
        if (op == "h" || op == "s" || op == "sdg" || op == "x" || op == "y" || op == "z") {
            arity(tk, 2);
            std::size_t q = qubit(tk[1]);
            Gate g = op == "h" ? Gate::h(q)
                     : op == "s" ? Gate::s(q)
                     : op == "sdg" ? Gate::sdg(q)
                     : op == "x" ? Gate::x(q)
                     : op == "y" ? Gate::y(q)
                                 : Gate::z(q);
            clifford(g);
            return;
        }
        if (op == "cnot") {
            arity(tk, 3);
            std::size_t c = qubit(tk[1]);
            std::size_t t = qubit(tk[2]);
            if (c == t) fail(tk[2].column, "control equals target");
            clifford(Gate::cnot(c, t));
            return;
        }
        if (op == "rx" || op == "ry" || op == "rz") {
            if (tk.size() < 3) fail(tk[0].column, op + " needs a qubit and an angle");
            PendingRotation r;
            r.factors.push_back({qubit(tk[1]), static_cast<char>(std::toupper(static_cast<unsigned char>(op[1])))});
            r.angle = join(tk, 2);
            rotation(std::move(r));
            return;
        }
        if (op == "rot") {
            if (tk.size() < 2) fail(tk[0].column, "rot needs a Pauli string");
            PendingRotation r;
            std::string letters = pauli_string(tk[1], r.kappa);
            if (tk.size() < 2 + letters.size() + 1)
                fail(tk[0].column, "rot needs " + std::to_string(letters.size()) + " qubit(s) and an angle");
            for (std::size_t k = 0; k < letters.size(); ++k) {
                const Token& qt = tk[2 + k];
                std::size_t q = qubit(qt);
                for (const auto& f : r.factors)
                    if (f.first == q) fail(qt.column, "qubit repeated in rotation axis");
                r.factors.push_back({q, letters[k]});
            }
            r.angle = join(tk, 2 + letters.size());
            rotation(std::move(r));
            return;
        }
        fail(tk[0].column, "unknown gate '" + op + "'");
    }

    void arity(const std::vector<Token>& tk, std::size_t want) {
        if (tk.size() < want) fail(tk.back().column, "missing operand for '" + tk[0].text + "'");
        if (tk.size() > want) fail(tk[want].column, "unexpected operand '" + tk[want].text + "'");
    }

    static std::string join(const std::vector<Token>& tk, std::size_t from) {
        std::string s;
        for (std::size_t k = from; k < tk.size(); ++k) {
            if (!s.empty()) s += ' ';
            s += tk[k].text;
        }
        return s;
    }

    std::string pauli_string(const Token& t, unsigned& kappa) {
        const std::string& s = t.text;
        std::size_t i = 0;
        kappa = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') kappa = 2;
            ++i;
        }
        if (i < s.size() && s[i] == 'i') {
            kappa += 1;
            ++i;
        }
        kappa &= 3u;
        std::string letters = s.substr(i);
        if (letters.empty()) fail(t.column, "malformed Pauli string '" + s + "'");
        for (std::size_t k = 0; k < letters.size(); ++k)
            if (letters[k] != 'I' && letters[k] != 'X' && letters[k] != 'Y' && letters[k] != 'Z')
                fail(t.column + i + k, "malformed Pauli string '" + s + "'");
        return letters;
    }

    void declare_aux(const Token& name, const Token& state) {
        if (!is_name(name.text)) fail(name.column, "aux name must start with a letter");
        for (std::size_t j = c_.n_logical; j < c_.names.size(); ++j)
            if (c_.names[j] == name.text) fail(name.column, "duplicate aux '" + name.text + "'");
        static const std::pair<const char*, AuxState> states[] = {
            {"0", AuxState::Zero}, {"1", AuxState::One},   {"+", AuxState::Plus},
            {"-", AuxState::Minus}, {"+i", AuxState::PlusI}, {"-i", AuxState::MinusI}};
        for (const auto& [tok, st] : states) {
            if (state.text == tok) {
                c_.aux.push_back({c_.names.size(), st});
                c_.names.push_back(name.text);
                return;
            }
        }
        fail(state.column, "unknown aux state '" + state.text + "'");
    }

    std::size_t qubit(const Token& t) {
        if (auto v = parse_uint(t.text)) {
            if (*v >= 1 && *v <= c_.n_logical) return *v - 1;
            fail(t.column, "undeclared qubit '" + t.text + "'");
        }
        for (std::size_t j = c_.n_logical; j < c_.names.size(); ++j)
            if (c_.names[j] == t.text) return j;
        fail(t.column, "undeclared qubit '" + t.text + "'");
    }

    void clifford(const Gate& g) {
        Step s;
        s.kind = Step::Kind::Clifford;
        s.gate = g;
        push(std::move(s));
    }

    void rotation(PendingRotation r) {
        Step s;
        s.kind = Step::Kind::Rotation;
        pending_.emplace_back(steps_.size(), std::move(r));
        push(std::move(s));
    }

    void push(Step s) { steps_.push_back(std::move(s)); }

    Circuit finish() {
        if (!have_qubits_) throw CircuitParseError(line_, 1, "missing 'qubits <n>' declaration");
        const std::size_t n = c_.n_total();
        for (auto& [idx, r] : pending_) {
            PauliVec p(n, r.kappa);
            for (auto [q, letter] : r.factors) {
                if (letter == 'X' || letter == 'Y') p.xi.set(q, true);
                if (letter == 'Z' || letter == 'Y') p.zeta.set(q, true);
                if (letter == 'Y') p.kappa = static_cast<std::uint8_t>((p.kappa + 1u) & 3u);
            }
            steps_[idx].rotation = Rotation{std::move(p), std::move(r.angle)};
        }
        for (auto& s : steps_) {
            if (s.kind == Step::Kind::Rotation) continue;
            s.rotation.axis = PauliVec(n);
        }
        c_.steps = std::move(steps_);
        return std::move(c_);
    }

    Circuit c_;
    bool have_qubits_ = false;
    std::size_t line_ = 0;
    std::vector<Step> steps_;
    std::vector<std::pair<std::size_t, PendingRotation>> pending_;
};

std::string qubit_name(const Circuit& c, std::size_t q) { return c.names[q]; }

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser().run(text); }

std::string render_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_logical << "\n";
    for (const auto& a : c.aux) out << "aux " << c.names[a.qubit] << " " << aux_state_token(a.state) << "\n";
    for (const auto& s : c.steps) {
        switch (s.kind) {
            case Step::Kind::Slice: out << "slice\n"; break;
            case Step::Kind::Clifford:
                out << s.gate.name() << " " << qubit_name(c, s.gate.q0);
                if (s.gate.op == Gate::Op::CNOT) out << " " << qubit_name(c, s.gate.q1);
                out << "\n";
                break;
            case Step::Kind::Rotation: {
                const PauliVec& p = s.rotation.axis;
                std::string letters;
                std::string qubits;
                for (std::size_t q = 0; q < p.n(); ++q) {
                    bool x = p.xi.get(q);
                    bool z = p.zeta.get(q);
                    if (!x && !z) continue;
                    letters += x && z ? 'Y' : x ? 'X' : 'Z';
                    qubits += " " + qubit_name(c, q);
                }
                unsigned k = (p.kappa + 4u - static_cast<unsigned>(BitVec::and_count(p.xi, p.zeta) & 3u)) & 3u;
                static const char* prefix[] = {"+", "i", "-", "-i"};
                if (letters.empty()) {
                    // phase-only axis: keep one identity factor so the line reparses
                    letters = "I";
                    qubits = " " + qubit_name(c, 0);
                }
                out << "rot " << prefix[k] << letters << qubits << " " << s.rotation.angle << "\n";
                break;
            }
        }
    }
    return out.str();
}

Timeline track(const Circuit& c) {
    Timeline tl;
    CombinedTableau ct(c.n_total());
    for (const auto& a : c.aux) tl.marks.init(ct, a);
    tl.snapshots.push_back({"start", 0, 0, ct});
    std::size_t gates = 0;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Step& s = c.steps[i];
        switch (s.kind) {
            case Step::Kind::Clifford:
                ct.apply(s.gate);
                ++gates;
                break;
            case Step::Kind::Slice: tl.snapshots.push_back({"slice", i, gates, ct}); break;
            case Step::Kind::Rotation:
                tl.snapshots.push_back({"rotation", i, gates, ct});
                tl.reports.push_back({i, s.rotation.angle, s.rotation.axis, check_rotation(ct, tl.marks, s.rotation.axis)});
                break;
        }
    }
    tl.snapshots.push_back({"final", c.steps.size(), gates, ct});
    return tl;
}

std::string render_labels(const CombinedTableau& ct, const AuxMarks& marks, const std::vector<std::string>& names) {
    LabelStyle st = marks.style(names);
    std::size_t width = 1;
    for (const auto& nm : names) width = std::max(width, nm.size());
    std::ostringstream out;
    out << "header " << render_header(ct) << "\n";
    for (std::size_t q = 0; q < ct.n(); ++q) {
        std::string nm = q < names.size() ? names[q] : std::to_string(q + 1);
        out << nm << std::string(width - nm.size(), ' ') << "  X: " << render_label(ct.flow().x_row(q), &st)
            << "  Z: " << render_label(ct.flow().z_row(q), &st) << "\n";
    }
    return out.str();
}

}  // namespace parityflow
