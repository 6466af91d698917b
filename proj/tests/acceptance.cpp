// Acceptance checks, one line per criterion. Exit status is nonzero if any check fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "parityflow/circuit.hpp"
#include "parityflow/combined.hpp"
#include "parityflow/pauli.hpp"
#include "parityflow/stabilizer.hpp"
#include "parityflow/tableau.hpp"
#include "strip_oracle.hpp"
#include "testutil.hpp"

using namespace parityflow;

namespace {

struct Check {
    int failures = 0;
    std::string first;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures++ == 0) first = what;
    }
};

std::string read_file(const std::string& name) {
    std::ifstream in(testutil::data_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PauliVec P(unsigned k, const char* x, const char* z) { return PauliVec::from_bits(k, x, z); }

Tableau flow_from_labels(const std::vector<std::string>& labels) {
    const std::size_t n = labels.size() / 2;
    std::vector<PauliVec> rows;
    for (const auto& l : labels) rows.push_back(parse_label(l, n));
    return Tableau::from_rows(Kind::Flow, rows);
}

// Every row of F must equal U^dag (generator) U for the gates so far.
void expect_rows_match_oracle(Check& c, const Tableau& f, const std::vector<Gate>& gates, const std::string& tag) {
    const std::size_t n = f.n();
    for (std::size_t j = 0; j < n; ++j) {
        c.expect(oracle::pauli_matrix(f.x_row(j)) ==
                     oracle::conjugate_pullback(oracle::pauli_matrix(PauliVec::x(n, j)), gates, n),
                 tag + " X row " + std::to_string(j + 1));
        c.expect(oracle::pauli_matrix(f.z_row(j)) ==
                     oracle::conjugate_pullback(oracle::pauli_matrix(PauliVec::z(n, j)), gates, n),
                 tag + " Z row " + std::to_string(j + 1));
    }
}

// Printed labels in row order X1, X2, Z1, Z2 per snapshot; empty entries were not printed.
Check heisenberg_golden() {
    Check c;
    const std::vector<Gate> gates = {Gate::cnot(1, 0), Gate::h(0), Gate::cnot(1, 0), Gate::h(0), Gate::s(0),
                                     Gate::cnot(1, 0), Gate::s(0), Gate::s(1), Gate::s(0), Gate::s(0)};
    const std::vector<std::vector<std::string>> printed = {
        {},
        {"+ X(1)", "+ X(1,2)", "+ Z(1,2)", "+ Z(2)"},
        {"+ Z(1,2)", "+ X(1,2)", "+ X(1)", "+ Z(2)"},
        {"+ Z(1,2)", "+ X(1,2) Z(1,2)", "+ X(1) Z(2)", "+ Z(2)"},
        {"+ X(1) Z(2)", "+ X(1,2) Z(1,2)", "+ Z(1,2)", "+ Z(2)"},
        {"i^3 X(1) Z(1)", "+ X(1,2) Z(1,2)", "+ Z(1,2)", "+ Z(2)"},
        {"i^3 X(1) Z(1)", "i X(2) Z(2)", "+ Z(1)", "+ Z(2)"},
        {},
        {"- X(1)", "+ X(2)", "+ Z(1)", "+ Z(2)"},
        {},
        {"+ X(1)", "+ X(2)", "+ Z(1)", "+ Z(2)"},
    };
    const std::vector<std::pair<std::size_t, std::string>> headers = {
        {0, "(++|++)"}, {2, "(++|++)"}, {4, "(++|+-)"}, {5, "(++|i i^3)"}, {8, "(++|-+)"}, {10, "(++|++)"}};

    CombinedTableau ct(2);
    std::vector<Gate> so_far;
    std::size_t next_header = 0;
    int compared = 0;
    for (std::size_t k = 0; k <= gates.size(); ++k) {
        if (k > 0) {
            ct.apply(gates[k - 1]);
            so_far.push_back(gates[k - 1]);
        }
        const std::string tag = "F" + std::to_string(k);
        if (k > 0 && !printed[k].empty()) {
            c.expect(ct.flow() == flow_from_labels(printed[k]), tag + " differs from printed tableau");
            ++compared;
        }
        expect_rows_match_oracle(c, ct.flow(), so_far, tag);
        if (next_header < headers.size() && headers[next_header].first == k) {
            c.expect(render_header(ct) == headers[next_header].second,
                     tag + " header " + render_header(ct) + " != " + headers[next_header].second);
            ++next_header;
        }
    }
    c.expect(ct.flow().x_row(0) == P(0, "10", "00") && ct == CombinedTableau(2), "final tableau is not identity");

    Circuit circ = parse_circuit(read_file("heisenberg.pf"));
    Timeline tl = track(circ);
    const std::vector<PauliVec> want = {P(0, "00", "11"), P(0, "11", "00"), P(0, "11", "11")};
    c.expect(tl.reports.size() == 3, "expected three rotation reports");
    for (std::size_t r = 0; r < tl.reports.size() && r < 3; ++r)
        c.expect(tl.reports[r].report.allowed && *tl.reports[r].report.logical == want[r],
                 "report " + std::to_string(r + 1) + " is " + render_label(tl.reports[r].report.raw));
    c.expect(tl.snapshots.back().state == CombinedTableau(2), "file run does not end at identity");
    c.note = std::to_string(compared) + " printed + 2 oracle-derived tableaus, 6 headers, 3 reports";
    return c;
}

Check aux_golden() {
    Check c;
    Circuit circ = parse_circuit(read_file("heisenberg_aux.pf"));
    Timeline tl = track(circ);
    const std::vector<std::string> want = {
        "header (+++|+++)\n1  X: + X(1)  Z: + Z(1)\n2  X: + X(2)  Z: + Z(2)\na  X: + X(a.)  Z: + Z(a!)\n",
        "header (+++|++i)\n1  X: + X(1,2)  Z: + Z(1)\n2  X: + X(2)  Z: + Z(1,2)\na  X: -i X(a.) Z(a!)  Z: + Z(a!)\n",
        "header (+++|++i)\n1  X: + X(1,2)  Z: + Z(1,a!)\n2  X: + X(2)  Z: + Z(1,2)\n"
        "a  X: -i X(1,2,a.) Z(a!)  Z: + Z(a!)\n",
        "header (+++|++i)\n1  X: + X(1,2)  Z: + Z(1,a!)\n2  X: -i X(1,a.) Z(a!)  Z: + Z(1,2)\n"
        "a  X: -i X(1,2,a.) Z(a!)  Z: + Z(1,2,a!)\n",
        "header (+++|++i)\n1  X: + X(1,2)  Z: + Z(1,a!)\n2  X: + X(2)  Z: + Z(1,2)\n"
        "a  X: -i X(1,2,a.) Z(a!)  Z: + Z(a!)\n",
        "header (+++|++i)\n1  X: + X(1,2)  Z: + Z(1)\n2  X: + X(2)  Z: + Z(1,2)\na  X: -i X(a.) Z(a!)  Z: + Z(a!)\n",
        "header (+++|+++)\n1  X: + X(1)  Z: + Z(1)\n2  X: + X(2)  Z: + Z(2)\na  X: + X(a.)  Z: + Z(a!)\n",
    };
    std::vector<std::string> got;
    for (const auto& s : tl.snapshots)
        if (s.reason == "start" || s.reason == "slice") got.push_back(render_labels(s.state, tl.marks, circ.names));
    c.expect(got.size() == want.size(), "expected " + std::to_string(want.size()) + " slices, got " +
                                            std::to_string(got.size()));
    for (std::size_t k = 0; k < got.size() && k < want.size(); ++k)
        c.expect(got[k] == want[k], "slice " + std::to_string(k) + " labels:\n" + got[k]);

    const std::vector<PauliVec> logical = {P(0, "11", "00"), P(0, "00", "11"), P(0, "11", "11")};
    c.expect(tl.reports.size() == 3, "expected three rotation reports");
    for (std::size_t r = 0; r < tl.reports.size() && r < 3; ++r) {
        const auto& rep = tl.reports[r].report;
        c.expect(rep.allowed && *rep.logical == logical[r],
                 "report " + std::to_string(r + 1) + ": " + render_report(rep, tl.marks, circ.names));
    }
    const CombinedTableau& fin = tl.snapshots.back().state;
    c.expect(fin.flow() == Tableau::identity(3, Kind::Flow) && render_header(fin) == "(+++|+++)",
             "final labels are not trivial");
    c.note = std::to_string(want.size()) + " slices, 3 allowed reports";
    return c;
}

Check elementary_tableaus() {
    Check c;
    const std::size_t n = 2;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t o = 1 - t;
        auto single = [&](Kind k, const Gate& g) {
            auto tab = Tableau::identity(n, k);
            tab.apply(g);
            return tab;
        };
        // H swaps the X and Z rows of the target in both directions.
        for (Kind k : {Kind::Flow, Kind::Clifford}) {
            auto h = single(k, Gate::h(t));
            c.expect(h.x_row(t) == PauliVec::z(n, t) && h.z_row(t) == PauliVec::x(n, t) &&
                         h.x_row(o) == PauliVec::x(n, o) && h.z_row(o) == PauliVec::z(n, o),
                     kind_name(k) + "(H) on qubit " + std::to_string(t + 1));
        }
        PauliVec xz = PauliVec::x(n, t);
        xz.zeta.set(t, true);
        auto fs = single(Kind::Flow, Gate::s(t));
        PauliVec f_expect = xz;
        f_expect.kappa = 3;
        c.expect(fs.x_row(t) == f_expect && fs.z_row(t) == PauliVec::z(n, t) && fs.x_row(o) == PauliVec::x(n, o),
                 "F(S) on qubit " + std::to_string(t + 1));
        auto ts = single(Kind::Clifford, Gate::s(t));
        PauliVec t_expect = xz;
        t_expect.kappa = 1;
        c.expect(ts.x_row(t) == t_expect && ts.z_row(t) == PauliVec::z(n, t), "T(S) on qubit " + std::to_string(t + 1));

        // CNOT o -> t: [[A, 0], [0, D]] with A = I + e_o e_t^T, D = I + e_t e_o^T, no phases.
        for (Kind k : {Kind::Flow, Kind::Clifford}) {
            auto cx = single(k, Gate::cnot(o, t));
            PauliVec xx = PauliVec::x(n, o);
            xx.xi.set(t, true);
            PauliVec zz = PauliVec::z(n, t);
            zz.zeta.set(o, true);
            c.expect(cx.x_row(o) == xx && cx.x_row(t) == PauliVec::x(n, t) && cx.z_row(t) == zz &&
                         cx.z_row(o) == PauliVec::z(n, o),
                     kind_name(k) + "(CNOT " + std::to_string(o + 1) + "->" + std::to_string(t + 1) + ")");
        }
    }
    c.note = "H, S, CNOT on 2 qubits, both directions";
    return c;
}

Check dense_equivalence() {
    Check c;
    std::mt19937_64 rng(1001);
    int checks = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t n = 1 + rep % 3;
        const auto gates = testutil::random_circuit(n, rng() % 31, rng);
        CombinedTableau ct(n);
        for (const auto& g : gates) ct.apply(g);
        for (int k = 0; k < 50; ++k) {
            const PauliVec p = testutil::random_pauli(n, rng);
            const oracle::Mat mp = oracle::pauli_matrix(p);
            c.expect(oracle::pauli_matrix(pullback(ct.flow(), p)) == oracle::conjugate_pullback(mp, gates, n),
                     "pullback of " + render_label(p) + " in circuit " + std::to_string(rep));
            c.expect(oracle::pauli_matrix(pushforward_general(ct, p)) == oracle::conjugate_pushforward(mp, gates, n),
                     "pushforward of " + render_label(p) + " in circuit " + std::to_string(rep));
            checks += 2;
        }
    }
    c.note = std::to_string(checks) + " matrix comparisons";
    return c;
}

Check structural() {
    Check c;
    std::mt19937_64 rng(2002);
    long gate_steps = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rep % 8;
        const auto gates = testutil::random_circuit(n, rng() % 201, rng);
        CombinedTableau ct(n);
        for (const auto& g : gates) {
            ct.apply(g);
            ++gate_steps;
            c.expect(is_proper_tableau(ct.flow()), "improper tableau in circuit " + std::to_string(rep));
            const Tableau inv = invert(ct.flow());
            for (std::size_t j = 0; j < n; ++j)
                c.expect(ct.push_phase_x(j) == inv.x_row(j).kappa && ct.push_phase_z(j) == inv.z_row(j).kappa,
                         "push phases incoherent in circuit " + std::to_string(rep));
        }
        const Tableau f = ct.flow();
        const Tableau id = Tableau::identity(n, Kind::Flow);
        // invert yields the Clifford tableau; its rows are the flow tableau of the inverse circuit
        const Tableau t_inv = invert(f);
        const Tableau f_inv = Tableau::from_rows(Kind::Flow, {t_inv.rows().begin() + 1, t_inv.rows().end()});
        c.expect(compose(f_inv, f) == id, "invert(F) after F is not identity, circuit " + std::to_string(rep));
        c.expect(compose(f, f_inv) == id, "F after invert(F) is not identity, circuit " + std::to_string(rep));
        for (int k = 0; k < 20; ++k) {
            const PauliVec p = testutil::random_pauli(n, rng);
            c.expect(pullback(f, pushforward_general(ct, p)) == p, "pullback(pushforward) != id, " + render_label(p));
        }
    }
    c.note = std::to_string(gate_steps) + " gate steps";
    return c;
}

Check cnot_block_law() {
    Check c;
    std::mt19937_64 rng(3003);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rep % 7;
        const auto f = testutil::track(n, testutil::random_circuit(n, rng() % 60, rng, true), Kind::Flow);
        c.expect(cnot_block_check(f), "block check fails in circuit " + std::to_string(rep));
        // independent of the elimination: A * D^T must be the identity
        const BitMatrix m = f.phaseless();
        const BitMatrix a = m.block(0, 0, n, n);
        const BitMatrix d = m.block(n, n, n, n);
        c.expect(m.block(0, n, n, n).is_zero() && m.block(n, 0, n, n).is_zero(), "off-diagonal blocks nonzero");
        c.expect(a * d.transposed() == BitMatrix::identity(n), "A D^T != I in circuit " + std::to_string(rep));
        for (std::size_t j = 0; j < n; ++j)
            c.expect(f.x_row(j).kappa == 0 && f.z_row(j).kappa == 0, "nonzero phase in CNOT-only tableau");
    }
    c.note = "100 circuits";
    return c;
}

Check strip_soundness() {
    Check c;
    const AuxState states[] = {AuxState::Zero, AuxState::One, AuxState::Plus,
                               AuxState::Minus, AuxState::PlusI, AuxState::MinusI};
    int allowed = 0;
    int disallowed = 0;
    for (AuxState s : states) {
        const auto st = strip_oracle::run(s, 150, 40, 4004 + static_cast<int>(s));
        allowed += st.allowed;
        disallowed += st.disallowed;
        c.expect(st.failures == 0, aux_state_token(s) + ": " + st.first_failure);
        c.expect(st.allowed > 0 && st.disallowed > 0, aux_state_token(s) + ": one outcome never sampled");
    }
    c.note = std::to_string(allowed) + " allowed, " + std::to_string(disallowed) + " disallowed";
    return c;
}

int matrix_order(const oracle::Mat& m) {
    const oracle::Mat id = oracle::Mat::identity(m.dim);
    oracle::Mat acc = m;
    for (int k = 1; k <= 4; ++k) {
        if (acc == id) return k;
        acc = acc * m;
    }
    return -1;
}

Check pauli_laws() {
    Check c;
    std::mt19937_64 rng(5005);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 1 + rep % 4;
        const PauliVec a = testutil::random_pauli(n, rng);
        const PauliVec b = testutil::random_pauli(n, rng);
        const PauliVec d = testutil::random_pauli(n, rng);
        c.expect(star_mul(star_mul(a, b), d) == star_mul(a, star_mul(b, d)), "associativity");
        c.expect(star_mul(a, PauliVec(n)) == a && star_mul(PauliVec(n), a) == a, "identity element");
        c.expect(star_mul(a, star_inverse(a)) == PauliVec(n) && star_mul(star_inverse(a), a) == PauliVec(n),
                 "inverse");
        if (n <= 3)
            c.expect(oracle::pauli_matrix(star_mul(a, b)) == oracle::pauli_matrix(a) * oracle::pauli_matrix(b),
                     "product disagrees with matrices");
        c.expect(symplectic_product(a, b) != (star_mul(a, b) == star_mul(b, a)), "commutation");
    }
    // order and Hermiticity over every 1- and 2-qubit presentation
    int presentations = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        for (unsigned code = 0; code < (4u << (2 * n)); ++code) {
            PauliVec p(n, code & 3u);
            for (std::size_t j = 0; j < n; ++j) {
                p.xi.set(j, (code >> (2 + j)) & 1u);
                p.zeta.set(j, (code >> (2 + n + j)) & 1u);
            }
            const oracle::Mat m = oracle::pauli_matrix(p);
            const bool hermitian = oracle::adjoint(m) == m;
            c.expect(order(p) == matrix_order(m), "order of " + render_label(p));
            c.expect((order(p) <= 2) == hermitian, "Hermiticity of " + render_label(p));
            c.expect(is_proper(p) == (hermitian && !p.phaseless_zero()), "properness of " + render_label(p));
            if (hermitian) {
                c.expect(from_xyz(to_xyz(p)) == p, "xyz round trip of " + render_label(p));
                ++presentations;
            }
        }
        for (unsigned code = 0; code < (2u << (2 * n)); ++code) {
            XYZRep r{BitVec(n), BitVec(n), code & 1u};
            for (std::size_t j = 0; j < n; ++j) {
                r.x.set(j, (code >> (1 + j)) & 1u);
                r.z.set(j, (code >> (1 + n + j)) & 1u);
            }
            const PauliVec p = from_xyz(r);
            c.expect(to_xyz(p) == r, "round trip from xyz form");
            c.expect(oracle::adjoint(oracle::pauli_matrix(p)) == oracle::pauli_matrix(p), "xyz form not Hermitian");
        }
    }
    c.note = std::to_string(presentations) + " Hermitian presentations round-tripped";
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0 means no time limit
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "heisenberg golden tableaus, headers and reports", 10, heisenberg_golden},
        {2, "auxiliary golden labels and stripped reports", 10, aux_golden},
        {3, "elementary gate tableaus", 0, elementary_tableaus},
        {4, "dense matrix equivalence of pullback and pushforward", 30000, dense_equivalence},
        {5, "properness, inversion, phase coherence, round trip", 60000, structural},
        {6, "CNOT-only block law", 0, cnot_block_law},
        {7, "stabilizer strip soundness over six aux states", 0, strip_soundness},
        {8, "Pauli group laws, order and Hermiticity, xyz round trip", 0, pauli_laws},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = std::to_string(ms);
        timing = timing.substr(0, timing.find('.') + 3) + " ms";
        if (cr.limit_ms > 0) {
            timing += " (limit " + std::to_string(static_cast<int>(cr.limit_ms)) + " ms)";
            c.expect(ms < cr.limit_ms, "over time limit");
        }
        const bool ok = c.failures == 0;
        failed += !ok;
        std::printf("[%s] %d %s; tolerance exact; %s; %s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, timing.c_str(),
                    c.note.c_str());
        if (!ok) std::printf("       %d failure(s), first: %s\n", c.failures, c.first.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
