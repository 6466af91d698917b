#include "parityflow/combined.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "parityflow/serialize.hpp"
#include "testutil.hpp"

using namespace parityflow;

namespace {

PauliVec P(unsigned k, const char* x, const char* z) { return PauliVec::from_bits(k, x, z); }

void expect_coherent(const CombinedTableau& ct) {
    auto inv = invert(ct.flow());
    for (std::size_t j = 0; j < ct.n(); ++j) {
        EXPECT_EQ(ct.pushforward_generator(false, j), inv.x_row(j));
        EXPECT_EQ(ct.pushforward_generator(true, j), inv.z_row(j));
        EXPECT_EQ(ct.push_phase_x(j), inv.x_row(j).kappa);
        EXPECT_EQ(ct.push_phase_z(j), inv.z_row(j).kappa);
    }
}

}  // namespace

TEST(combined, fresh) {
    CombinedTableau ct(2);
    EXPECT_EQ(render_header(ct), "(++|++)");
    EXPECT_EQ(ct.flow(), Tableau::identity(2, Kind::Flow));
    expect_coherent(ct);
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(ct.pushforward_generator(false, j), PauliVec::x(2, j));
        EXPECT_EQ(ct.pushforward_generator(true, j), PauliVec::z(2, j));
    }
}

TEST(combined, heisenberg_pushforward_after_first_s) {
    CombinedTableau ct(2);
    for (auto g : {Gate::cnot(1, 0), Gate::h(0), Gate::cnot(1, 0), Gate::h(0), Gate::s(0)}) ct.apply(g);
    EXPECT_EQ(ct.pushforward_generator(false, 0), P(1, "10", "11"));
    EXPECT_EQ(render_header(ct), "(++|i i^3)");
}

TEST(combined, cnot_keeps_phases) {
    std::mt19937_64 rng(41);
    CombinedTableau ct(4);
    for (auto g : testutil::random_circuit(4, 30, rng)) ct.apply(g);
    auto before = ct.push_phases();
    ct.apply(Gate::cnot(2, 0));
    ct.apply(Gate::cnot(1, 3));
    EXPECT_EQ(ct.push_phases(), before);
}

TEST(combined, coherence_random) {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = 1 + rng() % 8;
        CombinedTableau ct(n);
        for (auto g : testutil::random_circuit(n, rng() % 80, rng)) {
            ct.apply(g);
            expect_coherent(ct);
            if (HasFailure()) return;
        }
    }
}

TEST(combined, pushforward_general_matches_invert_and_oracle) {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = 1 + rng() % 3;
        auto gates = testutil::random_circuit(n, rng() % 25, rng);
        CombinedTableau ct(n);
        for (const auto& g : gates) ct.apply(g);
        auto inv = invert(ct.flow());
        for (int k = 0; k < 10; ++k) {
            auto p = testutil::random_pauli(n, rng);
            auto pushed = pushforward_general(ct, p);
            EXPECT_EQ(pushed, pushforward(inv, p));
            EXPECT_EQ(pullback(ct.flow(), pushed), p);
            EXPECT_EQ(oracle::pauli_matrix(pushed), oracle::conjugate_pushforward(oracle::pauli_matrix(p), gates, n));
        }
        for (unsigned k = 0; k < 4; ++k) EXPECT_EQ(pushforward_general(ct, PauliVec(n, k)), PauliVec(n, k));
    }
}

TEST(combined, header_symbols) {
    CombinedTableau ct(1);
    ct.apply(Gate::s(0));
    EXPECT_EQ(render_header(ct), "(+|i)");
    CombinedTableau z(1);
    z.apply(Gate::z(0));
    EXPECT_EQ(render_header(z), "(+|-)");
    z.apply(Gate::s(0));
    EXPECT_EQ(render_header(z), "(+|i^3)");
    CombinedTableau one(1);
    for (auto g : {Gate::h(0), Gate::s(0), Gate::s(0), Gate::h(0)}) one.apply(g);
    EXPECT_EQ(render_header(one), "(-|+)");
}

TEST(combined, json_round_trip) {
    std::mt19937_64 rng(53);
    CombinedTableau ct(5);
    for (auto g : testutil::random_circuit(5, 60, rng)) ct.apply(g);
    auto s = combined_to_json(ct);
    EXPECT_EQ(combined_from_json(s), ct);
    EXPECT_NE(s.find("\"push_phases\""), std::string::npos);
}
