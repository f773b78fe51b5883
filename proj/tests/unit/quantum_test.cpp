#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmaze/quantum/circuit.hpp"
#include "qmaze/quantum/sampler_qnn.hpp"
#include "qmaze/quantum/state_vector.hpp"
#include "support/dense_oracle.hpp"
#include "support/finite_diff.hpp"

using namespace qmaze::quantum;
constexpr double pi = std::numbers::pi;

TEST_CASE("hadamard on |0> gives the equal superposition") {
    const auto s = apply_gate(StateVector::zero_state(1), Gate::h(0));
    CHECK(s.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s.amplitudes[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("RY(pi) flips |0> to |1>") {
    const auto s = apply_gate(StateVector::zero_state(1), Gate::ry(0, pi));
    CHECK(std::abs(s.amplitudes[0]) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.amplitudes[1].real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("CX truth table: control qubit 0 set flips qubit 1") {
    // basis index 1 = qubit0 set, qubit1 clear
    const auto s = apply_gate(StateVector::basis_state(2, 1), Gate::cx(0, 1));
    CHECK(std::abs(s.amplitudes[3]) == doctest::Approx(1.0).epsilon(1e-15));
    for (int k : {0, 1, 2}) CHECK(std::abs(s.amplitudes[k]) == doctest::Approx(0.0));
}

TEST_CASE("gate targets outside the register are rejected") {
    auto s = StateVector::zero_state(2);
    CHECK_THROWS_AS(apply_gate(s, Gate::h(2)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, Gate::cx(0, 2)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, Gate::cx(1, 1)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, Gate::ry(0, std::nan(""))), std::invalid_argument);
}

namespace {

Gate random_gate(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> qubit(0, 1);
    std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
    switch (kind(rng)) {
        case 0: return Gate::h(qubit(rng));
        case 1: return Gate::x(qubit(rng));
        case 2: return Gate::ry(qubit(rng), angle(rng));
        case 3: return Gate::rz(qubit(rng), angle(rng));
        case 4: return Gate::p(qubit(rng), angle(rng));
        default: {
            const int c = qubit(rng);
            return Gate::cx(c, 1 - c);
        }
    }
}

} // namespace

TEST_CASE("random 2-qubit circuits match the dense-matrix oracle and stay normalized") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> length(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Gate> gates;
        const int len = length(rng);
        for (int i = 0; i < len; ++i) gates.push_back(random_gate(rng));

        StateVector s = StateVector::zero_state(2);
        for (const auto& g : gates) apply_gate_in_place(s, g);
        const auto ref = oracle::run_circuit(2, gates);

        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(s.amplitudes[k] - ref[k]) < 1e-12);
    }
}

TEST_CASE("every single gate kind agrees with the oracle on random states") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        StateVector s;
        s.n_qubits = 2;
        s.amplitudes.resize(4);
        double norm2 = 0.0;
        for (auto& a : s.amplitudes) {
            a = {gauss(rng), gauss(rng)};
            norm2 += std::norm(a);
        }
        for (auto& a : s.amplitudes) a /= std::sqrt(norm2);

        const Gate g = random_gate(rng);
        const auto got = apply_gate(s, g);
        const auto ref = oracle::apply(oracle::gate_matrix(g, 2), s.amplitudes);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(got.amplitudes[k] - ref[k]) < 1e-12);
    }
}

TEST_CASE("z feature map structure") {
    SUBCASE("two qubits, two repetitions") {
        const auto c = build_z_feature_map(2, 2);
        CHECK(c.input_slots() == 2);
        CHECK(c.weight_slots() == 0);
        int h = 0, p = 0;
        for (const auto& g : c.gates()) {
            if (g.kind == GateKind::H) ++h;
            if (g.kind == GateKind::P) {
                ++p;
                CHECK(g.binding == Binding::Input);
                CHECK(g.scale == 2.0);
            }
        }
        CHECK(h == 4);
        CHECK(p == 4);
    }
    SUBCASE("minimal instance is H then P(2x)") {
        const auto c = build_z_feature_map(1, 1);
        REQUIRE(c.gates().size() == 2);
        CHECK(c.gates()[0].kind == GateKind::H);
        CHECK(c.gates()[1].kind == GateKind::P);
        CHECK(c.gates()[1].slot == 0);
    }
    SUBCASE("zero input, one repetition: uniform 1/2 amplitudes") {
        const auto c = build_z_feature_map(2, 1);
        const double x[2] = {0.0, 0.0};
        const auto s = c.evaluate(std::span(x, 2), {});
        const auto ref = oracle::run_circuit(2, c.bind(std::span(x, 2), {}));
        for (int k = 0; k < 4; ++k) {
            CHECK(s.amplitudes[k].real() == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(std::abs(s.amplitudes[k] - ref[k]) < 1e-12);
        }
    }
    SUBCASE("zero input, two repetitions: the H layers cancel back to |00>") {
        const auto c = build_z_feature_map(2, 2);
        const double x[2] = {0.0, 0.0};
        const auto s = c.evaluate(std::span(x, 2), {});
        CHECK(std::abs(s.amplitudes[0] - cplx{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("real-amplitudes ansatz structure") {
    SUBCASE("two qubits, one rep, no entanglement: 4 RY, 4 slots, no CX") {
        const auto c = build_real_amplitudes(2, 1, false);
        CHECK(c.weight_slots() == 4);
        CHECK(c.input_slots() == 0);
        CHECK(c.gates().size() == 4);
        for (const auto& g : c.gates()) CHECK(g.kind == GateKind::RY);
        // layer-major slot order
        CHECK(c.gates()[0].target == 0);
        CHECK(c.gates()[0].slot == 0);
        CHECK(c.gates()[1].target == 1);
        CHECK(c.gates()[1].slot == 1);
        CHECK(c.gates()[2].target == 0);
        CHECK(c.gates()[2].slot == 2);
        CHECK(c.gates()[3].target == 1);
        CHECK(c.gates()[3].slot == 3);
    }
    SUBCASE("entangled variant adds one CX layer") {
        const auto c = build_real_amplitudes(2, 1, true);
        CHECK(c.weight_slots() == 4);
        int cx = 0;
        for (const auto& g : c.gates())
            if (g.kind == GateKind::CX) ++cx;
        CHECK(cx == 1);
    }
    SUBCASE("all-zero weights leave the feature-map distribution unchanged") {
        auto fm = build_z_feature_map(2, 1);
        auto full = fm;
        full.append(build_real_amplitudes(2, 1, false));
        const double x[2] = {0.0, 0.0};
        const double w[4] = {0.0, 0.0, 0.0, 0.0};
        const auto p_fm = fm.evaluate(std::span(x, 2), {}).probabilities();
        const auto p_full = full.evaluate(std::span(x, 2), std::span(w, 4)).probabilities();
        for (int k = 0; k < 4; ++k) CHECK(p_full[k] == doctest::Approx(p_fm[k]).epsilon(1e-12));
    }
}

TEST_CASE("circuit slot-coverage invariant") {
    ParameterizedCircuit c(2, {GateTemplate{GateKind::RY, 0, -1, Binding::Weight, 1, 1.0, 0.0}},
                           0, 2);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // slot 0 unused
}

TEST_CASE("circuit dump golden") {
    const auto qnn = SamplerQnn::make_default(2, 1, 1, false);
    CHECK(qnn.circuit().dump() ==
          "H 0\n"
          "H 1\n"
          "P 0 x0*2\n"
          "P 1 x1*2\n"
          "RY 0 t0\n"
          "RY 1 t1\n"
          "RY 0 t2\n"
          "RY 1 t3\n");
}

TEST_CASE("qnn forward") {
    const auto qnn = SamplerQnn::make_default();

    SUBCASE("zeros give the uniform distribution") {
        const std::vector<double> x{0.0, 0.0}, w{0.0, 0.0, 0.0, 0.0};
        const auto p = qnn.forward(x, w);
        REQUIRE(p.size() == 4);
        for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-10));
    }
    SUBCASE("frozen case: RY(pi/2) on qubit 0 empties the even indices") {
        const std::vector<double> x{0.0, 0.0}, w{pi / 2.0, 0.0, 0.0, 0.0};
        const auto p = qnn.forward(x, w);
        CHECK(p[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p[2] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(p[3] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("theta (pi,0,pi,0) matches the dense oracle") {
        const std::vector<double> x{0.0, 0.0}, w{pi, 0.0, pi, 0.0};
        const auto p = qnn.forward(x, w);
        const auto ref = oracle::probabilities(
            oracle::run_circuit(2, qnn.circuit().bind(x, w)));
        for (int k = 0; k < 4; ++k) CHECK(p[k] == doctest::Approx(ref[k]).epsilon(1e-12));
        // RY(pi) twice on qubit 0 is RY(2pi) = -I: probabilities stay uniform
        for (int k = 0; k < 4; ++k) CHECK(p[k] == doctest::Approx(0.25).epsilon(1e-10));
    }
    SUBCASE("outputs are a probability vector for random parameters") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> unif(-pi, pi);
        for (int trial = 0; trial < 100; ++trial) {
            const std::vector<double> x{unif(rng), unif(rng)};
            const std::vector<double> w{unif(rng), unif(rng), unif(rng), unif(rng)};
            const auto p = qnn.forward(x, w);
            double sum = 0.0;
            for (double v : p) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    SUBCASE("wrong arity is rejected") {
        const std::vector<double> x{0.0}, w{0.0, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(qnn.forward(x, w), std::invalid_argument);
    }
}

TEST_CASE("parameter-shift jacobians") {
    const auto qnn = SamplerQnn::make_default();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(-pi, pi);

    SUBCASE("match central finite differences on 20 random draws") {
        for (int trial = 0; trial < 20; ++trial) {
            const std::vector<double> x{unif(rng), unif(rng)};
            const std::vector<double> w{unif(rng), unif(rng), unif(rng), unif(rng)};
            const auto jac = qnn.parameter_shift_jacobians(x, w);

            const auto fd_x = oracle::fd_jacobian(
                [&](const std::vector<double>& xv) { return qnn.forward(xv, w); }, x, 1e-5, 4);
            const auto fd_w = oracle::fd_jacobian(
                [&](const std::vector<double>& wv) { return qnn.forward(x, wv); }, w, 1e-5, 4);
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 2; ++c)
                    CHECK(std::abs(jac.d_inputs.at(r, c) - fd_x[r * 2 + c]) < 1e-6);
                for (int c = 0; c < 4; ++c)
                    CHECK(std::abs(jac.d_weights.at(r, c) - fd_w[r * 4 + c]) < 1e-6);
            }
        }
    }
    SUBCASE("columns sum to zero (probabilities sum to a constant)") {
        const std::vector<double> x{0.4, -1.2};
        const std::vector<double> w{0.3, 0.7, -0.2, 1.1};
        const auto jac = qnn.parameter_shift_jacobians(x, w);
        for (int c = 0; c < jac.d_inputs.cols; ++c) {
            double s = 0.0;
            for (int r = 0; r < jac.d_inputs.rows; ++r) s += jac.d_inputs.at(r, c);
            CHECK(std::abs(s) < 1e-10);
        }
        for (int c = 0; c < jac.d_weights.cols; ++c) {
            double s = 0.0;
            for (int r = 0; r < jac.d_weights.rows; ++r) s += jac.d_weights.at(r, c);
            CHECK(std::abs(s) < 1e-10);
        }
    }
    SUBCASE("slot with RY(0) in the last layer: shifted distributions match the oracle") {
        const std::vector<double> x{0.5, -0.3};
        const std::vector<double> w{0.9, -0.4, 0.0, 0.2};  // slot 2 = last layer, qubit 0
        const auto jac = qnn.parameter_shift_jacobians(x, w);

        auto w_plus = w, w_minus = w;
        w_plus[2] += pi / 2.0;
        w_minus[2] -= pi / 2.0;
        const auto p_plus = oracle::probabilities(
            oracle::run_circuit(2, qnn.circuit().bind(x, w_plus)));
        const auto p_minus = oracle::probabilities(
            oracle::run_circuit(2, qnn.circuit().bind(x, w_minus)));
        for (int r = 0; r < 4; ++r)
            CHECK(jac.d_weights.at(r, 2) ==
                  doctest::Approx(0.5 * (p_plus[r] - p_minus[r])).epsilon(1e-12));
    }
    SUBCASE("bound non-rotation gates are rejected") {
        ParameterizedCircuit c(2,
                               {GateTemplate{GateKind::H, 0, -1, Binding::Weight, 0, 1.0, 0.0}},
                               0, 1);
        const SamplerQnn bad(std::move(c));
        CHECK_THROWS_AS(bad.parameter_shift_jacobians({}, std::vector<double>{0.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("shot sampling") {
    const auto qnn = SamplerQnn::make_default();
    const std::vector<double> zeros2{0.0, 0.0}, zeros4{0.0, 0.0, 0.0, 0.0};

    SUBCASE("counts sum to shots and repeat under the same seed") {
        const auto a = qnn.sample_counts(zeros2, zeros4, 4000, 123);
        const auto b = qnn.sample_counts(zeros2, zeros4, 4000, 123);
        CHECK(a == b);
        std::int64_t total = 0;
        for (auto c : a) total += c;
        CHECK(total == 4000);
        // uniform distribution: each count should land near 1000
        for (auto c : a) WARN(((c >= 800) && (c <= 1200)));
    }
    SUBCASE("degenerate distribution puts every shot on one index") {
        // RY(pi) on both qubits maps |00> to |11> deterministically
        ParameterizedCircuit c(2);
        c.add_bound(GateKind::RY, 0, Binding::Weight, 0);
        c.add_bound(GateKind::RY, 1, Binding::Weight, 1);
        const SamplerQnn flip(std::move(c));
        const std::vector<double> w{pi, pi};
        const auto counts = flip.sample_counts({}, w, 10, 5);
        CHECK(counts[3] == 10);
        CHECK(counts[0] == 0);
    }
    SUBCASE("shots must be positive") {
        CHECK_THROWS_AS(qnn.sample_counts(zeros2, zeros4, 0, 1), std::invalid_argument);
    }
}
