#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "qmaze/autodiff/adamw.hpp"
#include "qmaze/autodiff/graph.hpp"
#include "qmaze/quantum/sampler_qnn.hpp"
#include "support/finite_diff.hpp"

using namespace qmaze::autodiff;

namespace {

TensorPtr random_param(std::vector<int> shape, std::mt19937_64& rng, double spread = 1.0) {
    std::uniform_real_distribution<double> unif(-spread, spread);
    auto t = make_tensor(std::move(shape), true);
    for (auto& v : t->values) v = unif(rng);
    return t;
}

// Max relative mismatch between analytic and finite-difference gradients of a
// scalar-valued graph over every listed parameter.
double max_grad_mismatch(const std::function<double()>& loss_value,
                         const std::function<Var()>& build,
                         const std::vector<TensorPtr>& params, double h) {
    zero_grad(params);
    backward(build());
    double worst = 0.0;
    for (const auto& p : params) {
        for (std::size_t i = 0; i < p->values.size(); ++i) {
            const double keep = p->values[i];
            p->values[i] = keep + h;
            const double plus = loss_value();
            p->values[i] = keep - h;
            const double minus = loss_value();
            p->values[i] = keep;
            const double fd = (plus - minus) / (2.0 * h);
            const double denom = std::max({1.0, std::abs(fd), std::abs(p->grad[i])});
            worst = std::max(worst, std::abs(p->grad[i] - fd) / denom);
        }
    }
    return worst;
}

} // namespace

TEST_CASE("conv2d forward on a constant field") {
    auto input = make_tensor({1, 4, 4}, std::vector<double>(16, 1.0));
    auto weight = make_tensor({1, 1, 2, 2}, std::vector<double>(4, 1.0));
    auto bias = make_tensor({1}, std::vector<double>{0.0});
    const Var out = conv2d(leaf(input), leaf(weight), leaf(bias));
    CHECK(out.shape() == std::vector<int>{1, 3, 3});
    for (double v : out.value().values) CHECK(v == doctest::Approx(4.0));
}

TEST_CASE("conv2d parameter tensors carry the advertised counts") {
    auto weight = make_tensor({16, 1, 2, 2});
    auto bias = make_tensor({16});
    CHECK(weight->size() + bias->size() == 80);

    auto w5 = make_tensor({2, 128});
    auto b5 = make_tensor({2});
    CHECK(w5->size() + b5->size() == 258);

    auto w7 = make_tensor({4, 4});
    auto b7 = make_tensor({4});
    CHECK(w7->size() + b7->size() == 20);
}

TEST_CASE("conv2d shape errors") {
    auto input = make_tensor({1, 4, 4});
    auto bias = make_tensor({1});
    CHECK_THROWS_AS(conv2d(leaf(input), leaf(make_tensor({1, 2, 2, 2})), leaf(bias)),
                    std::invalid_argument);
    CHECK_THROWS_AS(conv2d(leaf(input), leaf(make_tensor({1, 1, 5, 5})), leaf(bias)),
                    std::invalid_argument);
}

TEST_CASE("conv2d backward matches finite differences") {
    std::mt19937_64 rng(1);
    auto input = random_param({1, 4, 4}, rng);
    auto weight = random_param({2, 1, 2, 2}, rng);
    auto bias = random_param({2}, rng);
    auto target = make_tensor({18}, std::vector<double>(18, 0.25));

    auto build = [&] {
        return mse_loss(flatten(conv2d(leaf(input), leaf(weight), leaf(bias))),
                        constant(*target));
    };
    auto value = [&] { return build().value().values[0]; };
    CHECK(max_grad_mismatch(value, build, {input, weight, bias}, 1e-4) < 1e-5);
}

TEST_CASE("relu") {
    auto x = make_tensor({3}, {-1.0, 0.0, 2.0}, true);
    const Var out = relu(leaf(x));
    CHECK(out.value().values == std::vector<double>{0.0, 0.0, 2.0});

    SUBCASE("gradient masks by x > 0, exactly 0 at 0") {
        backward(mse_loss(out, constant(Tensor({3}, {-10.0, -10.0, -10.0}))));
        // dL/dout = 2(out - t)/3 = (20/3, 20/3, 8); masked to (0, 0, 8)
        CHECK(x->grad[0] == 0.0);
        CHECK(x->grad[1] == 0.0);
        CHECK(x->grad[2] == doctest::Approx(8.0));
    }
    SUBCASE("idempotence") {
        const Var twice = relu(relu(leaf(x)));
        CHECK(twice.value().values == out.value().values);
    }
}

TEST_CASE("linear") {
    SUBCASE("identity weight, zero bias") {
        auto x = make_tensor({3}, {1.0, -2.0, 3.0});
        auto w = make_tensor({3, 3}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
        auto b = make_tensor({3});
        CHECK(linear(leaf(x), leaf(w), leaf(b)).value().values == x->values);
    }
    SUBCASE("backward matches finite differences") {
        std::mt19937_64 rng(2);
        auto x = random_param({5}, rng);
        auto w = random_param({3, 5}, rng);
        auto b = random_param({3}, rng);
        auto build = [&] {
            return mse_loss(linear(leaf(x), leaf(w), leaf(b)),
                            constant(Tensor({3}, {0.1, -0.2, 0.3})));
        };
        auto value = [&] { return build().value().values[0]; };
        CHECK(max_grad_mismatch(value, build, {x, w, b}, 1e-4) < 1e-5);
    }
    SUBCASE("shape mismatch") {
        auto x = make_tensor({4});
        auto w = make_tensor({3, 5});
        auto b = make_tensor({3});
        CHECK_THROWS_AS(linear(leaf(x), leaf(w), leaf(b)), std::invalid_argument);
    }
}

TEST_CASE("flatten is a row-major reshape and passes gradients through") {
    auto x = make_tensor({1, 2, 2}, {1.0, 2.0, 3.0, 4.0}, true);
    const Var out = flatten(leaf(x));
    CHECK(out.shape() == std::vector<int>{4});
    CHECK(out.value().values == std::vector<double>{1.0, 2.0, 3.0, 4.0});

    backward(mse_loss(out, constant(Tensor({4}, {0.0, 0.0, 0.0, 0.0}))));
    for (int i = 0; i < 4; ++i)
        CHECK(x->grad[i] == doctest::Approx(2.0 * x->values[i] / 4.0));
}

TEST_CASE("gather and stack") {
    auto x = make_tensor({3}, {5.0, 7.0, 9.0}, true);
    const Var g1 = gather(leaf(x), 1);
    CHECK(g1.value().values[0] == 7.0);
    CHECK_THROWS_AS(gather(leaf(x), 3), std::out_of_range);

    const Var s = stack({gather(leaf(x), 2), gather(leaf(x), 0)});
    CHECK(s.value().values == std::vector<double>{9.0, 5.0});

    backward(mse_loss(s, constant(Tensor({2}, {0.0, 0.0}))));
    CHECK(x->grad[0] == doctest::Approx(5.0));
    CHECK(x->grad[1] == 0.0);
    CHECK(x->grad[2] == doctest::Approx(9.0));
}

TEST_CASE("mse loss") {
    auto p = make_tensor({2}, {1.0, 0.0}, true);
    const Tensor target({2}, {0.0, 0.0});

    SUBCASE("zero at an exact match") {
        CHECK(mse_loss(constant(target), constant(target)).value().values[0] == 0.0);
    }
    SUBCASE("hand value and hand gradient") {
        const Var loss = mse_loss(leaf(p), constant(target));
        CHECK(loss.value().values[0] == doctest::Approx(0.5));
        backward(loss);
        CHECK(p->grad[0] == doctest::Approx(1.0));
        CHECK(p->grad[1] == doctest::Approx(0.0));
    }
    SUBCASE("gradient-carrying targets are rejected") {
        auto t = make_tensor({2}, {0.0, 0.0}, true);
        CHECK_THROWS_AS(mse_loss(leaf(p), leaf(t)), std::invalid_argument);
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(mse_loss(leaf(p), constant(Tensor({3}))), std::invalid_argument);
    }
}

TEST_CASE("backward requires a scalar root and accumulates across calls") {
    auto x = make_tensor({2}, {1.0, 2.0}, true);
    const Var vec = leaf(x);
    CHECK_THROWS_AS(backward(vec), std::invalid_argument);

    const Var loss = mse_loss(vec, constant(Tensor({2}, {0.0, 0.0})));
    backward(loss);
    const auto once = x->grad;
    backward(loss);
    for (int i = 0; i < 2; ++i) CHECK(x->grad[i] == 2.0 * once[i]);

    zero_grad({x});
    CHECK(x->grad == std::vector<double>{0.0, 0.0});
}

TEST_CASE("quantum layer backward matches finite differences") {
    auto qnn = std::make_shared<const qmaze::quantum::SamplerQnn>(
        qmaze::quantum::SamplerQnn::make_default());
    std::mt19937_64 rng(3);
    auto x = random_param({2}, rng, 1.5);
    auto w = random_param({4}, rng, 1.5);
    const Tensor target({4}, {0.7, 0.1, 0.1, 0.1});

    auto build = [&] { return mse_loss(quantum_layer(leaf(x), leaf(w), qnn), constant(target)); };
    auto value = [&] { return build().value().values[0]; };
    CHECK(max_grad_mismatch(value, build, {x, w}, 1e-5) < 1e-6);

    SUBCASE("zeros forward to the uniform distribution") {
        auto x0 = make_tensor({2}, {0.0, 0.0});
        auto w0 = make_tensor({4}, {0.0, 0.0, 0.0, 0.0});
        const Var out = quantum_layer(leaf(x0), leaf(w0), qnn);
        for (double v : out.value().values) CHECK(v == doctest::Approx(0.25).epsilon(1e-10));
    }
    SUBCASE("arity mismatch") {
        auto bad = make_tensor({3});
        CHECK_THROWS_AS(quantum_layer(leaf(bad), leaf(w), qnn), std::invalid_argument);
    }
}

TEST_CASE("adamw") {
    SUBCASE("first step with unit gradient moves by about -lr") {
        auto p = make_tensor({1}, {0.0}, true);
        AdamWConfig cfg;
        cfg.weight_decay = 0.0;
        AdamW opt({p}, cfg);
        p->ensure_grad();
        p->grad[0] = 1.0;
        opt.step();
        CHECK(p->values[0] == doctest::Approx(-0.001).epsilon(1e-6));
        CHECK(opt.step_count() == 1);
    }
    SUBCASE("zero gradient and zero decay leave the parameter unchanged") {
        auto p = make_tensor({1}, {0.7}, true);
        AdamWConfig cfg;
        cfg.weight_decay = 0.0;
        AdamW opt({p}, cfg);
        p->zero_grad();
        opt.step();
        CHECK(p->values[0] == 0.7);
    }
    SUBCASE("decoupled decay shrinks the parameter even without gradient") {
        auto p = make_tensor({1}, {1.0}, true);
        AdamWConfig cfg;
        cfg.lr = 0.001;
        cfg.weight_decay = 0.01;
        AdamW opt({p}, cfg);
        p->zero_grad();
        opt.step();
        CHECK(p->values[0] == doctest::Approx(1.0 - 1e-5).epsilon(1e-12));
    }
    SUBCASE("missing gradient is a contract error") {
        auto p = make_tensor({1}, {0.0}, true);
        AdamW opt({p});
        CHECK_THROWS_AS(opt.step(), std::logic_error);
    }
}

TEST_CASE("identical seeds give bitwise-identical forwards and gradients") {
    auto run = [](std::vector<double>& grads_out) {
        std::mt19937_64 rng(99);
        auto x = random_param({1, 3, 3}, rng);
        auto w = random_param({2, 1, 2, 2}, rng);
        auto b = random_param({2}, rng);
        auto build = [&] {
            return mse_loss(flatten(relu(conv2d(leaf(x), leaf(w), leaf(b)))),
                            constant(Tensor({8}, std::vector<double>(8, 0.1))));
        };
        const Var loss = build();
        backward(loss);
        grads_out = w->grad;
        return loss.value().values[0];
    };
    std::vector<double> g1, g2;
    const double v1 = run(g1);
    const double v2 = run(g2);
    CHECK(std::memcmp(&v1, &v2, sizeof v1) == 0);
    REQUIRE(g1.size() == g2.size());
    CHECK(std::memcmp(g1.data(), g2.data(), g1.size() * sizeof(double)) == 0);
}
