#include <cmath>
#include <random>

#include "doctest.h"
#include "qcorr/discord.hpp"
#include "test_support.hpp"

using namespace qcorr;

TEST_CASE("entropy_shift: anchors, parity, monotonicity") {
    CHECK(entropy_shift(0.0) == 0.0);
    CHECK(entropy_shift(1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(entropy_shift(-1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(entropy_shift(0.5) == doctest::Approx(-0.18872187554086717).epsilon(1e-14));

    for (int i = 0; i <= 50; ++i) {
        const double t = i / 50.0;
        CHECK(entropy_shift(t) == entropy_shift(-t));  // even by construction
        if (i > 0) CHECK(entropy_shift(t) < entropy_shift(t - 0.02) + 1e-15);
    }
    CHECK_THROWS_AS(entropy_shift(1.0 + 1e-9), validation_error);
    CHECK_NOTHROW(entropy_shift(1.0 + 1e-13));  // inside the fp slack
}

TEST_CASE("branch_entropies: Bell-diagonal reduction and anchors") {
    // frozen from an independent evaluation of the displayed formulas
    const auto bd = branch_entropies({0, 0, 0.1, 0.4, 0.2});
    CHECK(bd[0] == doctest::Approx(0.97095059445466858).epsilon(1e-14));  // 1 + f(c3)
    CHECK(bd[1] == doctest::Approx(0.99277445398780817).epsilon(1e-14));  // 1 + f(c1)
    CHECK(bd[2] == doctest::Approx(0.8812908992306927).epsilon(1e-14));   // 1 + f(c2)

    const auto mixed = branch_entropies({0, 0, 0, 0, 0});
    CHECK(mixed[0] == 1.0);
    CHECK(mixed[1] == 1.0);
    CHECK(mixed[2] == 1.0);

    // amplitude-evolved (0.1, 0.4, 0.5) at eta = 0.73 sits at the crossing
    const double eta = 0.73;
    const auto near_cross =
        branch_entropies({eta * eta - 1.0, 0.0, eta * 0.1, eta * 0.4, eta * eta * 0.5});
    CHECK(std::abs(near_cross[0] - near_cross[2]) < 1e-3);
    CHECK(near_cross[0] == doctest::Approx(0.76848852489165842).epsilon(1e-13));
    CHECK(near_cross[2] == doctest::Approx(0.7684250945485348).epsilon(1e-13));
}

TEST_CASE("branch_entropies reduce to the amplitude-noise specialization at s = 0") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> eta_dist(0.05, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const BellDiagonalParams bd = testsupport::random_bell_diagonal(rng);
        const double eta = eta_dist(rng);
        const double r = eta * eta - 1.0;
        const XStateParams evolved{r, 0.0, eta * bd.c1, eta * bd.c2, eta * eta * bd.c3};
        const auto s = branch_entropies(evolved);

        const double s1 = 1.0 + 0.5 * entropy_shift(r + eta * eta * bd.c3) +
                          0.5 * entropy_shift(r - eta * eta * bd.c3);
        const double s2 = 1.0 + entropy_shift(std::sqrt(r * r + eta * eta * bd.c1 * bd.c1));
        const double s3 = 1.0 + entropy_shift(std::sqrt(r * r + eta * eta * bd.c2 * bd.c2));
        CHECK(std::abs(s[0] - s1) < 5e-15);
        CHECK(std::abs(s[1] - s2) < 5e-15);
        CHECK(std::abs(s[2] - s3) < 5e-15);
    }
}

TEST_CASE("branch_entropies handles the |s| = 1 degeneracy by dropping the dead outcome") {
    // physical at s = 1 (product of |0><0| with a mixed qubit keeps c's at 0)
    const auto s = branch_entropies({0, 1, 0, 0, 0});
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("correlations: pure Bell, product, and generic Bell-diagonal") {
    const CorrelationBreakdown bell = correlations({0, 0, 1, -1, 1});
    CHECK(bell.mutual_info == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(bell.classical == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bell.discord == doctest::Approx(1.0).epsilon(1e-14));

    const CorrelationBreakdown mixed = correlations({0, 0, 0, 0, 0});
    CHECK(mixed.mutual_info == 0.0);
    CHECK(mixed.classical == 0.0);
    CHECK(mixed.discord == 0.0);

    // frozen independent evaluation for c = (0.1, 0.4, 0.2)
    const CorrelationBreakdown generic = correlations({0, 0, 0.1, 0.4, 0.2});
    CHECK(generic.mutual_info == doctest::Approx(0.17790409974029386).epsilon(1e-13));
    CHECK(generic.classical == doctest::Approx(0.1187091007693073).epsilon(1e-13));
    CHECK(generic.discord == doctest::Approx(0.059194998970986568).epsilon(1e-13));
    CHECK(generic.argmin_branch == Branch::s3);  // c2 dominates
}

TEST_CASE("correlations invariants on random physical states") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const XStateParams p = testsupport::random_x_state(rng);
        const CorrelationBreakdown cb = correlations(p);
        CHECK(cb.discord == doctest::Approx(cb.mutual_info - cb.classical).epsilon(1e-12));
        CHECK(cb.classical >= 0.0);
        CHECK(cb.discord >= 0.0);
        CHECK(cb.mutual_info >= std::max(cb.classical, cb.discord) - 1e-10);
        const double smin = cb.branch_min();
        CHECK(smin == doctest::Approx(std::min({cb.s1, cb.s2, cb.s3})).epsilon(1e-15));
        if (cb.argmin_branch == Branch::s1) CHECK(cb.s1 == smin);
        if (cb.argmin_branch == Branch::s2) CHECK(cb.s2 == smin);
        if (cb.argmin_branch == Branch::s3) CHECK(cb.s3 == smin);
    }
}

TEST_CASE("classical correlation of Bell-diagonal states is -f(max |c_i|)") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const BellDiagonalParams bd = testsupport::random_bell_diagonal(rng);
        const CorrelationBreakdown cb = correlations(bd);
        const double c = std::max({std::abs(bd.c1), std::abs(bd.c2), std::abs(bd.c3)});
        CHECK(cb.classical == doctest::Approx(-entropy_shift(c)).epsilon(1e-12));
    }
}

TEST_CASE("pure Bell states: discord equals the entanglement entropy of one bit") {
    for (const XStateParams p :
         {XStateParams{0, 0, 1, -1, 1}, XStateParams{0, 0, -1, 1, 1}, XStateParams{0, 0, 1, 1, -1},
          XStateParams{0, 0, -1, -1, -1}}) {
        const CorrelationBreakdown cb = correlations(p);
        CHECK(cb.discord == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cb.classical == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ordering lemma: S3 vs S2 follows c2 vs c1 for amplitude-evolved states") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> eta_dist(0.02, 0.999);
    for (int trial = 0; trial < 200; ++trial) {
        const BellDiagonalParams bd = testsupport::random_bell_diagonal(rng, /*nonnegative=*/true);
        if (std::abs(bd.c1 - bd.c2) < 1e-6) continue;
        for (int k = 0; k < 20; ++k) {
            const double eta = eta_dist(rng);
            const auto s = branch_entropies(
                {eta * eta - 1.0, 0.0, eta * bd.c1, eta * bd.c2, eta * eta * bd.c3});
            if (bd.c2 > bd.c1) CHECK(s[2] < s[1]);
            else CHECK(s[1] < s[2]);
        }
    }
}

TEST_CASE("no-switch lemma: c2 >= c3 keeps S3 below S1 for all eta") {
    // S2 may undercut both when c1 > c2; the lemma constrains S3 against S1,
    // which is what rules out a transfer of the minimum to S1
    std::mt19937 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const BellDiagonalParams bd = testsupport::random_bell_diagonal(rng, /*nonnegative=*/true);
        if (bd.c2 < bd.c3) continue;
        for (int k = 1; k <= 40; ++k) {
            const double eta = k / 40.0;
            const auto s = branch_entropies(
                {eta * eta - 1.0, 0.0, eta * bd.c1, eta * bd.c2, eta * eta * bd.c3});
            CHECK(s[2] <= s[0] + 1e-12);
            if (bd.c2 >= bd.c1) CHECK(s[2] <= std::min(s[0], s[1]) + 1e-12);
        }
    }
}

TEST_CASE("phase_noise_correlations: specialization matches the generic pipeline") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> time_dist(0.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const BellDiagonalParams bd = testsupport::random_bell_diagonal(rng);
        const ChannelAtTime ch(NoiseKind::phase, 1.0, time_dist(rng));
        const CorrelationBreakdown fast = phase_noise_correlations(bd, ch);
        const CorrelationBreakdown generic = correlations(evolve_params(bd, ch));
        CHECK(std::abs(fast.mutual_info - generic.mutual_info) < 1e-12);
        CHECK(std::abs(fast.classical - generic.classical) < 1e-12);
        CHECK(std::abs(fast.discord - generic.discord) < 1e-12);
        CHECK(fast.argmin_branch == generic.argmin_branch);
    }

    // gamma = 1 reproduces the input state's correlations
    const BellDiagonalParams bd{0.1, 0.4, 0.2};
    const CorrelationBreakdown at_zero = phase_noise_correlations(bd, {NoiseKind::phase, 1.0, 0.0});
    const CorrelationBreakdown direct = correlations(bd);
    CHECK(at_zero.discord == doctest::Approx(direct.discord).epsilon(1e-14));

    CHECK_THROWS_AS(phase_noise_correlations(bd, {NoiseKind::amplitude, 1.0, 0.5}),
                    validation_error);
}

TEST_CASE("phase noise: classical correlation pinned by c3 when it dominates") {
    const BellDiagonalParams bd{0.1, 0.2, 0.3};
    const double expected = -entropy_shift(0.3);
    for (int i = 0; i <= 30; ++i) {
        const CorrelationBreakdown cb =
            phase_noise_correlations(bd, {NoiseKind::phase, 1.0, 0.1 * i});
        CHECK(std::abs(cb.classical - expected) < 1e-15);
    }
}

TEST_CASE("phase noise: chi branch switch kinks the classical correlation") {
    const BellDiagonalParams bd{0.1, 0.4, 0.2};
    // gamma above c3/c2 = 0.5: the gamma c2 branch rules; below: constant c3
    const double t_star = 2.0 * std::log(2.0);
    const CorrelationBreakdown before =
        phase_noise_correlations(bd, {NoiseKind::phase, 1.0, 0.9 * t_star});
    const CorrelationBreakdown after =
        phase_noise_correlations(bd, {NoiseKind::phase, 1.0, 1.1 * t_star});
    CHECK(before.argmin_branch == Branch::s3);
    CHECK(after.argmin_branch == Branch::s1);
    CHECK(std::abs(after.classical - (-entropy_shift(0.2))) < 1e-15);
}
