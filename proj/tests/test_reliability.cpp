#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awtc/reliability.hpp"
#include "awtc/rng.hpp"

using namespace awtc;

namespace {

// [7,4] Hamming generator; min distance 3, corrects any single flip.
LinearCode hamming74() {
    return LinearCode{7, 4, 0,
                      BitMatrix::from_strings({"1000110", "0100101", "0010011", "0001111"}),
                      BitMatrix(0, 7)};
}

}  // namespace

TEST_CASE("strategy names") {
    CHECK(AdversaryStrategy{AdversaryKind::None, 0, 0, 0}.name() == "none");
    CHECK(AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 1, 0, 0}.name() ==
          "oblivious-exhaustive");
    CHECK(AdversaryStrategy{AdversaryKind::ZAwareGreedy, 1, 2, 0}.name() == "z-aware-greedy");
    CHECK(AdversaryStrategy{AdversaryKind::Random, 1, 0, 0}.name() == "random");
}

TEST_CASE("noiseless channel decodes perfectly") {
    auto cb = materialize(hamming74());
    auto rep = error_prob(cb, AdversaryStrategy{AdversaryKind::None, 0, 0, 0}, 0, 1);
    CHECK(rep.max_error == 0.0);
    REQUIRE(rep.per_message_error.size() == 16);
    for (double e : rep.per_message_error) CHECK(e == 0.0);
}

TEST_CASE("Hamming code survives every single flip") {
    auto cb = materialize(hamming74());
    auto rep =
        error_prob(cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 1, 0, 0}, 0, 1);
    CHECK(rep.max_error == 0.0);
}

TEST_CASE("two flips defeat a distance-3 code under exhaustive attack") {
    auto cb = materialize(hamming74());
    auto rep =
        error_prob(cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 2, 0, 0}, 0, 1);
    CHECK(rep.max_error == 1.0);  // some flip pair always defeats min-distance decoding
}

TEST_CASE("repetition code threshold") {
    LinearCode rep5{5, 1, 0, BitMatrix::from_strings({"11111"}), BitMatrix(0, 5)};
    auto cb = materialize(rep5);
    auto ok = error_prob(cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 2, 0, 0}, 0, 1);
    CHECK(ok.max_error == 0.0);
    auto bad =
        error_prob(cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 3, 0, 0}, 0, 1);
    CHECK(bad.max_error == 1.0);
}

TEST_CASE("greedy z-aware attack is at most as strong as exhaustive") {
    auto rng = make_rng(101, "test-greedy", 0);
    for (int trial = 0; trial < 10; ++trial) {
        auto code = sample_pseudolinear(6, 2, 1, 2, 1000 + trial);
        auto cb = materialize(code);
        for (int pn : {1, 2}) {
            auto ex = error_prob(
                cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, pn, 0, 0}, 0, 1);
            auto gr = error_prob(
                cb, AdversaryStrategy{AdversaryKind::ZAwareGreedy, pn, 6, 5}, 0, 1);
            for (std::size_t m = 0; m < ex.per_message_error.size(); ++m)
                CHECK(gr.per_message_error[m] <= ex.per_message_error[m] + 1e-12);
        }
    }
    (void)rng;
}

TEST_CASE("random adversary respects the flip budget") {
    auto cb = materialize(hamming74());
    // budget 1 cannot break Hamming even at random
    auto rep = error_prob(cb, AdversaryStrategy{AdversaryKind::Random, 1, 0, 7}, 50, 3);
    CHECK(rep.max_error == 0.0);
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
    auto code = sample_pseudolinear(6, 2, 2, 2, 55);
    auto cb = materialize(code);
    AdversaryStrategy s{AdversaryKind::Random, 2, 0, 9};
    auto a = error_prob(cb, s, 30, 42);
    auto b = error_prob(cb, s, 30, 42);
    CHECK(a.to_csv() == b.to_csv());
    auto c = error_prob(cb, s, 30, 43);
    CHECK(a.to_csv() != c.to_csv());  // trial seed feeds the adversary
}

TEST_CASE("max_error is the max of per-message errors") {
    auto code = sample_pseudolinear(5, 2, 1, 2, 77);
    auto cb = materialize(code);
    auto rep =
        error_prob(cb, AdversaryStrategy{AdversaryKind::ObliviousExhaustive, 1, 0, 0}, 0, 1);
    double mx = 0;
    for (double e : rep.per_message_error) mx = std::max(mx, e);
    CHECK(rep.max_error == mx);
}

TEST_CASE("theorem2_experiment") {
    auto rep = theorem2_experiment(/*n=*/7, /*mbits=*/1, /*wbits=*/2, /*k=*/2, /*pn=*/0,
                                   /*rn=*/1, /*code_samples=*/8, /*trials=*/0, /*seed=*/3,
                                   /*leak_threshold=*/1.0, /*delta=*/0.6);
    REQUIRE(rep.samples.size() == 8);
    int joint = 0;
    for (const auto& s : rep.samples) {
        CHECK(s.leakage >= 0);
        CHECK(s.max_error >= 0);
        CHECK(s.max_error <= 1);
        if (s.leakage <= rep.leak_threshold && s.max_error <= rep.delta) ++joint;
    }
    CHECK(rep.joint_success_fraction == doctest::Approx(joint / 8.0));
    auto rep2 = theorem2_experiment(7, 1, 2, 2, 0, 1, 8, 0, 3, 1.0, 0.6);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(rep.samples[i].leakage == rep2.samples[i].leakage);
        CHECK(rep.samples[i].max_error == rep2.samples[i].max_error);
    }
}
