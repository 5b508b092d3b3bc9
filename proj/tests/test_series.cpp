#include "doctest.h"
#include "support.hpp"

#include "adinvar/corpus.hpp"
#include "adinvar/derivations.hpp"
#include "adinvar/error.hpp"
#include "adinvar/series_predict.hpp"

using namespace adinvar;

namespace {

Matrix random_combination(const std::vector<Matrix>& basis) {
    Matrix m(basis.front().rows(), basis.front().cols());
    for (const auto& b : basis)
        m = m + Scalar(testing::rand_int(-2, 2)) * b;
    return m;
}

/// D^{k-1}(d) inside every ker pi(h), evaluated directly.
bool kernel_oracle(const GdAlgebra& gd) {
    const Series s = lower_central_series(gd.rep().d_alg());
    const Subspace& last = s.terms[*s.step - 1];
    for (const auto& p : gd.rep().mats())
        for (const auto& v : last.basis())
            if (!is_zero(p * v))
                return false;
    return true;
}

}  // namespace

TEST_SUITE("series_predict") {
    TEST_CASE("Heisenberg from abelian d is 2-step") {
        const GdAlgebra gd = *corpus_build("h3_metric_2").gd;
        const StepReport r = predict_nilpotent_step(gd);
        CHECK(r.step_d == 1);
        CHECK(r.step_gd_predicted == 2);
        CHECK(r.step_gd_computed == 2);
        CHECK(r.corrected_test == std::optional<bool>(false));
        CHECK(r.displayed_test == std::optional<bool>(true));
        CHECK(r.displayed_prediction == std::optional<std::size_t>(1));
        CHECK(r.witness.dim() == 1);
    }

    TEST_CASE("trivial map keeps the step") {
        const GdAlgebra gd = *corpus_build("abelian_r22").gd;
        const StepReport r = predict_nilpotent_step(gd);
        CHECK(r.step_gd_predicted == 1);
        CHECK(r.agrees());
        CHECK(r.witness.is_zero());
    }

    TEST_CASE("a(1,2) by H is 4-step, by the inner derivation X it stays 3-step") {
        const auto ders = a12_derivations();
        const GdAlgebra gh{Representation({{a12_algebra(), a12_skew_form()}, line(1), {ders.at("H")}, {}})};
        const StepReport rh = predict_nilpotent_step(gh);
        CHECK(rh.step_d == 3);
        CHECK(rh.step_gd_computed == 4);
        CHECK(rh.agrees());
        // the displayed index is vacuous here and predicts the wrong step
        CHECK(rh.displayed_prediction == std::optional<std::size_t>(3));
        const GdAlgebra gx{Representation({{a12_algebra(), a12_skew_form()}, line(1), {ders.at("X")}, {}})};
        const StepReport rx = predict_nilpotent_step(gx);
        CHECK(rx.step_gd_computed == 3);
        CHECK(rx.agrees());
    }

    TEST_CASE("property: nilpotent prediction on random skew derivations of a(1,2)") {
        const MatrixLieAlgebra sk = skew_derivations(a12_algebra(), a12_skew_form());
        for (int t = 0; t < 10; ++t) {
            const Matrix p = random_combination(sk.basis());
            const GdAlgebra gd{Representation({{a12_algebra(), a12_skew_form()}, line(1), {p}, {}})};
            const StepReport r = predict_nilpotent_step(gd);
            CHECK(r.agrees());
            CHECK(r.corrected_test == std::optional<bool>(kernel_oracle(gd)));
            CHECK(r.step_gd_computed == (kernel_oracle(gd) ? 3u : 4u));
        }
    }

    TEST_CASE("property: solvable prediction over the oscillator algebra") {
        const DoubleExtension osc = corpus_build("oscillator").extension;
        CHECK(*derived_series(osc.g).step == 3);
        const MatrixLieAlgebra sk = skew_derivations(osc.g, osc.q);
        for (int t = 0; t < 10; ++t) {
            const Matrix p = random_combination(sk.basis());
            const GdAlgebra gd{Representation({{osc.g, osc.q}, line(1), {p}, {}})};
            const StepReport r = predict_solvable_step(gd);
            CHECK(r.kind == "solvable");
            CHECK(r.step_d == 3);
            CHECK(r.agrees());
            CHECK(r.step_gd_computed == *derived_series(gd.algebra()).step);
        }
    }

    TEST_CASE("explicit k must match the algebra") {
        const GdAlgebra gd = *corpus_build("gE").gd;
        CHECK(predict_nilpotent_step(gd, 3).agrees());
        CHECK_THROWS_AS(predict_nilpotent_step(gd, 2), Error);
    }

    TEST_CASE("Heisenberg recognizer") {
        SUBCASE("R^{2,2} with two rotation blocks") {
            const HeisenbergClass h = heisenberg_recognizer(*corpus_build("h5_r22").gd);
            CHECK(h.kind == HeisenbergClass::Kind::heisenberg);
            CHECK(h.heisenberg_dim == 5);
            CHECK(h.kernel.is_zero());
        }
        SUBCASE("Lorentzian G(R^{1,2})") {
            const HeisenbergClass h = heisenberg_recognizer(*corpus_build("g_r12").gd);
            CHECK(h.kind == HeisenbergClass::Kind::central_extension);
            CHECK(h.heisenberg_dim == 3);
            CHECK(h.kernel == Subspace::span(3, {{1, 0, -1}}));
            CHECK(h.center.dim() == 2);
            CHECK(h.indecomposable_flag);
        }
        SUBCASE("abelian") {
            CHECK(heisenberg_recognizer(*corpus_build("abelian_r22").gd).kind == HeisenbergClass::Kind::abelian);
        }
        SUBCASE("property: random skew maps on R^{2,2}") {
            for (int t = 0; t < 10; ++t) {
                const Matrix a = testing::random_skew_for({-1, -1, 1, 1});
                const GdAlgebra gd{Representation({rpq(2, 2), line(1), {a}, {}})};
                const HeisenbergClass h = heisenberg_recognizer(gd);
                CHECK(h.center_matches);
                CHECK(h.heisenberg_dim == (rank(a) ? rank(a) + 1 : 0));
                CHECK(h.kernel.dim() == 4 - rank(a));
            }
        }
        SUBCASE("precondition") {
            CHECK_THROWS_AS(heisenberg_recognizer(*corpus_build("gH").gd), Error);
            CHECK_THROWS_AS(heisenberg_recognizer(*corpus_build("nilmanifold_so3").gd), Error);
        }
    }
}
