#include "doctest.h"
#include "support.hpp"

#include "adinvar/corpus.hpp"
#include "adinvar/derivations.hpp"
#include "adinvar/error.hpp"

using namespace adinvar;

namespace {

LieAlgebra heisenberg3() { return LieAlgebra(3, {}, {{0, 1, 2, 1}}); }
LieAlgebra so3() { return LieAlgebra(3, {}, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 0, 1}}); }

}  // namespace

TEST_SUITE("derivations") {
    TEST_CASE("derivation algebra dimensions of classical examples") {
        CHECK(derivation_algebra(LieAlgebra::abelian(3)).dim() == 9);
        // gl(2) acting on the generators plus maps into the center
        CHECK(derivation_algebra(heisenberg3()).dim() == 6);
        CHECK(derivation_algebra(so3()).dim() == 3);
        CHECK(inner_derivations(so3()).dim() == 3);
        // free nilpotent: any assignment of the two generators extends (2 x 5 choices)
        CHECK(derivation_algebra(a12_algebra()).dim() == 10);
        CHECK(inner_derivations(heisenberg3()).dim() == 2);
    }

    TEST_CASE("every basis element is a derivation and the span is closed") {
        for (const auto& l : {a12_algebra(), heisenberg3(), so3()}) {
            const MatrixLieAlgebra d = derivation_algebra(l);
            for (const auto& m : d.basis())
                CHECK(is_derivation(l, m));
            for (const auto& a : d.basis())
                for (const auto& b : d.basis())
                    CHECK(d.contains(commutator(a, b)));
            CHECK(check_jacobi(d.abstract()).empty());
        }
    }

    TEST_CASE("skew derivations of a(1,2) for the reference skew form") {
        const LieAlgebra l = a12_algebra();
        const BilinearForm b = a12_skew_form();
        const MatrixLieAlgebra sk = skew_derivations(l, b);
        CHECK(sk.dim() == 6);
        const auto named = a12_derivations();
        for (const auto& [name, m] : named) {
            CAPTURE(name);
            CHECK(is_derivation(l, m));
            CHECK(is_skew(m, b));
            CHECK(sk.contains(m));
        }
        const Matrix &H = named.at("H"), &E = named.at("E"), &F = named.at("F");
        const Matrix &X = named.at("X"), &Y = named.at("Y"), &Z = named.at("Z");
        CHECK(commutator(H, X) == X);
        CHECK(commutator(H, Y) == Scalar(-1) * Y);
        CHECK(commutator(E, Y) == X);
        CHECK(commutator(F, X) == Y);
        CHECK(commutator(H, E) == Scalar(2) * E);
        CHECK(commutator(H, F) == Scalar(-2) * F);
        CHECK(commutator(E, F) == H);
        const Matrix xy = commutator(X, Y);
        CHECK_FALSE(xy.is_zero());
        CHECK(MatrixLieAlgebra(5, {Z}).contains(xy));
        const MatrixLieAlgebra inner = inner_derivations(l);
        CHECK(inner.dim() == 3);
        for (const auto& m : {X, Y, Z})
            CHECK(inner.contains(m));
    }

    TEST_CASE("skew derivations are exactly the derivations that are skew") {
        const LieAlgebra l = a12_algebra();
        for (const auto& b : {f3_form(), a12_skew_form()}) {
            const MatrixLieAlgebra sk = skew_derivations(l, b);
            const MatrixLieAlgebra der = derivation_algebra(l);
            for (const auto& m : sk.basis()) {
                CHECK(is_skew(m, b));
                CHECK(der.contains(m));
            }
        }
    }

    TEST_CASE("profiles") {
        const Profile p = profile(heisenberg3());
        CHECK(p.dim == 3);
        CHECK(p.center_dim == 1);
        CHECK(p.nilpotent_step == std::optional<std::size_t>(2));
        CHECK_FALSE(p.perfect);
        const Profile s = profile(so3());
        CHECK(s.perfect);
        CHECK(s.radical_dim == 0);
        CHECK(s.killing == Signature{3, 0, 0});
        const Profile sk = profile(skew_derivations(a12_algebra(), a12_skew_form()));
        CHECK(sk.dim == 6);
        CHECK(sk.perfect);
        CHECK(sk.radical_dim == 3);
        CHECK(sk.radical_nilpotent_step == std::optional<std::size_t>(2));
    }

    TEST_CASE("sweep over the invariant-form family") {
        const auto entries = sweep_invariant_forms(a12_algebra(), {-1, 1, 2});
        CHECK_FALSE(entries.empty());
        for (const auto& e : entries) {
            CHECK(e.form.nondegenerate());
            CHECK(ad_invariant(a12_algebra(), e.form));
            CHECK(e.skew_dim == 6);
        }
        // deterministic order
        const auto again = sweep_invariant_forms(a12_algebra(), {-1, 1, 2});
        REQUIRE(again.size() == entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            CHECK(again[i].coefficients == entries[i].coefficients);
    }

    TEST_CASE("so_aut of G(d)") {
        for (const auto& name : {"h3_metric_0", "h3_metric_2"}) {
            const GdAlgebra gd = *corpus_build(name).gd;
            const SoAut s = so_aut(gd);
            CHECK(s.dim() == 1);
            for (const auto& [a, b] : induced_pairs(gd))
                CHECK(so_aut_contains(s, gd, a, b));
            for (const auto& m : s.operators.basis()) {
                CHECK(is_derivation(gd.algebra(), m));
                CHECK(is_skew(m, gd.metric()));
            }
        }
        // every orthogonal derivation preserving the blocks appears
        const GdAlgebra gd = *corpus_build("nilmanifold_r4").gd;
        CHECK(so_aut(gd).dim() == block_skew_derivations(gd).dim());
    }

    TEST_CASE("intertwiners") {
        const Representation rep({rpq(0, 2), line(1), {t_plus()}, {}});
        const MatrixLieAlgebra u = intertwiners_skew(rep);
        CHECK(u.dim() == 1);
        CHECK(u.contains(t_plus()));
        CHECK_THROWS_AS(intertwiners_skew({Matrix(3, 3)}, BilinearForm::identity(2)), Error);
    }

    TEST_CASE("equivalence of derivations") {
        const LieAlgebra l = heisenberg3();
        const MatrixLieAlgebra der = derivation_algebra(l);
        const Matrix a = der.basis()[0];
        // phi = identity, lambda = 1, t = 0
        CHECK(equivalence_check(l, a, a, 1, Vec(3), Matrix::identity(3)));
        // adding an inner derivation
        const Matrix b = a + l.ad(0);
        CHECK(equivalence_check(l, a, b, 1, Vec{1, 0, 0}, Matrix::identity(3)));
        CHECK_FALSE(equivalence_check(l, a, b, 1, Vec(3), Matrix::identity(3)));
        CHECK_THROWS_AS(equivalence_check(l, a, a, 1, Vec(3), Matrix(3, 3)), Error);
    }
}
