#include "doctest.h"
#include "support.hpp"

#include "adinvar/bilinear_form.hpp"
#include "adinvar/corpus.hpp"
#include "adinvar/error.hpp"
#include "adinvar/lie_algebra.hpp"
#include "adinvar/rational.hpp"
#include "adinvar/subspace.hpp"

using namespace adinvar;
using testing::rand_int;

TEST_SUITE("rational") {
    TEST_CASE("parse and canonical text") {
        CHECK(parse_scalar("6/4") == Scalar(3, 2));
        CHECK(parse_scalar(" -7 ") == Scalar(-7));
        Scalar a(6, -4), b(4, 2);
        a.canonicalize();
        b.canonicalize();
        CHECK(to_string(a) == "-3/2");
        CHECK(to_string(b) == "2");
        CHECK_THROWS_AS(parse_scalar("1/0"), Error);
        CHECK_THROWS_AS(parse_scalar("abc"), Error);
        CHECK_THROWS_AS(parse_scalar("1.5"), Error);
    }

    TEST_CASE("text round trip on random rationals") {
        for (int t = 0; t < 200; ++t) {
            Scalar q(rand_int(-1000, 1000), rand_int(1, 97));
            q.canonicalize();
            CHECK(parse_scalar(to_string(q)) == q);
        }
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("determinant agrees with the Leibniz expansion") {
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = rand_int(1, 5);
            const Matrix m = testing::random_matrix(n, n);
            CHECK(determinant(m) == testing::leibniz_det(m));
        }
    }

    TEST_CASE("characteristic polynomial evaluates to det(tI - M)") {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = rand_int(1, 5);
            const Matrix m = testing::random_matrix(n, n);
            const auto c = characteristic_polynomial(m);
            REQUIRE(c.size() == n + 1);
            CHECK(c[n] == 1);
            for (int x = -2; x <= 2; ++x) {
                Scalar value = 0, power = 1;
                for (const auto& ck : c) {
                    value += ck * power;
                    power *= x;
                }
                CHECK(value == testing::leibniz_det(Scalar(x) * Matrix::identity(n) - m));
            }
        }
    }

    TEST_CASE("nullspace vectors are killed and rank-nullity holds") {
        for (int t = 0; t < 20; ++t) {
            const std::size_t r = rand_int(1, 5), c = rand_int(1, 6);
            Matrix m = testing::random_matrix(r, c, -1, 1);
            const auto ns = nullspace(m);
            for (const auto& v : ns)
                CHECK(is_zero(m * v));
            CHECK(ns.size() + rank(m) == c);
        }
    }

    TEST_CASE("inverse and solve") {
        for (int t = 0; t < 10; ++t) {
            const Matrix u = testing::random_unimodular(4);
            const auto inv = inverse(u);
            REQUIRE(inv);
            CHECK(u * *inv == Matrix::identity(4));
            const Vec b{1, Scalar(-2, 3), 0, 5};
            const auto x = solve(u, b);
            REQUIRE(x);
            CHECK(u * *x == b);
        }
        CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
        CHECK_FALSE(solve(Matrix::from_rows({{1, 2}, {2, 4}}), Vec{1, 0}));
    }
}

TEST_SUITE("bilinear_form") {
    TEST_CASE("signature of diagonal forms counts signs") {
        CHECK(BilinearForm::diagonal({-1, 2, 0, 3}).signature() == Signature{1, 2, 1});
        CHECK(BilinearForm::diagonal({-1, -1}).signature() == Signature{2, 0, 0});
    }

    TEST_CASE("hyperbolic plane has split signature") {
        const BilinearForm h(Matrix::from_rows({{0, 1}, {1, 0}}));
        CHECK(h.signature() == Signature{1, 1, 0});
    }

    TEST_CASE("congruence diagonalization is a valid congruence") {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = rand_int(2, 6);
            Matrix s = testing::random_matrix(n, n, -2, 2);
            s = s + s.transposed();
            const OrthogonalBasis ob = congruence_diagonalize(s);
            CHECK(ob.basis.transposed() * s * ob.basis == Matrix::diagonal(ob.norms));
            CHECK(determinant(ob.basis) != 0);
        }
    }

    TEST_CASE("signature is invariant under unimodular congruence (Sylvester)") {
        for (int t = 0; t < 10; ++t) {
            Vec d;
            const std::size_t n = rand_int(2, 6);
            for (std::size_t i = 0; i < n; ++i)
                d.push_back(rand_int(-2, 2));
            const BilinearForm b = BilinearForm::diagonal(d);
            const Matrix u = testing::random_unimodular(n);
            const BilinearForm c(u.transposed() * b.gram() * u);
            CHECK(c.signature() == b.signature());
        }
    }

    TEST_CASE("orthogonal complement twice is the identity for nondegenerate forms") {
        const BilinearForm b = f3_form();
        for (int t = 0; t < 10; ++t) {
            std::vector<Vec> gens;
            const int k = rand_int(1, 3);
            for (int i = 0; i < k; ++i)
                gens.push_back(testing::random_matrix(5, 1).col(0));
            const Subspace s = Subspace::span(5, gens);
            const Subspace perp = orthogonal_complement(s, b);
            CHECK(perp.dim() + s.dim() == 5);
            CHECK(orthogonal_complement(perp, b) == s);
        }
    }

    TEST_CASE("isotropy and nondegeneracy on subspaces") {
        const BilinearForm b = f3_form();  // e4,e1,e2,e3,e0
        CHECK(totally_isotropic(Subspace::span(5, {{0, 1, 0, 1, 0}}), b));
        CHECK_FALSE(nondegenerate_on(Subspace::span(5, {{0, 0, 0, 0, 1}}), b));
        CHECK(nondegenerate_on(Subspace::span(5, {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}}), b));
    }

    TEST_CASE("asymmetric gram is rejected") {
        CHECK_THROWS_AS(BilinearForm(Matrix::from_rows({{0, 1}, {2, 0}})), Error);
    }
}

TEST_SUITE("lie_algebra") {
    TEST_CASE("Jacobi failure is reported with its triple") {
        const LieAlgebra bad(3, {}, {{0, 1, 2, 1}, {0, 2, 0, 1}});
        const auto v = check_jacobi(bad);
        REQUIRE(v.size() == 1);
        CHECK(v[0].i == 0);
        CHECK(v[0].j == 1);
        CHECK(v[0].k == 2);
        // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e1] + 0 = e3
        CHECK(v[0].cyclic_sum == Vec{0, 0, 1});
    }

    TEST_CASE("bracket antisymmetry and bilinearity") {
        const LieAlgebra l = a12_algebra();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(l.bracket(i, j) == -l.bracket(j, i));
        for (int t = 0; t < 10; ++t) {
            const Vec x = testing::random_matrix(5, 1).col(0), y = testing::random_matrix(5, 1).col(0);
            Vec expect(5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    axpy(expect, x[i] * y[j], l.bracket(i, j));
            CHECK(l.bracket(x, y) == expect);
            CHECK(l.ad(x) * y == expect);
        }
    }

    TEST_CASE("constructor rejects malformed tables") {
        CHECK_THROWS_AS(LieAlgebra(3, {}, {{1, 0, 2, 1}}), Error);
        CHECK_THROWS_AS(LieAlgebra(3, {}, {{0, 1, 5, 1}}), Error);
        CHECK_THROWS_AS(LieAlgebra(3, {}, {{0, 1, 2, 1}, {0, 1, 2, 2}}), Error);
    }

    TEST_CASE("a(1,2) series and center") {
        const LieAlgebra l = a12_algebra();
        CHECK(check_jacobi(l).empty());
        const Series lc = lower_central_series(l);
        REQUIRE(lc.step);
        CHECK(*lc.step == 3);
        CHECK(lc.terms[1].dim() == 3);
        CHECK(lc.terms[2].dim() == 2);
        // free 3-step nilpotent on two generators: the center is the last term, span{e0, e1 - e3}
        CHECK(center(l) == Subspace::span(5, {{0, 0, 0, 0, 1}, {0, 1, 0, -1, 0}}));
        CHECK(center(l) == lc.terms[2]);
        CHECK(ad_invariant(l, f3_form()));
        CHECK(ad_invariant(l, a12_skew_form()));
    }

    TEST_CASE("derived series lies inside the lower central series") {
        std::vector<LieAlgebra> algebras{a12_algebra(), corpus_build("gH").gd->algebra(),
                                         corpus_build("oscillator").extension.g,
                                         corpus_build("nilmanifold_so3").extension.g};
        for (const auto& l : algebras) {
            const Series c = derived_series(l), d = lower_central_series(l);
            for (std::size_t i = 0; i < std::min(c.terms.size(), d.terms.size()); ++i)
                CHECK(d.terms[i].contains(c.terms[i]));
        }
    }

    TEST_CASE("invariant forms are ad-invariant; a(1,2) family has four parameters") {
        const auto forms = invariant_forms(a12_algebra());
        CHECK(forms.size() == 4);
        for (const auto& f : forms)
            CHECK(ad_invariant(a12_algebra(), f));
        const LieAlgebra so3(3, {}, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 0, 1}});
        CHECK(invariant_forms(so3).size() == 1);
        CHECK(killing_form(so3).gram() == Scalar(-2) * Matrix::identity(3));
    }

    TEST_CASE("subalgebras and ideals") {
        const LieAlgebra l = a12_algebra();
        CHECK(is_ideal(l, lower_central_series(l).terms[1]));
        CHECK(is_subalgebra(l, Subspace::span(5, {{1, 0, 0, 0, 0}})));
        CHECK_FALSE(is_ideal(l, Subspace::span(5, {{1, 0, 0, 0, 0}})));
        const LieAlgebra r = restrict_to(l, lower_central_series(l).terms[1]);
        CHECK(r.dim() == 3);
        CHECK(check_jacobi(r).empty());
    }
}
