#include "doctest.h"
#include "support.hpp"

#include "adinvar/corpus.hpp"
#include "adinvar/hom_structure.hpp"
#include "adinvar/error.hpp"
#include "adinvar/geometry.hpp"

using namespace adinvar;

namespace {

const Check* find(const std::vector<Check>& cs, const std::string& name) {
    for (const auto& c : cs)
        if (c.name == name)
            return &c;
    return nullptr;
}

bool all_pass(const std::vector<Check>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

Tensor3 half_ad(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.set(i, j, Scalar(1, 2) * l.bracket(i, j));
    return t;
}

}  // namespace

TEST_SUITE("hom_structure") {
    TEST_CASE("T on the Heisenberg algebra by hand") {
        const GdAlgebra gd = *corpus_build("h3_metric_0").gd;
        const Tensor3 t = t_tensor(gd);
        // T_{e1} e2 = 1/2 [e1,e2] = 1/2 e3; T_z e1 = 1/2 pi(z) e1 = 1/2 e2
        CHECK(t.apply(0, 1) == Vec{0, 0, Scalar(1, 2)});
        CHECK(t.apply(2, 0) == Vec{0, Scalar(1, 2), 0});
        CHECK(t.apply(0, 2) == Vec{0, Scalar(-1, 2), 0});
        CHECK(t.apply(2, 2) == Vec{0, 0, 0});
        // nabla_tilde = pi(h1) x2 only
        const Tensor3 nt = nabla_tilde_gd(gd);
        CHECK(nt.apply(2, 0) == Vec{0, 1, 0});
        CHECK(nt.apply(0, 1) == Vec{0, 0, 0});
    }

    TEST_CASE("every corpus G(d) carries a homogeneous structure") {
        for (const auto& name : corpus_list()) {
            CAPTURE(name);
            const CorpusBuild b = corpus_build(name);
            if (!b.gd)
                continue;
            const auto checks = verify_as(*b.gd, &b.extension);
            for (const auto& c : checks) {
                CAPTURE(c.name);
                CHECK(c.pass);
            }
            CHECK(find(checks, "as.t_lambda_formula"));
            const HomStructure s = hom_structure(*b.gd);
            CHECK(s.nabla_tilde == nabla_tilde_gd(*b.gd));
            CHECK(t_tensor_lambda(*b.gd, b.extension) == s.t);
        }
    }

    TEST_CASE("bi-invariant metric: T = 0 and T = 1/2 ad both satisfy the axioms") {
        const DoubleExtension x = corpus_build("a12").extension;
        const std::size_t n = x.g.dim();
        CHECK(all_pass(verify_as(assemble(x.g, x.q, Tensor3(n)), x.q)));
        const HomStructure s = assemble(x.g, x.q, half_ad(x.g));
        CHECK(s.nabla_tilde.is_zero());
        CHECK(all_pass(verify_as(s, x.q)));
    }

    TEST_CASE("mutation: perturbing one entry of T is detected") {
        const GdAlgebra gd = *corpus_build("h3_metric_2").gd;
        const std::size_t n = gd.dim();
        int detected = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Tensor3 t = t_tensor(gd);
                    Vec v = t.apply(i, j);
                    v[k] += 1;
                    t.set(i, j, v);
                    ++total;
                    if (!all_pass(verify_as(assemble(gd.algebra(), gd.metric(), t), gd.metric())))
                        ++detected;
                }
        CHECK(detected == total);
    }

    TEST_CASE("mutation: a corrupted Levi-Civita tensor breaks the skewness axiom") {
        const GdAlgebra gd = *corpus_build("gF").gd;
        HomStructure s = hom_structure(gd);
        Vec v = s.nabla_tilde.apply(0, 1);
        v[2] += Scalar(1, 3);
        s.nabla_tilde.set(0, 1, v);
        const auto checks = verify_as(s, gd.metric());
        const Check* c = find(checks, "as.i_prime");
        REQUIRE(c);
        CHECK_FALSE(c->pass);
        REQUIRE_FALSE(c->witnesses.empty());
        CHECK(c->witnesses.front().front() == 1);
    }

    TEST_CASE("nilmanifold formula") {
        const GdAlgebra gd = *corpus_build("nilmanifold_so3").gd;
        CHECK(nilmanifold_t(gd) == t_tensor(gd));
        const GdAlgebra g2 = *corpus_build("gH").gd;
        CHECK_THROWS_AS(nilmanifold_t(g2), Error);
    }

    TEST_CASE("T_x x = 0 on random vectors") {
        for (const auto& name : {"gE", "nilmanifold_so3", "g_r12"}) {
            const GdAlgebra gd = *corpus_build(name).gd;
            const Tensor3 t = t_tensor(gd);
            for (int r = 0; r < 10; ++r) {
                const Vec x = testing::random_matrix(gd.dim(), 1).col(0);
                CHECK(is_zero(t.apply(x, x)));
            }
        }
    }
}
