#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "nilrep/lie_algebra.hpp"
#include "support.hpp"

using namespace nilrep;

namespace {

std::vector<Rational> basis_vector(const LieAlgebra& L, std::size_t k) {
    std::vector<Rational> v(L.dimension(), Rational(0));
    v[k] = 1;
    return v;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace

TEST_CASE("construct_free2 dimensions") {
    for (int m = 2; m <= 8; ++m) {
        const auto L = construct_free2(m);
        CHECK(L.generator_count() == m);
        CHECK(L.dimension() == static_cast<std::size_t>(m * (m - 1) / 2 + m));
        CHECK(L.derived_dim() == static_cast<std::size_t>(m * (m - 1) / 2));
    }
    CHECK(construct_free2(5).dimension() == 15);
    CHECK(construct_free2(5).derived_dim() == 10);
    CHECK_THROWS_AS(construct_free2(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_free2(-3), std::invalid_argument);
}

TEST_CASE("Heisenberg bracket and sign convention") {
    const auto L = construct_free2(2);
    CHECK(L.basis_name(0) == "Z12");
    CHECK(L.basis_name(1) == "Z1");
    CHECK(L.basis_name(2) == "Z2");
    // [Z1, Z2] = Z12, so the relabeled [X3, X2] = -X1 ... and [X2, X3] = X1.
    CHECK(L.structure_constant(1, 2, 0) == 1);
    CHECK(L.structure_constant(2, 1, 0) == -1);
}

TEST_CASE("m = 3 brackets") {
    const auto L = construct_free2(3);
    const auto& idx = L.index_map();
    auto z = [&](int i) { return static_cast<std::size_t>(idx.generator_index(i) - 1); };
    auto zz = [&](int i, int j) { return static_cast<std::size_t>(idx.center_index(i, j) - 1); };
    CHECK(bracket(L, basis_vector(L, z(1)), basis_vector(L, z(2))) == basis_vector(L, zz(1, 2)));
    CHECK(bracket(L, basis_vector(L, z(1)), basis_vector(L, z(3))) == basis_vector(L, zz(1, 3)));
    CHECK(bracket(L, basis_vector(L, z(2)), basis_vector(L, z(3))) == basis_vector(L, zz(2, 3)));
    CHECK(all_zero(bracket(L, basis_vector(L, zz(1, 2)), basis_vector(L, z(3)))));
}

TEST_CASE("basis index map is a bijection with center first") {
    for (int m = 2; m <= 8; ++m) {
        const BasisIndexMap idx(m);
        std::vector<int> seen;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const int p = idx.center_index(i, j);
                CHECK(p >= 1);
                CHECK(p <= idx.derived_dim());
                seen.push_back(p);
            }
        for (int i = 1; i <= m; ++i) {
            const int p = idx.generator_index(i);
            CHECK(p > idx.derived_dim());
            CHECK(p <= idx.dimension());
            seen.push_back(p);
        }
        std::sort(seen.begin(), seen.end());
        for (int k = 0; k < static_cast<int>(seen.size()); ++k) CHECK(seen[static_cast<std::size_t>(k)] == k + 1);
        CHECK(idx.generator_index(1) == idx.derived_dim() + 1);
    }
    CHECK_THROWS(BasisIndexMap(4).center_index(3, 2));
    CHECK_THROWS(BasisIndexMap(4).generator_index(5));
}

TEST_CASE("antisymmetry, Jacobi and integrality on all basis triples") {
    for (int m = 2; m <= 6; ++m) {
        const auto L = construct_free2(m);
        const std::size_t n = L.dimension();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational c = L.structure_constant(i, j, k);
                    CHECK(c == -L.structure_constant(j, i, k));
                    CHECK((c == 0 || c == 1 || c == -1));
                }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const auto x = basis_vector(L, a), y = basis_vector(L, b), z = basis_vector(L, c);
                    auto s = bracket(L, x, bracket(L, y, z));
                    const auto t = bracket(L, y, bracket(L, z, x));
                    const auto u = bracket(L, z, bracket(L, x, y));
                    for (std::size_t q = 0; q < n; ++q) s[q] += t[q] + u[q];
                    CHECK(all_zero(s));
                }
    }
}

TEST_CASE("bracket is bilinear and alternating on random vectors") {
    const auto L = construct_free2(4);
    const std::size_t n = L.dimension();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> v(n), w(n), u(n);
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = testing::random_rational();
            w[k] = testing::random_rational();
            u[k] = testing::random_rational();
        }
        const Rational a = testing::random_rational();
        CHECK(all_zero(bracket(L, v, v)));
        std::vector<Rational> av_u(n);
        for (std::size_t k = 0; k < n; ++k) av_u[k] = a * v[k] + u[k];
        const auto lhs = bracket(L, av_u, w);
        const auto bv = bracket(L, v, w), bu = bracket(L, u, w);
        for (std::size_t k = 0; k < n; ++k) CHECK(lhs[k] == a * bv[k] + bu[k]);
        const auto vw = bracket(L, v, w), wv = bracket(L, w, v);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(vw[k] == -wv[k]);
            if (k >= L.derived_dim()) CHECK(sgn(vw[k]) == 0);
        }
    }
    std::vector<Rational> short_v(n - 1, Rational(0));
    CHECK_THROWS_AS(bracket(L, short_v, std::vector<Rational>(n, Rational(0))), std::invalid_argument);
}

TEST_CASE("center and derived algebra") {
    for (int m = 2; m <= 8; ++m) {
        const auto L = construct_free2(m);
        const auto cd = center_and_derived(L);
        std::vector<std::size_t> expected(L.derived_dim());
        for (std::size_t k = 0; k < expected.size(); ++k) expected[k] = k;
        CHECK(cd.center == expected);
        CHECK(cd.derived == expected);
    }
}

TEST_CASE("m = 4 center against a brute-force ad kernel") {
    // A basis vector is central iff its bracket with every basis vector vanishes.
    const auto L = construct_free2(4);
    std::vector<std::size_t> brute;
    for (std::size_t a = 0; a < L.dimension(); ++a) {
        bool central = true;
        for (std::size_t b = 0; b < L.dimension() && central; ++b)
            central = all_zero(bracket(L, basis_vector(L, a), basis_vector(L, b)));
        if (central) brute.push_back(a);
    }
    CHECK(brute == center_and_derived(L).center);
    CHECK(brute.size() == 6);
}

TEST_CASE("JSON structure") {
    const auto j = nlohmann::json::parse(lie_algebra_json(construct_free2(3)));
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 6);
    CHECK(j["derived_dim"] == 3);
    REQUIRE(j["brackets"].size() == 3);
    CHECK(j["brackets"][0]["i"] == 4);
    CHECK(j["brackets"][0]["j"] == 5);
    CHECK(j["brackets"][0]["k"] == 1);
    CHECK(j["brackets"][0]["c"] == "1");
}
