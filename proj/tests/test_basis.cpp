#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "focklat/basis.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <set>

using namespace focklat;

TEST_CASE("dimension matches the closed form") {
    CHECK(dimension(2, 3) == 6);
    CHECK(dimension(1, 2) == 2);
    CHECK(dimension(1, 7) == 7);
    CHECK(dimension(5, 6) == 252);
    CHECK(dimension(4, 6) == 126);
    CHECK(dimension(3, 3) == 10);
    CHECK(dimension(7, 1) == 1);
}

TEST_CASE("dimension rejects empty systems and capped sizes") {
    CHECK_THROWS_AS(dimension(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(dimension(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(dimension(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(dimension(2, 3, 5), std::length_error);  // 6 states, cap 5
    CHECK_THROWS_AS(dimension(40, 40), std::length_error);   // far past the default cap
    CHECK(dimension(2, 3, 6) == 6);                          // cap is inclusive
}

TEST_CASE("dimension equals brute-force enumeration for N+M <= 12") {
    for (int n = 1; n + 1 <= 12; ++n) {
        for (int m = 1; n + m <= 12; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(dimension(n, m) == oracles::compositions(n, m).size());
        }
    }
}

TEST_CASE("pseudo-energy encoding of known states") {
    CHECK(pseudo_energy(FockState({2, 0, 0})) == 2);
    CHECK(pseudo_energy(FockState({1, 0, 1})) == 10);
    CHECK(pseudo_energy(FockState({0, 2, 0})) == 6);
    CHECK(pseudo_energy(FockState({0, 0, 2})) == 18);
    // extremes: |N,0,...,0> -> N and |0,...,0,N> -> N(N+1)^(M-1)
    CHECK(pseudo_energy(FockState({4, 0, 0, 0})) == 4);
    CHECK(pseudo_energy(FockState({0, 0, 0, 4})) == 4 * 5 * 5 * 5);
}

TEST_CASE("encoding rejects states beyond the exact integer range") {
    // N=1, M=64: top state needs 2^63
    std::vector<int> occ(64, 0);
    occ[63] = 1;
    CHECK_THROWS_AS(pseudo_energy(FockState(occ)), std::invalid_argument);
    occ.resize(63);
    occ[62] = 1;
    CHECK(pseudo_energy(FockState(occ)) == (std::uint64_t{1} << 62));
}

TEST_CASE("decode inverts the encoding") {
    CHECK(decode(10, 2, 3) == FockState({1, 0, 1}));
    CHECK(decode(2, 2, 3) == FockState({2, 0, 0}));
    CHECK(decode(5, 5, 4) == FockState({5, 0, 0, 0}));  // K = N
    CHECK_THROWS_AS(decode(7, 2, 3), std::invalid_argument);   // digits 1,2,0 sum to 3
    CHECK_THROWS_AS(decode(1, 2, 3), std::invalid_argument);   // below K_min = N
    CHECK_THROWS_AS(decode(19, 2, 3), std::invalid_argument);  // above K_max = 18
}

TEST_CASE("basis (2,3) reproduces the known pseudo-energy ladder") {
    const Basis basis(2, 3);
    REQUIRE(basis.size() == 6);
    const std::vector<std::uint64_t> expected_K = {2, 4, 6, 10, 12, 18};
    const std::vector<std::vector<int>> expected_states = {
        {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t nu = 1; nu <= 6; ++nu) {
        CHECK(basis.pseudo_energy(nu) == expected_K[nu - 1]);
        CHECK(basis.state(nu).occupations() == expected_states[nu - 1]);
    }
}

TEST_CASE("basis (1,3) is the single-photon ladder") {
    const Basis basis(1, 3);
    REQUIRE(basis.size() == 3);
    CHECK(basis.pseudo_energy(1) == 1);
    CHECK(basis.pseudo_energy(2) == 2);
    CHECK(basis.pseudo_energy(3) == 4);
    CHECK(basis.state(1) == FockState({1, 0, 0}));
    CHECK(basis.state(3) == FockState({0, 0, 1}));
}

TEST_CASE("basis (3,3) spans K = 3 .. 48 over 10 states") {
    const Basis basis(3, 3);
    REQUIRE(basis.size() == 10);
    CHECK(basis.pseudo_energy(1) == 3);
    CHECK(basis.state(1) == FockState({3, 0, 0}));
    CHECK(basis.pseudo_energy(10) == 48);
    CHECK(basis.state(10) == FockState({0, 0, 3}));
}

TEST_CASE("basis ordering is strictly ascending with no duplicates") {
    for (int n = 1; n + 1 <= 10; ++n) {
        for (int m = 1; n + m <= 10; ++m) {
            const Basis basis(n, m);
            for (std::size_t nu = 2; nu <= basis.size(); ++nu) {
                CHECK(basis.pseudo_energy(nu - 1) < basis.pseudo_energy(nu));
            }
            CHECK(basis.pseudo_energy(1) == static_cast<std::uint64_t>(n));
            const auto top = basis.pseudo_energy(basis.size());
            std::uint64_t expected_top = n;
            for (int e = 1; e < m; ++e) expected_top *= static_cast<std::uint64_t>(n) + 1;
            CHECK(top == expected_top);
        }
    }
}

TEST_CASE("decode(encode) is the identity over entire bases") {
    // Dense small region plus spots along the representability envelope.
    std::vector<std::pair<int, int>> cases;
    for (int n = 1; n + 1 <= 12; ++n) {
        for (int m = 1; n + m <= 12; ++m) cases.emplace_back(n, m);
    }
    cases.emplace_back(1, 63);
    cases.emplace_back(2, 40);
    cases.emplace_back(9999, 2);
    for (const auto& [n, m] : cases) {
        CAPTURE(n);
        CAPTURE(m);
        const Basis basis(n, m, 20000);
        for (const BasisEntry& entry : basis.entries()) {
            CHECK(decode(entry.K, n, m) == entry.state);
            CHECK(pseudo_energy(entry.state) == entry.K);
        }
    }
}

TEST_CASE("basis agrees with brute-force enumeration") {
    for (int n = 1; n + 1 <= 12; ++n) {
        for (int m = 1; n + m <= 12; ++m) {
            const Basis basis(n, m);
            const auto brute = oracles::compositions(n, m);
            REQUIRE(basis.size() == brute.size());
            std::set<std::vector<int>> seen;
            for (const BasisEntry& entry : basis.entries()) seen.insert(entry.state.occupations());
            for (const auto& occ : brute) CHECK(seen.count(occ) == 1);
        }
    }
}

TEST_CASE("basis lookup by K and by state") {
    const Basis basis(2, 3);
    CHECK(basis.index_of(std::uint64_t{10}) == 4);
    CHECK(basis.index_of(FockState({0, 1, 1})) == 5);
    CHECK_THROWS_AS(basis.index_of(std::uint64_t{7}), std::invalid_argument);
    CHECK_THROWS_AS(basis.index_of(FockState({1, 1, 1})), std::invalid_argument);  // wrong N
    CHECK_THROWS_AS(basis.entry(0), std::invalid_argument);
    CHECK_THROWS_AS(basis.entry(7), std::invalid_argument);
}

TEST_CASE("exchange energies") {
    CHECK(exchange_energy(2, 1, 2) == 2);
    CHECK(exchange_energy(3, 2, 2) == 6);
    CHECK(exchange_energy(4, 3, 3) == 48);  // 3 * 4^2
    CHECK(exchange_energy(1, 3, 2) == -8);
    CHECK_THROWS_AS(exchange_energy(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(exchange_energy(0, 1, 3), std::invalid_argument);

    SUBCASE("antisymmetry and the nearest-neighbor identity") {
        for (int n = 1; n <= 8; ++n) {
            for (int i = 1; i <= 12; ++i) {
                for (int j = 1; j <= 12; ++j) {
                    if (i == j) continue;
                    CHECK(exchange_energy(i, j, n) == -exchange_energy(j, i, n));
                }
                std::int64_t weight = 1;
                for (int e = 1; e < i; ++e) weight *= n + 1;
                CHECK(exchange_energy(i + 1, i, n) == n * weight);
            }
        }
    }
}

TEST_CASE("Fock state validation and labels") {
    CHECK_THROWS_AS(FockState(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(FockState({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(FockState({1, -1, 1}), std::invalid_argument);
    const FockState state({1, 0, 2});
    CHECK(state.photons() == 3);
    CHECK(state.modes() == 3);
    CHECK(state.label() == "1-0-2");
    CHECK(state.occupation(3) == 2);
    CHECK_THROWS_AS(state.occupation(0), std::invalid_argument);
    CHECK_THROWS_AS(state.occupation(4), std::invalid_argument);
}

TEST_CASE("constructions reject unrepresentable (N, M)") {
    CHECK_THROWS_AS(Basis(1, 64), std::invalid_argument);
    CHECK_NOTHROW(Basis(1, 63));
    CHECK_THROWS_AS(decode(1, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(exchange_energy(64, 1, 1), std::invalid_argument);
}
