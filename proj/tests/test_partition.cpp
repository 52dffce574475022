#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <regshake/partition.hpp>

using namespace regshake;

namespace {

Partition P(std::initializer_list<long long> parts) { return Partition(std::vector<long long>(parts)); }

// Standard tableau count by recursive corner removal, memoised. Independent
// of the hook length formula.
BigInt count_tableaux_recursive(const Partition& p, std::map<Partition, BigInt>& memo) {
    if (p.empty()) return 1;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool removable = (i + 1 == parts.size()) || parts[i] > parts[i + 1];
        if (!removable) continue;
        std::vector<long long> rest = parts;
        if (--rest[i] == 0) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        total += count_tableaux_recursive(Partition(rest), memo);
    }
    memo.emplace(p, total);
    return total;
}

// Multiplicity reading of e-regularity, independent of the ladder reading.
bool no_part_repeats_e_times(const Partition& p, long long e) {
    std::map<long long, long long> mult;
    for (long long v : p.parts()) ++mult[v];
    for (const auto& [v, m] : mult)
        if (m >= e) return false;
    return true;
}

} // namespace

TEST_CASE("partition construction validates") {
    CHECK_NOTHROW(P({4, 4, 2, 1}));
    CHECK_NOTHROW(Partition());
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(P({4, 4, 2, 1}).size() == 11);
    CHECK(P({4, 4, 2, 1}).num_parts() == 4);
    CHECK(Partition().size() == 0);
    CHECK(P({5, 2}).part(1) == 5);
    CHECK(P({5, 2}).part(3) == 0);
}

TEST_CASE("partition serialisation round-trips") {
    CHECK(P({4, 4, 2, 1}).to_string() == "4,4,2,1");
    CHECK(Partition().to_string() == "");
    CHECK(Partition::parse("4,4,2,1") == P({4, 4, 2, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse(" 3 , 1 ") == P({3, 1}));
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3.5"), std::invalid_argument);
    for (long long n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("enumeration matches the partition numbers") {
    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (long long n = 0; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == expected[n]);
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& p : all) CHECK(p.size() == n);
    }
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(P({4, 4, 2, 1})) == P({4, 3, 2, 2}));
    CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (long long n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).size() == p.size());
            CHECK(conjugate(p).part(1) == p.num_parts());
        }
}

TEST_CASE("ladder numbers") {
    CHECK(ladder_number(1, 1, 2) == 1);
    CHECK(ladder_number(2, 3, 3) == 6);
    CHECK(ladder_number(3, 1, 5) == 3);
    CHECK_THROWS_AS(ladder_number(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ladder_number(0, 1, 2), std::invalid_argument);
    // ladder mates: one step down-left along the ladder keeps the number
    for (long long e = 2; e <= 5; ++e)
        for (long long a = e; a <= 2 * e; ++a)
            for (long long b = 1; b <= 3; ++b)
                CHECK(ladder_number(a, b, e) == ladder_number(a - e + 1, b + 1, e));
}

TEST_CASE("ladder counts") {
    const auto c21 = ladder_counts(P({2, 1}), 2);
    CHECK(c21 == std::map<long long, long long>{{1, 1}, {2, 2}});
    const auto c111 = ladder_counts(P({1, 1, 1}), 2);
    CHECK(c111 == std::map<long long, long long>{{1, 1}, {2, 1}, {3, 1}});
    for (long long n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (long long e : {2, 3, 5}) {
                long long total = 0;
                for (const auto& [l, c] : ladder_counts(p, e)) {
                    CHECK(l >= 1);
                    CHECK(c >= 1);
                    total += c;
                }
                CHECK(total == n);
            }
}

TEST_CASE("regularity agrees with the multiplicity reading") {
    CHECK(is_e_regular(P({4, 4, 2, 1}), 3));
    CHECK_FALSE(is_e_regular(P({3, 3, 3, 1}), 3));
    CHECK(is_e_regular(Partition(), 2));
    for (long long n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (long long e : {2, 3, 4})
                CHECK(is_e_regular(p, e) == no_part_repeats_e_times(p, e));
}

TEST_CASE("regularisation reproduces the worked example") {
    CHECK(regularise(P({4, 4, 3, 3, 3, 3, 3, 1}), 4) == P({5, 4, 4, 3, 3, 2, 2, 1}));
}

TEST_CASE("regularisation moves a column onto its ladders") {
    // ladders of 1^3 for e=2 hold one node each at rows 3, 2, 1 of columns
    // 1, 2, 3, so the top-filled configuration is the single row (3)
    CHECK(regularise(P({1, 1, 1}), 2) == P({3}));
    CHECK(regularise(P({1, 1, 1, 1}), 2) == P({4}));
    CHECK(regularise(P({2, 2, 2}), 2) == P({4, 2}));
    CHECK(regularise(P({1, 1, 1}), 3) == P({2, 1}));
}

TEST_CASE("regularisation properties, exhaustively") {
    for (long long n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (long long e : {2, 3, 4, 5}) {
                const Partition r = regularise(p, e);
                CHECK(r.size() == n);
                CHECK(is_e_regular(r, e));
                CHECK(ladder_counts(r, e) == ladder_counts(p, e));
                CHECK(regularise(r, e) == r);
                if (is_e_regular(p, e)) CHECK(r == p);
            }
}

TEST_CASE("regularisation output is the unique regular partition with the same ladders") {
    for (long long n = 0; n <= 9; ++n) {
        const auto all = enumerate_partitions(n);
        for (long long e : {2, 3}) {
            // group the e-regular partitions by their ladder counts
            std::map<std::map<long long, long long>, std::vector<Partition>> by_counts;
            for (const auto& p : all)
                if (is_e_regular(p, e)) by_counts[ladder_counts(p, e)].push_back(p);
            for (const auto& p : all) {
                const auto& bucket = by_counts.at(ladder_counts(p, e));
                REQUIRE(bucket.size() == 1);
                CHECK(regularise(p, e) == bucket.front());
            }
        }
    }
}

TEST_CASE("hook products count standard tableaux") {
    const auto hooks22 = hook_lengths(P({2, 2}));
    long long prod = 1;
    for (const auto& row : hooks22)
        for (long long h : row) prod *= h;
    CHECK(prod == 12);
    CHECK(num_standard_tableaux(P({2, 2})) == 2);
    CHECK(num_standard_tableaux(P({3, 2})) == 5);
    CHECK(num_standard_tableaux(P({2, 1})) == 2);
    CHECK(num_standard_tableaux(P({5})) == 1);
    CHECK(num_standard_tableaux(P({1, 1, 1, 1, 1})) == 1);
    CHECK(num_standard_tableaux(P({4, 2})) == 9);
    CHECK(num_standard_tableaux(Partition()) == 1);
}

TEST_CASE("hook counts match recursive enumeration") {
    std::map<Partition, BigInt> memo;
    for (long long n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(num_standard_tableaux(p) == count_tableaux_recursive(p, memo));
}

TEST_CASE("squared tableau counts sum to n factorial") {
    for (long long n = 0; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto& p : enumerate_partitions(n)) {
            const BigInt f = num_standard_tableaux(p);
            total += f * f;
        }
        CHECK(total == factorial(n));
    }
}
