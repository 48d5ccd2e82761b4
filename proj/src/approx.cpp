#include "approx.hpp"

#include <string>

#include "errors.hpp"
#include "format.hpp"

namespace relmat {

namespace {

void check_same_universe(const Relation& r, const Bitset& x) {
    if (x.size() != r.size())
        throw DomainError("subset width " + std::to_string(x.size()) +
                          " does not match universe size " + std::to_string(r.size()));
}

void check_capacity(std::size_t n, std::size_t max_n) {
    if (n > max_n)
        throw CapacityError("exhaustive check over 2^" + std::to_string(n) +
                            " subsets exceeds the bound n <= " + std::to_string(max_n));
}

}  // namespace

Bitset lower_approx(const Relation& r, const Bitset& x) {
    check_same_universe(r, x);
    Bitset out(r.size());
    for (std::size_t u = 0; u < r.size(); ++u)
        if (r.successors(u).is_subset_of(x)) out.set(u);
    return out;
}

Bitset upper_approx(const Relation& r, const Bitset& x) {
    check_same_universe(r, x);
    Bitset out(r.size());
    for (std::size_t u = 0; u < r.size(); ++u)
        if (r.successors(u).intersects(x)) out.set(u);
    return out;
}

PropertyReport check_h_properties(const Relation& r, std::size_t max_n) {
    const std::size_t n = r.size();
    check_capacity(n, max_n);
    const Universe& u = r.universe();
    const std::uint64_t subsets = std::uint64_t{1} << n;

    std::vector<Bitset> h;
    h.reserve(subsets);
    for (std::uint64_t m = 0; m < subsets; ++m) h.push_back(upper_approx(r, Bitset::from_mask(n, m)));

    PropertyReport report;

    auto& empty = report.add("H-empty");
    if (h[0].any()) empty.fail({{"H_of_empty", set_to_json(u, h[0])}});

    auto& unions = report.add("H-union");
    for (std::uint64_t x = 0; x < subsets; ++x) {
        for (std::uint64_t y = 0; y < subsets; ++y) {
            if (h[x | y] != (h[x] | h[y]))
                unions.fail({{"X", set_to_json(u, Bitset::from_mask(n, x))},
                             {"Y", set_to_json(u, Bitset::from_mask(n, y))},
                             {"H_of_union", set_to_json(u, h[x | y])},
                             {"union_of_H", set_to_json(u, h[x] | h[y])}});
        }
    }

    auto& monotone = report.add("H-monotone");
    for (std::uint64_t x = 0; x < subsets; ++x) {
        for (std::uint64_t y = 0; y < subsets; ++y) {
            if ((x & ~y) == 0 && !h[x].is_subset_of(h[y]))
                monotone.fail({{"X", set_to_json(u, Bitset::from_mask(n, x))},
                               {"Y", set_to_json(u, Bitset::from_mask(n, y))},
                               {"H_X", set_to_json(u, h[x])},
                               {"H_Y", set_to_json(u, h[y])}});
        }
    }

    return report;
}

PropertyReport check_pawlak_properties(const Relation& r, std::size_t max_n) {
    if (!r.is_reflexive())
        throw PreconditionError("relation is not an equivalence relation: not reflexive");
    if (!r.is_symmetric())
        throw PreconditionError("relation is not an equivalence relation: not symmetric");
    if (!r.is_transitive())
        throw PreconditionError("relation is not an equivalence relation: not transitive");

    const std::size_t n = r.size();
    check_capacity(n, max_n);
    const Universe& u = r.universe();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    const std::uint64_t all = subsets - 1;

    std::vector<Bitset> lo, hi;
    lo.reserve(subsets);
    hi.reserve(subsets);
    for (std::uint64_t m = 0; m < subsets; ++m) {
        lo.push_back(lower_approx(r, Bitset::from_mask(n, m)));
        hi.push_back(upper_approx(r, Bitset::from_mask(n, m)));
    }
    auto set_of = [&](std::uint64_t m) { return set_to_json(u, Bitset::from_mask(n, m)); };

    PropertyReport report;

    // L and H as mask transforms, for readability below.
    auto L = [&](std::uint64_t m) { return lo[m].to_mask(); };
    auto H = [&](std::uint64_t m) { return hi[m].to_mask(); };

    // Per-subset laws: name and predicate "law holds at X".
    const std::vector<std::pair<const char*, std::function<bool(std::uint64_t)>>> unary = {
        {"3L", [&](std::uint64_t x) { return (L(x) & ~x) == 0; }},
        {"3H", [&](std::uint64_t x) { return (x & ~H(x)) == 0; }},
        {"5L", [&](std::uint64_t x) { return L(L(x)) == L(x); }},
        {"5H", [&](std::uint64_t x) { return H(H(x)) == H(x); }},
        {"7L", [&](std::uint64_t x) { return L(~x & all) == (~H(x) & all); }},
        {"7H", [&](std::uint64_t x) { return H(~x & all) == (~L(x) & all); }},
        {"8L", [&](std::uint64_t x) { return L(~L(x) & all) == (~L(x) & all); }},
        {"8H", [&](std::uint64_t x) { return H(~H(x) & all) == (~H(x) & all); }},
    };

    auto& c1l = report.add("1L");
    if (lo[all].to_mask() != all) c1l.fail({{"lower_of_U", set_to_json(u, lo[all])}});
    auto& c1h = report.add("1H");
    if (hi[all].to_mask() != all) c1h.fail({{"upper_of_U", set_to_json(u, hi[all])}});
    auto& c2l = report.add("2L");
    if (lo[0].any()) c2l.fail({{"lower_of_empty", set_to_json(u, lo[0])}});
    auto& c2h = report.add("2H");
    if (hi[0].any()) c2h.fail({{"upper_of_empty", set_to_json(u, hi[0])}});

    for (const auto& [name, holds] : unary) {
        auto& check = report.add(name);
        for (std::uint64_t x = 0; x < subsets; ++x) {
            if (!holds(x))
                check.fail({{"X", set_of(x)},
                            {"lower", set_to_json(u, lo[x])},
                            {"upper", set_to_json(u, hi[x])}});
        }
    }

    auto& c4l = report.add("4L");
    auto& c4h = report.add("4H");
    auto& c6l = report.add("6L");
    auto& c6h = report.add("6H");
    for (std::uint64_t x = 0; x < subsets; ++x) {
        for (std::uint64_t y = 0; y < subsets; ++y) {
            if (lo[x & y] != (lo[x] & lo[y]))
                c4l.fail({{"X", set_of(x)}, {"Y", set_of(y)}});
            if (hi[x | y] != (hi[x] | hi[y]))
                c4h.fail({{"X", set_of(x)}, {"Y", set_of(y)}});
            if ((x & ~y) == 0) {
                if (!lo[x].is_subset_of(lo[y])) c6l.fail({{"X", set_of(x)}, {"Y", set_of(y)}});
                if (!hi[x].is_subset_of(hi[y])) c6h.fail({{"X", set_of(x)}, {"Y", set_of(y)}});
            }
        }
    }

    return report;
}

}  // namespace relmat
