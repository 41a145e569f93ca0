#include "bachet/macmahon.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace bachet {

namespace {

constexpr unsigned long long kCountCap = 1ull << 62;

// Saturating add; saturation can only kick in far above 1, so "exactly one
// representation" is still decided exactly.
unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    return (a >= kCountCap - b) ? kCountCap : a + b;
}

// Proper divisors of n in [2, n), ascending.
std::vector<unsigned long> proper_divisors(unsigned long n) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 2; d <= n / d; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        const unsigned long q = n / d;
        if (q != d) divs.push_back(q);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void factorize_rec(unsigned long n, std::vector<Int>& prefix,
                   std::vector<OrderedFactorization>& out) {
    // First factor ascending, tails recursively: the output is ascending
    // lexicographic.  The single-factor sequence [n] sorts last.
    for (unsigned long d : proper_divisors(n)) {
        prefix.emplace_back(d);
        factorize_rec(n / d, prefix, out);
        prefix.pop_back();
    }
    prefix.emplace_back(n);
    out.push_back({prefix});
    prefix.pop_back();
}

}  // namespace

Int OrderedFactorization::product() const {
    Int p = 1;
    for (const Int& f : factors) p *= f;
    return p;
}

std::string OrderedFactorization::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].get_str();
    }
    return out;
}

MultiplicityPartition::MultiplicityPartition(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("MultiplicityPartition: needs at least one entry");
    sum_ = 0;
    const Int* prev = nullptr;
    for (const auto& [value, mult] : entries_) {
        if (value < 1) throw std::invalid_argument("MultiplicityPartition: values must be positive");
        if (mult < 1) throw std::invalid_argument("MultiplicityPartition: multiplicities must be positive");
        if (prev && !(*prev < value))
            throw std::invalid_argument("MultiplicityPartition: values must be strictly increasing");
        sum_ += value * Int(mult);
        prev = &value;
    }
}

MultiplicityPartition MultiplicityPartition::from_parts(const std::vector<Int>& parts) {
    std::vector<Int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Entry> entries;
    for (const Int& v : sorted) {
        if (!entries.empty() && entries.back().first == v)
            ++entries.back().second;
        else
            entries.push_back({v, 1});
    }
    return MultiplicityPartition(std::move(entries));
}

std::vector<Int> MultiplicityPartition::to_parts() const {
    std::vector<Int> parts;
    for (const auto& [value, mult] : entries_)
        for (unsigned long i = 0; i < mult; ++i) parts.push_back(value);
    return parts;
}

std::string MultiplicityPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += " + ";
        const auto& [value, mult] = entries_[i];
        if (mult == 1) {
            out += value.get_str();
        } else {
            out += "(" + value.get_str() + ")^" + std::to_string(mult);
        }
    }
    return out;
}

std::vector<OrderedFactorization> ordered_factorizations(const Int& n) {
    if (n < 2) throw std::invalid_argument("ordered_factorizations: n must be at least 2");
    const std::size_t nn = to_index(n);
    std::vector<OrderedFactorization> out;
    std::vector<Int> prefix;
    factorize_rec(nn, prefix, out);
    return out;
}

MultiplicityPartition perfect_from_factorization(const OrderedFactorization& f) {
    if (f.factors.empty())
        throw std::invalid_argument("perfect_from_factorization: empty factorization");
    std::vector<MultiplicityPartition::Entry> entries;
    Int cum = 1;
    for (const Int& factor : f.factors) {
        if (factor < 2)
            throw std::invalid_argument("perfect_from_factorization: factors must be at least 2");
        const unsigned long mult = to_index(factor - 1);
        if (!entries.empty() && entries.back().first == cum) {
            // cannot fire: factors >= 2 keep the cumulative products strictly increasing
            assert(!"equal cumulative products from factors >= 2");
            entries.back().second += mult;
        } else {
            entries.push_back({cum, mult});
        }
        cum *= factor;
    }
    return MultiplicityPartition(std::move(entries));
}

OrderedFactorization factorization_from_perfect(const MultiplicityPartition& p) {
    if (const auto defect = perfect_defect(p)) {
        throw std::invalid_argument(
            "factorization_from_perfect: not a perfect partition; " + defect->target.get_str() +
            " has " + std::to_string(defect->representations) + " representations");
    }
    // Perfection forces the structure: value i is the product of the first i
    // factors, and each factor is one more than the preceding multiplicity.
    std::vector<Int> factors;
    Int cum = 1;
    for (const auto& [value, mult] : p.entries()) {
        if (value != cum)
            throw std::invalid_argument("factorization_from_perfect: values are not cumulative products");
        factors.emplace_back(Int(mult) + 1);
        cum *= factors.back();
    }
    return {std::move(factors)};
}

std::optional<UniquenessDefect> perfect_defect(const MultiplicityPartition& p) {
    const std::size_t m = to_index(p.sum());
    std::vector<unsigned long long> cnt(m + 1, 0), nxt;
    cnt[0] = 1;
    for (const auto& [value, mult] : p.entries()) {
        const std::size_t v = to_index(value);
        nxt.assign(m + 1, 0);
        for (std::size_t l = 0; l <= m; ++l) {
            if (cnt[l] == 0) continue;
            for (unsigned long a = 0; a <= mult; ++a) {
                const std::size_t pos = l + a * v;
                if (pos > m) break;
                nxt[pos] = sat_add(nxt[pos], cnt[l]);
            }
        }
        cnt.swap(nxt);
    }
    for (std::size_t l = 0; l <= m; ++l)
        if (cnt[l] != 1) return UniquenessDefect{Int(static_cast<unsigned long>(l)), cnt[l]};
    return std::nullopt;
}

bool is_perfect(const MultiplicityPartition& p) { return !perfect_defect(p).has_value(); }

MultiplicityPartition subperfect_from_factorization(const OrderedFactorization& f) {
    if (f.factors.empty())
        throw std::invalid_argument("subperfect_from_factorization: empty factorization");
    if (f.product() % 2 == 0)
        throw std::invalid_argument("subperfect_from_factorization: product must be odd");
    std::vector<MultiplicityPartition::Entry> entries;
    Int cum = 1;
    for (const Int& factor : f.factors) {
        if (factor < 2)
            throw std::invalid_argument("subperfect_from_factorization: factors must be at least 2");
        // odd product means every factor is odd and at least 3
        const unsigned long mult = to_index((factor - 1) / 2);
        entries.push_back({cum, mult});
        cum *= factor;
    }
    return MultiplicityPartition(std::move(entries));
}

std::optional<UniquenessDefect> subperfect_defect(const MultiplicityPartition& p) {
    const std::size_t m = to_index(p.sum());
    const std::size_t width = 2 * m + 1;  // offsets -m..m, index l + m
    std::vector<unsigned long long> cnt(width, 0), nxt;
    cnt[m] = 1;
    for (const auto& [value, mult] : p.entries()) {
        const std::size_t v = to_index(value);
        const long long k = static_cast<long long>(mult);
        nxt.assign(width, 0);
        for (std::size_t idx = 0; idx < width; ++idx) {
            if (cnt[idx] == 0) continue;
            for (long long c = -k; c <= k; ++c) {
                const long long j = static_cast<long long>(idx) + c * static_cast<long long>(v);
                if (j < 0 || j >= static_cast<long long>(width)) continue;
                nxt[static_cast<std::size_t>(j)] = sat_add(nxt[static_cast<std::size_t>(j)], cnt[idx]);
            }
        }
        cnt.swap(nxt);
        // counts only ever grow from here, so an overshoot is already final
        for (std::size_t l = 0; l <= m; ++l)
            if (cnt[l + m] > 1) return UniquenessDefect{Int(static_cast<unsigned long>(l)), cnt[l + m]};
    }
    for (std::size_t l = 0; l <= m; ++l)
        if (cnt[l + m] != 1) return UniquenessDefect{Int(static_cast<unsigned long>(l)), cnt[l + m]};
    return std::nullopt;
}

bool is_subperfect(const MultiplicityPartition& p) { return !subperfect_defect(p).has_value(); }

}  // namespace bachet
