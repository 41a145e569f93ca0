#include "bachet/partition.hpp"

#include <algorithm>
#include <numeric>

namespace bachet {

namespace {

// Cap on reachability tables (bits).  Generous for anything enumerable.
constexpr std::size_t kMaxTableBits = std::size_t{1} << 27;

// w <<= s over the whole word array, in place.
void shift_left(std::vector<std::uint64_t>& w, std::size_t s) {
    const std::size_t n = w.size();
    const std::size_t q = s / 64, r = s % 64;
    if (q >= n) {
        std::fill(w.begin(), w.end(), 0);
        return;
    }
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t v = 0;
        if (i >= q) {
            v = w[i - q] << r;
            if (r != 0 && i > q) v |= w[i - q - 1] >> (64 - r);
        }
        w[i] = v;
    }
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("Partition: needs at least one part");
    std::sort(parts_.begin(), parts_.end());
    if (parts_.front() < 1)
        throw std::invalid_argument("Partition: parts must be positive");
    sum_ = std::accumulate(parts_.begin(), parts_.end(), Int(0));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += parts_[i].get_str();
    }
    return out;
}

ErParams::ErParams(unsigned long e_, unsigned long r_) : e(e_), r(r_) {
    if (r < 1) throw std::invalid_argument("ErParams: r must be at least 1");
}

bool ReachableSet::contains(std::size_t l) const {
    if (l > limit_) throw std::out_of_range("ReachableSet: index past the limit");
    return (words_[l / 64] >> (l % 64)) & 1u;
}

std::size_t ReachableSet::longest_gap() const {
    std::size_t best = 0, run = 0;
    for (std::size_t l = 0; l <= limit_; ++l) {
        if (run == 0 && l % 64 == 0 && l + 63 <= limit_ && words_[l / 64] == ~std::uint64_t{0}) {
            l += 63;
            continue;
        }
        if ((words_[l / 64] >> (l % 64)) & 1u) {
            run = 0;
        } else {
            ++run;
            if (run > best) best = run;
        }
    }
    return best;
}

std::size_t ReachableSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
}

Partition canonical_w(const Int& m) {
    if (m <= 0) throw std::invalid_argument("canonical_w: m must be positive");
    const unsigned long n = part_bound_n(m);
    std::vector<Int> parts;
    parts.reserve(n + 1);
    Int geo = 0;  // 1 + 3 + ... + 3^(n-1)
    for (unsigned long i = 0; i < n; ++i) {
        parts.push_back(pow_ui(3, i));
        geo += parts.back();
    }
    parts.push_back(m - geo);  // in [1, 3^n] by the choice of n
    return Partition(std::move(parts));
}

unsigned long part_bound_n(const Int& m) {
    if (m <= 0) throw std::invalid_argument("part_bound_n: m must be positive");
    const Int bound = 2 * m;
    Int p = 1;
    unsigned long n = 0;
    while (p * 3 <= bound) {
        p *= 3;
        ++n;
    }
    return n;
}

ReachableSet reachable_sums(const Partition& p, const ErParams& params) {
    const Int limit_z = Int(params.r) * p.sum();
    const std::size_t limit = to_index(limit_z);
    if (limit >= kMaxTableBits)
        throw std::overflow_error("reachable_sums: table would exceed the size cap");

    ReachableSet rs;
    rs.limit_ = limit;
    rs.words_.assign(limit / 64 + 1, 0);
    rs.words_[0] = 1;  // the all-zero combination

    std::vector<std::uint64_t> term;
    for (const Int& part : p.parts()) {
        const std::size_t shift = to_index(part);
        term = rs.words_;
        for (unsigned long k = 0; k < params.r; ++k) {
            shift_left(term, shift);
            for (std::size_t i = 0; i < term.size(); ++i) rs.words_[i] |= term[i];
        }
    }
    return rs;
}

bool is_er_complete(const Partition& p, const ErParams& params) {
    return reachable_sums(p, params).longest_gap() <= params.e;
}

bool satisfies_park_inequalities(const Partition& p, const ErParams& params) {
    const Int slack = params.e + 1;
    Int prefix = 0;
    for (const Int& part : p.parts()) {
        if (part > slack + Int(params.r) * prefix) return false;
        prefix += part;
    }
    return true;
}

bool is_bachet(const Partition& p) {
    return p.size() == part_bound_n(p.sum()) + 1 &&
           satisfies_park_inequalities(p, ErParams::two_pan());
}

}  // namespace bachet
