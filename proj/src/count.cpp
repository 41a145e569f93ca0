#include "bachet/count.hpp"

#include "bachet/partition.hpp"

namespace bachet {

namespace {

constexpr std::size_t kMaxTable = 10'000'000;

std::size_t table_arg(const Int& k) {
    const std::size_t v = to_index(k);
    if (v >= kMaxTable) throw std::overflow_error("CountTable: argument too large to tabulate");
    return v;
}

// F(x^s) truncated at degree_bound.  F is built only to degree_bound/s and
// substituted; the remaining coefficients up to the bound are exactly zero
// because the support of F(x^s) is the multiples of s.
TruncatedSeries substituted_ternary(std::size_t s, std::size_t degree_bound) {
    const TruncatedSeries small = ternary_series(degree_bound / s).substitute_power(s);
    TruncatedSeries out(degree_bound);
    for (std::size_t k = 0; k <= small.degree_bound() && k <= degree_bound; ++k)
        out.set_coeff(k, small.coeff(k));
    return out;
}

}  // namespace

const std::vector<Int>& CountTable::f_table(unsigned long base, std::size_t k) {
    if (base < 2) throw std::invalid_argument("CountTable: base must be at least 2");
    std::vector<Int>& t = f_[base];
    if (t.empty()) t.emplace_back(1);  // f(0) = 1
    // f(k) = sum_{i <= floor(k/base)} f(i), folded into the running form
    // f(k) = f(k - base) + f(floor(k/base)); below base the sum is just f(0).
    while (t.size() <= k) {
        const std::size_t j = t.size();
        t.push_back(j < base ? Int(1) : t[j - base] + t[j / base]);
    }
    return t;
}

Int CountTable::f(const Int& k) { return f_ary(3, k); }

Int CountTable::f_ary(unsigned long base, const Int& k) {
    if (k < 0) return 0;
    const std::size_t kk = table_arg(k);
    std::lock_guard<std::mutex> lock(mu_);
    return f_table(base, kk)[kk];
}

Int CountTable::g(const Int& k) {
    if (k < 0) return 0;
    const std::size_t kk = table_arg(k);
    std::lock_guard<std::mutex> lock(mu_);
    if (g_.size() <= kk) {
        const TruncatedSeries gs = correction_series(kk);
        g_.clear();
        g_.reserve(kk + 1);
        for (std::size_t i = 0; i <= kk; ++i) g_.push_back(gs.coeff(i));
    }
    return g_[kk];
}

CountTable& count_table() {
    static CountTable table;
    return table;
}

Int ternary_f(const Int& k) { return count_table().f(k); }

Int ary_count(unsigned long base, const Int& k) { return count_table().f_ary(base, k); }

Int rodseth_g(const Int& k) { return count_table().g(k); }

TruncatedSeries ary_series(unsigned long base, std::size_t degree_bound) {
    if (base < 2) throw std::invalid_argument("ary_series: base must be at least 2");
    TruncatedSeries out = TruncatedSeries::geometric(1, degree_bound);
    for (std::size_t p = base; p <= degree_bound; p *= base) {
        out = out * TruncatedSeries::geometric(p, degree_bound);
        if (p > degree_bound / base) break;
    }
    return out;
}

TruncatedSeries ternary_series(std::size_t degree_bound) { return ary_series(3, degree_bound); }

TruncatedSeries correction_series(std::size_t degree_bound) {
    TruncatedSeries out(degree_bound);
    for (unsigned long j = 0;; ++j) {
        const Int low_z = pow_ui(3, j) - 1;  // lowest degree of the j-th term
        if (low_z > Int(degree_bound)) break;
        const std::size_t low = to_index(low_z);
        const std::size_t p3j = to_index(pow_ui(3, j));

        TruncatedSeries term = TruncatedSeries::geometric(2 * p3j, degree_bound);
        term = term * substituted_ternary(5 * p3j, degree_bound);
        for (unsigned long i = 0; i <= j; ++i)
            term = term * TruncatedSeries::geometric(to_index(pow_ui(3, i)), degree_bound);
        out = out + term.shifted_up(low);
    }
    return out;
}

Int count_bachet(const Int& m) {
    if (m <= 0) throw std::invalid_argument("count_bachet: m must be positive");
    const unsigned long n = part_bound_n(m);
    const Int f_arg = (pow_ui(3, n + 1) - 1) / 2 - m;
    Int result = ternary_f(f_arg);
    if (n >= 1) {
        const Int g_arg = (pow_ui(3, n) - 1) / 2 + pow_ui(3, n - 1) - 1 - m;
        result -= rodseth_g(g_arg);
    }
    return result;
}

bool is_sandwiched(const Int& m) {
    if (m <= 0) throw std::invalid_argument("is_sandwiched: m must be positive");
    const unsigned long n = part_bound_n(m);
    if (n == 0) return true;  // m = 1, the whole n = 0 window
    return (pow_ui(3, n) - 1) / 2 + pow_ui(3, n - 1) <= m;
}

}  // namespace bachet
