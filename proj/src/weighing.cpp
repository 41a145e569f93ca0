#include "bachet/weighing.hpp"

#include <algorithm>
#include <limits>

namespace bachet {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;
constexpr std::size_t kMaxCells = 25'000'000;  // ~100 MB of layered tables

// Layered DP over the weights: table[i][t] is the fewest nonzero
// coefficients with which weights 0..i-1 reach the sum t (offset by lo_sum).
struct SolveTables {
    std::vector<std::size_t> w;  // weights, ascending
    long lo_coeff, hi_coeff;
    long long lo_sum, hi_sum;
    std::size_t width;
    std::vector<std::vector<int>> layer;  // layer[i], i = 0..n

    std::size_t at(long long t) const { return static_cast<std::size_t>(t - lo_sum); }
    bool in_range(long long t) const { return t >= lo_sum && t <= hi_sum; }
};

SolveTables build_tables(const Partition& weights, const WeighMode& mode) {
    SolveTables s;
    s.lo_coeff = mode.lo;
    s.hi_coeff = mode.hi;
    long long total = 0;
    for (const Int& wz : weights.parts()) {
        const std::size_t v = to_index(wz);
        if (v > static_cast<std::size_t>(std::numeric_limits<long long>::max() / 4) ||
            total > std::numeric_limits<long long>::max() / 4 - static_cast<long long>(v))
            throw std::overflow_error("plan: weights too large");
        s.w.push_back(v);
        total += static_cast<long long>(v);
    }
    // keeps every sum below within range and the width cap decisive
    if (total > static_cast<long long>(kMaxCells))
        throw std::overflow_error("plan: solution table would exceed the size cap");
    s.lo_sum = mode.lo < 0 ? mode.lo * total : 0;
    s.hi_sum = mode.hi * total;
    s.width = static_cast<std::size_t>(s.hi_sum - s.lo_sum) + 1;
    const std::size_t n = s.w.size();
    if (s.width > kMaxCells / (n + 1))
        throw std::overflow_error("plan: solution table would exceed the size cap");

    s.layer.assign(n + 1, std::vector<int>(s.width, kInf));
    s.layer[0][s.at(0)] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long long wi = static_cast<long long>(s.w[i]);
        for (std::size_t t = 0; t < s.width; ++t) {
            if (s.layer[i][t] == kInf) continue;
            const long long base = static_cast<long long>(t) + s.lo_sum;
            for (long c = mode.lo; c <= mode.hi; ++c) {
                const long long nt = base + c * wi;
                if (!s.in_range(nt)) continue;
                const int cost = s.layer[i][t] + (c != 0 ? 1 : 0);
                int& cell = s.layer[i + 1][s.at(nt)];
                if (cost < cell) cell = cost;
            }
        }
    }
    return s;
}

// Reconstructs the unique tie-break-minimal assignment for target t, or
// nothing if t is unreachable.  Picks, from the largest weight down, the
// numerically smallest coefficient that still admits a completion within the
// remaining nonzero budget.
std::optional<std::vector<long>> reconstruct(const SolveTables& s, long long target) {
    const std::size_t n = s.w.size();
    if (!s.in_range(target) || s.layer[n][s.at(target)] == kInf) return std::nullopt;
    std::vector<long> coeffs(n, 0);
    int budget = s.layer[n][s.at(target)];
    long long t = target;
    for (std::size_t i = n; i-- > 0;) {
        bool found = false;
        for (long c = s.lo_coeff; c <= s.hi_coeff; ++c) {
            const long long nt = t - c * static_cast<long long>(s.w[i]);
            if (!s.in_range(nt)) continue;
            const int used = (c != 0 ? 1 : 0);
            if (s.layer[i][s.at(nt)] + used <= budget) {
                coeffs[i] = c;
                budget -= used;
                t = nt;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;  // cannot happen for a reachable target
    }
    return coeffs;
}

void assignments_rec(const SolveTables& s, std::size_t i, long long t, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (i == 0) {
        if (t == 0) {
            std::vector<long> row(cur.rbegin(), cur.rend());
            out.push_back(std::move(row));
        }
        return;
    }
    for (long c = s.lo_coeff; c <= s.hi_coeff && out.size() < cap; ++c) {
        const long long nt = t - c * static_cast<long long>(s.w[i - 1]);
        if (!s.in_range(nt) || s.layer[i - 1][s.at(nt)] == kInf) continue;
        cur.push_back(c);
        assignments_rec(s, i - 1, nt, cur, out, cap);
        cur.pop_back();
    }
}

std::string cell_text(const std::optional<std::vector<long>>& coeffs, std::size_t i) {
    if (!coeffs) return "—";  // unreachable marker
    const long c = (*coeffs)[i];
    if (c > 0) return "+" + std::to_string(c);
    return std::to_string(c);
}

// Columns, not bytes: UTF-8 continuation bytes do not take a column.
std::size_t display_len(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char b : s)
        if ((b & 0xC0) != 0x80) ++n;
    return n;
}

std::string padded(const std::string& s, std::size_t width) {
    const std::size_t len = display_len(s);
    if (len >= width) return s;
    return std::string(width - len, ' ') + s;
}

}  // namespace

WeighMode WeighMode::bounded(unsigned long r) {
    if (r < 1) throw std::invalid_argument("WeighMode::bounded: r must be at least 1");
    if (r > 1000000) throw std::invalid_argument("WeighMode::bounded: r too large");
    return {0, static_cast<long>(r)};
}

std::string WeighMode::name() const {
    if (lo == -1 && hi == 1) return "two-pan";
    if (lo == 0 && hi == 1) return "one-pan";
    return "0.." + std::to_string(hi);
}

WeighingPlan::WeighingPlan(Partition weights, WeighMode mode, std::vector<WeighingRow> rows)
    : weights_(std::move(weights)), mode_(mode), rows_(std::move(rows)) {
    for (const WeighingRow& row : rows_) {
        if (!row.coefficients) continue;
        if (row.coefficients->size() != weights_.size())
            throw std::logic_error("WeighingPlan: coefficient vector misaligned");
        Int total = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            const long c = (*row.coefficients)[i];
            if (c < mode_.lo || c > mode_.hi)
                throw std::logic_error("WeighingPlan: coefficient outside the mode range");
            total += Int(c) * weights_.part(i);
        }
        const Int expect = row.negated ? Int(-row.target) : row.target;
        if (total != expect) throw std::logic_error("WeighingPlan: row does not sum to its target");
    }
}

std::size_t WeighingPlan::unreachable_count() const {
    std::size_t n = 0;
    for (const WeighingRow& row : rows_)
        if (!row.reachable()) ++n;
    return n;
}

WeighingPlan plan(const Partition& weights, const WeighMode& mode, const std::vector<Int>& targets) {
    const SolveTables tables = build_tables(weights, mode);
    std::vector<WeighingRow> rows;
    rows.reserve(targets.size());
    for (const Int& target : targets) {
        WeighingRow row;
        row.target = target;
        Int wanted = target;
        if (target < 0) {
            if (!mode.is_signed()) {
                rows.push_back(std::move(row));  // unreachable without a second pan
                continue;
            }
            row.negated = true;
            wanted = -target;
        }
        if (wanted.fits_slong_p()) {
            row.coefficients = reconstruct(tables, wanted.get_si());
        }
        rows.push_back(std::move(row));
    }
    return WeighingPlan(weights, mode, std::move(rows));
}

std::string render_table(const WeighingPlan& p) {
    const std::vector<Int>& w = p.weights().parts();

    std::vector<std::string> header;
    header.push_back("l");
    for (const Int& wi : w) header.push_back(wi.get_str());

    std::vector<std::vector<std::string>> body;
    bool any_negated = false;
    for (const WeighingRow& row : p.rows()) {
        std::vector<std::string> cells;
        cells.push_back(row.target.get_str());
        for (std::size_t i = 0; i < w.size(); ++i) cells.push_back(cell_text(row.coefficients, i));
        body.push_back(std::move(cells));
        any_negated = any_negated || row.negated;
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = display_len(header[i]);
        for (const auto& cells : body) width[i] = std::max(width[i], display_len(cells[i]));
    }

    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += padded(cells[i], width[i]);
            out += (i == 0) ? " |" : "";
            if (i + 1 < cells.size()) out += ' ';
        }
        out += '\n';
    };
    emit_row(header);
    std::size_t rule = 0;
    for (std::size_t i = 0; i < width.size(); ++i) rule += width[i] + (i == 0 ? 2 : 1);
    out += std::string(rule, '-');
    out += '\n';
    for (const auto& cells : body) emit_row(cells);
    if (any_negated)
        out += "note: a negative target is weighed with the pans interchanged\n";
    return out;
}

std::vector<std::vector<long>> enumerate_assignments(const Partition& weights,
                                                     const WeighMode& mode, const Int& target,
                                                     std::size_t cap) {
    const SolveTables tables = build_tables(weights, mode);
    std::vector<std::vector<long>> out;
    if (!target.fits_slong_p()) return out;
    const long long t = target.get_si();
    if (!tables.in_range(t)) return out;
    std::vector<long> cur;
    assignments_rec(tables, tables.w.size(), t, cur, out, cap);
    return out;
}

}  // namespace bachet
