#include "bachet/series.hpp"

namespace bachet {

namespace {
constexpr std::size_t kMaxDegree = 50'000'000;

void check_degree(std::size_t d) {
    if (d > kMaxDegree) throw std::overflow_error("TruncatedSeries: degree bound too large");
}
}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree_bound) {
    check_degree(degree_bound);
    coeffs_.assign(degree_bound + 1, Int(0));
}

TruncatedSeries TruncatedSeries::polynomial(std::vector<Int> coeffs, std::size_t degree_bound) {
    if (coeffs.size() > degree_bound + 1)
        throw std::invalid_argument("TruncatedSeries::polynomial: coefficients past the bound");
    TruncatedSeries s(degree_bound);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = std::move(coeffs[i]);
    return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t t, std::size_t degree_bound) {
    if (t == 0) throw std::invalid_argument("TruncatedSeries::geometric: t must be positive");
    TruncatedSeries s(degree_bound);
    for (std::size_t k = 0;;) {
        s.coeffs_[k] = 1;
        if (t > degree_bound - k) break;
        k += t;
    }
    return s;
}

const Int& TruncatedSeries::coeff(std::size_t k) const {
    if (k >= coeffs_.size())
        throw std::out_of_range("TruncatedSeries: coefficient past the degree bound");
    return coeffs_[k];
}

void TruncatedSeries::set_coeff(std::size_t k, Int v) {
    if (k >= coeffs_.size())
        throw std::out_of_range("TruncatedSeries: coefficient past the degree bound");
    coeffs_[k] = std::move(v);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const std::size_t d = std::min(degree_bound(), o.degree_bound());
    TruncatedSeries out(d);
    for (std::size_t i = 0; i <= d && i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::size_t jmax = d - i;
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (o.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const std::size_t d = std::min(degree_bound(), o.degree_bound());
    TruncatedSeries out(d);
    for (std::size_t i = 0; i <= d; ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    const std::size_t d = std::min(degree_bound(), o.degree_bound());
    TruncatedSeries out(d);
    for (std::size_t i = 0; i <= d; ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t t) const {
    if (t == 0) throw std::invalid_argument("TruncatedSeries::substitute_power: t must be positive");
    const std::size_t d = degree_bound();
    if (t > 1 && d > kMaxDegree / t)
        throw std::overflow_error("TruncatedSeries::substitute_power: result bound too large");
    TruncatedSeries out(d * t);
    for (std::size_t k = 0; k <= d; ++k) out.coeffs_[k * t] = coeffs_[k];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t s) const {
    TruncatedSeries out(degree_bound());
    for (std::size_t k = s; k <= degree_bound(); ++k) out.coeffs_[k] = coeffs_[k - s];
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_bound) const {
    if (new_bound > degree_bound())
        throw std::invalid_argument("TruncatedSeries::truncated: cannot extend the bound");
    TruncatedSeries out(new_bound);
    for (std::size_t k = 0; k <= new_bound; ++k) out.coeffs_[k] = coeffs_[k];
    return out;
}

}  // namespace bachet
