#include "arrangelab/exact.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace arrangelab {

namespace {

struct Overflow {};

// Overflow-checked 64-bit cell for the fast path.
struct Checked {
    std::int64_t v = 0;

    friend Checked operator*(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return {r};
    }
    friend Checked operator-(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return {r};
    }
    friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
    bool is_zero() const { return v == 0; }
};

bool is_zero(const BigInt& x) { return x.is_zero(); }
bool is_zero(const Checked& x) { return x.is_zero(); }

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    T prev{1};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && is_zero(a[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = T{0};
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::vector<Checked>>> narrow(const std::vector<IntVector>& rows) {
    constexpr std::int64_t limit = std::int64_t{1} << 31;
    std::vector<std::vector<Checked>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Checked> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            if (x >= limit || x <= -limit) return std::nullopt;
            r.push_back({static_cast<std::int64_t>(x)});
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("empty rational");
    auto parse_int = [](std::string_view s) {
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
        BigInt v(std::string(s.substr(i)));
        return s.front() == '-' ? BigInt(-v) : v;
    };
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(token));
    const BigInt num = parse_int(token.substr(0, slash));
    const BigInt den = parse_int(token.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

IntVector canonical_normal(const std::vector<Rational>& coefficients) {
    BigInt lcm_den = 1;
    for (const auto& q : coefficients) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(q)));
    IntVector v;
    v.reserve(coefficients.size());
    BigInt content = 0;
    for (const auto& q : coefficients) {
        BigInt x = numerator(q) * (lcm_den / denominator(q));
        content = boost::multiprecision::gcd(content, BigInt(abs(x)));
        v.push_back(std::move(x));
    }
    if (content.is_zero()) throw std::invalid_argument("zero normal vector");
    int sign = 0;
    for (const auto& x : v)
        if (!x.is_zero()) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    for (auto& x : v) x = x / content * sign;
    return v;
}

std::size_t integer_rank(const std::vector<IntVector>& rows) {
    if (auto small = narrow(rows)) {
        try {
            return bareiss_rank(std::move(*small));
        } catch (const Overflow&) {
        }
    }
    return bareiss_rank(rows);
}

}  // namespace arrangelab
