#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace betti {

using BigInt = boost::multiprecision::cpp_int;

struct TruncationMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Formal power series sum_k a_k t^k known exactly for 0 <= k <= D.
// Arithmetic between series of different D is refused.
class PoincareSeries {
public:
    explicit PoincareSeries(int max_degree = 0);
    PoincareSeries(int max_degree, std::vector<BigInt> coefficients);

    static PoincareSeries one(int max_degree);
    static PoincareSeries monomial(int degree, const BigInt& c, int max_degree);

    int max_degree() const noexcept { return max_degree_; }
    const BigInt& operator[](int k) const;
    BigInt& operator[](int k);
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;
    bool non_negative() const;

    PoincareSeries& operator+=(const PoincareSeries& other);
    PoincareSeries& operator-=(const PoincareSeries& other);
    PoincareSeries& operator*=(const PoincareSeries& other);
    PoincareSeries& operator*=(const BigInt& c);

    // this *= 1/(1 - t^k), k >= 1.
    PoincareSeries& divide_one_minus(int k);
    // this *= t^k, k >= 0; the truncation degree is unchanged.
    PoincareSeries shifted(int k) const;
    // this / t^k as a series of degree D - k. Throws if a coefficient below k is nonzero.
    PoincareSeries lowered(int k) const;
    // Same series known to a smaller degree.
    PoincareSeries truncated(int max_degree) const;

    // "1,0,2,0,5"; decimal coefficients in degree order.
    std::string to_string() const;

    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b) = default;

private:
    void require_same(const PoincareSeries& other, const char* op) const;

    int max_degree_;
    std::vector<BigInt> coeffs_;
};

PoincareSeries operator+(PoincareSeries a, const PoincareSeries& b);
PoincareSeries operator-(PoincareSeries a, const PoincareSeries& b);
PoincareSeries operator*(PoincareSeries a, const PoincareSeries& b);

std::ostream& operator<<(std::ostream& os, const PoincareSeries& s);

} // namespace betti
