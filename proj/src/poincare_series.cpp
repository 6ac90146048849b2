#include "betti/poincare_series.hpp"

#include <sstream>

namespace betti {

PoincareSeries::PoincareSeries(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("truncation degree must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

PoincareSeries::PoincareSeries(int max_degree, std::vector<BigInt> coefficients) : PoincareSeries(max_degree)
{
    if (coefficients.size() > coeffs_.size())
        throw std::invalid_argument("more coefficients than the truncation degree allows");
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        coeffs_[k] = std::move(coefficients[k]);
}

PoincareSeries PoincareSeries::one(int max_degree)
{
    PoincareSeries s(max_degree);
    s.coeffs_[0] = 1;
    return s;
}

PoincareSeries PoincareSeries::monomial(int degree, const BigInt& c, int max_degree)
{
    PoincareSeries s(max_degree);
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    if (degree <= max_degree)
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

const BigInt& PoincareSeries::operator[](int k) const
{
    return coeffs_.at(static_cast<std::size_t>(k));
}

BigInt& PoincareSeries::operator[](int k)
{
    return coeffs_.at(static_cast<std::size_t>(k));
}

bool PoincareSeries::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool PoincareSeries::non_negative() const
{
    for (const auto& c : coeffs_)
        if (c < 0)
            return false;
    return true;
}

void PoincareSeries::require_same(const PoincareSeries& other, const char* op) const
{
    if (other.max_degree_ != max_degree_)
        throw TruncationMismatch(std::string(op) + ": truncation degrees differ (" + std::to_string(max_degree_) +
                                 " vs " + std::to_string(other.max_degree_) + ")");
}

PoincareSeries& PoincareSeries::operator+=(const PoincareSeries& other)
{
    require_same(other, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

PoincareSeries& PoincareSeries::operator-=(const PoincareSeries& other)
{
    require_same(other, "subtract");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

PoincareSeries& PoincareSeries::operator*=(const PoincareSeries& other)
{
    require_same(other, "multiply");
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            if (other.coeffs_[j] != 0)
                out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

PoincareSeries& PoincareSeries::operator*=(const BigInt& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

PoincareSeries& PoincareSeries::divide_one_minus(int k)
{
    if (k < 1)
        throw std::invalid_argument("divide_one_minus: k must be positive");
    for (std::size_t i = static_cast<std::size_t>(k); i < coeffs_.size(); ++i)
        coeffs_[i] += coeffs_[i - static_cast<std::size_t>(k)];
    return *this;
}

PoincareSeries PoincareSeries::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("shifted: k must be non-negative");
    PoincareSeries out(max_degree_);
    for (int i = 0; i + k <= max_degree_; ++i)
        out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

PoincareSeries PoincareSeries::lowered(int k) const
{
    if (k < 0 || k > max_degree_)
        throw std::invalid_argument("lowered: shift out of range");
    for (int i = 0; i < k; ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
            throw std::domain_error("lowered: nonzero coefficient in degree " + std::to_string(i) +
                                    " would move to a negative degree");
    PoincareSeries out(max_degree_ - k);
    for (int i = k; i <= max_degree_; ++i)
        out.coeffs_[static_cast<std::size_t>(i - k)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

PoincareSeries PoincareSeries::truncated(int max_degree) const
{
    if (max_degree > max_degree_)
        throw TruncationMismatch("truncated: cannot extend a series beyond its known degree");
    PoincareSeries out(max_degree);
    for (int i = 0; i <= max_degree; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

std::string PoincareSeries::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k)
            os << ',';
        os << coeffs_[k];
    }
    return os.str();
}

PoincareSeries operator+(PoincareSeries a, const PoincareSeries& b)
{
    return a += b;
}

PoincareSeries operator-(PoincareSeries a, const PoincareSeries& b)
{
    return a -= b;
}

PoincareSeries operator*(PoincareSeries a, const PoincareSeries& b)
{
    return a *= b;
}

std::ostream& operator<<(std::ostream& os, const PoincareSeries& s)
{
    return os << '[' << s.to_string() << "] (deg<=" << s.max_degree() << ')';
}

} // namespace betti
