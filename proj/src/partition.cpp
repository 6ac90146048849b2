#include "betti/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace betti {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::column(int k)
{
    if (k < 0)
        throw std::invalid_argument("column height must be non-negative");
    return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

bool Partition::contains(const Partition& inner) const noexcept
{
    if (inner.length() > length())
        return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    if (auto c = a.size_ <=> b.size_; c != 0)
        return c;
    // Larger in lexicographic order comes first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '(' << p.to_string() << ')';
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        enumerate_rec(remaining - k, k, current, out);
        current.pop_back();
    }
}

void contained_rec(const Partition& outer, std::size_t row, int max_part, std::vector<int>& current,
                   std::vector<Partition>& out)
{
    out.emplace_back(current);
    if (row >= static_cast<std::size_t>(outer.length()))
        return;
    for (int k = 1; k <= std::min(max_part, outer[row]); ++k) {
        current.push_back(k);
        contained_rec(outer, row + 1, k, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, n, current, out);
    return out;
}

std::vector<Partition> enumerate_contained(const Partition& outer)
{
    std::vector<Partition> out;
    std::vector<int> current;
    contained_rec(outer, 0, outer.largest(), current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

std::map<int, int> multiplicity_form(const Partition& p)
{
    std::map<int, int> form;
    for (int part : p.parts())
        ++form[part];
    return form;
}

Partition from_multiplicity_form(const std::map<int, int>& form)
{
    std::vector<int> parts;
    for (auto it = form.rbegin(); it != form.rend(); ++it) {
        if (it->first <= 0 || it->second < 0)
            throw std::invalid_argument("invalid multiplicity form");
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
}

Partition intersection(const Partition& a, const Partition& b)
{
    std::vector<int> parts;
    for (int i = 0; i < std::min(a.length(), b.length()); ++i)
        parts.push_back(std::min(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
    return Partition(std::move(parts));
}

} // namespace betti
