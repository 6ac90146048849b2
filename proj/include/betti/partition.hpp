#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

// Integer partition stored as a weakly decreasing list of positive parts.
// The empty partition is the unit (trivial representation).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Column <1^k>.
    static Partition column(int k);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    // Part i (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool is_column() const noexcept { return largest() <= 1; }
    // Young diagram containment.
    bool contains(const Partition& inner) const noexcept;

    std::string to_string() const;   // "3,2,1"; "" for the empty partition
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    // Canonical order: graded by size, reverse-lexicographic within a size.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n in canonical order, e.g. 4 -> (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

// All partitions whose diagram fits inside `outer`, in canonical order.
std::vector<Partition> enumerate_contained(const Partition& outer);

Partition conjugate(const Partition& p);

// lambda = 1^{l_1} 2^{l_2} ...  : part value -> multiplicity.
std::map<int, int> multiplicity_form(const Partition& p);
Partition from_multiplicity_form(const std::map<int, int>& form);

// Diagram intersection.
Partition intersection(const Partition& a, const Partition& b);

} // namespace betti
