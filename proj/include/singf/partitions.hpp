#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace singf {

/// Integer partition kappa = (kappa_1 >= ... >= kappa_l >= 1), stored with
/// trailing zeros trimmed. The empty partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive after trimming");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Row i (0-based); zero beyond the last row.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    const std::vector<int>& parts() const { return parts_; }

    /// Column lengths kappa'_j for j = 0..kappa_1-1 (0-based columns).
    std::vector<int> conjugate() const {
        std::vector<int> conj(first_part(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return conj;
    }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

inline int partition_weight(const Partition& kappa) { return kappa.weight(); }

/// All partitions of `degree` with at most `max_length` parts (and, when
/// bounded, first part at most `max_part`), in reverse-lexicographic order.
/// The order is fixed so that series summed over a PartitionSet are
/// bit-reproducible.
class PartitionSet {
  public:
    PartitionSet(int degree, int max_length, std::optional<int> max_part,
                 std::vector<Partition> members)
        : degree_(degree),
          max_length_(max_length),
          max_part_(max_part),
          members_(std::move(members)) {}

    int degree() const { return degree_; }
    int max_length() const { return max_length_; }
    std::optional<int> max_part() const { return max_part_; }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Partition>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

  private:
    int degree_;
    int max_length_;
    std::optional<int> max_part_;
    std::vector<Partition> members_;
};

namespace detail {

inline void emit_partitions(int remaining, int max_length, int max_first,
                            std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (max_length == 0) return;
    int hi = std::min(remaining, max_first);
    // smallest admissible first part: ceil(remaining / max_length)
    int lo = (remaining + max_length - 1) / max_length;
    for (int first = hi; first >= lo; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, max_length - 1, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

inline PartitionSet enumerate_partitions(int k, int max_length) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: degree must be non-negative");
    if (max_length < 1) throw std::invalid_argument("enumerate_partitions: max_length must be positive");
    std::vector<Partition> members;
    std::vector<int> prefix;
    detail::emit_partitions(k, max_length, k, prefix, members);
    return PartitionSet(k, max_length, std::nullopt, std::move(members));
}

inline PartitionSet enumerate_bounded(int k, int max_length, int max_part) {
    if (k < 0) throw std::invalid_argument("enumerate_bounded: degree must be non-negative");
    if (max_length < 1) throw std::invalid_argument("enumerate_bounded: max_length must be positive");
    if (max_part < 1) throw std::invalid_argument("enumerate_bounded: max_part must be positive");
    std::vector<Partition> members;
    std::vector<int> prefix;
    detail::emit_partitions(k, max_length, max_part, prefix, members);
    return PartitionSet(k, max_length, max_part, std::move(members));
}

}  // namespace singf
