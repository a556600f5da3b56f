#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace wes {

/// Dynamic weighted discrete distribution over element ids [0, m).
///
/// A Fenwick (binary indexed) tree over integer weights gives O(log m)
/// weight updates and O(log m) weight-proportional draws. Weights are
/// integers, so the running total and every prefix sum are exact; the
/// only floating-point step is the one multiplication u * total per draw.
///
/// op_count() reports the number of tree nodes touched since construction.
/// Build is O(m); each update or draw touches at most floor(log2(m)) + 1
/// nodes, which tests use to assert that no operation degenerated into a
/// linear scan.
class WeightIndex {
public:
    explicit WeightIndex(std::span<const std::uint64_t> initial_weights)
        : size_(initial_weights.size()),
          raw_(initial_weights.begin(), initial_weights.end()) {
        if (size_ == 0) throw std::invalid_argument("WeightIndex: empty weight sequence");
        tree_.assign(size_ + 1, 0);
        total_ = 0;
        for (std::size_t i = 0; i < size_; ++i) {
            tree_[i + 1] += raw_[i];
            total_ += raw_[i];
        }
        // linear-time Fenwick build: push each node's sum to its parent
        for (std::size_t i = 1; i <= size_; ++i) {
            std::size_t parent = i + (i & (~i + 1));
            if (parent <= size_) tree_[parent] += tree_[i];
            ++ops_;
        }
        top_bit_ = std::bit_floor(size_);
    }

    /// Index over m elements, all with weight 1.
    static WeightIndex uniform(std::size_t m) {
        std::vector<std::uint64_t> ones(m, 1);
        return WeightIndex(ones);
    }

    std::size_t size() const noexcept { return size_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t weight(std::size_t i) const { return raw_.at(i); }
    std::uint64_t op_count() const noexcept { return ops_; }

    /// Add delta to element i's weight. The result must stay non-negative.
    void add(std::size_t i, std::int64_t delta) {
        if (i >= size_) throw std::out_of_range("WeightIndex::add: element id out of range");
        if (delta < 0 && raw_[i] < static_cast<std::uint64_t>(-delta))
            throw std::domain_error("WeightIndex::add: weight would become negative");
        raw_[i] += delta;
        total_ += delta;
        for (std::size_t j = i + 1; j <= size_; j += j & (~j + 1)) {
            tree_[j] += delta;
            ++ops_;
        }
    }

    /// Set element i's weight to zero.
    void zero(std::size_t i) {
        if (i >= size_) throw std::out_of_range("WeightIndex::zero: element id out of range");
        add(i, -static_cast<std::int64_t>(raw_[i]));
    }

    /// Map u in [0,1) to the element whose cumulative-weight interval
    /// [prefix(i), prefix(i+1)) contains u * total. Elements with zero
    /// weight have empty intervals and are never returned.
    std::size_t draw(double u) const {
        if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("WeightIndex::draw: u outside [0,1)");
        if (total_ == 0) throw std::domain_error("WeightIndex::draw: distribution exhausted");
        double target = u * static_cast<double>(total_);
        // u < 1 can still round u*total up to total; clamp to keep target < total
        double limit = std::nextafter(static_cast<double>(total_), 0.0);
        if (target > limit) target = limit;

        std::size_t pos = 0;
        double remaining = target;
        for (std::size_t step = top_bit_; step != 0; step >>= 1) {
            std::size_t next = pos + step;
            if (next <= size_ && static_cast<double>(tree_[next]) <= remaining) {
                remaining -= static_cast<double>(tree_[next]);
                pos = next;
            }
            ++ops_;
        }
        // pos = largest k with prefix(k) <= target; since target < total this
        // lands on the unique element with positive weight covering target
        return pos;
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> raw_;  // current weights, O(1) reads
    std::vector<std::uint64_t> tree_; // 1-indexed Fenwick array
    std::uint64_t total_ = 0;
    std::size_t top_bit_ = 0;
    mutable std::uint64_t ops_ = 0;
};

} // namespace wes
