#ifndef GORENLAB_PARTITION_HPP
#define GORENLAB_PARTITION_HPP

#include <string>
#include <vector>

namespace gorenlab {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

  // Exponent notation, e.g. "(4^3,2^5,1^2)".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/*
 * Dominance order on partitions of the same total: P <= Q iff every prefix
 * sum of P is bounded by the corresponding prefix sum of Q. Throws on
 * unequal totals.
 */
bool dominance_le(const Partition& p, const Partition& q);

// Conjugate of an arbitrary multiset of nonnegative values (zeros dropped),
// e.g. the conjugate HF^v of a Hilbert function read as a partition.
Partition conjugate_partition(std::vector<int> values);

// Largest value of the Hilbert function.
int sperner_number(const std::vector<int>& hf);

}  // namespace gorenlab

#endif  // GORENLAB_PARTITION_HPP
