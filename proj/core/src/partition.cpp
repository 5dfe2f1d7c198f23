#include "gorenlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gorenlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) os << ",";
    os << parts_[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

bool dominance_le(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) {
    throw std::invalid_argument("dominance_le: partitions of different totals");
  }
  long sp = 0, sq = 0;
  std::size_t upto = std::min(p.size(), q.size());
  for (std::size_t i = 0; i < upto; ++i) {
    sp += p.parts()[i];
    sq += q.parts()[i];
    if (sp > sq) return false;
  }
  return true;
}

Partition conjugate_partition(std::vector<int> values) {
  std::erase_if(values, [](int v) { return v == 0; });
  return Partition(std::move(values)).conjugate();
}

int sperner_number(const std::vector<int>& hf) {
  if (hf.empty()) throw std::invalid_argument("sperner_number: empty vector");
  return *std::max_element(hf.begin(), hf.end());
}

}  // namespace gorenlab
