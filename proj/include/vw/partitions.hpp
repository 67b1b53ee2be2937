#ifndef VW_PARTITIONS_HPP
#define VW_PARTITIONS_HPP

#include <functional>
#include <span>
#include <vector>

#include "vw/bigratio.hpp"

namespace vw {

// Weakly decreasing non-negative integer parts (lambda in the Schur-index
// language). Fixed length; trailing zeros are kept.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long length() const { return static_cast<long>(parts_.size()); }
  long part(long i) const { return parts_[static_cast<std::size_t>(i)]; }
  long volume() const;
  bool fits_cap(long cap) const { return parts_.empty() || parts_.front() <= cap; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<long> parts_;
};

// Strictly decreasing positive parts (walker positions / flipped-spin sites).
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long length() const { return static_cast<long>(parts_.size()); }
  long part(long i) const { return parts_[static_cast<std::size_t>(i)]; }
  long volume() const;
  bool fits_bound(long m) const { return parts_.empty() || parts_.front() <= m; }
  bool contains(long value) const;

  bool operator==(const StrictPartition&) const = default;
  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<long> parts_;
};

// (N, N-1, ..., 1)
StrictPartition staircase(long n);

// lambda_j = mu_j + j - N - 1 and its inverse.
Partition to_nonstrict(const StrictPartition& mu);
StrictPartition from_nonstrict(const Partition& lambda);

// All partitions of fixed length with parts <= cap, in colexicographic order
// (last part most significant; the first part varies fastest).
class BoxPartitions {
 public:
  BoxPartitions(long length, long cap);

  class iterator {
   public:
    using value_type = Partition;
    iterator() = default;
    iterator(long length, long cap, bool at_end);
    Partition operator*() const { return Partition(parts_); }
    iterator& operator++();
    bool operator==(const iterator& rhs) const;

   private:
    std::vector<long> parts_;
    long cap_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(length_, cap_, false); }
  iterator end() const { return iterator(length_, cap_, true); }
  BigInt count() const;

 private:
  long length_;
  long cap_;
};

// All strict partitions of length n with parts in [1, bound], colex order of
// the associated lambda = mu - delta.
std::vector<StrictPartition> enumerate_strict(long length, long bound);

// Pinned parts: a strict partition k_l whose parts must all appear in the
// enumerated mu.
class PinnedSpec {
 public:
  PinnedSpec() = default;
  explicit PinnedSpec(StrictPartition pins) : pins_(std::move(pins)) {}
  const StrictPartition& pins() const { return pins_; }
  long pinned_count() const { return pins_.length(); }

 private:
  StrictPartition pins_;
};

// All strict mu of length n with parts <= bound containing every pin.
std::vector<StrictPartition> enumerate_pinned(const PinnedSpec& spec, long length, long bound);

// N x N array of column heights, weakly decreasing along rows and columns,
// entries <= box height.
class PlanePartition {
 public:
  PlanePartition(long side, long box_height);
  PlanePartition(long side, long box_height, std::vector<long> row_major);

  long side() const { return side_; }
  long box_height() const { return box_; }
  long at(long i, long j) const { return h_[index(i, j)]; }
  void set(long i, long j, long v);
  const std::vector<long>& row_major() const { return h_; }

  long volume() const;
  // Trace of the s-th diagonal counted from the lower left corner,
  // s in [1, 2N-1]: sum over N + j - i = s of pi_ij (1-based i, j).
  long diag_trace(long s) const;
  // Main-diagonal slice as a partition of length N.
  Partition diagonal() const;

  bool operator==(const PlanePartition&) const = default;

 private:
  std::size_t index(long i, long j) const;
  void validate() const;

  long side_ = 0;
  long box_ = 0;
  std::vector<long> h_;
};

// Watermelon half: the sequence of diagonal slices strictly above (or below)
// the main diagonal, slices[t] of length N-1-t, each interlacing the
// previous one. Equivalent to a Gelfand-Tsetlin pattern, i.e. one of the two
// stars glued along the dissection line.
struct DiagonalFilling {
  std::vector<Partition> slices;
};

struct Watermelon {
  Partition diagonal;
  DiagonalFilling upper;  // slices with j > i
  DiagonalFilling lower;  // slices with i > j
};

PlanePartition watermelon_to_pp(const Watermelon& w, long box_height);
Watermelon pp_to_watermelon(const PlanePartition& pp);

// Every boxed plane partition exactly once (row-major odometer: the cell
// (N, N) varies fastest, each cell bounded by min(upper, left)).
void for_each_plane_partition(long side, long box_height,
                              const std::function<void(const PlanePartition&)>& fn);
std::vector<PlanePartition> enumerate_plane_partitions(long side, long box_height);

}  // namespace vw

#endif
