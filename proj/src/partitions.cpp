#include "vw/partitions.hpp"

#include <algorithm>

#include "vw/combinatorics.hpp"

namespace vw {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must weakly decrease");
  }
}

long Partition::volume() const {
  long v = 0;
  for (long p : parts_) v += p;
  return v;
}

StrictPartition::StrictPartition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("StrictPartition: parts must be >= 1");
    if (i > 0 && parts_[i - 1] <= parts_[i])
      throw std::invalid_argument("StrictPartition: parts must strictly decrease");
  }
}

long StrictPartition::volume() const {
  long v = 0;
  for (long p : parts_) v += p;
  return v;
}

bool StrictPartition::contains(long value) const {
  return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

StrictPartition staircase(long n) {
  std::vector<long> p(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
  return StrictPartition(std::move(p));
}

Partition to_nonstrict(const StrictPartition& mu) {
  const long n = mu.length();
  std::vector<long> p(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = mu.part(j) + (j + 1) - n - 1;
  return Partition(std::move(p));
}

StrictPartition from_nonstrict(const Partition& lambda) {
  const long n = lambda.length();
  std::vector<long> p(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = lambda.part(j) - (j + 1) + n + 1;
  return StrictPartition(std::move(p));
}

BoxPartitions::BoxPartitions(long length, long cap) : length_(length), cap_(cap) {
  if (length < 1) throw std::invalid_argument("BoxPartitions: length must be positive");
  if (cap < 0) throw std::invalid_argument("BoxPartitions: cap must be non-negative");
}

BoxPartitions::iterator::iterator(long length, long cap, bool at_end)
    : parts_(static_cast<std::size_t>(length), 0), cap_(cap), done_(at_end) {}

BoxPartitions::iterator& BoxPartitions::iterator::operator++() {
  // Colex successor: bump the first part below the cap, reset the
  // faster-varying parts in front of it to the new value.
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < cap_) {
      ++parts_[j];
      for (std::size_t i = 0; i < j; ++i) parts_[i] = parts_[j];
      return *this;
    }
  }
  done_ = true;
  return *this;
}

bool BoxPartitions::iterator::operator==(const iterator& rhs) const {
  if (done_ != rhs.done_) return false;
  return done_ || parts_ == rhs.parts_;
}

BigInt BoxPartitions::count() const { return binomial(length_ + cap_, length_); }

std::vector<StrictPartition> enumerate_strict(long length, long bound) {
  std::vector<StrictPartition> out;
  if (bound < length) return out;
  for (const Partition& lam : BoxPartitions(length, bound - length))
    out.push_back(from_nonstrict(lam));
  return out;
}

std::vector<StrictPartition> enumerate_pinned(const PinnedSpec& spec, long length,
                                              long bound) {
  if (spec.pinned_count() > length)
    throw std::invalid_argument("enumerate_pinned: more pins than parts");
  if (!spec.pins().fits_bound(bound))
    throw std::invalid_argument("enumerate_pinned: pin exceeds site bound");
  std::vector<StrictPartition> out;
  for (const StrictPartition& mu : enumerate_strict(length, bound)) {
    bool ok = true;
    for (long p : spec.pins().parts())
      if (!mu.contains(p)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(mu);
  }
  return out;
}

PlanePartition::PlanePartition(long side, long box_height)
    : side_(side), box_(box_height),
      h_(static_cast<std::size_t>(side * side), 0) {
  if (side < 1) throw std::invalid_argument("PlanePartition: side must be positive");
  if (box_height < 0) throw std::invalid_argument("PlanePartition: negative box height");
}

PlanePartition::PlanePartition(long side, long box_height, std::vector<long> row_major)
    : side_(side), box_(box_height), h_(std::move(row_major)) {
  if (side < 1) throw std::invalid_argument("PlanePartition: side must be positive");
  if (h_.size() != static_cast<std::size_t>(side * side))
    throw std::invalid_argument("PlanePartition: wrong array size");
  validate();
}

std::size_t PlanePartition::index(long i, long j) const {
  if (i < 1 || i > side_ || j < 1 || j > side_)
    throw std::out_of_range("PlanePartition: index out of range");
  return static_cast<std::size_t>((i - 1) * side_ + (j - 1));
}

void PlanePartition::set(long i, long j, long v) { h_[index(i, j)] = v; }

void PlanePartition::validate() const {
  for (long i = 1; i <= side_; ++i)
    for (long j = 1; j <= side_; ++j) {
      long v = at(i, j);
      if (v < 0 || v > box_)
        throw std::invalid_argument("PlanePartition: entry outside box");
      if (i < side_ && v < at(i + 1, j))
        throw std::invalid_argument("PlanePartition: columns must weakly decrease");
      if (j < side_ && v < at(i, j + 1))
        throw std::invalid_argument("PlanePartition: rows must weakly decrease");
    }
}

long PlanePartition::volume() const {
  long v = 0;
  for (long x : h_) v += x;
  return v;
}

long PlanePartition::diag_trace(long s) const {
  if (s < 1 || s > 2 * side_ - 1)
    throw std::invalid_argument("PlanePartition: diagonal index out of range");
  long v = 0;
  for (long i = 1; i <= side_; ++i) {
    long j = s - side_ + i;
    if (j >= 1 && j <= side_) v += at(i, j);
  }
  return v;
}

Partition PlanePartition::diagonal() const {
  std::vector<long> d(static_cast<std::size_t>(side_));
  for (long i = 1; i <= side_; ++i) d[static_cast<std::size_t>(i - 1)] = at(i, i);
  return Partition(std::move(d));
}

PlanePartition watermelon_to_pp(const Watermelon& w, long box_height) {
  const long n = w.diagonal.length();
  auto check_slices = [&](const DiagonalFilling& f) {
    if (f.slices.size() != static_cast<std::size_t>(n - 1))
      throw std::invalid_argument("watermelon_to_pp: wrong slice count");
    for (long t = 1; t < n; ++t)
      if (f.slices[static_cast<std::size_t>(t - 1)].length() != n - t)
        throw std::invalid_argument("watermelon_to_pp: wrong slice length");
  };
  if (n < 1) throw std::invalid_argument("watermelon_to_pp: empty diagonal");
  check_slices(w.upper);
  check_slices(w.lower);
  PlanePartition pp(n, box_height);
  for (long i = 1; i <= n; ++i) pp.set(i, i, w.diagonal.part(i - 1));
  for (long t = 1; t < n; ++t)
    for (long i = 1; i <= n - t; ++i) {
      pp.set(i, i + t, w.upper.slices[static_cast<std::size_t>(t - 1)].part(i - 1));
      pp.set(i + t, i, w.lower.slices[static_cast<std::size_t>(t - 1)].part(i - 1));
    }
  // Monotonicity of the assembled array is exactly the interlacing condition
  // on the fillings; reconstruct through the validating constructor.
  return PlanePartition(n, box_height, pp.row_major());
}

Watermelon pp_to_watermelon(const PlanePartition& pp) {
  const long n = pp.side();
  Watermelon w;
  w.diagonal = pp.diagonal();
  for (long t = 1; t < n; ++t) {
    std::vector<long> up, down;
    for (long i = 1; i <= n - t; ++i) {
      up.push_back(pp.at(i, i + t));
      down.push_back(pp.at(i + t, i));
    }
    w.upper.slices.emplace_back(std::move(up));
    w.lower.slices.emplace_back(std::move(down));
  }
  return w;
}

namespace {

void fill_cells(PlanePartition& pp, long side, long box, long cell,
                const std::function<void(const PlanePartition&)>& fn) {
  if (cell == side * side) {
    fn(pp);
    return;
  }
  long i = cell / side + 1;
  long j = cell % side + 1;
  long bound = box;
  if (i > 1) bound = std::min(bound, pp.at(i - 1, j));
  if (j > 1) bound = std::min(bound, pp.at(i, j - 1));
  for (long v = 0; v <= bound; ++v) {
    pp.set(i, j, v);
    fill_cells(pp, side, box, cell + 1, fn);
  }
  pp.set(i, j, 0);
}

}  // namespace

void for_each_plane_partition(long side, long box_height,
                              const std::function<void(const PlanePartition&)>& fn) {
  PlanePartition pp(side, box_height);
  fill_cells(pp, side, box_height, 0, fn);
}

std::vector<PlanePartition> enumerate_plane_partitions(long side, long box_height) {
  std::vector<PlanePartition> out;
  for_each_plane_partition(side, box_height,
                           [&](const PlanePartition& pp) { out.push_back(pp); });
  return out;
}

}  // namespace vw
