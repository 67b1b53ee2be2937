#include "vw/schur.hpp"

#include "vw/combinatorics.hpp"

namespace vw {

BigInt schur_ones(const Partition& lambda) {
  const long n = lambda.length();
  BigInt num = 1, den = 1;
  for (long j = 0; j < n; ++j)
    for (long k = j + 1; k < n; ++k) {
      num *= lambda.part(j) - (j + 1) - lambda.part(k) + (k + 1);
      den *= k - j;
    }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("schur_ones: product is not an integer");
  return q;
}

std::vector<long> bialternant_exponents(const Partition& lambda) {
  const long n = lambda.length();
  std::vector<long> ex(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) ex[static_cast<std::size_t>(k)] = lambda.part(k) + n - (k + 1);
  return ex;
}

namespace detail {

namespace {

// Fills the tableau column by column within each row; rows weakly increase,
// columns strictly increase.
void fill_cells(const Partition& lambda, long n, std::vector<std::vector<long>>& t,
                long row, long col, std::vector<long>& content,
                const std::function<void(std::span<const long>)>& fn) {
  if (row == lambda.length()) {
    fn(content);
    return;
  }
  if (col == lambda.part(row)) {
    fill_cells(lambda, n, t, row + 1, 0, content, fn);
    return;
  }
  long lo = 1;
  if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
  if (row > 0 && col < lambda.part(row - 1))
    lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
  for (long v = lo; v <= n; ++v) {
    t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
    ++content[static_cast<std::size_t>(v - 1)];
    fill_cells(lambda, n, t, row, col + 1, content, fn);
    --content[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

void for_each_ssyt_content(const Partition& lambda, long n,
                           const std::function<void(std::span<const long>)>& fn) {
  std::vector<std::vector<long>> t;
  for (long r = 0; r < lambda.length(); ++r)
    t.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
  std::vector<long> content(static_cast<std::size_t>(n), 0);
  fill_cells(lambda, n, t, 0, 0, content, fn);
}

}  // namespace detail

BigRatio principal_spec(const Partition& lambda, const QSpec& spec,
                        const SchurLimits& limits) {
  if (spec.q == 0) throw std::invalid_argument("principal_spec: q must be nonzero");
  const long n = lambda.length();
  std::vector<BigRatio> points(static_cast<std::size_t>(n));
  BigRatio pw = spec.mode == QSpecMode::GeometricFromQ ? spec.q : BigRatio(1);
  for (long j = 0; j < n; ++j) {
    points[static_cast<std::size_t>(j)] = pw;
    pw = pw * spec.q;
  }
  std::span<const BigRatio> xs(points);
  if (points_distinct(xs)) return schur_bialternant(lambda, xs);
  return schur_paths(lambda, xs, limits);
}

}  // namespace vw
