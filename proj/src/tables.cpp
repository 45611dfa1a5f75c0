#include "tables.hpp"

namespace isel::detail {
namespace {

BinaryTables build_binary(const Election& e) {
  BinaryTables t;
  t.m = e.num_candidates();
  t.n = e.num_voters();
  t.l = e.num_issues();
  t.dist.reserve(static_cast<std::size_t>(t.n));
  for (Index j = 0; j < t.n; ++j) {
    Mat<std::int64_t> d(t.m, t.l);
    for (Index i = 0; i < t.m; ++i)
      for (Index k = 0; k < t.l; ++k)
        d(i, k) = e.candidates(i, k) != e.voters(j, k) ? 1 : 0;
    t.dist.push_back(std::move(d));
  }
  return t;
}

RealTables build_real(const Election& e, NormOrder norm) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  RealTables t;
  t.m = e.num_candidates();
  t.n = e.num_voters();
  t.l = e.num_issues();
  t.dist.reserve(static_cast<std::size_t>(t.n));
  RatMat powers(t.m, t.l);
  for (Index j = 0; j < t.n; ++j) {
    BigInt scale = 1;
    for (Index i = 0; i < t.m; ++i)
      for (Index k = 0; k < t.l; ++k) {
        powers(i, k) = pow_abs(e.candidates(i, k) - e.voters(j, k), norm.p);
        scale = lcm(scale, denominator(powers(i, k)));
      }
    Mat<BigInt> d(t.m, t.l);
    for (Index i = 0; i < t.m; ++i)
      for (Index k = 0; k < t.l; ++k)
        d(i, k) = numerator(powers(i, k)) * (scale / denominator(powers(i, k)));
    t.dist.push_back(std::move(d));
  }
  return t;
}

}  // namespace

AnyTables prepare_tables(const Election& e, NormOrder norm) {
  validate(e);
  if (norm.p < 1) throw UsageError("norm order must be >= 1");
  if (e.domain == Domain::Binary) return build_binary(e);
  return build_real(e, norm);
}

Mat<BigInt> scale_rows_to_integers(const RatMat& m) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  Mat<BigInt> out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    BigInt scale = 1;
    for (Index c = 0; c < m.cols(); ++c)
      scale = lcm(scale, denominator(m(r, c)));
    for (Index c = 0; c < m.cols(); ++c)
      out(r, c) = numerator(m(r, c)) * (scale / denominator(m(r, c)));
  }
  return out;
}

}  // namespace isel::detail
