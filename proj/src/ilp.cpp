#include "isel/ilp.hpp"

#include "isel/exact.hpp"
#include "tables.hpp"

#include <sstream>

namespace isel {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

struct Model {
  MarginTensor margins;  // per rival, n x l
  Rational alpha;
  Index rivals = 0, n = 0, l = 0;
};

Model build_model(const Election& e, NormOrder norm) {
  Model model;
  model.margins = margin_tensor(e, norm);
  model.rivals = e.num_candidates() - 1;
  model.n = e.num_voters();
  model.l = e.num_issues();
  model.alpha = 0;
  for (const RatMat& rival : model.margins)
    for (Index j = 0; j < rival.rows(); ++j)
      for (Index k = 0; k < rival.cols(); ++k)
        model.alpha += pow_abs(rival(j, k), 1);
  return model;
}

void append_term(std::ostringstream& os, bool* first, const BigInt& coeff,
                 const std::string& var) {
  if (coeff == 0) return;
  const BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
  if (*first) {
    if (coeff < 0) os << "- ";
    *first = false;
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  os << mag.str() << ' ' << var;
}

}  // namespace

Rational ilp_big_m(const Election& e, NormOrder norm) {
  return build_model(e, norm).alpha;
}

IlpModelText export_ilp(const Election& e, NormOrder norm) {
  const Model model = build_model(e, norm);
  std::ostringstream os;
  os << "\\ Max Support 0-1 model: x_k picks issues, y_j marks captured voters\n";
  os << "Maximize\n obj: ";
  for (Index j = 0; j < model.n; ++j) {
    if (j > 0) os << " + ";
    os << 'y' << (j + 1);
  }
  os << "\nSubject To\n";
  for (Index r = 0; r < model.rivals; ++r) {
    const RatMat& rows = model.margins[static_cast<std::size_t>(r)];
    for (Index j = 0; j < model.n; ++j) {
      // sum_k A x_k + (1 - y_j) alpha >= 0, scaled to integers.
      BigInt scale = denominator(model.alpha);
      for (Index k = 0; k < model.l; ++k)
        scale = lcm(scale, denominator(rows(j, k)));
      os << " c" << (r + 2) << '_' << (j + 1) << ": ";
      bool first = true;
      bool any = false;
      for (Index k = 0; k < model.l; ++k) {
        const BigInt coeff =
            numerator(rows(j, k)) * (scale / denominator(rows(j, k)));
        if (coeff != 0) any = true;
        append_term(os, &first, coeff, "x" + std::to_string(k + 1));
      }
      const BigInt scaled_alpha =
          numerator(model.alpha) * (scale / denominator(model.alpha));
      if (scaled_alpha != 0) any = true;
      append_term(os, &first, -scaled_alpha, "y" + std::to_string(j + 1));
      if (!any) os << "0 x1";
      os << " >= " << BigInt(-scaled_alpha).str() << '\n';
    }
  }
  os << " nonempty: ";
  for (Index k = 0; k < model.l; ++k) {
    if (k > 0) os << " + ";
    os << 'x' << (k + 1);
  }
  os << " >= 1\n";
  os << "Bounds\n";
  for (Index k = 0; k < model.l; ++k)
    os << " 0 <= x" << (k + 1) << " <= 1\n";
  for (Index j = 0; j < model.n; ++j)
    os << " 0 <= y" << (j + 1) << " <= 1\n";
  os << "Binary\n";
  for (Index k = 0; k < model.l; ++k) os << " x" << (k + 1) << '\n';
  for (Index j = 0; j < model.n; ++j) os << " y" << (j + 1) << '\n';
  os << "End\n";
  return IlpModelText{os.str()};
}

int ilp_optimum_by_enumeration(const Election& e, NormOrder norm,
                               EnumLimits limits) {
  require_enumerable(e.num_issues(), limits);
  const Model model = build_model(e, norm);
  // Integer margin rows, scaled per (rival, voter).
  std::vector<Mat<BigInt>> scaled;
  scaled.reserve(static_cast<std::size_t>(model.rivals));
  for (const RatMat& rows : model.margins)
    scaled.push_back(detail::scale_rows_to_integers(rows));

  const int l = static_cast<int>(model.l);
  int best = -1;  // below any feasible objective; selections are nonempty
  Mat<BigInt> sums = Mat<BigInt>::Zero(model.n, model.rivals);
  dfs_subsets(
      l,
      [&](int k) {
        for (Index r = 0; r < model.rivals; ++r)
          sums.col(r) += scaled[static_cast<std::size_t>(r)].col(k);
      },
      [&](int k) {
        for (Index r = 0; r < model.rivals; ++r)
          sums.col(r) -= scaled[static_cast<std::size_t>(r)].col(k);
      },
      [&](std::uint32_t) {
        int objective = 0;
        for (Index j = 0; j < model.n; ++j) {
          bool captured = true;
          for (Index r = 0; r < model.rivals && captured; ++r)
            captured = sums(j, r) >= 0;
          if (captured) ++objective;
        }
        if (objective > best) best = objective;
      });
  return best;
}

bool check_ilp_consistency(const Election& e, NormOrder norm,
                           EnumLimits limits) {
  const int model_opt = ilp_optimum_by_enumeration(e, norm, limits);
  const SolveOutcome exhaustive =
      solve_maxsupport_exhaustive(e, norm, TieRule::BestCase, limits);
  return model_opt == exhaustive.target_support;
}

}  // namespace isel
