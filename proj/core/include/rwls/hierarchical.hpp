#pragma once

#include <rwls/function_space.hpp>
#include <rwls/spline_space.hpp>
#include <rwls/types.hpp>

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace rwls {

/// A cell of a given level: one nonempty knot span index per direction.
struct CellId {
  int level = 0;
  std::vector<Index> index;

  auto operator<=>(const CellId&) const = default;
};

/// Inserts the midpoint of every nonempty span in every direction.
SplineSpace dyadic_refine_space(const SplineSpace& space);

/// Hierarchical B-spline space over nested subdomains
/// Omega^0 (everything) > Omega^1 > ... made of cells of their level.
///
/// Level l+1 is the dyadic refinement of level l, so level-l cell e has the
/// children 2e and 2e+1 per direction. Function j of level l is active when
/// its support lies in Omega^l but not in Omega^{l+1}. Global indices run
/// level by level, increasing local index within a level.
///
/// The basis is not truncated and need not sum to one on refined regions.
class HierarchicalSpace final : public FunctionSpace {
 public:
  /// Single-level space equal to `base`.
  explicit HierarchicalSpace(SplineSpace base);

  /// Space with the given subdomains, as flat cell indices per level.
  /// subdomains[0] must list every level-0 cell (or be empty, meaning all).
  /// Throws NestingError when a cell's parent is outside the coarser subdomain.
  HierarchicalSpace(SplineSpace base, const std::vector<std::vector<Index>>& subdomains);

  std::string_view kind() const override { return "hierarchical"; }
  Index dimension() const override { return dimension_; }
  int parametric_dimension() const override { return levels_.front().parametric_dimension(); }
  Box domain() const override { return levels_.front().domain(); }
  std::vector<int> degrees() const override { return levels_.front().degrees(); }

  BasisValues eval_basis(PointView x) const override;
  BasisValues eval_basis_derivatives(PointView x, const MultiIndex& order) const override;
  /// The leaf cells.
  std::vector<Box> integration_cells() const override;

  /// Levels with a nonempty subdomain.
  int num_levels() const { return static_cast<int>(levels_.size()); }
  const SplineSpace& level(int l) const { return levels_[static_cast<std::size_t>(l)]; }

  bool in_subdomain(const CellId& cell) const;
  /// Flat indices of the level-l cells in Omega^l, increasing.
  std::vector<Index> subdomain_cells(int l) const;

  /// Active local indices of level l, increasing.
  const std::vector<Index>& active(int l) const { return active_[static_cast<std::size_t>(l)]; }
  /// Global index of local function j of level l, or -1 when inactive.
  Index global_index(int l, Index j) const { return global_of_[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]; }
  /// (level, local index) of a global index.
  std::pair<int, Index> level_index(Index global) const;

  Index flatten_cell(const CellId& cell) const;
  CellId unflatten_cell(int l, Index flat) const;
  Box cell_box(const CellId& cell) const;

  /// Finest cell in its level's subdomain that contains x.
  CellId locate(PointView x) const;

  /// Cells in Omega^l not covered by Omega^{l+1}, level by level.
  std::vector<CellId> leaf_cells() const;

  /// Adds the dyadic children of the marked cells (and, with `buffer`, of
  /// their neighbours inside the same subdomain) to the next level.
  /// Throws NestingError when a marked cell is outside its level's subdomain.
  HierarchicalSpace refine(const std::vector<CellId>& marked, bool buffer = true) const;

 private:
  HierarchicalSpace() = default;
  void rebuild();
  bool covered(int l, const std::vector<Index>& cell) const;
  template <typename Eval>
  BasisValues gather(Eval&& eval) const;

  std::vector<SplineSpace> levels_;
  std::vector<std::vector<char>> domain_;  // per level, flat cell flags
  std::vector<std::vector<Index>> active_;
  std::vector<std::vector<Index>> global_of_;
  std::vector<Index> offsets_;
  Index dimension_ = 0;
};

/// Applies the marks level by level starting from the base space.
HierarchicalSpace build_hierarchical(const SplineSpace& base, std::vector<CellId> marked, bool buffer = true);

/// Cells (via locate) containing the sites with error > eps, sorted, deduplicated.
std::vector<CellId> mark_cells(const HierarchicalSpace& space, const RowMatrix& sites,
                               std::span<const double> errors, double eps);

/// Collocation matrix over the active hierarchical basis.
SparseRowMatrix collocation_hierarchical(const HierarchicalSpace& space, const RowMatrix& sites);

}  // namespace rwls
