#include <rwls/hierarchical.hpp>

#include <rwls/errors.hpp>

#include <algorithm>
#include <sstream>
#include <tuple>

namespace rwls {

SplineSpace dyadic_refine_space(const SplineSpace& space) {
  std::vector<KnotVector> refined;
  for (const auto& kv : space.directions()) {
    std::vector<double> knots;
    const auto& t = kv.knots();
    for (std::size_t i = 0; i < t.size(); ++i) {
      knots.push_back(t[i]);
      if (i + 1 < t.size() && t[i + 1] > t[i] && t[i] >= kv.lower() && t[i + 1] <= kv.upper()) {
        knots.push_back(0.5 * (t[i] + t[i + 1]));
      }
    }
    refined.emplace_back(kv.degree(), std::move(knots), kv.clamped());
  }
  return SplineSpace(std::move(refined));
}

namespace {

Index cell_count(const SplineSpace& s) {
  Index n = 1;
  for (Index e : s.element_shape()) n *= e;
  return n;
}

// Calls f(multi) for every multi-index in the box lo..hi (inclusive), last direction fastest.
template <typename F>
void for_each_in_box(const std::vector<Index>& lo, const std::vector<Index>& hi, F&& f) {
  const std::size_t N = lo.size();
  for (std::size_t d = 0; d < N; ++d) {
    if (lo[d] > hi[d]) return;
  }
  std::vector<Index> m = lo;
  while (true) {
    if (!f(m)) return;
    std::size_t d = N;
    while (d-- > 0) {
      if (++m[d] <= hi[d]) break;
      m[d] = lo[d];
    }
    if (d == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

HierarchicalSpace::HierarchicalSpace(SplineSpace base) {
  levels_.push_back(std::move(base));
  domain_.emplace_back(static_cast<std::size_t>(cell_count(levels_.front())), 1);
  rebuild();
}

HierarchicalSpace::HierarchicalSpace(SplineSpace base, const std::vector<std::vector<Index>>& subdomains)
    : HierarchicalSpace(std::move(base)) {
  if (!subdomains.empty() && !subdomains.front().empty() &&
      static_cast<Index>(subdomains.front().size()) != cell_count(levels_.front())) {
    throw NestingError("hierarchical space: level-0 subdomain must contain every cell");
  }
  for (std::size_t l = 1; l < subdomains.size(); ++l) {
    if (subdomains[l].empty()) break;
    levels_.push_back(dyadic_refine_space(levels_.back()));
    const Index count = cell_count(levels_.back());
    std::vector<char> flags(static_cast<std::size_t>(count), 0);
    for (Index flat : subdomains[l]) {
      if (flat < 0 || flat >= count) throw NestingError("hierarchical space: cell index out of range");
      flags[static_cast<std::size_t>(flat)] = 1;
    }
    domain_.push_back(std::move(flags));
    const int level = static_cast<int>(l);
    for (Index flat : subdomains[l]) {
      CellId parent = unflatten_cell(level, flat);
      parent.level = level - 1;
      for (auto& i : parent.index) i /= 2;
      if (!in_subdomain(parent)) {
        std::ostringstream os;
        os << "hierarchical space: level-" << level << " cell " << flat << " has no parent in the coarser subdomain";
        throw NestingError(os.str());
      }
    }
  }
  rebuild();
}

Index HierarchicalSpace::flatten_cell(const CellId& cell) const {
  const auto shape = level(cell.level).element_shape();
  Index flat = 0;
  for (std::size_t d = 0; d < shape.size(); ++d) flat = flat * shape[d] + cell.index[d];
  return flat;
}

CellId HierarchicalSpace::unflatten_cell(int l, Index flat) const {
  const auto shape = level(l).element_shape();
  CellId cell{l, std::vector<Index>(shape.size())};
  for (std::size_t d = shape.size(); d-- > 0;) {
    cell.index[d] = flat % shape[d];
    flat /= shape[d];
  }
  return cell;
}

bool HierarchicalSpace::in_subdomain(const CellId& cell) const {
  if (cell.level < 0 || cell.level >= num_levels()) return false;
  const auto shape = level(cell.level).element_shape();
  if (cell.index.size() != shape.size()) return false;
  for (std::size_t d = 0; d < shape.size(); ++d) {
    if (cell.index[d] < 0 || cell.index[d] >= shape[d]) return false;
  }
  return domain_[static_cast<std::size_t>(cell.level)][static_cast<std::size_t>(flatten_cell(cell))] != 0;
}

std::vector<Index> HierarchicalSpace::subdomain_cells(int l) const {
  std::vector<Index> out;
  const auto& flags = domain_[static_cast<std::size_t>(l)];
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

bool HierarchicalSpace::covered(int l, const std::vector<Index>& cell) const {
  if (l + 1 >= num_levels()) return false;
  const std::size_t N = cell.size();
  std::vector<Index> lo(N), hi(N);
  for (std::size_t d = 0; d < N; ++d) {
    lo[d] = 2 * cell[d];
    hi[d] = 2 * cell[d] + 1;
  }
  bool all = true;
  for_each_in_box(lo, hi, [&](const std::vector<Index>& child) {
    all = in_subdomain(CellId{l + 1, child});
    return all;
  });
  return all;
}

void HierarchicalSpace::rebuild() {
  // drop trailing empty levels
  while (levels_.size() > 1 && std::none_of(domain_.back().begin(), domain_.back().end(), [](char c) { return c != 0; })) {
    levels_.pop_back();
    domain_.pop_back();
  }
  const std::size_t L = levels_.size();
  active_.assign(L, {});
  global_of_.assign(L, {});
  offsets_.assign(L, 0);
  dimension_ = 0;
  for (std::size_t l = 0; l < L; ++l) {
    const int li = static_cast<int>(l);
    const SplineSpace& s = levels_[l];
    const std::size_t N = s.directions().size();
    global_of_[l].assign(static_cast<std::size_t>(s.dimension()), -1);
    offsets_[l] = dimension_;
    for (Index j = 0; j < s.dimension(); ++j) {
      const auto multi = s.unflatten(j);
      std::vector<Index> lo(N), hi(N);
      for (std::size_t d = 0; d < N; ++d) {
        std::tie(lo[d], hi[d]) = s.direction(static_cast<int>(d)).support_elements(multi[d]);
      }
      bool inside = true;
      bool all_covered = true;
      for_each_in_box(lo, hi, [&](const std::vector<Index>& cell) {
        if (!in_subdomain(CellId{li, cell})) {
          inside = false;
          return false;
        }
        if (all_covered && !covered(li, cell)) all_covered = false;
        return true;
      });
      if (inside && !all_covered) {
        global_of_[l][static_cast<std::size_t>(j)] = dimension_++;
        active_[l].push_back(j);
      }
    }
  }
}

std::pair<int, Index> HierarchicalSpace::level_index(Index global) const {
  if (global < 0 || global >= dimension_) throw InvalidArgument("hierarchical space: global index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
  const auto l = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  // empty levels share offsets with the next one; step forward to the owner
  std::size_t owner = l;
  while (global - offsets_[owner] >= static_cast<Index>(active_[owner].size())) ++owner;
  return {static_cast<int>(owner), active_[owner][static_cast<std::size_t>(global - offsets_[owner])]};
}

template <typename Eval>
BasisValues HierarchicalSpace::gather(Eval&& eval) const {
  BasisValues out;
  for (int l = 0; l < num_levels(); ++l) {
    if (active_[static_cast<std::size_t>(l)].empty()) continue;
    for (const auto& bv : eval(level(l))) {
      const Index g = global_index(l, bv.index);
      if (g >= 0) out.push_back({g, bv.value});
    }
  }
  return out;
}

BasisValues HierarchicalSpace::eval_basis(PointView x) const {
  check_point(x);
  return gather([&](const SplineSpace& s) { return s.eval_basis(x); });
}

BasisValues HierarchicalSpace::eval_basis_derivatives(PointView x, const MultiIndex& order) const {
  return gather([&](const SplineSpace& s) { return s.eval_basis_derivatives(x, order); });
}

Box HierarchicalSpace::cell_box(const CellId& cell) const {
  Box b;
  const SplineSpace& s = level(cell.level);
  for (std::size_t d = 0; d < cell.index.size(); ++d) {
    const auto& bp = s.direction(static_cast<int>(d)).breakpoints();
    b.lower.push_back(bp[static_cast<std::size_t>(cell.index[d])]);
    b.upper.push_back(bp[static_cast<std::size_t>(cell.index[d]) + 1]);
  }
  return b;
}

CellId HierarchicalSpace::locate(PointView x) const {
  check_point(x);
  for (int l = num_levels(); l-- > 0;) {
    const SplineSpace& s = level(l);
    CellId cell{l, std::vector<Index>(x.size())};
    for (std::size_t d = 0; d < x.size(); ++d) {
      const auto& kv = s.direction(static_cast<int>(d));
      cell.index[d] = kv.element_index(std::clamp(x[d], kv.lower(), kv.upper()));
    }
    if (in_subdomain(cell)) return cell;
  }
  throw DomainError("hierarchical space: point not located");  // unreachable, Omega^0 is everything
}

std::vector<CellId> HierarchicalSpace::leaf_cells() const {
  std::vector<CellId> out;
  for (int l = 0; l < num_levels(); ++l) {
    const auto& flags = domain_[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (!flags[i]) continue;
      CellId cell = unflatten_cell(l, static_cast<Index>(i));
      if (!covered(l, cell.index)) out.push_back(std::move(cell));
    }
  }
  return out;
}

std::vector<Box> HierarchicalSpace::integration_cells() const {
  std::vector<Box> out;
  for (const auto& cell : leaf_cells()) out.push_back(cell_box(cell));
  return out;
}

HierarchicalSpace HierarchicalSpace::refine(const std::vector<CellId>& marked, bool buffer) const {
  HierarchicalSpace next = *this;
  for (const auto& cell : marked) {
    if (!in_subdomain(cell)) {
      std::ostringstream os;
      os << "refine: level-" << cell.level << " cell outside its subdomain";
      throw NestingError(os.str());
    }
  }
  for (const auto& cell : marked) {
    const int l = cell.level;
    if (l + 1 >= next.num_levels()) {
      next.levels_.push_back(dyadic_refine_space(next.levels_.back()));
      next.domain_.emplace_back(static_cast<std::size_t>(cell_count(next.levels_.back())), 0);
    }
    const auto shape = level(l).element_shape();
    const std::size_t N = shape.size();
    std::vector<Index> lo(N), hi(N);
    for (std::size_t d = 0; d < N; ++d) {
      lo[d] = buffer ? std::max<Index>(cell.index[d] - 1, 0) : cell.index[d];
      hi[d] = buffer ? std::min<Index>(cell.index[d] + 1, shape[d] - 1) : cell.index[d];
    }
    for_each_in_box(lo, hi, [&](const std::vector<Index>& c) {
      if (!in_subdomain(CellId{l, c})) return true;
      std::vector<Index> clo(N), chi(N);
      for (std::size_t d = 0; d < N; ++d) {
        clo[d] = 2 * c[d];
        chi[d] = 2 * c[d] + 1;
      }
      for_each_in_box(clo, chi, [&](const std::vector<Index>& child) {
        next.domain_[static_cast<std::size_t>(l + 1)][static_cast<std::size_t>(next.flatten_cell(CellId{l + 1, child}))] = 1;
        return true;
      });
      return true;
    });
  }
  next.rebuild();
  return next;
}

HierarchicalSpace build_hierarchical(const SplineSpace& base, std::vector<CellId> marked, bool buffer) {
  std::sort(marked.begin(), marked.end());
  HierarchicalSpace h(base);
  std::size_t i = 0;
  while (i < marked.size()) {
    std::size_t j = i;
    while (j < marked.size() && marked[j].level == marked[i].level) ++j;
    h = h.refine(std::vector<CellId>(marked.begin() + static_cast<std::ptrdiff_t>(i),
                                     marked.begin() + static_cast<std::ptrdiff_t>(j)),
                 buffer);
    i = j;
  }
  return h;
}

std::vector<CellId> mark_cells(const HierarchicalSpace& space, const RowMatrix& sites,
                               std::span<const double> errors, double eps) {
  if (static_cast<Index>(errors.size()) != sites.rows()) {
    throw InvalidArgument("mark_cells: one error per site is required");
  }
  std::vector<CellId> out;
  for (Index i = 0; i < sites.rows(); ++i) {
    if (errors[static_cast<std::size_t>(i)] > eps) out.push_back(space.locate(row_view(sites, i)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SparseRowMatrix collocation_hierarchical(const HierarchicalSpace& space, const RowMatrix& sites) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index i = 0; i < sites.rows(); ++i) {
    for (const auto& bv : space.eval_basis(row_view(sites, i))) {
      if (bv.value != 0.0) triplets.emplace_back(i, bv.index, bv.value);
    }
  }
  SparseRowMatrix B(sites.rows(), space.dimension());
  B.setFromTriplets(triplets.begin(), triplets.end());
  return B;
}

}  // namespace rwls
