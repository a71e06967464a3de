#include "homcon/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcon {

bool SupportedComplex::verify_support() const {
  for (int i = 1; i <= chain.top_rank(); ++i) {
    const F2Matrix& d = chain.boundary[i];
    for (std::size_t row = 0; row < d.rows(); ++row)
      for (std::size_t col = 0; col < d.cols(); ++col)
        if (d.get(row, col) &&
            !lower_lt_upper(i, static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)))
          return false;
  }
  return true;
}

std::size_t MorseReport::critical_count() const {
  std::size_t n = 0;
  for (const auto& rank : critical_index) n += rank.size();
  return n;
}

namespace {

constexpr std::uint32_t kUnmatched = 0xffffffffu;

// Cycle search on one adjacent rank pair: vertices are the lower-rank cells
// matched upward; q -> q' iff q' != q and the boundary of M(q) hits q'. Any
// directed cycle of D(P,M) between these ranks shows up here.
struct PairCycleSearch {
  const F2Matrix& d;                        // boundary at upper rank
  const std::vector<std::uint32_t>& up;     // lower index -> matched upper index
  std::vector<int> color;                   // 0 white, 1 on stack, 2 done
  std::vector<std::uint32_t> stack;         // current DFS path (lower cells)
  std::vector<std::uint32_t> cycle;         // result, lower cells in order

  PairCycleSearch(const F2Matrix& d_, const std::vector<std::uint32_t>& up_)
      : d(d_), up(up_), color(up_.size(), 0) {}

  bool dfs(std::uint32_t q) {
    color[q] = 1;
    stack.push_back(q);
    std::uint32_t p = up[q];
    for (std::size_t q2 = 0; q2 < d.rows(); ++q2) {
      if (q2 == q || up[q2] == kUnmatched || !d.get(q2, p)) continue;
      if (color[q2] == 1) {
        auto at = std::find(stack.begin(), stack.end(), static_cast<std::uint32_t>(q2));
        cycle.assign(at, stack.end());
        return true;
      }
      if (color[q2] == 0 && dfs(static_cast<std::uint32_t>(q2))) return true;
    }
    stack.pop_back();
    color[q] = 2;
    return false;
  }
};

}  // namespace

MorseReport certify(const SupportedComplex& sc, const Matching& m) {
  const GradedComplex& c = sc.chain;
  c.validate();
  if (!sc.verify_support())
    throw std::invalid_argument("certify: complex has a boundary entry between incomparable cells");
  int top = c.top_rank();

  // match_up[i][cell] / match_down[i][cell]: partner index or kUnmatched
  std::vector<std::vector<std::uint32_t>> match_up(top + 1), match_down(top + 1);
  for (int i = 0; i <= top; ++i) {
    match_up[i].assign(c.dim(i), kUnmatched);
    match_down[i].assign(c.dim(i), kUnmatched);
  }
  for (const MatchEdge& e : m.edges) {
    if (e.upper_rank < 1 || e.upper_rank > top)
      throw std::invalid_argument("certify: matched pair does not span adjacent ranks");
    if (e.upper >= c.dim(e.upper_rank) || e.lower >= c.dim(e.upper_rank - 1))
      throw std::invalid_argument("certify: matched cell index out of range");
    if (match_down[e.upper_rank][e.upper] != kUnmatched ||
        match_up[e.upper_rank - 1][e.lower] != kUnmatched)
      throw std::invalid_argument("certify: cell matched twice");
    match_down[e.upper_rank][e.upper] = e.lower;
    match_up[e.upper_rank - 1][e.lower] = e.upper;
  }

  MorseReport report;

  report.unit_coefficients = true;
  for (const MatchEdge& e : m.edges)
    if (!c.boundary[e.upper_rank].get(e.lower, e.upper)) report.unit_coefficients = false;

  report.acyclic = true;
  for (int i = 1; i <= top && report.acyclic; ++i) {
    PairCycleSearch search(c.boundary[i], match_up[i - 1]);
    for (std::uint32_t q = 0; q < c.dim(i - 1); ++q) {
      if (match_up[i - 1][q] == kUnmatched || search.color[q] != 0) continue;
      if (search.dfs(q)) {
        report.acyclic = false;
        for (std::uint32_t lower : search.cycle) {
          report.cycle_witness.push_back(c.labels[i - 1][lower]);
          report.cycle_witness.push_back(c.labels[i][match_up[i - 1][lower]]);
        }
        break;
      }
    }
  }

  report.critical_index.resize(top + 1);
  report.critical.resize(top + 1);
  for (int i = 0; i <= top; ++i)
    for (std::uint32_t cell = 0; cell < c.dim(i); ++cell)
      if (match_up[i][cell] == kUnmatched && match_down[i][cell] == kUnmatched) {
        report.critical_index[i].push_back(cell);
        report.critical[i].push_back(c.labels[i][cell]);
      }

  report.parity_condition = true;
  int seen_parity = -1;
  for (int i = 0; i <= top; ++i) {
    if (report.critical_index[i].empty()) continue;
    if (seen_parity == -1) seen_parity = i & 1;
    else if (seen_parity != (i & 1)) report.parity_condition = false;
  }

  report.vanishing_condition = true;
  for (int i = 0; i <= top && report.vanishing_condition; ++i)
    for (std::uint32_t cell : report.critical_index[i]) {
      if (i > 0) {  // column of d_i at cell must vanish
        for (std::size_t row = 0; row < c.boundary[i].rows(); ++row)
          if (c.boundary[i].get(row, cell)) {
            report.vanishing_condition = false;
            break;
          }
      }
      if (!report.vanishing_condition) break;
      if (i < top && c.boundary[i + 1].row_weight(cell) != 0) {
        report.vanishing_condition = false;
        break;
      }
    }

  if (report.acyclic && report.unit_coefficients &&
      (report.parity_condition || report.vanishing_condition)) {
    std::vector<std::size_t> h(top + 1);
    for (int i = 0; i <= top; ++i) h[i] = report.critical_index[i].size();
    if (c.reversed_grading) std::reverse(h.begin(), h.end());
    report.concluded_homology = std::move(h);
  }
  return report;
}

}  // namespace homcon
