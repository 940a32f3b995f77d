#include <stdexcept>

#include "graphsq/certify.hpp"
#include "graphsq/enumerate.hpp"
#include "graphsq/iso.hpp"
#include "graphsq/parallel.hpp"

namespace graphsq {

const char* to_string(GraphClass c) { return c == GraphClass::tree ? "tree" : "unicyclic"; }
const char* to_string(ForbiddenMode m) { return m == ForbiddenMode::strict ? "strict" : "proper"; }

ForbiddenSet minimal_forbidden(GraphClass cls, const Rational& threshold, std::size_t n_max,
                               ForbiddenMode mode, unsigned jobs) {
  if (threshold <= 0) throw std::invalid_argument("minimal_forbidden: threshold must be > 0");
  const std::size_t n_min = cls == GraphClass::tree ? 1 : 3;
  const std::size_t cap = cls == GraphClass::tree ? kTreeOrderCap : kUnicyclicOrderCap;
  if (n_max > cap) throw std::invalid_argument("minimal_forbidden: n_max above enumeration cap");

  std::vector<Graph> candidates;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    auto batch = cls == GraphClass::tree ? all_trees(n) : all_unicyclic(n);
    candidates.insert(candidates.end(), batch.begin(), batch.end());
  }

  // 1 = member, 0 = not a member, -1 = undecided
  std::vector<int> member(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    EvaluationOptions opt;
    opt.exact_width = Rational(1, 1 << 10);
    auto r = evaluate(power(candidates[i], 2), opt);
    const Verdict v = compare_to(r, threshold);
    if (v == Verdict::unknown) {
      member[i] = -1;
    } else if (v == Verdict::greater || (mode == ForbiddenMode::proper && v == Verdict::equal)) {
      member[i] = 1;
    }
  });

  // Candidates arrive sorted by order, so any member contained in another
  // member is examined first.
  ForbiddenSet out;
  out.mode = mode;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (member[i] == -1) {
      out.undecided.push_back(candidates[i]);
      continue;
    }
    if (member[i] == 0) continue;
    bool minimal = true;
    for (const auto& kept : out.graphs) {
      if (contains_subgraph(candidates[i], kept)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.graphs.push_back(candidates[i]);
  }
  return out;
}

}  // namespace graphsq
