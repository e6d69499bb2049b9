#include "quatsurf/split.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace quatsurf {

namespace {

struct Pos {
  int r, c;
  friend bool operator==(Pos, Pos) = default;
};

constexpr Pos kAllPos[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

struct Step {
  enum class Kind { SwapRows, SwapCols, ConjTranspose, ColOp } kind;
  QPolyUV x;  // ColOp only
};

Mat2 apply(const Mat2& m, const Step& s) {
  switch (s.kind) {
    case Step::Kind::SwapRows: return swap_rows(m);
    case Step::Kind::SwapCols: return swap_cols(m);
    case Step::Kind::ConjTranspose: return conj_transpose(m);
    case Step::Kind::ColOp: return col_op(m, s.x);
  }
  return m;
}

// Given factors of apply(m, s), returns factors of m.
void undo(const Step& s, Vec2& x, Vec2& y) {
  switch (s.kind) {
    case Step::Kind::SwapRows: std::swap(x.e1, x.e2); break;
    case Step::Kind::SwapCols: std::swap(y.e1, y.e2); break;
    case Step::Kind::ConjTranspose: {
      Vec2 nx = conj(y);
      y = conj(x);
      x = std::move(nx);
      break;
    }
    case Step::Kind::ColOp: y.e1 += y.e2 * s.x; break;
  }
}

// Steps moving `pivot` to (1,1) and `partner` (same row or column) to (1,0).
std::vector<Step> pivot_steps(Pos pivot, Pos partner) {
  std::vector<Step> steps;
  if (pivot.r == 0) {
    steps.push_back({Step::Kind::SwapRows, {}});
    pivot.r = 1;
    partner.r = 1 - partner.r;
  }
  if (pivot.c == 0) {
    steps.push_back({Step::Kind::SwapCols, {}});
    pivot.c = 1;
    partner.c = 1 - partner.c;
  }
  if (partner == Pos{0, 1}) steps.push_back({Step::Kind::ConjTranspose, {}});
  return steps;
}

// Lexicographic reduction measure; smaller is closer to a base case.
struct Measure {
  int count;
  int min_degree;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

class Reducer {
 public:
  explicit Reducer(Mat2 m, SplitTrace* trace) : m_(std::move(m)), trace_(trace) {}

  SplitCertificate run() {
    if (m_.is_zero()) return {{QPolyUV(), QPolyUV()}, {QPolyUV(1), QPolyUV()}};
    reduce_v_linear();
    reduce_v_free();
    auto [x, y] = finish_with_zero_at_22();
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) undo(*it, x, y);
    return {std::move(x), std::move(y)};
  }

 private:
  void push(Step s) {
    m_ = apply(m_, s);
    log_.push_back(std::move(s));
  }

  int iteration_cap() const { return (1 + std::max(0, m_.max_deg_u())) * 16; }

  static std::array<std::array<QPolyU, 2>, 2> linear_parts(const Mat2& m) {
    std::array<std::array<QPolyU, 2>, 2> a;
    for (Pos p : kAllPos) a[p.r][p.c] = v_slices(m(p.r, p.c)).linear;
    return a;
  }

  static Measure v_linear_measure(const Mat2& m) {
    const auto a = linear_parts(m);
    Measure out{0, kNegInf};
    for (Pos p : kAllPos) {
      if (a[p.r][p.c].is_zero()) continue;
      const int d = a[p.r][p.c].degree();
      out.min_degree = out.count == 0 ? d : std::min(out.min_degree, d);
      ++out.count;
    }
    return out;
  }

  static int v_free_measure(const Mat2& m) {
    int d = m(0, 0).deg_u();
    for (Pos p : kAllPos) d = std::min(d, m(p.r, p.c).deg_u());
    return d;
  }

  // Candidate (pivot, partner) pairs over the positions where `nonzero`
  // holds: pivots by ascending degree, same-row partner before same-column.
  template <class Degree>
  static std::vector<std::pair<Pos, Pos>> candidates(const std::vector<Pos>& support, Degree degree) {
    std::vector<Pos> pivots = support;
    std::stable_sort(pivots.begin(), pivots.end(), [&](Pos a, Pos b) { return degree(a) < degree(b); });
    std::vector<std::pair<Pos, Pos>> out;
    auto in_support = [&](Pos p) { return std::find(support.begin(), support.end(), p) != support.end(); };
    for (Pos p : pivots) {
      const Pos row_partner{p.r, 1 - p.c};
      const Pos col_partner{1 - p.r, p.c};
      if (in_support(row_partner)) out.emplace_back(p, row_partner);
      if (in_support(col_partner)) out.emplace_back(p, col_partner);
    }
    return out;
  }

  static bool on_one_diagonal(const std::vector<Pos>& s) {
    auto all_in = [&](Pos a, Pos b) {
      return std::all_of(s.begin(), s.end(), [&](Pos p) { return p == a || p == b; });
    };
    return all_in({0, 0}, {1, 1}) || all_in({0, 1}, {1, 0});
  }

  // Tries the candidate normalizations in order and commits the first whose
  // column operation strictly lowers `measure`.
  template <class MeasureFn, class DivisorFn>
  bool reduce_once(const std::vector<std::pair<Pos, Pos>>& cands, MeasureFn measure, DivisorFn division) {
    const auto before = measure(m_);
    bool first = true;
    for (const auto& [pivot, partner] : cands) {
      const auto steps = pivot_steps(pivot, partner);
      Mat2 trial = m_;
      for (const auto& s : steps) trial = apply(trial, s);
      const QPolyUV q = to_bivariate(division(trial).quotient);
      const Mat2 reduced = col_op(trial, q);
      if (measure(reduced) < before) {
        for (const auto& s : steps) push(s);
        push({Step::Kind::ColOp, q});
        if (!first && trace_) ++trace_->fallback_pivots;
        return true;
      }
      first = false;
    }
    return false;
  }

  void reduce_v_linear() {
    const int cap = iteration_cap();
    for (int iter = 0;; ++iter) {
      const auto a = linear_parts(m_);
      std::vector<Pos> support;
      for (Pos p : kAllPos)
        if (!a[p.r][p.c].is_zero()) support.push_back(p);
      if (support.empty()) return;
      if (on_one_diagonal(support)) {
        // Bring a v-dependent entry to (0,0); the opposite corner must then vanish.
        Pos p = support.front();
        if (support.size() == 2 && p.c == 1) {
          push({Step::Kind::SwapCols, {}});
          p.c = 0;
        }
        if (p.r == 1) push({Step::Kind::SwapRows, {}});
        if (p.c == 1) push({Step::Kind::SwapCols, {}});
        return;
      }
      if (iter >= cap) throw Error(ErrorKind::NoProgress, "v-linear reduction exceeded its iteration cap");
      const auto cands = candidates(support, [&](Pos p) { return a[p.r][p.c].degree(); });
      const bool ok = reduce_once(cands, v_linear_measure, [](const Mat2& t) {
        return left_div_rem(v_slices(t(1, 0)).linear, v_slices(t(1, 1)).linear);
      });
      if (!ok) throw Error(ErrorKind::NoProgress, "no normalization lowers the v-linear measure");
      if (trace_) ++trace_->vlinear_steps;
    }
  }

  void reduce_v_free() {
    if (m_.max_deg_v() > 0) return;  // v-linear base case, handled by the finisher
    const int cap = iteration_cap();
    for (int iter = 0;; ++iter) {
      for (Pos p : kAllPos)
        if (m_(p.r, p.c).is_zero()) return;
      if (iter >= cap) throw Error(ErrorKind::NoProgress, "v-free reduction exceeded its iteration cap");
      const std::vector<Pos> support(std::begin(kAllPos), std::end(kAllPos));
      const auto cands = candidates(support, [&](Pos p) { return m_(p.r, p.c).deg_u(); });
      const bool ok = reduce_once(cands, v_free_measure, [](const Mat2& t) {
        return left_div_rem(to_univariate(t(1, 0)), to_univariate(t(1, 1)));
      });
      if (!ok) throw Error(ErrorKind::NoProgress, "no normalization lowers the minimal entry degree");
      if (trace_) ++trace_->vfree_steps;
    }
  }

  // Base case: some entry vanishes. Moves it to (1,1); degeneracy then
  // forces m12 * m21 = 0.
  std::pair<Vec2, Vec2> finish_with_zero_at_22() {
    if (!m_(1, 1).is_zero()) {
      std::optional<Pos> zero;
      for (Pos p : kAllPos)
        if (m_(p.r, p.c).is_zero()) {
          zero = p;
          break;
        }
      if (!zero) throw Error(ErrorKind::NoProgress, "reduction ended without a vanishing entry");
      if (zero->r == 0) push({Step::Kind::SwapRows, {}});
      if (zero->c == 0) push({Step::Kind::SwapCols, {}});
    }
    if (m_(1, 0).is_zero()) return {{QPolyUV(1), QPolyUV()}, {m_(0, 0), m_(0, 1)}};
    if (m_(0, 1).is_zero()) return {{m_(0, 0), m_(1, 0)}, {QPolyUV(1), QPolyUV()}};
    throw Error(ErrorKind::NotDegenerate, "base case has two nonzero off-diagonal entries");
  }

  Mat2 m_;
  SplitTrace* trace_;
  std::vector<Step> log_;
};

}  // namespace

SplitCertificate split(const Mat2& m, SplitTrace* trace) {
  if (m.max_deg_v() >= 2) throw Error(ErrorKind::PreconditionDegree, "split needs entries of degree <= 1 in v");
  if (!is_degenerate(m)) throw Error(ErrorKind::NotDegenerate, "matrix rows are left-linearly independent");
  SplitCertificate cert = Reducer(m, trace).run();
  if (!verify(cert, m)) throw Error(ErrorKind::NoProgress, "split certificate failed verification");
  return cert;
}

SplitCertificate split_normalize(const SplitCertificate& cert) {
  const QPolyUV* first = !cert.x.e1.is_zero() ? &cert.x.e1 : !cert.x.e2.is_zero() ? &cert.x.e2 : nullptr;
  if (first == nullptr) return cert;
  const Quaternion c = first->leading_coeff().inverse();
  const Quaternion c_inv = first->leading_coeff();
  return {{cert.x.e1 * c, cert.x.e2 * c}, {c_inv * cert.y.e1, c_inv * cert.y.e2}};
}

bool verify(const SplitCertificate& cert, const Mat2& m) { return kron(cert.x, cert.y) == m; }

}  // namespace quatsurf
