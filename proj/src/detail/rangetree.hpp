#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "detail/kernel.hpp"
#include "detail/seg_select.hpp"

namespace emanet::detail {

// Unit vector of angle m * 22.5 degrees: the float image of kDir16. Each
// entry is a positive rescale of the exact axis, so float keys order like the
// exact ones up to rounding.
inline constexpr std::array<std::array<double, 2>, 16> kUnit16 = {{
    {{1.0, 0.0}},
    {{0.92387953251128674, 0.38268343236508978}},
    {{0.70710678118654757, 0.70710678118654757}},
    {{0.38268343236508978, 0.92387953251128674}},
    {{0.0, 1.0}},
    {{-0.38268343236508978, 0.92387953251128674}},
    {{-0.70710678118654757, 0.70710678118654757}},
    {{-0.92387953251128674, 0.38268343236508978}},
    {{-1.0, 0.0}},
    {{-0.92387953251128674, -0.38268343236508978}},
    {{-0.70710678118654757, -0.70710678118654757}},
    {{-0.38268343236508978, -0.92387953251128674}},
    {{0.0, -1.0}},
    {{0.38268343236508978, -0.92387953251128674}},
    {{0.70710678118654757, -0.70710678118654757}},
    {{0.92387953251128674, -0.38268343236508978}},
}};

// Two-level range tree of one (frame, cone) wedge over a fixed point set.
//
// Level one orders the points by u, their offset from the cone's lower
// boundary ray; each node's associated level orders the node's points by v,
// the offset from the upper boundary, and carries a min-tree augmented with
// the position of the smallest sweep key in every subtree. A point q lies in
// the wedge of p exactly when u(q) >= u(p) and v(q) > v(p) up to the shared
// half-open boundary rules, so a lookup is a dominance query plus a minimum.
//
// All tree keys are scale-normalized doubles. Lookups widen the dominance
// window by kSlack, walk candidates in ascending float key, and re-verify
// with the exact predicates, growing the float threshold until the verified
// minimum provably beats everything unseen; the returned shortlist therefore
// contains every point that can win the cone's exact sweep, independent of
// rounding.
template <class K>
class ConeTree {
 public:
  static constexpr double kSlack = 1e-7;     // dominance/key widening, normalized units
  static constexpr double kFloatErr = 1e-9;  // per-key rounding bound (conservative)
  static constexpr double kFarLimit = 1e6;   // beyond this, float bounds thin out: scan exactly

  ConeTree(const std::vector<Vec2<K>>* pts, int frame, int cone)
      : pts_(pts), frame_(frame), cone_(cone), n_(int(pts->size())) {
    assert(frame >= 0 && frame < 8 && cone >= 0 && cone < 8);
    int lower = (2 * frame + cone) & 15;
    int upper = (lower + 1) & 15;
    int key_axis = cone_key_spec(frame, cone).key_axis;
    ux_ = -kUnit16[lower][1];
    uy_ = kUnit16[lower][0];
    vx_ = kUnit16[upper][1];
    vy_ = -kUnit16[upper][0];
    kx_ = kUnit16[key_axis][0];
    ky_ = kUnit16[key_axis][1];

    const auto& pv = *pts;
    double m = 1.0;
    std::vector<double> px(n_), py(n_);
    for (int i = 0; i < n_; ++i) {
      px[i] = K::approx(pv[i].x);
      py[i] = K::approx(pv[i].y);
      m = std::max({m, std::fabs(px[i]), std::fabs(py[i])});
    }
    inv_ = 1.0 / m;
    u_.resize(n_);
    v_.resize(n_);
    key_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      double x = px[i] * inv_, y = py[i] * inv_;
      u_[i] = ux_ * x + uy_ * y;
      v_[i] = vx_ * x + vy_ * y;
      key_[i] = kx_ * x + ky_ * y;
    }
    if (n_ == 0) return;

    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (u_[a] != u_[b]) return u_[a] < u_[b];
      return a < b;
    });
    leaf_u_.resize(n_);
    for (int j = 0; j < n_; ++j) leaf_u_[j] = u_[order[j]];

    width_ = int(std::bit_ceil(unsigned(n_)));
    int total_nodes = 2 * width_;
    node_off_.assign(total_nodes, 0);
    node_cnt_.assign(total_nodes, 0);
    seg_off_.assign(total_nodes, 0);
    seg_width_.assign(total_nodes, 0);
    for (int j = 0; j < n_; ++j) node_cnt_[width_ + j] = 1;
    for (int k = width_ - 1; k >= 1; --k) node_cnt_[k] = node_cnt_[2 * k] + node_cnt_[2 * k + 1];
    int off = 0, soff = 0;
    for (int k = 1; k < total_nodes; ++k) {
      node_off_[k] = off;
      off += node_cnt_[k];
      seg_off_[k] = soff;
      if (node_cnt_[k] > 0) {
        seg_width_[k] = int(std::bit_ceil(unsigned(node_cnt_[k])));
        soff += 2 * seg_width_[k];
      }
    }
    pool_idx_.resize(off);
    pool_v_.resize(off);
    pool_key_.resize(off);
    pool_seg_.assign(soff, -1);

    for (int j = 0; j < n_; ++j) {
      int k = width_ + j;
      pool_idx_[node_off_[k]] = order[j];
      pool_v_[node_off_[k]] = v_[order[j]];
      pool_key_[node_off_[k]] = key_[order[j]];
    }
    for (int k = width_ - 1; k >= 1; --k) {
      if (node_cnt_[k] == 0) continue;
      merge_children(k);
    }
    for (int k = 1; k < total_nodes; ++k) {
      if (node_cnt_[k] > 0) build_seg(k);
    }
  }

  int size() const { return n_; }
  int frame() const { return frame_; }
  int cone() const { return cone_; }

  // Exact-verified wedge members whose sweep key can tie the exact in-cone
  // minimum seen from `origin`; `skip` excludes one position (-1 for none).
  // Entries coinciding with origin are ignored. Ascending position order.
  void shortlist(const Vec2<K>& origin, int skip, std::vector<int>& out) const {
    out.clear();
    if (n_ == 0) return;
    double ox = K::approx(origin.x) * inv_, oy = K::approx(origin.y) * inv_;
    if (std::fabs(ox) > kFarLimit || std::fabs(oy) > kFarLimit) {
      scan_members(origin, skip, out);
      return;
    }
    double u0 = ux_ * ox + uy_ * oy - kSlack;
    double v0 = vx_ * ox + vy_ * oy - kSlack;
    int start = int(std::lower_bound(leaf_u_.begin(), leaf_u_.end(), u0) - leaf_u_.begin());
    if (start >= n_) return;

    // canonical dominance decomposition: level-one suffix, per-node v suffix
    std::vector<std::pair<int, int>> roots;  // (node, associated min-tree index)
    for (int lo = width_ + start, hi = width_ + n_; lo < hi; lo >>= 1, hi >>= 1) {
      if (lo & 1) level_two_roots(lo++, v0, roots);
      if (hi & 1) level_two_roots(--hi, v0, roots);
    }
    if (roots.empty()) return;

    double first = inf();
    for (auto [k, q] : roots) first = std::min(first, root_key(k, q));

    std::vector<std::pair<double, int>> found, members;
    double threshold = first + kSlack;
    while (true) {
      found.clear();
      double next = inf();
      for (auto [k, q] : roots) collect(k, q, threshold, skip, found, next);
      members.clear();
      double best = inf();
      for (auto [fk, idx] : found) {
        Vec2<K> d = (*pts_)[idx] - origin;
        if (K::sign(d.x) == 0 && K::sign(d.y) == 0) continue;
        if (local_wedge<K>(d, frame_) != cone_) continue;
        members.emplace_back(fk, idx);
        best = std::min(best, fk);
      }
      bool confirmed = !members.empty() && best <= threshold - 2 * kFloatErr;
      if (confirmed || next == inf()) {
        for (auto [fk, idx] : members) {
          if (fk <= best + 2 * kFloatErr) out.push_back(idx);
        }
        std::sort(out.begin(), out.end());
        return;
      }
      threshold = std::max(next, members.empty() ? next : best) + kSlack;
    }
  }

  // Recomputes both orderings and every subtree-minimum augmentation.
  bool audit() const {
    if (n_ == 0) return true;
    for (int j = 0; j + 1 < n_; ++j) {
      if (leaf_u_[j] > leaf_u_[j + 1]) return false;
    }
    for (int k = 1; k < 2 * width_; ++k) {
      int cnt = node_cnt_[k];
      if (cnt == 0) continue;
      const int* idx = pool_idx_.data() + node_off_[k];
      const double* vv = pool_v_.data() + node_off_[k];
      const double* kk = pool_key_.data() + node_off_[k];
      for (int p = 0; p < cnt; ++p) {
        if (vv[p] != v_[idx[p]] || kk[p] != key_[idx[p]]) return false;
        if (p > 0 && (vv[p - 1] > vv[p] || (vv[p - 1] == vv[p] && idx[p - 1] >= idx[p]))) {
          return false;
        }
      }
      if (k < width_ && cnt != node_cnt_[2 * k] + node_cnt_[2 * k + 1]) return false;
      int sw = seg_width_[k];
      const int* seg = pool_seg_.data() + seg_off_[k];
      for (int p = 0; p < sw; ++p) {
        if (seg[sw + p] != (p < cnt ? p : -1)) return false;
      }
      for (int q = sw - 1; q >= 1; --q) {
        if (seg[q] != better(k, seg[2 * q], seg[2 * q + 1])) return false;
      }
    }
    return true;
  }

 private:
  static double inf() { return std::numeric_limits<double>::infinity(); }

  // exact fallback: every verified wedge member, no float pruning
  void scan_members(const Vec2<K>& origin, int skip, std::vector<int>& out) const {
    for (int i = 0; i < n_; ++i) {
      if (i == skip) continue;
      Vec2<K> d = (*pts_)[i] - origin;
      if (K::sign(d.x) == 0 && K::sign(d.y) == 0) continue;
      if (local_wedge<K>(d, frame_) == cone_) out.push_back(i);
    }
  }

  void merge_children(int k) {
    int l = 2 * k, r = 2 * k + 1;
    const int* li = pool_idx_.data() + node_off_[l];
    const int* ri = pool_idx_.data() + node_off_[r];
    int ln = node_cnt_[l], rn = node_cnt_[r];
    int* oi = pool_idx_.data() + node_off_[k];
    double* ov = pool_v_.data() + node_off_[k];
    double* ok = pool_key_.data() + node_off_[k];
    int a = 0, b = 0, w = 0;
    while (a < ln || b < rn) {
      bool from_left;
      if (a == ln) {
        from_left = false;
      } else if (b == rn) {
        from_left = true;
      } else {
        double va = v_[li[a]], vb = v_[ri[b]];
        from_left = va < vb || (va == vb && li[a] < ri[b]);
      }
      int id = from_left ? li[a++] : ri[b++];
      oi[w] = id;
      ov[w] = v_[id];
      ok[w] = key_[id];
      ++w;
    }
  }

  // smaller (key, position) of two positions in node k's associated array
  int better(int k, int a, int b) const {
    if (a < 0) return b;
    if (b < 0) return a;
    double ka = pool_key_[node_off_[k] + a], kb = pool_key_[node_off_[k] + b];
    if (ka != kb) return ka < kb ? a : b;
    return a < b ? a : b;
  }

  void build_seg(int k) {
    int cnt = node_cnt_[k], sw = seg_width_[k];
    int* seg = pool_seg_.data() + seg_off_[k];
    for (int p = 0; p < cnt; ++p) seg[sw + p] = p;
    for (int q = sw - 1; q >= 1; --q) seg[q] = better(k, seg[2 * q], seg[2 * q + 1]);
  }

  void level_two_roots(int k, double v0, std::vector<std::pair<int, int>>& roots) const {
    int cnt = node_cnt_[k];
    if (cnt == 0) return;
    const double* vv = pool_v_.data() + node_off_[k];
    int s = int(std::lower_bound(vv, vv + cnt, v0) - vv);
    if (s >= cnt) return;
    int sw = seg_width_[k];
    for (int lo = sw + s, hi = sw + cnt; lo < hi; lo >>= 1, hi >>= 1) {
      if (lo & 1) roots.emplace_back(k, lo++);
      if (hi & 1) roots.emplace_back(k, --hi);
    }
  }

  double root_key(int k, int q) const {
    int p = pool_seg_[seg_off_[k] + q];
    return p < 0 ? inf() : pool_key_[node_off_[k] + p];
  }

  // report (float key, position index) of every point under min-tree node q
  // of level-one node k with key <= threshold; subtree minima above the
  // threshold lower `next` instead
  void collect(int k, int q0, double threshold, int skip, std::vector<std::pair<double, int>>& out,
               double& next) const {
    const int* seg = pool_seg_.data() + seg_off_[k];
    const int* idx = pool_idx_.data() + node_off_[k];
    const double* kk = pool_key_.data() + node_off_[k];
    int sw = seg_width_[k];
    std::array<int, 64> stack;
    int sp = 0;
    stack[sp++] = q0;
    while (sp > 0) {
      int q = stack[--sp];
      int p = seg[q];
      if (p < 0) continue;
      if (kk[p] > threshold) {
        next = std::min(next, kk[p]);
        continue;
      }
      if (q >= sw) {
        if (idx[p] != skip) out.emplace_back(kk[p], idx[p]);
        continue;
      }
      stack[sp++] = 2 * q;
      stack[sp++] = 2 * q + 1;
    }
  }

  const std::vector<Vec2<K>>* pts_;
  int frame_, cone_, n_;
  double ux_ = 0, uy_ = 0, vx_ = 0, vy_ = 0, kx_ = 0, ky_ = 0, inv_ = 1.0;
  std::vector<double> u_, v_, key_;  // per point, scale-normalized
  std::vector<double> leaf_u_;       // u in level-one order
  int width_ = 0;                    // level-one leaf capacity (power of two)
  std::vector<int> node_off_, node_cnt_, seg_off_, seg_width_;
  std::vector<int> pool_idx_;     // per node: point indices, (v, index) ascending
  std::vector<double> pool_v_;    // parallel v values
  std::vector<double> pool_key_;  // parallel sweep keys
  std::vector<int> pool_seg_;     // per node: min-tree over positions, -1 empty
};

}  // namespace emanet::detail
