#pragma once

// Naive reference for co-categories in FinSet, used only by tests.
//
// Works directly on elements: pushouts are computed by relaxing class labels
// to a fixpoint, copairings by reading off representatives, and every axiom
// is an explicit elementwise loop.  Shares no code with the library's
// union-find pushout or the generic axiom checker.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Table = std::vector<std::size_t>;

/// Classes of copies x elements under (c, r(a)) ~ (c+1, l(a)); returns labels
/// indexed by c * n1 + x, and writes the class count.
inline Table glue(std::size_t copies, std::size_t n1, const Table& l, const Table& r, std::size_t& classes) {
  Table label(copies * n1);
  for (std::size_t k = 0; k < label.size(); ++k) label[k] = k;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c + 1 < copies; ++c)
      for (std::size_t a = 0; a < l.size(); ++a) {
        auto& u = label[c * n1 + r[a]];
        auto& v = label[(c + 1) * n1 + l[a]];
        if (u != v) {
          const std::size_t m = u < v ? u : v;
          const std::size_t old_u = u, old_v = v;
          for (auto& x : label)
            if (x == old_u || x == old_v) x = m;
          changed = true;
        }
      }
  }
  // compress to 0..classes-1
  Table dense(label.size(), label.size());
  Table out(label.size());
  classes = 0;
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (dense[label[k]] == label.size()) dense[label[k]] = classes++;
    out[k] = dense[label[k]];
  }
  return out;
}

/// Builds a map on classes from a per-(copy, element) assignment; nullopt if
/// two members of a class disagree.
inline std::optional<Table> on_classes(const Table& label, std::size_t classes,
                                       const std::function<std::size_t(std::size_t)>& value) {
  const std::size_t unset = static_cast<std::size_t>(-1);
  Table out(classes, unset);
  for (std::size_t k = 0; k < label.size(); ++k) {
    const std::size_t v = value(k);
    if (out[label[k]] != unset && out[label[k]] != v) return std::nullopt;
    out[label[k]] = v;
  }
  return out;
}

inline void for_each_table(std::size_t n, std::size_t m, const std::function<void(const Table&)>& f) {
  if (n > 0 && m == 0) return;
  Table t(n, 0);
  while (true) {
    f(t);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++t[k] < m) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

struct Counts {
  std::size_t structures = 0;
  std::size_t max_q_per_lri = 0;  // largest number of valid q for one (l, r, i)
};

/// Counts every (l, r, i, q) with 1 <= |Q0| <= max0, 1 <= |Q1| <= max1
/// satisfying all co-category axioms, trying every q into the apex.
inline Counts count_cocategories(std::size_t max0, std::size_t max1) {
  Counts counts;
  for (std::size_t n0 = 1; n0 <= max0; ++n0)
    for (std::size_t n1 = 1; n1 <= max1; ++n1)
      for_each_table(n0, n1, [&](const Table& l) {
        for_each_table(n0, n1, [&](const Table& r) {
          for_each_table(n1, n0, [&](const Table& i) {
            for (std::size_t a = 0; a < n0; ++a)
              if (i[l[a]] != a || i[r[a]] != a) return;
            std::size_t d = 0, t = 0;
            const Table dl = glue(2, n1, l, r, d);
            const Table tl = glue(3, n1, l, r, t);
            auto dcls = [&](std::size_t c, std::size_t x) { return dl[c * n1 + x]; };
            auto tcls = [&](std::size_t c, std::size_t x) { return tl[c * n1 + x]; };
            const auto li1 = on_classes(dl, d, [&](std::size_t k) {
              return k < n1 ? l[i[k]] : k - n1;
            });
            const auto ri1 = on_classes(dl, d, [&](std::size_t k) {
              return k < n1 ? k : r[i[k - n1]];
            });
            // The double apex sits in the triple as copies (0, 1) or (1, 2).
            const auto e12 = on_classes(dl, d, [&](std::size_t k) { return tcls(k / n1, k % n1); });
            const auto e23 = on_classes(dl, d, [&](std::size_t k) { return tcls(k / n1 + 1, k % n1); });
            if (!li1 || !ri1 || !e12 || !e23) return;
            std::size_t valid = 0;
            for_each_table(n1, d, [&](const Table& q) {
              for (std::size_t a = 0; a < n0; ++a)
                if (q[l[a]] != dcls(0, l[a]) || q[r[a]] != dcls(1, r[a])) return;
              for (std::size_t x = 0; x < n1; ++x)
                if ((*li1)[q[x]] != x || (*ri1)[q[x]] != x) return;
              const auto left = on_classes(dl, d, [&](std::size_t k) {
                return k < n1 ? (*e12)[q[k]] : tcls(2, k - n1);
              });
              const auto right = on_classes(dl, d, [&](std::size_t k) {
                return k < n1 ? tcls(0, k) : (*e23)[q[k - n1]];
              });
              if (!left || !right) return;
              for (std::size_t x = 0; x < n1; ++x)
                if ((*left)[q[x]] != (*right)[q[x]]) return;
              ++valid;
            });
            counts.structures += valid;
            if (valid > counts.max_q_per_lri) counts.max_q_per_lri = valid;
          });
        });
      });
  return counts;
}

}  // namespace oracle
