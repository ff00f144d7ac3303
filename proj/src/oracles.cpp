#include "walkhg/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "walkhg/errors.hpp"

namespace walkhg {

namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

ConvolutionRow from_coeffs(const std::map<int, Rational>& coeffs) {
  int top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  std::vector<Rational> dense(top + 1, Rational(0));
  for (const auto& [k, c] : coeffs) dense[k] += c;
  return ConvolutionRow::from_dense(dense);
}

ConvolutionRow complete_row(long long n, int i, int j) {
  if (n < 2) throw usage_error("complete oracle needs n >= 2");
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  return from_coeffs({{0, Rational(1, n - 1)}, {1, Rational(n - 2, n - 1)}});
}

ConvolutionRow srg_row(long long n, long long k, long long lambda, long long mu, int i,
                       int j) {
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 1)
    return from_coeffs({{0, Rational(1, k)},
                        {1, Rational(lambda, k)},
                        {2, Rational(k - lambda - 1, k)}});
  if (i == 1 && j == 2)
    return from_coeffs({{1, Rational(mu, k)}, {2, Rational(k - mu, k)}});
  return from_coeffs({{0, Rational(1, n - k - 1)},
                      {1, Rational(k - mu, n - k - 1)},
                      {2, Rational(n + mu - 2 * k - 2, n - k - 1)}});
}

ConvolutionRow tree_row(long long n, int i, int j) {
  if (n < 2) throw usage_error("tree oracle needs n >= 2");
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  int m = std::min(i, j);
  std::map<int, Rational> c;
  c[i + j] = Rational(n - 1, n);
  for (int h = 1; h < m; ++h) c[i + j - 2 * h] = Rational(n - 2, n * ipow(n - 1, h));
  c[std::abs(i - j)] = Rational(1, n * ipow(n - 1, m - 1));
  return from_coeffs(c);
}

ConvolutionRow linked_triangle_row(int i, int j) {
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  int m = std::min(i, j);
  std::map<int, Rational> c;
  c[i + j] = Rational(1, 2);
  for (int h = 1; h <= m; ++h)
    c[std::abs(i - j) + 2 * h - 1] = Rational(1, ipow(2, m + 2 - h));
  c[std::abs(i - j)] = Rational(1, ipow(2, m + 1));
  return from_coeffs(c);
}

int delta(long long a, long long b) { return a == b ? 1 : 0; }

ConvolutionRow prism_row(long long n, int i, int j) {
  if (n < 3) throw usage_error("prism oracle needs n >= 3");
  long long m = n / 2;  // levels run 0..m+1 (odd n: n = 2m+1, even n: n = 2m)
  if (i > j) std::swap(i, j);
  if (i == 0) return ConvolutionRow::point_mass(j);

  if (n == 3) {
    if (i == 1 && j == 1)
      return from_coeffs({{0, Rational(1, 3)}, {1, Rational(2, 9)}, {2, Rational(4, 9)}});
    if (i == 1 && j == 2)
      return from_coeffs({{1, Rational(2, 3)}, {2, Rational(1, 3)}});
    return from_coeffs({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  }

  std::map<int, Rational> c;
  if (n % 2 == 1) {
    // n = 2m+1, m >= 2
    if (j == m + 1) {
      c[m - i + 1] += Rational(3 + delta(i, 1), 6);
      c[m - i + 2] += Rational(3 - delta(i, 1), 6);
    } else if (i == 1) {
      // 1 <= j <= m; the j = m+1 case belongs to the R_i R_{m+1} display
      c[j - 1] += Rational(3 - delta(j, 1), 6);
      if (delta(j, m)) c[j] += Rational(1, 6);
      c[j + 1] += Rational(3 + delta(j, 1) - delta(j, m), 6);
    } else if (j == m && i == m) {
      c[0] += Rational(1, 4);
      c[1] += Rational(1, 8);
      c[2] += Rational(2 + delta(m, 2), 8);
      c[3] += Rational(3 - delta(m, 2), 8);
    } else if (j == m) {
      c[m - i] += Rational(3, 8);
      c[m - i + 1] += Rational(1, 8);
      c[m - i + 2] += Rational(1 + delta(i, 2), 8);
      c[m - i + 3] += Rational(3 - delta(i, 2), 8);
    } else {
      // 2 <= i <= j <= m-1
      c[j - i] += Rational(3 - delta(i, j), 8);
      c[j - i + 2] += Rational(1 + delta(i, j), 8);
      if (i + j <= m) {
        c[i + j - 2] += Rational(1, 8);
        c[i + j] += Rational(3, 8);
      } else if (i + j <= m + 2) {
        c[m - 1] += Rational(1, 8);
        c[m] += Rational(1, 8);
        c[m + 1] += Rational(1, 4);
      } else {
        c[2 * m - i - j + 1] += Rational(1, 8);
        c[2 * m - i - j + 3] += Rational(3, 8);
      }
    }
  } else {
    // n = 2m, m >= 2
    if (j == m + 1) {
      c[m - i + 1] += Rational(1);
    } else if (i == 1) {
      c[j - 1] += Rational(3 - delta(j, 1) + delta(j, m), 6);
      c[j + 1] += Rational(3 + delta(j, 1) - delta(j, m), 6);
    } else if (j == m && i == m) {
      c[0] += Rational(1, 3);
      c[2] += Rational(2, 3);
    } else if (j == m) {
      c[m - i] += Rational(1, 2);
      c[m - i + 2] += Rational(1, 2);
    } else {
      c[j - i] += Rational(3 - delta(i, j), 8);
      c[j - i + 2] += Rational(1 + delta(i, j), 8);
      if (i + j <= m + 1) {
        c[i + j - 2] += Rational(1 + delta(i + j, m + 1), 8);
        c[i + j] += Rational(3 - delta(i + j, m + 1), 8);
      } else {
        c[2 * m - i - j] += Rational(1, 8);
        c[2 * m - i - j + 2] += Rational(3, 8);
      }
    }
  }
  return from_coeffs(c);
}

ConvolutionRow two_class_row(const std::string& family, const std::string& cls, int i,
                             int j) {
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  if (i > j) std::swap(i, j);
  bool filled = cls == "filled";
  if (!filled && cls != "blank")
    throw usage_error(family + " oracle needs cls filled|blank");

  if (family == "figure10") {
    if (i == 1 && j == 1)
      return filled ? from_coeffs({{0, Rational(1, 4)},
                                   {1, Rational(1, 4)},
                                   {2, Rational(1, 2)}})
                    : from_coeffs({{0, Rational(1, 4)},
                                   {1, Rational(3, 8)},
                                   {2, Rational(3, 8)}});
    if (i == 1 && j == 2)
      return filled ? ConvolutionRow::point_mass(1)
                    : from_coeffs({{1, Rational(3, 4)}, {2, Rational(1, 4)}});
    return filled ? from_coeffs({{0, Rational(1, 2)}, {2, Rational(1, 2)}})
                  : from_coeffs({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  }
  // line graph of the triangular prism
  if (i == 1 && j == 1)
    return filled ? from_coeffs({{0, Rational(1, 4)},
                                 {1, Rational(3, 8)},
                                 {2, Rational(3, 8)}})
                  : from_coeffs({{0, Rational(1, 4)},
                                 {1, Rational(1, 4)},
                                 {2, Rational(1, 2)}});
  if (i == 1 && j == 2)
    return filled ? from_coeffs({{1, Rational(3, 8)}, {2, Rational(5, 8)}})
                  : from_coeffs({{1, Rational(1, 2)}, {2, Rational(1, 2)}});
  return filled ? from_coeffs({{0, Rational(1, 4)},
                               {1, Rational(5, 8)},
                               {2, Rational(1, 8)}})
                : from_coeffs({{0, Rational(1, 4)},
                               {1, Rational(1, 2)},
                               {2, Rational(1, 4)}});
}

ConvolutionRow bipartite_row(long long m, int i, int j) {
  if (m < 2) throw usage_error("bipartite oracle needs base side >= 2");
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 1)
    return from_coeffs({{0, Rational(1, m)}, {2, Rational(m - 1, m)}});
  if (i == 1 && j == 2) return ConvolutionRow::point_mass(1);
  return from_coeffs({{0, Rational(1, m - 1)}, {2, Rational(m - 2, m - 1)}});
}

ConvolutionRow ladder_row(int i, int j) {
  if (i == 0 || j == 0) return ConvolutionRow::point_mass(std::max(i, j));
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 1)
    return from_coeffs({{0, Rational(1, 3)}, {2, Rational(2, 3)}});
  if (i == 1)
    return from_coeffs({{j - 1, Rational(1, 2)}, {j + 1, Rational(1, 2)}});
  std::map<int, Rational> c;
  if (i == j) {
    c[0] += Rational(1, 4);
    c[2] += Rational(1, 4);
    c[2 * i - 2] += Rational(1, 8);
    c[2 * i] += Rational(3, 8);
  } else {
    c[j - i] += Rational(3, 8);
    c[j - i + 2] += Rational(1, 8);
    c[i + j - 2] += Rational(1, 8);
    c[i + j] += Rational(3, 8);
  }
  return from_coeffs(c);
}

}  // namespace

int closed_form_max_level(const OracleFamily& f) {
  if (f.family == "complete") return 1;
  if (f.family == "srg" || f.family == "figure10" || f.family == "lineprism3" ||
      f.family == "bipartite")
    return 2;
  if (f.family == "prism") {
    long long n = f.params.at(0);
    return static_cast<int>(n / 2 + 1);
  }
  if (f.family == "tree" || f.family == "linked-triangle" || f.family == "ladder")
    return -1;
  throw usage_error("unknown oracle family " + f.family);
}

ConvolutionRow closed_form(const OracleFamily& f, int i, int j) {
  if (i < 0 || j < 0) throw usage_error("levels must be nonnegative");
  int top = closed_form_max_level(f);
  if (top >= 0 && (i > top || j > top))
    throw usage_error("oracle " + f.family + " covers levels 0.." + std::to_string(top));
  if (f.family == "complete") return complete_row(f.params.at(0), i, j);
  if (f.family == "srg")
    return srg_row(f.params.at(0), f.params.at(1), f.params.at(2), f.params.at(3), i, j);
  if (f.family == "tree") return tree_row(f.params.at(0), i, j);
  if (f.family == "linked-triangle") return linked_triangle_row(i, j);
  if (f.family == "prism") return prism_row(f.params.at(0), i, j);
  if (f.family == "figure10" || f.family == "lineprism3")
    return two_class_row(f.family, f.cls, i, j);
  if (f.family == "bipartite") return bipartite_row(f.params.at(0), i, j);
  if (f.family == "ladder") return ladder_row(i, j);
  throw usage_error("unknown oracle family " + f.family);
}

OracleVerdict oracle_vs_engine(const OracleFamily& f, const ConvolutionTable& t) {
  OracleVerdict v;
  int oracle_top = closed_form_max_level(f);
  int table_top = t.from_finite_graph() ? t.level_bound() : t.pair_sum_bound();
  int top = oracle_top < 0 ? table_top : std::min(oracle_top, table_top);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      if (!t.has_row(i, j)) continue;
      if (t.row(i, j) != closed_form(f, i, j)) {
        v.ok = false;
        v.i = i;
        v.j = j;
        v.detail = "row (" + std::to_string(i) + "," + std::to_string(j) +
                   ") differs from the " + f.family + " closed form";
        return v;
      }
    }
  return v;
}

OracleVerdict oracle_vs_engine_classes(const std::vector<OracleFamily>& oracles,
                                       const BasePointClassification& classes) {
  OracleVerdict v;
  if (oracles.size() != classes.classes.size()) {
    v.ok = false;
    v.detail = "class count mismatch: engine found " +
               std::to_string(classes.classes.size()) + ", oracle expects " +
               std::to_string(oracles.size());
    return v;
  }
  // Perfect matching between engine classes and oracle tables.
  size_t n = oracles.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool all = true;
    for (size_t c = 0; c < n && all; ++c)
      all = oracle_vs_engine(oracles[perm[c]], classes.tables[c]).ok;
    if (all) return v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  v.ok = false;
  v.detail = "no perfect matching between engine classes and oracle tables";
  return v;
}

}  // namespace walkhg
