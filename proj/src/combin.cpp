#include "macfact/combin.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace macfact {

Composition parse_composition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("malformed index: " + std::string(text));
  s = s.substr(1, s.size() - 2);
  Composition out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    std::size_t caret = item.find('^');
    try {
      std::size_t used = 0;
      int value = std::stoi(item.substr(0, caret), &used);
      if (used != item.substr(0, caret).size()) throw std::invalid_argument("x");
      int rep = 1;
      if (caret != std::string::npos) {
        std::string r = item.substr(caret + 1);
        rep = std::stoi(r, &used);
        if (used != r.size() || rep < 0) throw std::invalid_argument("x");
      }
      if (value < 0) throw std::invalid_argument("x");
      out.insert(out.end(), rep, value);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed index: " + std::string(text));
    }
    pos = end + 1;
  }
  return out;
}

std::string composition_str(const Composition& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

bool is_partition(const Composition& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

int weight(const Composition& v) { return std::accumulate(v.begin(), v.end(), 0); }

Composition sorted_shape(const Composition& v) {
  Composition s = v;
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

std::vector<int> standardization(const Composition& v) {
  int n = static_cast<int>(v.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = 0; j < n; ++j)
      if (v[j] < v[i] || (j > i && v[j] == v[i])) ++c;
    out[i] = c;
  }
  return out;
}

std::vector<QMono> reciprocal(const Composition& v) {
  std::vector<int> st = standardization(v);
  std::vector<QMono> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(QMono{v[i], st[i]});
  return out;
}

Coef reciprocal_sum(const Composition& v) {
  std::vector<Term2> ts;
  for (const auto& m : reciprocal(v)) ts.push_back(Term2{m.qexp, m.texp, Rational(1)});
  return Coef::from_terms(0, std::move(ts));
}

std::vector<Coef> reciprocal_point(const Composition& v, const Field& field) {
  std::vector<Coef> out;
  for (const auto& m : reciprocal(v)) out.push_back(field.qt(m.qexp, m.texp));
  return out;
}

bool dominance_leq(const Composition& u, const Composition& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  long su = 0, sv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
    if (su > sv) return false;
  }
  return true;
}

bool dominance_less(const Composition& u, const Composition& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  int wu = weight(u), wv = weight(v);
  if (wu != wv) return wu < wv;
  Composition su = sorted_shape(u), sv = sorted_shape(v);
  if (su != sv) return dominance_leq(su, sv);
  return u != v && dominance_leq(u, v);
}

Composition quasistaircase(const QSParams& p) {
  if (p.l < 1 || p.k < 0 || p.k > p.l || p.s < 2 || p.r < 0 || p.beta < 0)
    throw std::invalid_argument("quasistaircase parameters out of range");
  if ((p.r * (p.l + 1)) % (p.s - 1) != 0) throw std::invalid_argument("divisibility violated: (s-1) must divide r(l+1)");
  Composition out(p.k, (p.beta + 1) * p.s + p.r);
  for (int b = p.beta; b >= 1; --b) out.insert(out.end(), p.l, b * p.s + p.r);
  int n0 = p.r * (p.l + 1) / (p.s - 1) + p.l;
  out.insert(out.end(), n0, 0);
  return out;
}

Composition staircase(int l, int k, int s, int beta) { return quasistaircase(QSParams{l, k, s, 0, beta}); }

std::vector<YBStep> yb_path(const Composition& v, PathRule rule) {
  int n = static_cast<int>(v.size());
  std::vector<YBStep> rev;
  Composition w = v;
  auto smallest_descent = [&]() {
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) return i;
    return -1;
  };
  while (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) {
    bool affine;
    int d = smallest_descent();
    if (rule == PathRule::AffineFirst) {
      affine = w[n - 1] >= 1;
    } else {
      affine = d < 0;
    }
    if (affine) {
      // predecessor of [w2..wN, w1+1]
      Composition p(n);
      p[0] = w[n - 1] - 1;
      for (int i = 1; i < n; ++i) p[i] = w[i - 1];
      w = p;
      rev.push_back(YBStep{YBStep::AffinePhi, 0});
    } else {
      std::swap(w[d], w[d + 1]);
      rev.push_back(YBStep{YBStep::Transposition, d + 1});
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<std::vector<YBStep>> yb_path_avoiding(const Composition& v,
                                                     const std::function<bool(const Composition&, int)>& blocked) {
  int n = static_cast<int>(v.size());
  std::set<Composition> dead;
  std::vector<YBStep> rev;
  std::function<bool(const Composition&)> dfs = [&](const Composition& w) -> bool {
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return true;
    if (dead.count(w)) return false;
    if (w[n - 1] >= 1) {
      Composition p(n);
      p[0] = w[n - 1] - 1;
      for (int i = 1; i < n; ++i) p[i] = w[i - 1];
      rev.push_back(YBStep{YBStep::AffinePhi, 0});
      if (dfs(p)) return true;
      rev.pop_back();
    }
    for (int i = 0; i + 1 < n; ++i) {
      if (w[i] <= w[i + 1]) continue;
      Composition p = w;
      std::swap(p[i], p[i + 1]);
      if (blocked(p, i + 1)) continue;
      rev.push_back(YBStep{YBStep::Transposition, i + 1});
      if (dfs(p)) return true;
      rev.pop_back();
    }
    dead.insert(w);
    return false;
  };
  if (!dfs(v)) return std::nullopt;
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Composition replay_path(int n, const std::vector<YBStep>& path) {
  Composition w(n, 0);
  for (const auto& s : path) {
    if (s.kind == YBStep::AffinePhi) {
      Composition p(n);
      for (int i = 0; i + 1 < n; ++i) p[i] = w[i + 1];
      p[n - 1] = w[0] + 1;
      w = p;
    } else {
      int i = s.i - 1;
      if (i < 0 || i + 1 >= n || !(w[i] < w[i + 1])) throw std::logic_error("invalid transposition step");
      std::swap(w[i], w[i + 1]);
    }
  }
  return w;
}

std::string path_str(const std::vector<YBStep>& path) {
  std::string out;
  for (const auto& s : path) {
    if (!out.empty()) out += ",";
    out += s.kind == YBStep::AffinePhi ? "Phi" : "s" + std::to_string(s.i);
  }
  return out;
}

bool is_admissible(const Composition& lambda, int l, int s) {
  for (std::size_t i = 0; i + l < lambda.size(); ++i)
    if (lambda[i] - lambda[i + l] < s) return false;
  return true;
}

std::vector<Composition> partitions_inside(const Composition& lambda) {
  std::vector<Composition> out;
  int n = static_cast<int>(lambda.size());
  Composition cur(n);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= std::min(cap, lambda[i]); ++x) {
      cur[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, n ? lambda[0] : 0);
  return out;
}

std::vector<Composition> partitions_up_to(int n, int max_weight) {
  std::vector<Composition> out;
  Composition cur(n);
  std::function<void(int, int, int)> rec = [&](int i, int cap, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= std::min(cap, left); ++x) {
      cur[i] = x;
      rec(i + 1, x, left - x);
    }
  };
  rec(0, max_weight, max_weight);
  return out;
}

std::vector<Composition> compositions_up_to(int n, int max_weight) {
  std::vector<Composition> out;
  Composition cur(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, max_weight);
  return out;
}

}  // namespace macfact
