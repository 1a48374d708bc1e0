#include "macfact/hecke.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace macfact {

namespace {

struct Entry {
  Exp e;
  const Coef* c;
  bool tpart;
  bool neg;
};

void check_index(const MPoly& f, int i, int lo, int hi) {
  if (i < lo || i > hi) throw std::out_of_range("operator index out of range");
  (void)f;
}

}  // namespace

MPoly apply_hecke(const MPoly& f, int i, bool inverse, const Field& field) {
  int n = f.nvars();
  check_index(f, i, 1, n - 1);
  const int a_idx = i - 1, b_idx = i;
  std::vector<Entry> entries;
  entries.reserve(f.size() * 2);
  for (const auto& [e, c] : f.terms()) {
    int a = e[a_idx], b = e[b_idx];
    if (a == b) {
      entries.push_back(Entry{e, &c, true, false});
      continue;
    }
    Exp sw = e;
    sw[a_idx] = static_cast<std::int16_t>(b);
    sw[b_idx] = static_cast<std::int16_t>(a);
    if (a > b) {
      entries.push_back(Entry{sw, &c, true, false});
      for (int j = 1; j <= a - b; ++j) {
        Exp x = e;
        x[a_idx] = static_cast<std::int16_t>(b + j);
        x[b_idx] = static_cast<std::int16_t>(a - j);
        entries.push_back(Entry{x, &c, true, false});
        entries.push_back(Entry{x, &c, false, true});
      }
    } else {
      entries.push_back(Entry{sw, &c, false, false});
      for (int j = 1; j < b - a; ++j) {
        Exp x = e;
        x[a_idx] = static_cast<std::int16_t>(a + j);
        x[b_idx] = static_cast<std::int16_t>(b - j);
        entries.push_back(Entry{x, &c, false, false});
        entries.push_back(Entry{x, &c, true, true});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.e < y.e; });
  auto [ts1, ts2] = field.t_shift();
  std::vector<MPoly::Term> out;
  out.reserve(entries.size() / 2 + 1);
  for (std::size_t r = 0; r < entries.size();) {
    std::size_t s = r;
    Coef part0, part1;
    while (s < entries.size() && entries[s].e == entries[r].e) {
      (entries[s].tpart ? part1 : part0).add_shifted(*entries[s].c, 0, 0, entries[s].neg);
      ++s;
    }
    part0.add_shifted(part1, ts1, ts2, false);
    if (!part0.is_zero()) out.emplace_back(entries[r].e, std::move(part0));
    r = s;
  }
  MPoly g = MPoly::from_terms(f.vars(), std::move(out));
  if (!inverse) return g;
  // t^{-1} (f T) - f + t^{-1} f
  MPoly h = g + f;
  for (auto& t : h.mutable_terms()) t.second.shift_inplace(-ts1, -ts2);
  return h - f;
}

MPoly apply_affine(const MPoly& f, const Field& field) {
  int n = f.nvars();
  std::map<int, Coef> qpow;
  std::vector<MPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    int v1 = e[0];
    auto it = qpow.find(v1);
    if (it == qpow.end()) it = qpow.emplace(v1, field.qt(-v1, 0)).first;
    Exp x = e;
    for (int k = 0; k + 1 < n; ++k) x[k] = e[k + 1];
    x[n - 1] = static_cast<std::int16_t>(v1);
    out.emplace_back(x, c * it->second);
  }
  return MPoly::from_terms(f.vars(), std::move(out));
}

namespace {

MPoly t_power(const MPoly& f, int k, const Field& field) {
  if (k == 0) return f;
  auto [s1, s2] = field.t_shift();
  MPoly g = f;
  for (auto& t : g.mutable_terms()) t.second.shift_inplace(k * s1, k * s2);
  return g;
}

MPoly divide_by_variable(const MPoly& f, int i) {
  Exp e{};
  e[i] = -1;
  return f.shifted(e);
}

MPoly cherednik_core(const MPoly& f, int i, const Field& field, bool knop) {
  int n = f.nvars();
  check_index(f, i, 1, n);
  MPoly g = f;
  for (int j = i - 1; j >= 1; --j) g = apply_hecke(g, j, false, field);
  g = apply_affine(g, field);
  if (knop) g = g - divide_by_variable(g, n - 1);
  for (int j = n - 1; j >= i; --j) g = apply_hecke(g, j, true, field);
  g = t_power(g, 1 - i, field);
  if (knop) g += divide_by_variable(f, i - 1);
  return g;
}

}  // namespace

MPoly apply_cherednik(const MPoly& f, int i, const Field& field) { return cherednik_core(f, i, field, false); }

MPoly apply_knop(const MPoly& f, int i, const Field& field) { return cherednik_core(f, i, field, true); }

MPoly apply_word(const MPoly& f, const std::vector<int>& word, const Field& field) {
  MPoly g = f;
  for (int i : word) g = apply_hecke(g, i, false, field);
  return g;
}

MPoly symmetrize(const MPoly& f, const Field& field) {
  int n = f.nvars();
  if (n > kMaxVars) throw std::invalid_argument("arity too large for the symmetrizer");
  MPoly g = f;
  for (int k = 1; k < n; ++k) {
    MPoly acc = g;
    MPoly h = g;
    for (int j = k; j >= 1; --j) {
      h = apply_hecke(h, j, false, field);
      acc += h;
    }
    g = std::move(acc);
  }
  return g;
}

}  // namespace macfact
