#include "galring/zmodule.hpp"

#include <algorithm>

#include "galring/error.hpp"

namespace galring {
namespace {

Residue mod(Residue v, Residue q) {
  v %= q;
  return v < 0 ? v + q : v;
}

int valuation(Residue v, int p, int a) {
  if (v == 0) return a;
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

// Inverse of a unit modulo q by extended Euclid.
Residue inverse_mod(Residue u, Residue q) {
  Residue r0 = q, r1 = u, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Residue t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  return mod(s0, q);
}

void axpy(std::vector<Residue>& y, Residue c, const std::vector<Residue>& x, Residue q) {
  if (c == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = mod(y[k] + c * x[k], q);
}

bool is_zero(const std::vector<Residue>& v) {
  return std::all_of(v.begin(), v.end(), [](Residue c) { return c == 0; });
}

}  // namespace

ZModule::ZModule(int p, int a, std::size_t width,
                 const std::vector<std::vector<Residue>>& generators)
    : p_(p), a_(a), q_(1), width_(width) {
  for (int i = 0; i < a; ++i) q_ *= p;
  std::vector<std::vector<Residue>> work;
  work.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != width) throw Error(ErrorCode::ParamsMismatch, "generator width mismatch");
    std::vector<Residue> r(g.size());
    std::transform(g.begin(), g.end(), r.begin(), [&](Residue c) { return mod(c, q_); });
    if (!is_zero(r)) work.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < width_ && !work.empty(); ++col) {
    auto best = work.end();
    int best_v = a_;
    for (auto it = work.begin(); it != work.end(); ++it) {
      const int v = valuation((*it)[col], p_, a_);
      if (v < best_v) {
        best_v = v;
        best = it;
      }
    }
    if (best == work.end()) continue;
    std::vector<Residue> pivot = std::move(*best);
    work.erase(best);

    Residue pv = 1;
    for (int i = 0; i < best_v; ++i) pv *= p_;
    const Residue unit = pivot[col] / pv;
    for (auto& c : pivot) c = mod(c * inverse_mod(unit % q_, q_), q_);

    std::vector<std::vector<Residue>> next;
    next.reserve(work.size() + 1);
    for (auto& r : work) {
      if (r[col] != 0) axpy(r, -(r[col] / pv), pivot, q_);
      if (!is_zero(r)) next.push_back(std::move(r));
    }
    // Saturation: p^{a-v} * pivot vanishes at col but may not elsewhere.
    std::vector<Residue> sat = pivot;
    for (auto& c : sat) c = mod(c * (q_ / pv), q_);
    if (!is_zero(sat)) next.push_back(std::move(sat));
    work = std::move(next);

    rows_.push_back(std::move(pivot));
    pivots_.push_back(col);
    valuations_.push_back(best_v);
  }

  // Reduce entries above each pivot into [0, p^v).
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue pv = 1;
    for (int k = 0; k < valuations_[i]; ++k) pv *= p_;
    for (std::size_t j = 0; j < i; ++j) {
      const Residue c = rows_[j][pivots_[i]] / pv;
      axpy(rows_[j], -c, rows_[i], q_);
    }
  }
}

int ZModule::log_size() const {
  int total = 0;
  for (int v : valuations_) total += a_ - v;
  return total;
}

bool ZModule::contains(std::span<const Residue> v) const {
  if (v.size() != width_) throw Error(ErrorCode::ParamsMismatch, "vector width mismatch");
  std::vector<Residue> w(v.size());
  std::transform(v.begin(), v.end(), w.begin(), [&](Residue c) { return mod(c, q_); });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue c = w[pivots_[i]];
    if (c == 0) continue;
    Residue pv = 1;
    for (int k = 0; k < valuations_[i]; ++k) pv *= p_;
    if (c % pv != 0) return false;
    axpy(w, -(c / pv), rows_[i], q_);
  }
  return is_zero(w);
}

bool ZModule::contains(const ZModule& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const auto& r) { return contains(r); });
}

ZModule ZModule::operator+(const ZModule& other) const {
  if (other.width_ != width_) throw Error(ErrorCode::ParamsMismatch, "module width mismatch");
  std::vector<std::vector<Residue>> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return ZModule(p_, a_, width_, gens);
}

}  // namespace galring
