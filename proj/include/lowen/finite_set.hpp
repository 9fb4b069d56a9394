#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lowen/rng.hpp"
#include "lowen/scalar.hpp"

namespace lowen {

// Canonical finite set: strictly increasing element vector plus the shared
// ground domain. Immutable after construction; identity is independent of
// input order.
template <class S>
class FiniteSet {
 public:
  FiniteSet() : dom_(GroundDomain::rational()) {}
  explicit FiniteSet(GroundDomain dom) : dom_(dom) {}

  static FiniteSet canonicalize(std::vector<S> raw, GroundDomain dom) {
    for (const S& x : raw) {
      if (domain_of(x) != dom) throw std::invalid_argument("mixed domains in set construction");
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return FiniteSet(std::move(raw), dom);
  }

  // Trusted path for values produced inside the library (already sorted,
  // already deduplicated, domain known good).
  static FiniteSet from_sorted_unique(std::vector<S> elems, GroundDomain dom) {
    return FiniteSet(std::move(elems), dom);
  }

  const std::vector<S>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const GroundDomain& domain() const { return dom_; }
  const S& operator[](std::size_t i) const { return elems_[i]; }

  bool contains(const S& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  bool subset_of(const FiniteSet& other) const {
    if (dom_ != other.dom_) return false;
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.dom_ == b.dom_ && a.elems_ == b.elems_;
  }

 private:
  FiniteSet(std::vector<S> elems, GroundDomain dom) : elems_(std::move(elems)), dom_(dom) {}
  std::vector<S> elems_;
  GroundDomain dom_;
};

template <class S>
void require_same_domain(const FiniteSet<S>& a, const FiniteSet<S>& b) {
  if (a.domain() != b.domain()) throw std::invalid_argument("sets from different domains");
}

template <class S>
FiniteSet<S> set_difference(const FiniteSet<S>& a, const FiniteSet<S>& s) {
  require_same_domain(a, s);
  std::vector<S> out;
  out.reserve(a.size());
  std::set_difference(a.elements().begin(), a.elements().end(), s.elements().begin(), s.elements().end(),
                      std::back_inserter(out));
  return FiniteSet<S>::from_sorted_unique(std::move(out), a.domain());
}

// Disjoint union; overlap means a decomposition loop moved an element twice.
template <class S>
FiniteSet<S> set_union_disjoint(const FiniteSet<S>& b, const FiniteSet<S>& s) {
  require_same_domain(b, s);
  std::vector<S> out;
  out.reserve(b.size() + s.size());
  std::merge(b.elements().begin(), b.elements().end(), s.elements().begin(), s.elements().end(),
             std::back_inserter(out));
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1] == out[i]) throw std::invalid_argument("overlap in disjoint union");
  }
  return FiniteSet<S>::from_sorted_unique(std::move(out), b.domain());
}

template <class S>
FiniteSet<S> intersection(const FiniteSet<S>& a, const FiniteSet<S>& b) {
  require_same_domain(a, b);
  std::vector<S> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return FiniteSet<S>::from_sorted_unique(std::move(out), a.domain());
}

// B subset of A with |B| = ceil(|A|/2) + k, k uniform over [0, floor(|A|/2)],
// members picked by a partial Fisher-Yates shuffle. Fully determined by
// (A, seed) via SplitMix64.
template <class S>
FiniteSet<S> random_majority_subset(const FiniteSet<S>& a, std::uint64_t seed) {
  if (a.empty()) throw std::invalid_argument("majority subset of empty set");
  const std::size_t n = a.size();
  SplitMix64 rng(seed);
  const std::size_t extra = static_cast<std::size_t>(rng.next_below(n / 2 + 1));
  const std::size_t target = (n + 1) / 2 + extra;
  std::vector<std::size_t> picked = rng.sample_indices(n, target);
  std::vector<S> out;
  out.reserve(target);
  for (std::size_t i : picked) out.push_back(a[i]);
  std::sort(out.begin(), out.end());
  return FiniteSet<S>::from_sorted_unique(std::move(out), a.domain());
}

}  // namespace lowen
