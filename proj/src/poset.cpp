#include "semitoric/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace semitoric {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxPosetSize) {
    throw Error(ErrorKind::TooLarge, "posets are limited to 64 elements");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorKind::ParseError, "empty element label");
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "duplicate label " + l);
  }
}

}  // namespace

int popcount(ElementSet s) { return std::popcount(s); }

std::vector<std::size_t> elements_of(ElementSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Poset::Poset(std::vector<std::string> labels, BoolMatrix lt)
    : labels_(std::move(labels)), lt_(std::move(lt)) {
  check_labels(labels_);
  const Index n = static_cast<Index>(labels_.size());
  if (lt_.rows() != n || lt_.cols() != n) {
    throw Error(ErrorKind::BadParams, "relation matrix has wrong dimensions");
  }
  for (Index i = 0; i < n; ++i) {
    if (lt_(i, i)) throw Error(ErrorKind::CycleError, "relation is not irreflexive at " + labels_[i]);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (lt_(i, j))
        for (Index k = 0; k < n; ++k)
          if (lt_(j, k) && !lt_(i, k)) {
            throw Error(ErrorKind::BadParams, "relation is not transitive");
          }
}

Poset Poset::from_cover_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  const Index n = static_cast<Index>(labels.size());
  std::map<std::string, Index> index;
  for (Index i = 0; i < n; ++i) index[labels[i]] = i;
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown label " + l);
    return it->second;
  };
  BoolMatrix lt = BoolMatrix::Constant(n, n, false);
  for (const auto& [lo, hi] : covers) lt(lookup(lo), lookup(hi)) = true;
  // Warshall closure.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (lt(i, k))
        for (Index j = 0; j < n; ++j)
          if (lt(k, j)) lt(i, j) = true;
  for (Index i = 0; i < n; ++i) {
    if (lt(i, i)) throw Error(ErrorKind::CycleError, "cover relations contain a cycle through " + labels[i]);
  }
  return Poset(std::move(labels), std::move(lt));
}

Poset Poset::antichain(std::vector<std::string> labels) {
  const Index n = static_cast<Index>(labels.size());
  return Poset(std::move(labels), BoolMatrix::Constant(n, n, false));
}

Poset Poset::chain(std::vector<std::string> labels) {
  const Index n = static_cast<Index>(labels.size());
  BoolMatrix lt = BoolMatrix::Constant(n, n, false);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) lt(i, j) = true;
  return Poset(std::move(labels), std::move(lt));
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "unknown label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (less(i, k) && less(k, j)) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Poset::is_ideal(ElementSet s) const {
  for (std::size_t j : elements_of(s)) {
    for (std::size_t i = 0; i < size(); ++i) {
      if (less(i, j) && !(s >> i & 1U)) return false;
    }
  }
  return true;
}

ElementSet Poset::principal_ideal(std::size_t i) const {
  ElementSet s = ElementSet{1} << i;
  for (std::size_t j = 0; j < size(); ++j) {
    if (less(j, i)) s |= ElementSet{1} << j;
  }
  return s;
}

ElementSet Poset::all() const {
  return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1;
}

Poset LinearExtension::as_poset(const Poset& ground) const {
  const Index n = static_cast<Index>(order.size());
  BoolMatrix lt = BoolMatrix::Constant(n, n, false);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      lt(static_cast<Index>(order[i]), static_cast<Index>(order[j])) = true;
  return Poset(ground.labels(), std::move(lt));
}

std::vector<ElementSet> LinearExtension::prefixes() const {
  std::vector<ElementSet> out{0};
  ElementSet s = 0;
  for (std::size_t e : order) {
    s |= ElementSet{1} << e;
    out.push_back(s);
  }
  return out;
}

LinearExtensionStream::LinearExtensionStream(const Poset& poset) : poset_(&poset) {}

bool LinearExtensionStream::available(std::size_t e) const {
  if (used_ >> e & 1U) return false;
  for (std::size_t i = 0; i < poset_->size(); ++i) {
    if (poset_->less(i, e) && !(used_ >> i & 1U)) return false;
  }
  return true;
}

// Greedily extends the prefix with smallest available elements; at the first
// position only candidates >= `first_candidate` are considered.
bool LinearExtensionStream::fill_from(std::size_t first_candidate) {
  const std::size_t n = poset_->size();
  std::size_t start = first_candidate;
  while (prefix_.size() < n) {
    std::size_t chosen = n;
    for (std::size_t e = start; e < n; ++e) {
      if (available(e)) {
        chosen = e;
        break;
      }
    }
    if (chosen == n) return false;
    prefix_.push_back(chosen);
    used_ |= ElementSet{1} << chosen;
    start = 0;
  }
  return true;
}

std::optional<LinearExtension> LinearExtensionStream::next() {
  if (finished_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_from(0)) {
      finished_ = true;
      return std::nullopt;
    }
    return LinearExtension{prefix_};
  }
  // Backtrack: bump the deepest position that admits a larger candidate.
  while (!prefix_.empty()) {
    const std::size_t last = prefix_.back();
    prefix_.pop_back();
    used_ &= ~(ElementSet{1} << last);
    const std::size_t depth = prefix_.size();
    if (fill_from(last + 1)) return LinearExtension{prefix_};
    // fill_from may have pushed a partial prefix; roll back to depth.
    while (prefix_.size() > depth) {
      used_ &= ~(ElementSet{1} << prefix_.back());
      prefix_.pop_back();
    }
  }
  finished_ = true;
  return std::nullopt;
}

std::vector<LinearExtension> linear_extensions(const Poset& poset) {
  std::vector<LinearExtension> out;
  LinearExtensionStream stream(poset);
  while (auto ext = stream.next()) out.push_back(std::move(*ext));
  return out;
}

bool canonical_less(ElementSet a, ElementSet b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const ElementSet diff = a ^ b;
  const ElementSet lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

std::vector<ElementSet> order_ideals(const Poset& poset) {
  // Decide elements along a linear extension; an element may join the ideal
  // only once all of its predecessors have.
  LinearExtensionStream stream(poset);
  const auto ext = stream.next();
  std::vector<ElementSet> out;
  if (!ext) return {0};
  const std::size_t n = poset.size();
  std::vector<ElementSet> preds(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.less(j, i)) preds[i] |= ElementSet{1} << j;
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t k, ElementSet s) {
    if (k == n) {
      out.push_back(s);
      return;
    }
    const std::size_t e = ext->order[k];
    rec(k + 1, s);
    if ((preds[e] & ~s) == 0) rec(k + 1, s | (ElementSet{1} << e));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_stronger(const Poset& strong, const Poset& weak) {
  if (strong.labels() != weak.labels()) {
    throw Error(ErrorKind::GroundSetMismatch, "orders live on different ground sets");
  }
  const Index n = static_cast<Index>(weak.size());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (weak.relation()(i, j) && !strong.relation()(i, j)) return false;
  return true;
}

Poset intersect_orders(const std::vector<Poset>& orders) {
  if (orders.empty()) throw Error(ErrorKind::BadParams, "intersect_orders needs at least one order");
  BoolMatrix lt = orders.front().relation();
  for (const auto& p : orders) {
    if (p.labels() != orders.front().labels()) {
      throw Error(ErrorKind::GroundSetMismatch, "orders live on different ground sets");
    }
    lt = lt.array() && p.relation().array();
  }
  return Poset(orders.front().labels(), std::move(lt));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto profile = [](const Poset& x, std::size_t i) {
    int below = 0, above = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      below += x.less(j, i);
      above += x.less(i, j);
    }
    return std::pair{below, above};
  };
  std::vector<std::size_t> map(n, n);
  std::vector<bool> taken(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (taken[c] || profile(p, i) != profile(q, c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = p.less(i, j) == q.less(c, map[j]) && p.less(j, i) == q.less(map[j], c);
      }
      if (!ok) continue;
      map[i] = c;
      taken[c] = true;
      if (rec(i + 1)) return true;
      taken[c] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

}  // namespace semitoric
