#include "sagbilab/order.hpp"

#include <limits>
#include <numeric>

namespace sagbilab {

namespace {

constexpr std::int64_t kExpLimit = std::int64_t{1} << 40;

void check_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors have different lengths");
}

// a[perm[i]] for priority i; identity when perm is empty.
inline std::int64_t at(const ExponentVector& a, const std::vector<int>& perm,
                       std::size_t i) {
  return perm.empty() ? a[i] : a[static_cast<std::size_t>(perm[i])];
}

Ordering cmp_lex(const ExponentVector& a, const ExponentVector& b,
                 const std::vector<int>& perm) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = at(a, perm, i), y = at(b, perm, i);
    if (x != y) return x > y ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

// grevlex tiebreak at equal degree: scan weakest variable first; the vector
// with the smaller entry at the first difference is the larger one.
Ordering cmp_revlex_tie(const ExponentVector& a, const ExponentVector& b,
                        const std::vector<int>& perm) {
  for (std::size_t i = a.size(); i-- > 0;) {
    auto x = at(a, perm, i), y = at(b, perm, i);
    if (x != y) return x < y ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

Ordering cmp_int(long long x, long long y) {
  if (x != y) return x > y ? Ordering::Greater : Ordering::Less;
  return Ordering::Equal;
}

}  // namespace

long long total_degree(const ExponentVector& e) {
  long long d = 0;
  for (auto v : e) d += v;
  return d;
}

ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] > kExpLimit) throw ExponentOverflowError("exponent too large");
  }
  return r;
}

ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw ExponentOverflowError("negative exponent");
    r[i] = a[i] - b[i];
  }
  return r;
}

ExponentVector exp_scale(const ExponentVector& a, std::int64_t k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] * k;
    if (r[i] > kExpLimit || r[i] < -kExpLimit)
      throw ExponentOverflowError("exponent too large");
  }
  return r;
}

Ordering compare(const MonomialOrder& order, const ExponentVector& a,
                 const ExponentVector& b) {
  check_same_length(a, b);
  if (!order.priority.empty() && order.priority.size() != a.size())
    throw DimensionError("priority permutation has wrong length");
  switch (order.kind) {
    case OrderKind::Lex:
      return cmp_lex(a, b, order.priority);
    case OrderKind::GrLex: {
      auto d = cmp_int(total_degree(a), total_degree(b));
      return d != Ordering::Equal ? d : cmp_lex(a, b, order.priority);
    }
    case OrderKind::GrevLex: {
      auto d = cmp_int(total_degree(a), total_degree(b));
      return d != Ordering::Equal ? d : cmp_revlex_tie(a, b, order.priority);
    }
    case OrderKind::WeightThenLex: {
      if (order.weights.size() != a.size())
        throw DimensionError("weight vector has wrong length");
      long long wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += order.weights[i] * a[i];
        wb += order.weights[i] * b[i];
      }
      auto d = cmp_int(wa, wb);
      return d != Ordering::Equal ? d : cmp_lex(a, b, order.priority);
    }
    case OrderKind::Block: {
      // Grevlex on the elimination block, then grevlex on the rest. The
      // block is assumed to be a prefix-style index list; compare without
      // materializing the split vectors.
      long long da = 0, db = 0;
      for (int i : order.elim_block) {
        da += a[static_cast<std::size_t>(i)];
        db += b[static_cast<std::size_t>(i)];
      }
      auto d = cmp_int(da, db);
      if (d != Ordering::Equal) return d;
      for (std::size_t k = order.elim_block.size(); k-- > 0;) {
        auto i = static_cast<std::size_t>(order.elim_block[k]);
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Greater : Ordering::Less;
      }
      std::size_t m = order.elim_block.size();
      bool prefix = m == 0 || (order.elim_block.front() == 0 &&
                               order.elim_block.back() == static_cast<int>(m) - 1);
      if (prefix) {
        long long ra = 0, rb = 0;
        for (std::size_t i = m; i < a.size(); ++i) {
          ra += a[i];
          rb += b[i];
        }
        d = cmp_int(ra, rb);
        if (d != Ordering::Equal) return d;
        for (std::size_t i = a.size(); i-- > m;)
          if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Greater : Ordering::Less;
        return Ordering::Equal;
      }
      std::vector<char> in_block(a.size(), 0);
      for (int i : order.elim_block) in_block[static_cast<std::size_t>(i)] = 1;
      long long ra = 0, rb = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!in_block[i]) {
          ra += a[i];
          rb += b[i];
        }
      d = cmp_int(ra, rb);
      if (d != Ordering::Equal) return d;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (in_block[i]) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Greater : Ordering::Less;
      }
      return Ordering::Equal;
    }
  }
  throw PreconditionError("unknown order kind");
}

}  // namespace sagbilab
