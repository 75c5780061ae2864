#include "cdlab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace cdlab {

namespace {

// Light's associativity test: with S a generating set, associativity of all
// triples (a, s, c) with s in S implies full associativity. Used above the
// exhaustive-check threshold.
constexpr int kExhaustiveAssocLimit = 256;

std::vector<int> greedy_generating_set(const Group& g) {
  int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> gens;
  for (int cand = 1; cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    // grow the closure incrementally from the new generator
    std::size_t first_new = members.size();
    members.push_back(cand);
    in[cand] = 1;
    for (std::size_t k = first_new; k < members.size(); ++k) {
      int x = members[k];
      for (std::size_t i = 0; i < members.size(); ++i) {
        int y = members[i];
        for (int z : {g.mul(x, y), g.mul(y, x)}) {
          if (!in[z]) {
            in[z] = 1;
            members.push_back(z);
          }
        }
      }
    }
    if (static_cast<int>(members.size()) == n) break;
  }
  return gens;
}

}  // namespace

void Group::validate() const {
  if (n_ <= 0) throw NoIdentityError(0);
  // closure: every entry in range
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= n_) throw NotClosedError(i, j, v);
    }
  // identity at index 0
  for (int i = 0; i < n_; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) throw NoIdentityError(i);
  }
  // associativity
  if (n_ <= kExhaustiveAssocLimit) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw NotAssociativeError(a, b, c);
      }
  } else {
    std::vector<int> gens = greedy_generating_set(*this);
    for (int a = 0; a < n_; ++a)
      for (int s : gens) {
        int as = mul(a, s);
        for (int c = 0; c < n_; ++c)
          if (mul(as, c) != mul(a, mul(s, c)))
            throw NotAssociativeError(a, s, c);
      }
    // spot-check random triples as well; fixed seed keeps runs reproducible
    std::mt19937 rng(0xcd1abu);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 4 * n_; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw NotAssociativeError(a, b, c);
    }
  }
  // inverses: for each a some x with a*x = 0 (two-sidedness follows from
  // associativity and is asserted)
  for (int a = 0; a < n_; ++a) {
    int x = inverse_[a];
    if (x < 0 || x >= n_ || mul(a, x) != 0 || mul(x, a) != 0)
      throw NoInverseError(a);
  }
  // element orders divide the group order (Lagrange)
  for (int a = 0; a < n_; ++a) {
    int m = elem_order_[a];
    if (m <= 0 || n_ % m != 0) throw NoInverseError(a);
    int x = 0;
    for (int k = 0; k < m; ++k) x = mul(x, a);
    if (x != 0) throw NoInverseError(a);
  }
}

void Group::finalize() {
  // entries must be in range before anything else touches them
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= n_) throw NotClosedError(i, j, v);
    }
  for (int i = 0; i < n_; ++i)
    if (mul(0, i) != i || mul(i, 0) != i) throw NoIdentityError(i);
  inverse_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int found = -1;
    for (int x = 0; x < n_; ++x)
      if (mul(a, x) == 0) {
        found = x;
        break;
      }
    if (found < 0) throw NoInverseError(a);
    inverse_[a] = static_cast<std::uint16_t>(found);
  }
  elem_order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a, m = 1;
    while (x != 0) {
      x = mul(x, a);
      ++m;
      if (m > n_) throw NotAssociativeError(a, a, a);  // not a group
    }
    elem_order_[a] = static_cast<std::uint16_t>(m);
  }
  validate();
}

int Group::power(int a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  int acc = 0, base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

long long Group::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(elem_order_[a]));
  return e;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (int a = 0; a < n_; ++a)
    if (elem_order_[a] == n_) return true;
  return false;
}

int Group::smallest_prime_divisor() const {
  if (n_ <= 1) return 0;
  for (int p = 2; p * p <= n_; ++p)
    if (n_ % p == 0) return p;
  return n_;
}

int Group::p_group_prime() const {
  if (n_ <= 1) return 0;
  int p = smallest_prime_divisor();
  int m = n_;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

GroupBuilder::GroupBuilder(int n) {
  g_.n_ = n;
  g_.table_.assign(static_cast<std::size_t>(n) * n, 0);
}

void GroupBuilder::set(int a, int b, int product) {
  g_.table_[static_cast<std::size_t>(a) * g_.n_ + b] =
      static_cast<std::uint16_t>(product);
}

Group GroupBuilder::build(std::string label) && {
  g_.label_ = std::move(label);
  g_.finalize();
  return std::move(g_);
}

Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        std::string label) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw NoIdentityError(0);
  Group g;
  g.n_ = n;
  g.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotClosedError(i, static_cast<int>(table[i].size()), -1);
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw NotClosedError(i, j, v);
      g.table_[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>(v);
    }
  }
  g.label_ = std::move(label);
  g.finalize();
  return g;
}

Group from_permutation_generators(const PermGenSet& gens,
                                  const GroupLimits& limits,
                                  std::string label) {
  int deg = gens.degree;
  if (deg <= 0) throw BadParameterError("permutation degree must be positive");
  for (const auto& g : gens.generators) {
    if (static_cast<int>(g.size()) != deg)
      throw BadParameterError("generator length does not match degree");
    std::vector<char> seen(deg, 0);
    for (int img : g) {
      if (img < 0 || img >= deg || seen[img])
        throw BadParameterError("generator is not a permutation");
      seen[img] = 1;
    }
  }

  using Perm = std::vector<int>;
  Perm ident(deg);
  std::iota(ident.begin(), ident.end(), 0);

  std::map<Perm, int> index;
  std::vector<Perm> elems;
  elems.push_back(ident);
  index.emplace(ident, 0);
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    Perm cur = elems[todo.front()];
    todo.pop();
    for (const auto& g : gens.generators) {
      Perm nxt(deg);
      for (int i = 0; i < deg; ++i) nxt[i] = cur[g[i]];  // cur∘g
      auto [it, fresh] = index.emplace(nxt, static_cast<int>(elems.size()));
      if (fresh) {
        if (static_cast<int>(elems.size()) >= limits.max_order)
          throw OrderLimitError(static_cast<std::size_t>(limits.max_order));
        elems.push_back(std::move(nxt));
        todo.push(it->second);
      }
    }
  }

  int n = static_cast<int>(elems.size());
  GroupBuilder b(n);
  Perm scratch(deg);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < deg; ++k) scratch[k] = elems[i][elems[j][k]];
      auto it = index.find(scratch);
      if (it == index.end()) throw NotClosedError(i, j, -1);
      b.set(i, j, it->second);
    }
  return std::move(b).build(std::move(label));
}

Group direct_product(const Group& g, const Group& h,
                     const GroupLimits& limits) {
  long long n = static_cast<long long>(g.order()) * h.order();
  if (n > limits.max_order)
    throw OrderLimitError(static_cast<std::size_t>(limits.max_order));
  int nh = h.order();
  GroupBuilder b(static_cast<int>(n));
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          b.set(a1 * nh + b1, a2 * nh + b2,
                g.mul(a1, a2) * nh + h.mul(b1, b2));
  std::string label = g.label().empty() || h.label().empty()
                          ? std::string()
                          : "product(" + g.label() + "," + h.label() + ")";
  return std::move(b).build(std::move(label));
}

}  // namespace cdlab
