#include "cdlab/families.hpp"

#include <charconv>
#include <numeric>
#include <vector>

namespace cdlab {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_order(long long n, const GroupLimits& limits) {
  if (n > limits.max_order)
    throw OrderLimitError(static_cast<std::size_t>(limits.max_order));
}

long long ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > (1ll << 40)) return r;  // far past any usable limit
  }
  return r;
}

}  // namespace

Group cyclic(int n, const GroupLimits& limits) {
  if (n < 1) throw BadParameterError("cyclic order must be at least 1");
  require_order(n, limits);
  GroupBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set(i, j, (i + j) % n);
  return std::move(b).build("cyclic:" + std::to_string(n));
}

Group dihedral(int n, const GroupLimits& limits) {
  if (n < 1) throw BadParameterError("dihedral parameter must be at least 1");
  require_order(2ll * n, limits);
  // 0..n-1: rotations r^i; n..2n-1: reflections s r^i. s r^i s = r^-i.
  GroupBuilder b(2 * n);
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int xi = x % n, xs = x / n, yi = y % n, ys = y / n;
      int v;
      if (xs == 0 && ys == 0) v = (xi + yi) % n;
      else if (xs == 0 && ys == 1) v = n + (yi - xi + n) % n;
      else if (xs == 1 && ys == 0) v = n + (xi + yi) % n;
      else v = (yi - xi + n) % n;
      b.set(x, y, v);
    }
  return std::move(b).build("dihedral:" + std::to_string(n));
}

Group dicyclic(int n, const GroupLimits& limits) {
  if (n < 1) throw BadParameterError("dicyclic parameter must be at least 1");
  require_order(4ll * n, limits);
  // <a, b | a^{2n} = 1, b^2 = a^n, b^-1 a b = a^-1>
  // 0..2n-1: a^i; 2n..4n-1: a^i b
  int m = 2 * n;
  GroupBuilder b(4 * n);
  for (int x = 0; x < 4 * n; ++x)
    for (int y = 0; y < 4 * n; ++y) {
      int xi = x % m, xs = x / m, yi = y % m, ys = y / m;
      int v;
      if (xs == 0 && ys == 0) v = (xi + yi) % m;
      else if (xs == 0 && ys == 1) v = m + (xi + yi) % m;
      else if (xs == 1 && ys == 0) v = m + (xi - yi + m) % m;
      else v = (xi - yi + n + m) % m;
      b.set(x, y, v);
    }
  return std::move(b).build("dicyclic:" + std::to_string(n));
}

Group symmetric(int n, const GroupLimits& limits) {
  if (n < 1) throw BadParameterError("symmetric degree must be at least 1");
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  require_order(order, limits);
  if (n == 1) {
    Group g = cyclic(1, limits);
    g.set_label("symmetric:1");
    return g;
  }
  PermGenSet gens;
  gens.degree = n;
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.generators.push_back(t);
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.generators.push_back(c);
  }
  return from_permutation_generators(gens, limits,
                                     "symmetric:" + std::to_string(n));
}

Group alternating(int n, const GroupLimits& limits) {
  if (n < 1) throw BadParameterError("alternating degree must be at least 1");
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  order = n <= 2 ? 1 : order / 2;
  require_order(order, limits);
  if (n <= 3) {
    Group g = cyclic(n <= 2 ? 1 : 3, limits);
    g.set_label("alternating:" + std::to_string(n));
    return g;
  }
  PermGenSet gens;
  gens.degree = n;
  for (int k = 2; k < n; ++k) {
    // 3-cycle (0 1 k)
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.generators.push_back(c);
  }
  return from_permutation_generators(gens, limits,
                                     "alternating:" + std::to_string(n));
}

Group elementary_abelian(int p, int k, const GroupLimits& limits) {
  if (!is_prime(p)) throw BadParameterError("p must be prime");
  if (k < 1) throw BadParameterError("rank must be at least 1");
  long long n = ipow(p, k);
  require_order(n, limits);
  GroupBuilder b(static_cast<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = 0, m = 1, a = x, c = y;
      for (int d = 0; d < k; ++d) {
        v += ((a + c) % p) * m;
        a /= p;
        c /= p;
        m *= p;
      }
      b.set(x, y, v);
    }
  return std::move(b).build("elementary_abelian:" + std::to_string(p) + ":" +
                            std::to_string(k));
}

Group heisenberg(int p, const GroupLimits& limits) {
  if (!is_prime(p)) throw BadParameterError("p must be prime");
  long long n = ipow(p, 3);
  require_order(n, limits);
  // upper unitriangular 3x3 over F_p as triples (a, b, c):
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  GroupBuilder bld(static_cast<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
      int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      bld.set(x, y,
              idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p));
    }
  return std::move(bld).build("heisenberg:" + std::to_string(p));
}

Group extraspecial_exp_p2(int p, const GroupLimits& limits) {
  if (!is_prime(p)) throw BadParameterError("p must be prime");
  long long n = ipow(p, 3);
  require_order(n, limits);
  // <a, b | a^{p^2} = 1, b^p = 1, b^-1 a b = a^{1+p}>; element a^i b^j
  int p2 = p * p;
  GroupBuilder bld(static_cast<int>(n));
  // (1+p)^j mod p^2 table
  std::vector<int> twist(p);
  twist[0] = 1;
  for (int j = 1; j < p; ++j) twist[j] = twist[j - 1] * (1 + p) % p2;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i1 = x / p, j1 = x % p, i2 = y / p, j2 = y % p;
      int i = (i1 + i2 * twist[j1]) % p2;
      bld.set(x, y, i * p + (j1 + j2) % p);
    }
  return std::move(bld).build("extraspecial_exp_p2:" + std::to_string(p));
}

namespace {

int parse_int(std::string_view s, std::string_view spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw BadParameterError("bad integer parameter '" + std::string(s) +
                            "' in spec '" + std::string(spec) + "'");
  return v;
}

// splits "a,b" at the top-level comma of a product body
std::pair<std::string_view, std::string_view> split_product(
    std::string_view body, std::string_view spec) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0)
      return {body.substr(0, i), body.substr(i + 1)};
  }
  throw BadParameterError("product spec needs two comma-separated factors: '" +
                          std::string(spec) + "'");
}

Group named_impl(std::string_view spec, const GroupLimits& limits,
                 std::string_view full) {
  if (spec.empty()) throw UnknownFamilyError("");
  if (spec.starts_with("product(")) {
    if (!spec.ends_with(")"))
      throw BadParameterError("unbalanced product spec '" + std::string(full) +
                              "'");
    auto body = spec.substr(8, spec.size() - 9);
    auto [lhs, rhs] = split_product(body, full);
    Group a = named_impl(lhs, limits, full);
    Group b = named_impl(rhs, limits, full);
    Group g = direct_product(a, b, limits);
    g.set_label("product(" + a.label() + "," + b.label() + ")");
    return g;
  }
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  const std::string_view family = parts[0];
  auto want = [&](std::size_t k) {
    if (parts.size() != k + 1)
      throw BadParameterError("family '" + std::string(family) + "' takes " +
                              std::to_string(k) + " parameter(s): '" +
                              std::string(full) + "'");
  };
  if (family == "cyclic") {
    want(1);
    return cyclic(parse_int(parts[1], full), limits);
  }
  if (family == "dihedral") {
    want(1);
    return dihedral(parse_int(parts[1], full), limits);
  }
  if (family == "dicyclic") {
    want(1);
    return dicyclic(parse_int(parts[1], full), limits);
  }
  if (family == "symmetric") {
    want(1);
    return symmetric(parse_int(parts[1], full), limits);
  }
  if (family == "alternating") {
    want(1);
    return alternating(parse_int(parts[1], full), limits);
  }
  if (family == "elementary_abelian") {
    want(2);
    return elementary_abelian(parse_int(parts[1], full),
                              parse_int(parts[2], full), limits);
  }
  if (family == "heisenberg") {
    want(1);
    return heisenberg(parse_int(parts[1], full), limits);
  }
  if (family == "extraspecial_exp_p2") {
    want(1);
    return extraspecial_exp_p2(parse_int(parts[1], full), limits);
  }
  throw UnknownFamilyError(std::string(family));
}

}  // namespace

Group named(std::string_view spec, const GroupLimits& limits) {
  return named_impl(spec, limits, spec);
}

void check_catalog_spec(std::string_view spec) {
  // construct with a generous limit purely for validation of the grammar
  // would be wasteful; instead parse-only via a tiny recursive walk
  if (spec.starts_with("product(")) {
    if (!spec.ends_with(")"))
      throw BadParameterError("unbalanced product spec '" + std::string(spec) +
                              "'");
    auto body = spec.substr(8, spec.size() - 9);
    auto [lhs, rhs] = split_product(body, spec);
    check_catalog_spec(lhs);
    check_catalog_spec(rhs);
    return;
  }
  static const char* families[] = {
      "cyclic",     "dihedral",           "dicyclic",
      "symmetric",  "alternating",        "elementary_abelian",
      "heisenberg", "extraspecial_exp_p2"};
  std::size_t colon = spec.find(':');
  std::string_view family = spec.substr(0, colon);
  for (const char* f : families) {
    if (family == f) {
      if (colon == std::string_view::npos || colon + 1 >= spec.size())
        throw BadParameterError("family '" + std::string(family) +
                                "' needs parameters");
      auto rest = spec.substr(colon + 1);
      std::size_t start = 0;
      for (std::size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == ':') {
          parse_int(rest.substr(start, i - start), spec);
          start = i + 1;
        }
      }
      return;
    }
  }
  throw UnknownFamilyError(std::string(family));
}

}  // namespace cdlab
