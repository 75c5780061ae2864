#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdlab/errors.hpp"

namespace cdlab {

// Construction-time limits. `max_order` bounds the order of any group a
// constructor is willing to build; callers with known-small inputs can
// lower it, batch drivers can raise it.
struct GroupLimits {
  int max_order = 512;
};

// A finite group as a validated multiplication table. Element 0 is always
// the identity. Immutable after construction; safe to share across threads.
class Group {
 public:
  int order() const { return n_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return elem_order_[a]; }

  // a^k for any integer k (negative powers go through the inverse).
  int power(int a, long long k) const;

  // Least common multiple of all element orders.
  long long exponent() const;

  bool is_abelian() const;
  bool is_cyclic() const;

  // Smallest prime factor of the order, or 0 for the trivial group.
  int smallest_prime_divisor() const;

  // If |G| is a prime power p^k (k >= 1) returns p, else 0.
  int p_group_prime() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Full invariant re-validation (identity, closure, associativity,
  // inverses, element orders). Constructors call this; it is public so
  // tests can re-check any instance.
  void validate() const;

 private:
  Group() = default;
  void finalize();  // computes inverses and element orders, then validates

  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint16_t> elem_order_;
  std::string label_;

  friend Group from_cayley_table(const std::vector<std::vector<int>>&,
                                 std::string);
  friend class GroupBuilder;
};

// Internal helper for constructors that assemble tables element by element.
class GroupBuilder {
 public:
  explicit GroupBuilder(int n);
  void set(int a, int b, int product);
  Group build(std::string label) &&;

 private:
  Group g_;
};

// A set of permutation generators on {0,...,degree-1}.
struct PermGenSet {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        std::string label = "");

// Breadth-first closure under composition, identity first, generators
// applied in listed order. The element ordering (and hence the table) is
// deterministic.
Group from_permutation_generators(const PermGenSet& gens,
                                  const GroupLimits& limits = {},
                                  std::string label = "");

// Pairs (g, h) indexed row-major: index = g * |H| + h.
Group direct_product(const Group& g, const Group& h,
                     const GroupLimits& limits = {});

}  // namespace cdlab
