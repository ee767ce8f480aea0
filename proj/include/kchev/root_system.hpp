#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kchev/weight.hpp"

namespace kchev {

// Cartan data for a finite-type root system: either a named type ("A2",
// "G2", ...) or an explicit integer Cartan matrix. Matrix convention
// throughout: cartan[i][j] = alpha_j(alpha_i^vee), so column j is the simple
// root alpha_j written in fundamental-weight coordinates.
class CartanSpec {
 public:
  static CartanSpec named(char letter, int rank);
  static CartanSpec from_string(const std::string& name);  // e.g. "A2"
  static CartanSpec from_matrix(std::vector<std::vector<Int>> matrix);

  const std::string& name() const { return name_; }
  const std::vector<std::vector<Int>>& matrix() const { return matrix_; }
  int rank() const { return static_cast<int>(matrix_.size()); }

 private:
  CartanSpec() = default;
  std::string name_;
  std::vector<std::vector<Int>> matrix_;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  // Validates the Cartan matrix (shape, symmetrizability, positive-definite
  // symmetrization via exact leading principal minors) and enumerates the
  // positive roots by reflection closure from the simple roots.
  static RootSystemPtr build(const CartanSpec& spec);

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<Int>>& cartan() const { return cartan_; }

  // alpha_j in fundamental coordinates = column j of the Cartan matrix
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const Weight& simple_root(int j) const;

  // positive roots in fundamental coordinates, ordered lexicographically by
  // their root coordinates (the expansion over simple roots)
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<std::vector<Int>>& positive_root_coords() const {
    return positive_root_coords_;
  }

  Int pairing(const Weight& lambda, int i) const;

  // s_i(lambda) = lambda - lambda(alpha_i^vee) alpha_i
  Weight reflect(int i, const Weight& lambda) const;

  // sum_j c_j alpha_j as a Weight
  Weight root_coords_to_weight(const std::vector<Int>& c) const;

  bool is_positive_root(const Weight& w) const;
  bool is_root(const Weight& w) const;
  // expansion over simple roots; nullopt when w is not a root
  std::optional<std::vector<Int>> root_coords_of(const Weight& w) const;

  // lambda(beta^vee) for an arbitrary root beta (fundamental coordinates)
  Int coroot_pairing(const Weight& beta, const Weight& lambda) const;

  // positive integers d_i with d_i * cartan[i][j] symmetric; within each
  // component, d_i is proportional to (alpha_i, alpha_i)
  const std::vector<Int>& symmetrizer() const { return symmetrizer_; }

 private:
  RootSystem() = default;

  int rank_ = 0;
  std::string name_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<Int>> positive_root_coords_;
  std::vector<Int> symmetrizer_;
  // positive roots sorted by fundamental coordinates, for membership tests
  std::vector<Weight> positive_sorted_;
  std::map<Weight, std::vector<Int>> coords_by_root_;  // positive roots only
};

}  // namespace kchev
