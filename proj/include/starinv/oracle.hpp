#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starinv/finite_ring.hpp"
#include "starinv/inverses.hpp"
#include "starinv/orders.hpp"

namespace starinv {

// Brute-force enumerations over a finite *-ring. These scan the carrier with
// the defining equations only; they never consult the ring's own tables.
std::vector<FiniteElement> enumerate_regular(const FiniteStarRing& ring);
// Index = element value. Throws Errc::uniqueness_violation if some element
// has two Moore-Penrose inverses.
std::vector<std::optional<FiniteStarRing::Value>> enumerate_dagger(const FiniteStarRing& ring);
std::vector<FiniteElement> enumerate_class(const FiniteStarRing& ring, const FiniteElement& a,
                                           InverseClass cls);

struct TheoremReport {
  std::string theorem;
  std::string ring;
  std::size_t instances = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // sorted; at most max_listed kept
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
  bool exhaustive = true;
  bool skipped = false;

  static constexpr std::size_t max_listed = 25;

  bool pass() const { return violation_count == 0; }
};

const std::vector<std::string_view>& theorem_ids();
bool is_theorem_id(std::string_view id);

// Throws Errc::unknown_theorem for ids outside theorem_ids().
TheoremReport verify_theorem(const FiniteStarRing& ring, std::string_view id);

// Reflexivity, antisymmetry and transitivity of a relation on its domain:
// R† for 1mp/mp1, regular elements for minus, everything else on R.
TheoremReport order_axiom_suite(const FiniteStarRing& ring, Relation rel);

}  // namespace starinv
