#pragma once

// D_G-valued moments and cumulants.
//
// Cumulants are obtained by Moebius inversion over the full lattice NC(n):
//
//   k_n(x_1, ..., x_n) = sum_{pi in NC(n)} E^(pi)(x_1, ..., x_n) mu(pi, 1_n)
//
// where E^(pi) is the nested (partition-dependent) moment: each interval block
// is evaluated by E and fed into the next remaining factor as a left diagonal
// multiplier until one block is left.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwp/elements.hpp"
#include "gwp/ncpart.hpp"

namespace gwp {

  // Cumulant and classification orders above this are rejected.
  inline constexpr std::size_t cumulant_max_order = 8;

  // The request E(d_1 a_1 d_2 a_2 ... d_n a_n).
  struct MomentRequest {
    std::vector<DiagonalElement> d;
    std::vector<RandomVariable>  a;

    // d_i = 1 for every slot.
    static MomentRequest trivial(std::vector<RandomVariable> a);
  };

  // The factors d_i a_i as general elements. Throws DomainError on length or
  // graph mismatch or n == 0.
  std::vector<GeneralElement> moment_items(MomentRequest const& req);

  DiagonalElement moment(MomentRequest const& req);
  DiagonalElement moment(std::span<GeneralElement const> items);

  DiagonalElement partition_moment(NoncrossingPartition const& p,
                                   std::span<GeneralElement const> items);

  struct CumulantReport {
    DiagonalElement value;
    // E^(pi) for each pi in NC(n), in enumeration order, and mu(pi, 1_n).
    std::vector<NoncrossingPartition> partitions;
    std::vector<DiagonalElement>      contributions;
    std::vector<long>                 weights;
  };

  CumulantReport cumulant(MomentRequest const& req);
  CumulantReport cumulant(std::span<GeneralElement const> items);

  // Generator letters lifted to elements over g.
  std::vector<GeneralElement> letter_items(GraphPtr const& g, std::span<Letter const> letters);

  bool pi_connected(NoncrossingPartition const& p, GraphPtr const& g,
                    std::span<Letter const> letters);

  struct MuMultiplier {
    long                              mu = 0;
    std::vector<NoncrossingPartition> connected;
  };

  MuMultiplier mu_multiplier(GraphPtr const& g, std::span<Letter const> letters);

  // mu_multiplier(letters).mu * E(L^{u_1} ... L^{u_n}). Throws DomainError if
  // the monomial lacks the *-axis property.
  DiagonalElement cumulant_shortcut(GraphPtr const& g, std::span<Letter const> letters);

  // Slot labels used in mixed-cumulant witnesses.
  enum class Slot { a, a_star, b, b_star };
  std::string to_string(Slot s);

  struct MixedCheck {
    bool vanish = true;
    // First nonzero cumulant found, if any.
    std::vector<Slot> witness;
    DiagonalElement   witness_value;
    std::size_t       checked = 0;
  };

  // Every k_n over tuples from {a, a*, b, b*}^n with at least one a-type and
  // one b-type entry, 2 <= n <= max_order, unit diagonal multipliers.
  MixedCheck mixed_cumulants_vanish(RandomVariable const& a, RandomVariable const& b,
                                    std::size_t max_order);

  enum class Certificate { certified, unknown };

  // Certified when FP(G:a) and FP(G:b) are pairwise diagram-distinct.
  Certificate freeness_certificate(RandomVariable const& a, RandomVariable const& b);

  struct Classification {
    bool        self_adjoint = false;
    bool        semicircular = false;
    bool        even         = false;
    bool        r_diagonal   = false;
    std::size_t max_order    = 0;
    std::string hint;
    // k_n(a, ..., a) for n = 1..max_order.
    std::vector<DiagonalElement> trivial_cumulants;
  };

  // Verdicts hold up to max_order. Throws DomainError for odd max_order,
  // max_order < 4 or max_order > cumulant_max_order.
  Classification classify(RandomVariable const& a, std::size_t max_order);

}  // namespace gwp
