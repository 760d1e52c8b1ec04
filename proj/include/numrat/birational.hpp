#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numrat/model.hpp"

namespace numrat {

/// A component passing through a blowup centre: an exceptional vertex or a
/// ramification curve. Strict transforms keep their ids.
struct ComponentRef {
  enum class Kind { vertex, curve };
  Kind kind = Kind::vertex;
  std::string id;
  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

/// Point to blow up, given by the (at most two) components through it.
struct BlowupCenter {
  std::vector<std::string> through;
};

/// One blowup between a lower and an upper configuration. The record is the
/// same whichever direction produced it; `kind` says which.
struct BirationalMap {
  enum class Kind { blowup, blowdown };
  struct Incidence {
    ComponentRef component;
    int mult = 1;  ///< intersection of the strict transform with the exceptional curve
    friend bool operator==(const Incidence&, const Incidence&) = default;
  };

  Kind kind = Kind::blowup;
  VertexId exceptional;             ///< E_0 on the upper configuration
  std::vector<Incidence> incidence;  ///< components meeting E_0
  int exceptional_index = 1;        ///< ramification index of E_0
  /// Index of the ramified component through the centre (the larger one at a
  /// node), 1 if none: Delta_upper = pullback(Delta_lower) - (1 - 1/e1) E_0.
  int centre_index = 1;
};

/// Exceptional divisor on the upper side: D + (multiplicity of the centre on D) E_0.
Divisor pullback(const BirationalMap& map, const Divisor& d);
/// Drops the E_0 coefficient.
Divisor pushforward(const BirationalMap& map, const Divisor& d);

/// Blows up a point lying on at most two components which meet transversally
/// there. E_0 is ramified (with the smaller index) only at a node of two
/// ramified components. `new_id` defaults to the first free "B<k>".
std::pair<OrderConfig, BirationalMap> blowup(const OrderConfig& config, const BlowupCenter& center,
                                             std::optional<VertexId> new_id = std::nullopt);

/// Inverse of blowup. Throws PreconditionError unless the vertex is a smooth
/// rational (-1)-curve whose neighbours and ramification match one of the
/// blowup patterns.
std::pair<OrderConfig, BirationalMap> blowdown(const OrderConfig& config, const VertexId& vertex);

/// Surface-level contraction of any smooth rational (-1)-curve, whatever its
/// neighbours. Ramification on the contracted curve is forgotten, so the
/// result need not be a terminal configuration.
std::pair<OrderConfig, BirationalMap> contract(const OrderConfig& config, const VertexId& vertex);

/// Applies a recorded blowup to its lower configuration.
OrderConfig replay(const OrderConfig& lower, const BirationalMap& map);

/// A sequence of blowups from base to top.
struct Tower {
  OrderConfig base;
  std::vector<BirationalMap> maps;  ///< base first
  OrderConfig top;

  Divisor pullback(const Divisor& d) const;
  Divisor pushforward(const Divisor& d) const;
  /// Exceptional curves of the maps, in creation order.
  std::vector<VertexId> created() const;
  /// Replays maps from base and compares with top.
  bool consistent() const;
};

/// Builds a tower by applying blowup at each centre in turn.
Tower build_tower(const OrderConfig& base, const std::vector<BlowupCenter>& centers);

/// N_i: contract every smooth rational (-1)-curve other than the image of the
/// tracked vertex, lowest vertex first, then pull the image back to the top.
Divisor n_cycle(const Tower& tower, const VertexId& vertex);
/// As n_cycle, contracting in the given priority order.
Divisor n_cycle(const Tower& tower, const VertexId& vertex, const std::vector<VertexId>& priority);

/// Blows down K_A-negative smooth rational (-1)-curves (lowest first) until
/// none remain. Returns the contracted config and the tower back up to the
/// input.
std::pair<OrderConfig, Tower> minimalize(const OrderConfig& config);

}  // namespace numrat
