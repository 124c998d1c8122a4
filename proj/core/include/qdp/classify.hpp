#pragma once

#include <optional>

#include "qdp/drinfeld.hpp"

namespace qdp {

struct ClassVerdict {
  bool pass = false;
  std::string witness;
};

/// Three-tier classification record; strict implies proper implies weak.
struct QuantizationClass {
  std::optional<ClassVerdict> weak, proper, strict;
  int bound = 0;
};

/// Degreewise span equality of the specialization of S with the classical
/// target, up to degree D. Throws on non-integral generators
/// (SpecializationPole).
ClassVerdict check_weak(Workspace& ws, Workspace& classical_ws,
                        const SubobjectSpec& S, const SubobjectSpec& target,
                        int D);

/// Function-algebra kinds: generator-pair commutators land in (q-1) S.
/// Enveloping kinds: nabla of a degreewise spanning set lands in
/// (q-1) ambient ^ S.
ClassVerdict check_proper(Workspace& ws, const SubobjectSpec& S, int D);

/// Flatness: S meets (q-1) times the host lattice exactly in (q-1) S,
/// degreewise; decided by the elementary divisors of the slice.
ClassVerdict check_strict(Workspace& ws, const SubobjectSpec& S, int D);

}  // namespace qdp
