#pragma once

#include "qdp/subobject.hpp"

namespace qdp {

/// Pairing between an enveloping-type host (left) and a function-type host
/// (right), given on generator pairs and extended through the coproducts.
struct PairingSpec {
  std::string name;
  const Presentation* left = nullptr;
  const Presentation* right = nullptr;
  std::map<std::pair<int, int>, Scalar> table;

  Scalar on_generators(int gl, int gr) const {
    auto it = table.find({gl, gr});
    return it == table.end() ? Scalar(0) : it->second;
  }
};

/// Exact pairing value, bilinear over normal-form elements.
Scalar pair_elements(const PairingSpec& ps, const Element& u,
                     const Element& f);

/// Degree-<=D basis of the annihilator of S on the opposite side, pairing
/// against S's slice up to degree Dprime.
std::vector<Element> orthogonal_side(Workspace& ws_sub, Workspace& ws_other,
                                     const PairingSpec& ps,
                                     const SubobjectSpec& S, int D,
                                     int Dprime);

}  // namespace qdp
