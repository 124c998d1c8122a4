#pragma once

#include <string>
#include <vector>

#include "qdp/slices.hpp"

namespace qdp {

/// The four subgroup-type subobjects: ideal/coideal and coideal-subalgebra
/// on the function-algebra side (I, C) and enveloping side (gI, gC).
enum class SubKind { I, C, gI, gC };

inline bool kind_is_ideal(SubKind k) {
  return k == SubKind::I || k == SubKind::gI;
}

std::string kind_name(SubKind k);
SubKind kind_from_name(const std::string& s);

/// Which ambient integral form the host carries: the plain presentation
/// lattice (optionally enlarged by extra lattice generators) or the
/// (q-1)-adic blow-up generated by rescaled augmentation powers.
enum class HostForm { plain, vee };

struct SubobjectSpec {
  SubKind kind = SubKind::I;
  Side side = Side::left;
  std::vector<Element> gens;
  const Presentation* host = nullptr;
  HostForm host_form = HostForm::plain;
  std::vector<Element> host_lattice;  // empty: monomial lattice
  std::string name;
};

struct Verdict {
  enum class Status { InUpTo, NotIn, Unknown };
  Status status = Status::Unknown;
  int bound = 0;
  int witness_n = -1;
  Scalar witness_coeff;
  std::string detail;

  bool in() const { return status == Status::InUpTo; }
  static Verdict in_up_to(int n) {
    Verdict v;
    v.status = Status::InUpTo;
    v.bound = n;
    return v;
  }
  static Verdict not_in(int n, const Scalar& coeff, std::string why = {}) {
    Verdict v;
    v.status = Status::NotIn;
    v.witness_n = n;
    v.witness_coeff = coeff;
    v.detail = std::move(why);
    return v;
  }
};

}  // namespace qdp
