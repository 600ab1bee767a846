#pragma once

#include <string>
#include <vector>

#include "adlv/linalg.hpp"

namespace adlv {

// Element of Z^f + sum Z/d_i, torsion entries reduced into [0, d_i).
struct Elem {
  IVec free;
  IVec tors;
  bool operator==(const Elem& o) const { return free == o.free && tors == o.tors; }
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<(const Elem& o) const {
    return free != o.free ? free < o.free : tors < o.tors;
  }
};

std::string to_string(const Elem& e);

// Z^r modulo the span of the given relation vectors.
class AbelianQuotient {
 public:
  AbelianQuotient() = default;
  AbelianQuotient(int ambient, const std::vector<IVec>& relations);

  int ambient() const { return ambient_; }
  int free_rank() const { return static_cast<int>(proj_free_.size()); }
  const IVec& moduli() const { return moduli_; }
  // Invariant factors, torsion first then 0 for every free summand.
  IVec invariants() const;

  Elem project(const IVec& x) const;
  IVec lift(const Elem& e) const;
  Elem zero() const;
  Elem normalize(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, Int k) const;
  bool is_zero(const Elem& e) const { return e == zero(); }

  // Free part lift basis: ambient vectors projecting to unit free vectors.
  const std::vector<IVec>& free_lifts() const { return lift_free_; }
  const IMat& free_projection() const { return proj_free_; }

 private:
  int ambient_ = 0;
  IMat proj_free_;
  IMat proj_tors_;
  IVec moduli_;
  std::vector<IVec> lift_free_;
  std::vector<IVec> lift_tors_;
};

// Finite presentation of a subquotient: span(gens)/span(rels) inside Z^n, rels contained in
// span(gens). Returns invariant factors with 0 meaning a free summand (units dropped).
IVec subquotient_invariants(int n, const std::vector<IVec>& gens, const std::vector<IVec>& rels);

// Kernel of the endomorphism x -> M x of the group Z^n / diag(d), where d_i = 0 marks free
// coordinates. Returns generators (as vectors in Z^n) and invariant factors.
struct GroupKernel {
  std::vector<IVec> generators;
  IVec invariants;
};
GroupKernel kernel_of_endomorphism(const IMat& m, const IVec& d);

}  // namespace adlv
