#pragma once

#include <cstdint>
#include <vector>

#include "modcartan/artinring/chain_module.hpp"
#include "modcartan/grothendieck/grothendieck.hpp"

namespace modcartan::ar {

struct ChainPim {
  alg::AlgElement idempotent;  // exact idempotent of R[pi]
  ChainRepModule module;       // R[pi] e, free over R
  std::size_t simple;          // registry index of the head
};

/// Lifts each field PIM idempotent through rad(R[pi]) and realizes R[pi] e
/// on a free basis of translates g e.
std::vector<ChainPim> chain_pims(const grp::GroupPtr& g, ChainRing ring, std::uint64_t seed = 1);

/// Sum of the composition multisets of the graded pieces.
rep::CompositionMultiset chain_composition(const ChainRepModule& m, std::uint64_t seed = 1);

struct ChainCartan {
  gk::LatticeMap chain;   // row i from the graded pieces of the chain PIM P_i
  gk::LatticeMap field;   // Cartan matrix of k[pi]
  bool scaling_ok;        // chain == t * field entrywise
  gk::BigInt det_chain;
  gk::BigInt det_field;
  bool det_relation;      // det_chain == t^n det_field
};
ChainCartan cartan_chain(const grp::GroupPtr& g, ChainRing ring, std::uint64_t seed = 1);

/// Composition multiset of P / rad(R[pi]) P, computed with Howell spans.
rep::CompositionMultiset chain_head(const ChainRepModule& p, std::uint64_t seed = 1);

/// For projective P, Q: if P/uP and Q/uQ are isomorphic then P and Q have the
/// same PIM multiplicities (read from their heads over R).
struct LiftCheck {
  bool applicable;                        // the reductions are isomorphic
  bool holds;
  std::vector<int> reduced_p, reduced_q;  // decompositions of the reductions
  std::vector<int> head_p, head_q;        // multiplicities from the heads over R
};
LiftCheck projective_lift_check(const ChainRepModule& p, const ChainRepModule& q, std::uint64_t seed = 1);

}  // namespace modcartan::ar
