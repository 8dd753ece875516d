#pragma once

#include <span>
#include <stdexcept>

#include "isostab/chains.hpp"

namespace isostab {

enum class ConnectionType { Case0 = 0, Case1 = 1, Case2 = 2 };

struct ConnectionSpec {
  ConnectionType ctype = ConnectionType::Case0;
  RPoint from;
  RPoint to;
  std::vector<RPoint> via;           // chain contacts in chain order
  std::vector<Role> bypassed;        // at most two

  ConnectionSpec() = default;
  ConnectionSpec(ConnectionType t, RPoint a, RPoint b, std::vector<RPoint> v, std::vector<Role> by)
      : ctype(t), from(std::move(a)), to(std::move(b)), via(std::move(v)), bypassed(std::move(by)) {
    if (bypassed.size() > 2) throw std::invalid_argument("a connection bypasses at most two extreme segments");
  }
};

/// Thrown when a classifier's stated precondition does not hold.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// ab neither crosses nor touches the chain.
bool is_case0(const RPoint& a, const RPoint& b, const CriticalChain& chain);

/// The only chain contact of ab is the point `shared`.
bool is_case0_comm_endpoint(const RPoint& a, const RPoint& b, const CriticalChain& chain, const RPoint& shared);

/// The bypassed segment touches ab or lies on its left, and ab avoids every
/// chain except for the edge of each chain that ends at the bypassed side.
/// `chains` lists the chains met in counterclockwise order from a to b.
bool is_case0_bypass(const RPoint& a, const RPoint& b, const Segment& bypassed,
                     std::span<const CriticalChain> chains);

bool is_case0_bypass_comm_endpoint(const RPoint& a, const RPoint& b, const Segment& bypassed,
                                   std::span<const CriticalChain> chains, const RPoint& shared);

/// a, pivot, b collinear with pivot a chain vertex; the line supports the
/// chain at pivot and the bypassed segment is touched or contained.
bool is_case1_bypass(const RPoint& a, const RPoint& b, const RPoint& pivot, const Segment& bypassed,
                     std::span<const CriticalChain> chains);

/// from -> via... -> to is a convex path supported by the chains at every
/// via vertex, and the bypassed segment is touched or contained.
bool is_case2_bypass(const ConnectionSpec& spec, const Segment& bypassed, std::span<const CriticalChain> chains);

/// Bypass containment test: s touches ab or lies entirely left of a -> b.
bool bypass_contained(const RPoint& a, const RPoint& b, const Segment& s);

}  // namespace isostab
