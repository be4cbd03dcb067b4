#ifndef DAGREL_CORE_DIAGRAM_HPP
#define DAGREL_CORE_DIAGRAM_HPP

#include <stdexcept>
#include <string>

namespace dagrel {

// Thrown when an input value violates a structural invariant of its type
// (malformed table, non-stochastic column, non-contractive matrix, ...).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a mathematically required object fails to exist for the given
// inputs (no mediating morphism, indefinite Gram matrix, ...).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A span (X, left, right) from A to B: left : X -> A, right : X -> B.
// The apex X is the common domain of the two legs.
template <typename M>
struct Span {
  M left;
  M right;
};

// A cospan (X, left, right) from A to B: left : A -> X, right : B -> X.
template <typename M>
struct Cospan {
  M left;
  M right;
};

// A commutative square, stored in the orientation
//
//        g
//    X ----> B
//    |       |
//  f |       | v
//    v       v
//    A ----> C
//        u
//
// Transposed squares are handled by the independence axioms, not by
// normalising the storage order.
template <typename M>
struct Square {
  M f;  // X -> A  (left)
  M g;  // X -> B  (top)
  M u;  // A -> C  (bottom)
  M v;  // B -> C  (right)
};

template <typename M>
Square<M> transposed(const Square<M>& s) {
  return Square<M>{s.g, s.f, s.v, s.u};
}

// (strong epic, jointly monic) factorisation of a span:
// original.left = monic.left . epi and original.right = monic.right . epi.
template <typename M>
struct Factorisation {
  M epi;
  Span<M> monic;
};

// Dual notion for the instances exercised through the dual adapter:
// original.left = mono . jointly_epic.left, etc.
template <typename M>
struct CoFactorisation {
  M mono;
  Cospan<M> epic;
};

}  // namespace dagrel

#endif
