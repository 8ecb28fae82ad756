// char_poly.hpp — characteristic polynomials Q(w), F(z) and the constant eta.
#pragma once

#include "circforest/graph.hpp"
#include "circforest/polynomial.hpp"

namespace circforest {

struct CharPolyBundle {
  IntegerPolynomial q;    // degree = shift, in w
  IntegerPolynomial f_z;  // palindromic, degree = 2 * shift, in z
  int shift = 0;          // s = sum over fibers of the largest jump
  Int eta = 1;
  int m_prime = 0;  // empty-fiber vertex count
};

// det of the empty-fiber induced submatrix with diagonal d_j + 1 (degrees taken
// in the full base); 1 when no fiber is empty.
Int eta(const FoliationSpec& spec);

// Builds q by a polynomial-matrix determinant in w and f_z by an independent
// polynomial-matrix determinant in z, then cross-validates the two against
// each other and against the structural identities (degree, leading
// coefficient, palindromicity, values at w = ±1). A mismatch throws
// StructureViolation: it would falsify the count identities downstream.
CharPolyBundle char_poly(const FoliationSpec& spec);

}  // namespace circforest
