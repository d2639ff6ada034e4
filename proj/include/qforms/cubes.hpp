#ifndef QFORMS_CUBES_HPP
#define QFORMS_CUBES_HPP

#include <array>
#include <string>
#include <tuple>

#include "qforms/forms.hpp"

namespace qf {

/* 2x2x2 integer cube [a,b,c,d,e,f,g,h] in the standard letter order.
 * The up-down, left-right and front-back slicings each pair two 2x2
 * matrices M_i, N_i and carry the form Q_i(x,y) = -det(M_i x + N_i y). */
struct Cube {
    Int a, b, c, d, e, f, g, h;
};

/* The pair (x3, y3) with Q1(x1,y1) Q2(x2,y2) = Q3(x3,-y3). */
struct BilinearWitness {
    Int x3, y3;
};

/* The three sliced forms, in the fixed slicing order. Degenerate cubes are
 * allowed; callers requiring primitivity or a nonsquare discriminant check
 * downstream. */
std::array<Form, 3> sliced_forms(const Cube &K);

/* Gauss's bilinear substitution: x3 = e x1x2 + f x1y2 + g x2y1 + h y1y2,
 * y3 = a x1x2 + b x1y2 + c x2y1 + d y1y2. The multiplication identity
 * holds exactly for every cube and all integer inputs. */
BilinearWitness gauss_multiply(const Cube &K, const Int &x1, const Int &y1,
                               const Int &x2, const Int &y2);

/* Cross-check against composition: composing the three sliced classes
 * yields the principal class. Requires primitive slices with a common
 * nonsquare discriminant. */
bool verify_cube_law(const Cube &K);

/* Text literal "[a,b,c,d,e,f,g,h]". */
std::string render(const Cube &K);
Cube parse_cube(const std::string &text);

} // namespace qf

#endif
